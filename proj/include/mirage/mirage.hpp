#ifndef MIRAGE_MIRAGE_HPP
#define MIRAGE_MIRAGE_HPP

// Umbrella header: the sandboxed interpreter with its mock membrane, the
// static-analysis baseline, and the comparison harness on top of both.

#include "mirage/ast.hpp"
#include "mirage/categorize.hpp"
#include "mirage/config.hpp"
#include "mirage/events.hpp"
#include "mirage/extension.hpp"
#include "mirage/harness.hpp"
#include "mirage/heap.hpp"
#include "mirage/hooks.hpp"
#include "mirage/interpreter.hpp"
#include "mirage/lexer.hpp"
#include "mirage/parser.hpp"
#include "mirage/printer.hpp"
#include "mirage/report.hpp"
#include "mirage/sandbox.hpp"
#include "mirage/source.hpp"
#include "mirage/static_analysis.hpp"
#include "mirage/url.hpp"

#endif
