#ifndef MIRAGE_CONFIG_HPP
#define MIRAGE_CONFIG_HPP

#include <cstdint>
#include <string>

#include "mirage/source.hpp"
#include "mirage/url.hpp"

namespace mirage {

/// Per-sandbox execution settings. Defaults: 10 s timeout, 256 MiB heap
/// estimate cap, 10M instruction budget, mock depth 16, 3 callback rounds.
struct SandboxConfig {
    SourceType source_type = SourceType::script;
    std::string origin = "file:///";
    uint64_t timeout_ms = 10'000;
    uint64_t max_heap_mib = 256;
    uint64_t instruction_budget = 10'000'000;
    uint32_t mock_depth_limit = 16;
    uint32_t callback_rounds = 3;

    void validate() const {
        if (timeout_ms == 0) throw HostError("timeout_ms must be positive");
        if (max_heap_mib == 0) throw HostError("max_heap_mib must be positive");
        if (instruction_budget == 0) throw HostError("instruction_budget must be positive");
        if (mock_depth_limit == 0) throw HostError("mock_depth_limit must be positive");
        if (callback_rounds == 0) throw HostError("callback_rounds must be positive");
        if (!Url::try_parse(origin)) throw HostError("origin is not an absolute URL: " + origin);
    }

    uint64_t max_heap_bytes() const { return max_heap_mib << 20; }
    Url origin_url() const { return Url::parse(origin); }
};

}  // namespace mirage

#endif
