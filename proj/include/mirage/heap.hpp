#ifndef MIRAGE_HEAP_HPP
#define MIRAGE_HEAP_HPP

#include <chrono>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mirage/objects.hpp"
#include "mirage/value.hpp"

namespace mirage {

enum class TerminationReason { Timeout, BudgetExhausted, OutOfMemory };

/// Thrown to abort guest execution. Deliberately not derived from
/// std::exception and never convertible to a guest value, so guest
/// try/catch cannot swallow it.
struct TerminationSignal {
    TerminationReason reason;
};

/// A guest exception in flight. Guest try/catch handles these; anything that
/// escapes top-level evaluation marks the run crashed.
struct GuestThrow {
    Value value;
};

/// Allocation-accounting heap estimate approximating the live guest heap of a
/// garbage-collected engine. Objects, properties, bindings, and event
/// snapshots charge monotonically; strings — the dominant transient
/// allocation — refund their cost when the last reference dies, so hot loops
/// that build and drop strings do not exhaust the cap. peak() is the
/// high-water mark of the live estimate.
///
/// Size model: every object costs kObjectBase plus kPropertyCost per property
/// slot, strings cost their byte length plus kStringBase, array elements cost
/// kElementCost each, environment bindings kBindingCost, and event snapshots
/// charge their serialized byte size.
class Heap {
public:
    static constexpr size_t kObjectBase = 64;
    static constexpr size_t kPropertyCost = 64;
    static constexpr size_t kStringBase = 24;
    static constexpr size_t kElementCost = 16;
    static constexpr size_t kBindingCost = 48;

    explicit Heap(size_t limit_bytes = 256ull << 20) : limit_(limit_bytes) {}
    Heap(const Heap&) = delete;
    Heap& operator=(const Heap&) = delete;

    void charge(size_t bytes) {
        if (used_ + bytes > limit_) {
            throw TerminationSignal{TerminationReason::OutOfMemory};
        }
        used_ += bytes;
        if (used_ > peak_) peak_ = used_;
    }

    void credit(size_t bytes) { used_ -= std::min(bytes, used_); }

    size_t used() const { return used_; }
    size_t peak() const { return peak_; }
    size_t limit() const { return limit_; }

    template <typename T, typename... Args>
    std::shared_ptr<T> make(Args&&... args) {
        charge(kObjectBase);
        auto obj = std::make_shared<T>(std::forward<Args>(args)...);
        registry_.push_back(obj);
        return obj;
    }

    EnvPtr make_env(EnvPtr parent = nullptr) {
        charge(kObjectBase);
        auto env = std::make_shared<EnvRecord>(std::move(parent));
        env_registry_.push_back(env);
        return env;
    }

    /// Strings refund on destruction of the last reference. Every JsStringPtr
    /// made here must die before this Heap does; the interpreter guarantees
    /// that by declaring its heap ahead of everything that stores values.
    JsStringPtr make_string(std::string s) {
        const size_t cost = kStringBase + s.size();
        charge(cost);
        return JsStringPtr(new std::string(std::move(s)),
                           [this, cost](const std::string* p) {
                               delete p;
                               credit(cost);
                           });
    }

    Value str(std::string s) { return Value(make_string(std::move(s))); }

    /// Breaks shared_ptr cycles (closures ↔ environments ↔ objects) by
    /// clearing every registered object's references. Values handed out
    /// earlier stay alive but become empty shells.
    void teardown() {
        for (auto& weak : registry_) {
            if (auto obj = weak.lock()) obj->clear_for_teardown();
        }
        for (auto& weak : env_registry_) {
            if (auto env = weak.lock()) env->clear_for_teardown();
        }
        registry_.clear();
        env_registry_.clear();
    }

private:
    size_t used_ = 0;
    size_t peak_ = 0;
    size_t limit_;
    std::vector<std::weak_ptr<Object>> registry_;
    std::vector<std::weak_ptr<EnvRecord>> env_registry_;
};

/// Cooperative limits: a hard instruction budget and a wall-clock deadline
/// checked every 1024 steps.
class ExecutionLimits {
public:
    ExecutionLimits() = default;

    void arm(uint64_t instruction_budget, std::chrono::milliseconds timeout) {
        budget_ = instruction_budget;
        steps_ = 0;
        deadline_ = std::chrono::steady_clock::now() + timeout;
    }

    void tick() {
        if (++steps_ > budget_) {
            throw TerminationSignal{TerminationReason::BudgetExhausted};
        }
        if ((steps_ & 1023) == 0 && std::chrono::steady_clock::now() >= deadline_) {
            throw TerminationSignal{TerminationReason::Timeout};
        }
    }

    uint64_t steps() const { return steps_; }

private:
    uint64_t steps_ = 0;
    uint64_t budget_ = 10'000'000;
    std::chrono::steady_clock::time_point deadline_ = std::chrono::steady_clock::time_point::max();
};

}  // namespace mirage

#endif
