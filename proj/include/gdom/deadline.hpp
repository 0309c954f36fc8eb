#pragma once

#include <chrono>
#include <optional>

#include "gdom/error.hpp"

namespace gdom {

// Optional wall-clock limit polled by long-running loops.
class Deadline {
public:
    using clock = std::chrono::steady_clock;

    Deadline() = default;
    explicit Deadline(std::chrono::milliseconds budget) : at_(clock::now() + budget) {}

    static Deadline never() { return {}; }

    bool expired() const { return at_ && clock::now() >= *at_; }
    void check(const char* what = "time limit exceeded") const {
        if (expired()) throw TimeoutError(what);
    }

private:
    std::optional<clock::time_point> at_;
};

}  // namespace gdom
