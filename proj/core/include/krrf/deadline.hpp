#pragma once

#include <chrono>

namespace krrf {

/// Optional wall-clock budget. A default-constructed deadline never expires.
class Deadline {
public:
    Deadline() = default;

    static Deadline after_seconds(double seconds) {
        Deadline d;
        d.armed_ = true;
        d.at_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const { return armed_ && std::chrono::steady_clock::now() >= at_; }

private:
    bool armed_ = false;
    std::chrono::steady_clock::time_point at_{};
};

} // namespace krrf
