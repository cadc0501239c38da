#pragma once

#include <chrono>
#include <cstdint>

namespace nhb {

// Time source abstraction: the backend stamps writes and bounds staleness
// through this, so scenario runs under a virtual clock stay deterministic.
struct Clock {
    virtual ~Clock() = default;
    virtual int64_t now_us() = 0;
};

class WallClock : public Clock {
public:
    int64_t now_us() override {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now().time_since_epoch())
            .count();
    }
};

// Delegating clock: lets a long-lived component (the backend) follow
// whichever time source currently drives a run.
class RebindableClock : public Clock {
public:
    explicit RebindableClock(Clock& initial) : target_(&initial) {}
    int64_t now_us() override { return target_->now_us(); }
    void bind(Clock& c) { target_ = &c; }

private:
    Clock* target_;
};

// Externally driven time source; the simulation loop owns one, and tests set
// it directly.
class ManualClock : public Clock {
public:
    explicit ManualClock(int64_t start_us = 0) : now_(start_us) {}
    int64_t now_us() override { return now_; }
    void set_us(int64_t t) { now_ = t; }
    void advance_us(int64_t dt) { now_ += dt; }

private:
    int64_t now_;
};

} // namespace nhb
