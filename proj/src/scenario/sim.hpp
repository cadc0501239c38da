#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

#include "core/clock.hpp"

namespace nhb::scenario {

enum class ClockMode { Realtime, Virtual };

struct ClockConfig {
    ClockMode mode = ClockMode::Virtual;
    double speedup = 1.0; // virtual mode: wall pacing factor (>= 1)
};

// Single-threaded discrete-event loop. Worker "concurrency" is the
// interleaving of scheduled events; ties break on (time, sequence), so a
// fixed seed gives one exact event order regardless of host timing. Wall
// pacing: in realtime mode events fire at their scheduled wall instant; in
// virtual mode the wall interval shrinks by the speedup factor. Event order
// is identical in both modes.
class Simulation {
public:
    explicit Simulation(const ClockConfig& config, int64_t start_us = 0);

    Clock& clock() { return clock_; }
    int64_t now_us() const { return clock_.now(); }

    void schedule_at(int64_t time_us, std::function<void()> fn);
    void schedule_after(int64_t delay_us, std::function<void()> fn);

    // Runs until the queue drains. Returns the final virtual time.
    int64_t run();

    double wall_seconds_elapsed() const { return wall_seconds_; }

private:
    struct Event {
        int64_t time_us;
        uint64_t seq;
        std::function<void()> fn;
        bool operator>(const Event& other) const {
            if (time_us != other.time_us) return time_us > other.time_us;
            return seq > other.seq;
        }
    };

    class SimClock : public Clock {
    public:
        int64_t now_us() override { return now_; }
        int64_t now() const { return now_; }
        void set(int64_t t) { now_ = t; }

    private:
        int64_t now_ = 0;
    };

    ClockConfig cfg_;
    SimClock clock_;
    std::priority_queue<Event, std::vector<Event>, std::greater<>> queue_;
    uint64_t next_seq_ = 0;
    double wall_seconds_ = 0.0;
};

} // namespace nhb::scenario
