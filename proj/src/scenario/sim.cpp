#include "scenario/sim.hpp"

#include <chrono>
#include <thread>

#include "core/errors.hpp"

namespace nhb::scenario {

Simulation::Simulation(const ClockConfig& config, int64_t start_us) : cfg_(config) {
    if (cfg_.speedup < 1.0) throw ArgumentError("clock speedup must be >= 1");
    clock_.set(start_us);
}

void Simulation::schedule_at(int64_t time_us, std::function<void()> fn) {
    if (time_us < clock_.now()) time_us = clock_.now();
    queue_.push(Event{time_us, next_seq_++, std::move(fn)});
}

void Simulation::schedule_after(int64_t delay_us, std::function<void()> fn) {
    schedule_at(clock_.now() + delay_us, std::move(fn));
}

int64_t Simulation::run() {
    using namespace std::chrono;
    const auto wall_start = steady_clock::now();
    const int64_t virtual_start = clock_.now();
    const double pace = cfg_.mode == ClockMode::Realtime ? 1.0 : cfg_.speedup;

    while (!queue_.empty()) {
        Event ev = queue_.top();
        queue_.pop();
        // Drift-free pacing: sleep until the wall instant this event maps to.
        const auto target =
            wall_start + microseconds(static_cast<int64_t>(
                             static_cast<double>(ev.time_us - virtual_start) / pace));
        if (target > steady_clock::now() + microseconds(50))
            std::this_thread::sleep_until(target);
        clock_.set(ev.time_us);
        ev.fn();
    }
    wall_seconds_ = duration<double>(steady_clock::now() - wall_start).count();
    return clock_.now();
}

} // namespace nhb::scenario
