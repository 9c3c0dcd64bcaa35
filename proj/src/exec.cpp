#include "freenij/exec.hpp"

#include <atomic>

namespace freenij {

namespace {
std::atomic<ExecMode> g_mode{ExecMode::parallel};
}

ExecMode exec_mode() noexcept { return g_mode.load(std::memory_order_relaxed); }

void set_exec_mode(ExecMode mode) noexcept { g_mode.store(mode, std::memory_order_relaxed); }

} // namespace freenij
