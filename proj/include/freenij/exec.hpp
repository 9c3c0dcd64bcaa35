#pragma once

namespace freenij {

/// Execution mode for the expansion kernels. `serial` is the reference path;
/// `parallel` uses OpenMP above a grain size and falls back to the serial path
/// below it. Both paths produce identical elements (exact coefficients, merge
/// order immaterial).
enum class ExecMode { serial, parallel };

/// Process-wide default mode for kernel dispatch. Defaults to parallel.
ExecMode exec_mode() noexcept;
void set_exec_mode(ExecMode mode) noexcept;

} // namespace freenij
