#pragma once

#include <atomic>

namespace moyallax::cancel {

/// Installs a flag polled by long-running computations (flows, square roots,
/// Fourier expansion). Pass nullptr to uninstall. The caller keeps ownership;
/// typically this points at a signal-handler-set atomic in the CLI.
void set_flag(const std::atomic<bool>* flag);

/// Throws OperationCancelled when the installed flag is set. No-op otherwise.
void check();

}  // namespace moyallax::cancel
