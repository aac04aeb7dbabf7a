#include "moyallax/cancel.hpp"

#include "moyallax/errors.hpp"

namespace moyallax::cancel {

namespace {
const std::atomic<bool>* g_flag = nullptr;
}

void set_flag(const std::atomic<bool>* flag) { g_flag = flag; }

void check() {
    if (g_flag && g_flag->load(std::memory_order_relaxed)) throw OperationCancelled();
}

}  // namespace moyallax::cancel
