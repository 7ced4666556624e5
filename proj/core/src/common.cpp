#include "canalgeo/common.hpp"

namespace canalgeo {

namespace {
std::atomic<double> g_tolerance{1e-9};
}

double tolerance() noexcept { return g_tolerance.load(std::memory_order_relaxed); }

void set_tolerance(double tau) noexcept {
    if (tau > 0) g_tolerance.store(tau, std::memory_order_relaxed);
}

}  // namespace canalgeo
