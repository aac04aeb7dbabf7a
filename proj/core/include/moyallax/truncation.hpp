#pragma once

#include <optional>
#include <stdexcept>

namespace moyallax {

/// Truncation window for formal power series in eps and mu. Every DiffPoly
/// carries one; arithmetic drops monomials outside the window instead of
/// silently pretending to be exact. Combining two values uses the
/// intersection (most restrictive) window.
struct TruncationContext {
    int max_mu = 0;                      // retain muExp <= max_mu (max_mu >= 0)
    int min_eps = 0;                     // retain epsExp >= min_eps
    std::optional<int> max_eps{};        // retain epsExp <= max_eps; nullopt = unbounded

    TruncationContext() = default;
    TruncationContext(int max_mu_, int min_eps_, std::optional<int> max_eps_ = std::nullopt)
        : max_mu(max_mu_), min_eps(min_eps_), max_eps(max_eps_) {
        if (max_mu < 0) throw std::invalid_argument("TruncationContext: max_mu must be >= 0");
        if (max_eps && *max_eps < min_eps)
            throw std::invalid_argument("TruncationContext: min_eps > max_eps");
    }

    bool contains(int eps, int mu) const {
        return mu >= 0 && mu <= max_mu && eps >= min_eps && (!max_eps || eps <= *max_eps);
    }

    TruncationContext intersect(const TruncationContext& o) const {
        std::optional<int> me;
        if (max_eps && o.max_eps) me = std::min(*max_eps, *o.max_eps);
        else if (max_eps) me = max_eps;
        else me = o.max_eps;
        return TruncationContext(std::min(max_mu, o.max_mu), std::max(min_eps, o.min_eps), me);
    }

    /// Window for factors entering a product that will be shifted by
    /// (eps, mu) += (n, n) afterwards (Moyal order-n term).
    TruncationContext shifted(int n) const {
        std::optional<int> me;
        if (max_eps) me = *max_eps - n;
        return TruncationContext(max_mu - n, min_eps - n, me);
    }

    bool operator==(const TruncationContext&) const = default;
};

}  // namespace moyallax
