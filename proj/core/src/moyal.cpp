#include "moyallax/moyal.hpp"

#include <stdexcept>
#include <vector>

#include "moyallax/cancel.hpp"
#include "derivative_table.hpp"

namespace moyallax {

namespace {

using detail::DerivativeTable;

Rational factorial(int n) {
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

DiffPoly shift_into(const DiffPoly& f, int deps, int dmu, const TruncationContext& target) {
    DiffPoly r(target);
    for (const auto& [m, c] : f.terms()) r.add_term(m.shifted(deps, dmu), c);
    return r;
}

}  // namespace

DiffPoly star(const DiffPoly& f, const DiffPoly& g) {
    TruncationContext ctx = f.trunc().intersect(g.trunc());
    DiffPoly acc = DiffPoly::zero(ctx);
    // The order-n term of the product carries (eps mu)^n, so the factors must
    // be multiplied under the window shifted down by n or valid cross terms
    // would be dropped before the shift back up.
    for (int n = 0; n <= ctx.max_mu; ++n) {
        cancel::check();
        TruncationContext shifted = ctx.shifted(n);
        DerivativeTable df(f.restricted(shifted));
        DerivativeTable dg(g.restricted(shifted));
        Rational two_pow_n = 1;
        for (int k = 0; k < n; ++k) two_pow_n *= 2;
        DiffPoly order_n = DiffPoly::zero(shifted);
        for (int k1 = 0; k1 <= n; ++k1) {
            int k2 = n - k1;
            Scalar c = Scalar::i_pow(n) * Scalar(Rational(1) / (two_pow_n * factorial(k1) * factorial(k2)));
            if (k2 % 2 != 0) c = -c;
            order_n = order_n + (df.get(k1, k2) * dg.get(k2, k1)) * c;
        }
        acc = acc + shift_into(order_n, n, n, ctx);
    }
    return acc;
}

DiffPoly star_commutator(const DiffPoly& f, const DiffPoly& g) {
    return star(f, g) - star(g, f);
}

DiffPoly star_power(const DiffPoly& f, int n) {
    if (n < 0) throw std::invalid_argument("star_power: negative exponent");
    DiffPoly r = DiffPoly::one(f.trunc());
    for (int k = 0; k < n; ++k) r = star(r, f);
    return r;
}

}  // namespace moyallax
