#include "moyallax/hierarchy.hpp"

#include <algorithm>
#include <vector>

#include "derivative_table.hpp"
#include "moyallax/cancel.hpp"
#include "moyallax/errors.hpp"

namespace moyallax {

namespace {

Rational odd_double_factorial(int d) {
    Rational r = 1;
    for (int t = 3; t <= 2 * d + 1; t += 2) r *= t;
    return r;
}

int default_depth(int d, const TruncationContext& trunc) { return -(2 * d + trunc.max_mu + 4); }

}  // namespace

PseudoDiffOp lax_flow_operator(int d, const TruncationContext& trunc, std::optional<int> depth) {
    if (d < 1) throw std::invalid_argument("flow index d must be >= 1");
    int D = depth.value_or(default_depth(d, trunc));
    if (D > -2) throw std::invalid_argument("flow depth must be <= -2");
    PseudoDiffOp L = lax_operator(trunc);
    PseudoDiffOp A = half_power(L, d, D);
    PseudoDiffOp C = op_commutator(positive_part(A), L);
    return C.scaled(Scalar(Rational(1) / odd_double_factorial(d))).times_eps_mu(2 * d, 0);
}

DiffPoly flow_rhs(int d, const TruncationContext& trunc, std::optional<int> depth) {
    PseudoDiffOp C = lax_flow_operator(d, trunc, depth);
    for (const auto& [e, c] : C.coeffs())
        if (e != 0 && !c.is_zero())
            throw ConsistencyError("flow " + std::to_string(d) +
                                   ": commutator has a residual coefficient at order " +
                                   std::to_string(e) + ": " + to_string(c));
    // dL/dt = 2 eps^-2 du/dt at order 0
    DiffPoly P = C.coeff(0).times_eps_mu(2, 0) * Scalar(make_rational(1, 2));
    if (!is_homogeneous_of(P, {1, 0}))
        throw ConsistencyError("flow " + std::to_string(d) +
                               " is not homogeneous of bidegree (1,0): " + to_string(P));
    return P;
}

DiffPoly evolutionary_derivative(const DiffPoly& P, const DiffPoly& f) {
    TruncationContext ctx = P.trunc().intersect(f.trunc());
    std::vector<JetVar> jets;
    for (const auto& [m, c] : f.terms())
        for (const auto& factor : m.jets()) jets.push_back(factor.var);
    std::sort(jets.begin(), jets.end());
    jets.erase(std::unique(jets.begin(), jets.end()), jets.end());

    detail::DerivativeTable dP(P.restricted(ctx));
    DiffPoly r = DiffPoly::zero(ctx);
    for (const JetVar& v : jets) {
        cancel::check();
        r = r + dP.get(v.kx, v.ky) * partial_jet(f, v);
    }
    return r;
}

DiffPoly flow_commutator(const DiffPoly& P, const DiffPoly& Q) {
    return evolutionary_derivative(P, Q) - evolutionary_derivative(Q, P);
}

LocalFunctional poisson_bracket(const LocalFunctional& F, const LocalFunctional& G) {
    return {variational_derivative(F.density) * dx(variational_derivative(G.density))};
}

DiffPoly hamiltonian_flow(const LocalFunctional& G) {
    return dx(variational_derivative(G.density));
}

namespace {

// Order used to pick the monomial whose leading term drives one integration
// by parts: lexicographic on the jet multiset listed in descending order.
// For f = dx(h) the top monomial of f in this order is the top monomial of h
// with its largest jet raised, which makes the inversion loop strictly
// decreasing.
bool desc_less(const DiffMonomial& x, const DiffMonomial& y) {
    const auto& a = x.jets();
    const auto& b = y.jets();
    std::size_t ia = a.size(), ib = b.size();
    int used_a = 0, used_b = 0;
    while (ia > 0 && ib > 0) {
        const auto& fa = a[ia - 1];
        const auto& fb = b[ib - 1];
        if (fa.var != fb.var) return fa.var < fb.var;
        int na = fa.mult - used_a;
        int nb = fb.mult - used_b;
        if (na == nb) {
            --ia, --ib;
            used_a = used_b = 0;
        } else if (na < nb) {
            --ia;
            used_a = 0;
            used_b += na;
        } else {
            --ib;
            used_b = 0;
            used_a += nb;
        }
    }
    if ((ia > 0) != (ib > 0)) return ib > 0;
    if (x.eps() != y.eps()) return x.eps() < y.eps();
    return x.mu() < y.mu();
}

}  // namespace

DiffPoly dx_preimage(const DiffPoly& f) {
    DiffPoly rem = f;
    DiffPoly h = DiffPoly::zero(f.trunc());
    std::optional<DiffMonomial> prev;
    while (!rem.is_zero()) {
        cancel::check();
        auto top = rem.terms().begin();
        for (auto it = std::next(rem.terms().begin()); it != rem.terms().end(); ++it)
            if (desc_less(top->first, it->first)) top = it;
        const DiffMonomial M = top->first;
        const Scalar c = top->second;
        // On the image of dx the leading monomial strictly decreases at each
        // integration by parts; a non-decreasing step certifies non-exactness
        // (and guarantees termination either way).
        if (prev && !desc_less(M, *prev))
            throw NotExactDerivative("dx_preimage: input is not a total x-derivative");
        prev = M;
        if (M.jets().empty())
            throw NotExactDerivative("dx_preimage: nonzero constant term " + to_string(M));
        JetVar J = M.jets().back().var;
        if (J.kx == 0)
            throw NotExactDerivative("dx_preimage: leading monomial " + to_string(M) +
                                     " is not a total x-derivative");
        DiffMonomial lowered = M.with_jet_replaced(J, {J.kx - 1, J.ky});
        Scalar cc = c / Scalar(lowered.multiplicity({J.kx - 1, J.ky}));
        DiffPoly piece = DiffPoly::monomial(lowered, cc, f.trunc());
        h = h + piece;
        rem = rem - dx(piece);
    }
    return h;
}

LocalFunctional reconstruct_density(const DiffPoly& h) {
    std::map<int, DiffPoly> parts = scale_u(h);
    if (parts.count(0))
        throw NotExactDerivative("reconstruct_density: input has a jet-free part " +
                                 to_string(parts.at(0)));
    DiffPoly density = DiffPoly::zero(h.trunc());
    DiffPoly u = DiffPoly::u(h.trunc());
    for (const auto& [j, part] : parts)
        density = density + (u * part) * Scalar(make_rational(1, j + 1));
    if (!(variational_derivative(density) == h))
        throw NotExactDerivative("reconstruct_density: input is not a variational gradient");
    return {density};
}

LocalFunctional hamiltonian_density(int d, const TruncationContext& trunc,
                                    std::optional<int> depth) {
    return reconstruct_density(dx_preimage(flow_rhs(d, trunc, depth)));
}

DiffPoly dispersionless_limit(const DiffPoly& P) {
    if (P.min_eps_exponent() < 0)
        throw std::invalid_argument("dispersionless_limit: negative eps exponents present");
    return P.eps_slice(0);
}

DiffPoly dispersionless_expected(int d, const TruncationContext& trunc) {
    DiffPoly u = DiffPoly::u(trunc);
    DiffPoly p = DiffPoly::one(trunc);
    Rational fact = 1;
    for (int k = 1; k <= d + 1; ++k) {
        p = p * u;
        fact *= k;
    }
    return dx(p * Scalar(Rational(1) / fact));
}

}  // namespace moyallax
