#include "moyallax/psdo.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "moyallax/cancel.hpp"
#include "moyallax/errors.hpp"
#include "moyallax/moyal.hpp"

namespace moyallax {

PseudoDiffOp PseudoDiffOp::identity(const TruncationContext& t) {
    PseudoDiffOp r(t);
    r.set_coeff(0, DiffPoly::one(t));
    return r;
}

PseudoDiffOp PseudoDiffOp::d_x(int power, const TruncationContext& t, std::optional<int> depth) {
    PseudoDiffOp r(t, depth);
    r.set_coeff(power, DiffPoly::one(t));
    return r;
}

PseudoDiffOp PseudoDiffOp::single(int exponent, const DiffPoly& coeff, std::optional<int> depth) {
    PseudoDiffOp r(coeff.trunc(), depth);
    r.set_coeff(exponent, coeff);
    return r;
}

int PseudoDiffOp::max_order() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }
int PseudoDiffOp::min_order() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }

DiffPoly PseudoDiffOp::coeff(int exponent) const {
    auto it = coeffs_.find(exponent);
    return it == coeffs_.end() ? DiffPoly::zero(trunc_) : it->second;
}

void PseudoDiffOp::set_coeff(int exponent, const DiffPoly& c) {
    if (depth_ && exponent < *depth_) return;
    if (c.is_zero())
        coeffs_.erase(exponent);
    else
        coeffs_.insert_or_assign(exponent, c.restricted(trunc_));
}

void PseudoDiffOp::add_coeff(int exponent, const DiffPoly& c) {
    if (depth_ && exponent < *depth_) return;
    auto it = coeffs_.find(exponent);
    if (it == coeffs_.end()) {
        set_coeff(exponent, c);
        return;
    }
    DiffPoly s = it->second + c.restricted(trunc_);
    if (s.is_zero())
        coeffs_.erase(it);
    else
        it->second = std::move(s);
}

namespace {

std::optional<int> combine_depth(std::optional<int> a, std::optional<int> b) {
    if (a && b) return std::max(*a, *b);
    return a ? a : b;
}

void require_same_window(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    if (!(A.trunc() == B.trunc()))
        throw TruncationMismatch("pseudo-differential operands carry different truncation windows");
}

}  // namespace

PseudoDiffOp PseudoDiffOp::operator+(const PseudoDiffOp& o) const {
    require_same_window(*this, o);
    PseudoDiffOp r(trunc_, combine_depth(depth_, o.depth_));
    for (const auto& [e, c] : coeffs_) r.add_coeff(e, c);
    for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, c);
    return r;
}

PseudoDiffOp PseudoDiffOp::operator-(const PseudoDiffOp& o) const {
    require_same_window(*this, o);
    PseudoDiffOp r(trunc_, combine_depth(depth_, o.depth_));
    for (const auto& [e, c] : coeffs_) r.add_coeff(e, c);
    for (const auto& [e, c] : o.coeffs_) r.add_coeff(e, -c);
    return r;
}

PseudoDiffOp PseudoDiffOp::scaled(const Scalar& c) const {
    PseudoDiffOp r(trunc_, depth_);
    if (c.is_zero()) return r;
    for (const auto& [e, p] : coeffs_) r.set_coeff(e, p * c);
    return r;
}

PseudoDiffOp PseudoDiffOp::times_eps_mu(int deps, int dmu) const {
    PseudoDiffOp r(trunc_, depth_);
    for (const auto& [e, p] : coeffs_) r.set_coeff(e, p.times_eps_mu(deps, dmu));
    return r;
}

bool PseudoDiffOp::operator==(const PseudoDiffOp& o) const {
    return trunc_ == o.trunc_ && depth_ == o.depth_ && coeffs_ == o.coeffs_;
}

namespace {

Rational generalized_binomial(int i, int k) {
    Rational r = 1;
    for (int t = 0; t < k; ++t) r *= Rational(i - t, t + 1);
    r.canonicalize();
    return r;
}

// Reliable floor of A o B: orders below max(depth(A)+maxOrder(B),
// depth(B)+maxOrder(A)) receive contributions from discarded coefficients.
// nullopt = every order of the result is reliable.
std::optional<int> natural_floor(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    std::optional<int> f;
    if (A.depth()) f = *A.depth() + B.max_order();
    if (B.depth()) {
        int g = *B.depth() + A.max_order();
        f = f ? std::max(*f, g) : g;
    }
    return f;
}

PseudoDiffOp compose_impl(const PseudoDiffOp& A, const PseudoDiffOp& B, std::optional<int> cut) {
    require_same_window(A, B);
    const TruncationContext& ctx = A.trunc();
    if (A.is_zero() || B.is_zero()) return PseudoDiffOp::zero(ctx, cut);
    if (!cut && A.min_order() < 0)
        throw std::invalid_argument(
            "compose: operators with negative orders need a depth (use compose_to)");

    PseudoDiffOp r(ctx, cut);
    for (const auto& [j, g] : B.coeffs()) {
        cancel::check();
        // dx^k g, grown on demand and shared across all rows of A
        std::vector<DiffPoly> dg{g};
        for (const auto& [i, f] : A.coeffs()) {
            for (int k = 0;; ++k) {
                if (i >= 0 && k > i) break;
                if (cut && i + j - k < *cut) break;
                while (static_cast<int>(dg.size()) <= k) dg.push_back(dx(dg.back()));
                Rational c = generalized_binomial(i, k);
                if (sgn(c) != 0) r.add_coeff(i + j - k, star(f, dg[k]) * Scalar(c));
            }
        }
    }
    return r;
}

}  // namespace

PseudoDiffOp compose(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    return compose_impl(A, B, natural_floor(A, B));
}

PseudoDiffOp compose_to(const PseudoDiffOp& A, const PseudoDiffOp& B, int floor) {
    std::optional<int> nat = natural_floor(A, B);
    // cut at the requested floor, but never claim reliability beyond the
    // natural floor of the operands
    int depth = nat ? std::max(*nat, floor) : floor;
    PseudoDiffOp r = compose_impl(A, B, floor);
    if (r.depth() == std::optional<int>(depth)) return r;
    PseudoDiffOp s(r.trunc(), depth);
    for (const auto& [e, c] : r.coeffs()) s.set_coeff(e, c);
    return s;
}

PseudoDiffOp lax_operator(const TruncationContext& trunc) {
    if (trunc.min_eps > -2)
        throw std::invalid_argument("lax_operator: window must reach eps^-2");
    PseudoDiffOp L(trunc);
    L.set_coeff(2, DiffPoly::one(trunc));
    L.set_coeff(0, DiffPoly::u(trunc).times_eps_mu(-2, 0) * Scalar(2));
    return L;
}

PseudoDiffOp sqrt_lax(const PseudoDiffOp& L, int depth) {
    if (depth > -1) throw std::invalid_argument("sqrt_lax: depth must be negative");
    if (L.max_order() != 2 || !(L.coeff(2) == DiffPoly::one(L.trunc())) || !L.coeff(1).is_zero())
        throw std::invalid_argument("sqrt_lax: operator is not of Lax form d^2 + a_0");
    const TruncationContext& ctx = L.trunc();
    const int cut = depth + 1;  // equations live at orders depth+1 .. 2

    PseudoDiffOp R(ctx, depth);
    R.set_coeff(1, DiffPoly::one(ctx));
    // discrepancy L - R o R, updated incrementally as corrections arrive
    PseudoDiffOp D = L - compose_to(R, R, cut);
    for (int m = 1; m >= cut; --m) {
        cancel::check();
        DiffPoly a = D.coeff(m) * Scalar(make_rational(1, 2));
        if (a.is_zero()) continue;
        PseudoDiffOp c = PseudoDiffOp::single(m - 1, a, depth);
        PseudoDiffOp delta =
            compose_to(R, c, cut) + compose_to(c, R, cut) + compose_to(c, c, cut);
        R.add_coeff(m - 1, a);
        D = D - delta;
    }
    for (const auto& [e, p] : D.coeffs())
        if (e >= cut && !p.is_zero())
            throw ConsistencyError("sqrt_lax: residual at order " + std::to_string(e));
    return R;
}

PseudoDiffOp integer_power(const PseudoDiffOp& L, int d) {
    if (d < 0) throw std::invalid_argument("integer_power: negative exponent");
    if (d == 0) return PseudoDiffOp::identity(L.trunc());
    PseudoDiffOp r = L;
    for (int k = 1; k < d; ++k) r = compose(r, L);
    return r;
}

PseudoDiffOp half_power(const PseudoDiffOp& L, int d, int depth) {
    if (d < 1) throw std::invalid_argument("half_power: d must be >= 1");
    // Composing with L^d (order 2d) costs 2d orders of reliability, so the
    // square root is solved that much deeper.
    PseudoDiffOp R = sqrt_lax(L, depth - 2 * d);
    return compose(integer_power(L, d), R);
}

PseudoDiffOp positive_part(const PseudoDiffOp& A) {
    bool exact = A.is_exact() || *A.depth() <= 0;
    PseudoDiffOp r(A.trunc(), exact ? std::nullopt : A.depth());
    for (const auto& [e, c] : A.coeffs())
        if (e >= 0) r.set_coeff(e, c);
    return r;
}

PseudoDiffOp negative_part(const PseudoDiffOp& A) {
    PseudoDiffOp r(A.trunc(), A.depth());
    for (const auto& [e, c] : A.coeffs())
        if (e < 0) r.set_coeff(e, c);
    return r;
}

PseudoDiffOp op_commutator(const PseudoDiffOp& A, const PseudoDiffOp& B) {
    return compose(A, B) - compose(B, A);
}

DiffPoly residue(const PseudoDiffOp& A) {
    if (A.depth() && *A.depth() > -1)
        throw std::invalid_argument("residue: the d^-1 coefficient lies below the stored depth");
    return A.coeff(-1);
}

std::string to_string(const PseudoDiffOp& A) {
    if (A.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = A.coeffs().rbegin(); it != A.coeffs().rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(it->second) << ")";
        if (it->first != 0) os << "*d^" << it->first;
    }
    return os.str();
}

}  // namespace moyallax
