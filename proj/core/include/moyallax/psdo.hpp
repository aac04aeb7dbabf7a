#pragma once

#include <map>
#include <optional>
#include <string>

#include "moyallax/diffpoly.hpp"

namespace moyallax {

/// Pseudo-differential operator sum_{i <= maxOrder} a_i d^i with DiffPoly
/// coefficients over the star algebra, in normal-ordered form (coefficients
/// left of powers of d). `depth` is the floor below which coefficients have
/// been discarded; std::nullopt means nothing was discarded (the operator is
/// known exactly, e.g. the Lax operator or any differential operator built
/// from exact pieces).
class PseudoDiffOp {
public:
    explicit PseudoDiffOp(TruncationContext trunc, std::optional<int> depth = std::nullopt)
        : trunc_(trunc), depth_(depth) {}

    static PseudoDiffOp zero(const TruncationContext& t, std::optional<int> depth = std::nullopt) {
        return PseudoDiffOp(t, depth);
    }
    static PseudoDiffOp identity(const TruncationContext& t);
    /// d^power as an exact operator (or with a floor, for tests that build
    /// truncated expansions such as d^{-1} o u).
    static PseudoDiffOp d_x(int power, const TruncationContext& t,
                            std::optional<int> depth = std::nullopt);
    static PseudoDiffOp single(int exponent, const DiffPoly& coeff,
                               std::optional<int> depth = std::nullopt);

    const TruncationContext& trunc() const { return trunc_; }
    std::optional<int> depth() const { return depth_; }
    bool is_exact() const { return !depth_.has_value(); }
    const std::map<int, DiffPoly>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Highest stored exponent; meaningless for the zero operator (returns 0).
    int max_order() const;
    int min_order() const;
    DiffPoly coeff(int exponent) const;

    void set_coeff(int exponent, const DiffPoly& c);
    void add_coeff(int exponent, const DiffPoly& c);

    PseudoDiffOp operator+(const PseudoDiffOp& o) const;
    PseudoDiffOp operator-(const PseudoDiffOp& o) const;
    PseudoDiffOp scaled(const Scalar& c) const;
    PseudoDiffOp times_eps_mu(int deps, int dmu) const;

    /// Structural equality (window, depth, coefficients).
    bool operator==(const PseudoDiffOp& o) const;

private:
    std::map<int, DiffPoly> coeffs_;  // exponent -> nonzero coefficient
    TruncationContext trunc_;
    std::optional<int> depth_;
};

/// Composition with the normal-ordering rule
///   (f d^i) o (g d^j) = sum_{k>=0} C(i,k) star(f, dx^k g) d^{i+j-k},
/// C(i,k) = i(i-1)...(i-k+1)/k! for any integer i. The reliable floor of the
/// result is max(depth(A) + maxOrder(B), depth(B) + maxOrder(A)); composing
/// two exact operators is exact when A has no negative orders and requires an
/// explicit floor (compose_to) otherwise. Windows must match.
PseudoDiffOp compose(const PseudoDiffOp& A, const PseudoDiffOp& B);

/// Composition cut at an explicit floor; the result's depth is the floor (or
/// the natural floor when that is shallower).
PseudoDiffOp compose_to(const PseudoDiffOp& A, const PseudoDiffOp& B, int floor);

/// L = d^2 + 2 eps^-2 u. Requires min_eps <= -2.
PseudoDiffOp lax_operator(const TruncationContext& trunc);

/// R = d + sum_{i<=0} a_i d^i with R o R = L at every order >= depth+1,
/// solved top-down; the unknown at each order enters as 2*a so only scalar
/// divisions by 2 occur. Stored coefficients reach down to d^depth.
PseudoDiffOp sqrt_lax(const PseudoDiffOp& L, int depth);

/// L^{d+1/2} = L^d o sqrt_lax(L), exact to `depth` (the square root is solved
/// 2d orders deeper to absorb the composition loss).
PseudoDiffOp half_power(const PseudoDiffOp& L, int d, int depth);

/// d-fold composition; d = 0 gives the identity.
PseudoDiffOp integer_power(const PseudoDiffOp& L, int d);

/// Restriction to exponents >= 0. Exact whenever the source floor is <= 0.
PseudoDiffOp positive_part(const PseudoDiffOp& A);
PseudoDiffOp negative_part(const PseudoDiffOp& A);

PseudoDiffOp op_commutator(const PseudoDiffOp& A, const PseudoDiffOp& B);

/// Coefficient of d^-1. Requires the floor to reach -1.
DiffPoly residue(const PseudoDiffOp& A);

std::string to_string(const PseudoDiffOp& A);

}  // namespace moyallax
