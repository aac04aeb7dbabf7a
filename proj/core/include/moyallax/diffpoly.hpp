#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moyallax/scalar.hpp"
#include "moyallax/truncation.hpp"

namespace moyallax {

/// Jet variable u_{kx,ky}; (0,0) denotes u itself.
struct JetVar {
    int kx = 0;
    int ky = 0;
    auto operator<=>(const JetVar&) const = default;
};

/// One run of equal jet variables inside a monomial.
struct JetFactor {
    JetVar var;
    int mult = 1;
    bool operator==(const JetFactor&) const = default;
};

/// Monomial eps^e mu^q prod u_{kx,ky}^mult. Jets are kept sorted by (kx,ky)
/// which fixes the canonical serialization order. mu exponents are >= 0; eps
/// exponents may be negative.
class DiffMonomial {
public:
    DiffMonomial() = default;
    DiffMonomial(std::vector<JetFactor> jets, int eps, int mu);

    static DiffMonomial one() { return DiffMonomial(); }
    static DiffMonomial jet(int kx, int ky) { return DiffMonomial({{{kx, ky}, 1}}, 0, 0); }
    static DiffMonomial eps_mu(int eps, int mu) { return DiffMonomial({}, eps, mu); }

    const std::vector<JetFactor>& jets() const { return jets_; }
    int eps() const { return eps_; }
    int mu() const { return mu_; }

    int jet_count() const;   // total multiplicity
    int sum_kx() const;
    int sum_ky() const;
    /// (sum kx - eps, sum ky - mu): deg u_{k1,k2} = (k1,k2), deg eps = (-1,0),
    /// deg mu = (0,-1).
    std::pair<int, int> bidegree() const;

    DiffMonomial times(const DiffMonomial& o) const;
    DiffMonomial shifted(int deps, int dmu) const;
    /// Replaces one copy of `from` by `to`; `from` must be present.
    DiffMonomial with_jet_replaced(JetVar from, JetVar to) const;
    DiffMonomial without_one(JetVar var) const;
    int multiplicity(JetVar var) const;

    /// Canonical order: lexicographic on the expanded sorted jet list, then
    /// eps, then mu.
    std::strong_ordering operator<=>(const DiffMonomial& o) const;
    bool operator==(const DiffMonomial& o) const { return (*this <=> o) == 0; }

private:
    std::vector<JetFactor> jets_;  // sorted by var, distinct vars, mult >= 1
    int eps_ = 0;
    int mu_ = 0;
};

/// Sparse differential polynomial in the jet variables u_{*,*}, eps and mu,
/// over exact Gaussian rationals, with a truncation window. No zero
/// coefficients are stored, terms outside the window are dropped on the spot.
class DiffPoly {
public:
    explicit DiffPoly(TruncationContext trunc) : trunc_(trunc) {}

    static DiffPoly zero(const TruncationContext& t) { return DiffPoly(t); }
    static DiffPoly constant(const Scalar& c, const TruncationContext& t);
    static DiffPoly monomial(const DiffMonomial& m, const Scalar& c, const TruncationContext& t);
    static DiffPoly jet(int kx, int ky, const TruncationContext& t);
    static DiffPoly u(const TruncationContext& t) { return jet(0, 0, t); }
    static DiffPoly one(const TruncationContext& t) { return constant(Scalar(1), t); }

    const TruncationContext& trunc() const { return trunc_; }
    const std::map<DiffMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Scalar coefficient(const DiffMonomial& m) const;

    /// Adds c*m, dropping it when outside the window.
    void add_term(const DiffMonomial& m, const Scalar& c);

    DiffPoly operator-() const;
    DiffPoly operator+(const DiffPoly& o) const;
    DiffPoly operator-(const DiffPoly& o) const;
    DiffPoly operator*(const DiffPoly& o) const;
    DiffPoly operator*(const Scalar& c) const;

    /// Multiplies by eps^deps mu^dmu (window refilter included).
    DiffPoly times_eps_mu(int deps, int dmu) const;
    /// Same terms refiltered under the given window.
    DiffPoly restricted(const TruncationContext& t) const;
    /// The slice with epsExp == eps.
    DiffPoly eps_slice(int eps) const;
    int min_eps_exponent() const;  // 0 for the zero polynomial
    int max_jet_count() const;     // 0 for the zero polynomial

    /// Structural equality: identical window and identical term map.
    bool operator==(const DiffPoly& o) const;

private:
    std::map<DiffMonomial, Scalar> terms_;
    TruncationContext trunc_;
};

DiffPoly dx(const DiffPoly& f);
DiffPoly dy(const DiffPoly& f);

/// Common bidegree of all monomials, std::nullopt if inhomogeneous. The zero
/// polynomial reports (0,0).
std::optional<std::pair<int, int>> bidegree(const DiffPoly& f);
bool is_homogeneous_of(const DiffPoly& f, std::pair<int, int> deg);

/// d/du_{kx,ky}, the plain partial derivative with respect to one jet.
DiffPoly partial_jet(const DiffPoly& f, JetVar v);

/// Euler operator sum (-dx)^kx (-dy)^ky d/du_{kx,ky}; kills images of dx, dy.
DiffPoly variational_derivative(const DiffPoly& f);

/// u_{kx,ky} -> s*u_{kx,ky}; returns the coefficient of s^j keyed by j
/// (j = total jet count of the monomials it holds).
std::map<int, DiffPoly> scale_u(const DiffPoly& f);

/// True when the two polynomials have the same coefficients on the
/// intersection of their windows with `window`.
bool agree_on(const DiffPoly& f, const DiffPoly& g, const TruncationContext& window);

std::string to_string(const DiffMonomial& m);
std::string to_string(const DiffPoly& f);

}  // namespace moyallax
