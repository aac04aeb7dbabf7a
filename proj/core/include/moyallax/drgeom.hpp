#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "moyallax/hierarchy.hpp"

namespace moyallax {

/// Ramification vectors (a_i), (b_i) with genus. Integrals of the classes
/// these index vanish unless the vectors sum to zero.
struct RamificationData {
    int genus = 0;
    std::vector<long> a;
    std::vector<long> b;
    bool sums_vanish() const;
};

/// int_{Mbar_{g,3}} lambda_g DR_g(a1,a2,-a1-a2) DR_g(b1,b2,-b1-b2)
///   = (a1 b2 - a2 b1)^{2g} / (2^{3g} g! (2g+1)!!), exact.
Rational quadratic_dr_integral(int g, long a1, long a2, long b1, long b2);

/// f_g computed by the recursion f_g = (a1 b2 - a2 b1)^2 / (8(2g+1)) f_{g-1},
/// f_0 = 1; relates to the closed form by f_g = g! * quadratic_dr_integral.
Rational theta_normalized_recursive(int g, long a1, long a2, long b1, long b2);

/// int lambda_g psi_i Theta(a)^{g-1} DR_g(b) over Mbar_{g,3}:
///   ((2g+1) b_i^2 - 6 b_j b_k) / (24(2g+1)) * f_{g-1}(a,b),  {i,j,k}={1,2,3}.
/// g >= 1, i in {1,2,3}, both vectors must sum to zero.
Rational theta_dr_psi_integral(int g, int i, const std::array<long, 3>& a,
                               const std::array<long, 3>& b);

/// The separating-boundary contribution f_{g-1}(a,b) * sum_i a_i^2 b_i^2 / 24.
Rational theta_dr_boundary_term(int g, const std::array<long, 3>& a,
                                const std::array<long, 3>& b);

/// int_{Mbar_{g,n}} lambda_g Theta(a)^k DR_g(b). Vanishing is decided by the
/// zero-sum conditions, the relation lambda_g Theta^{g+1} = 0 and the
/// dimension count k = g + n - 3; the two evaluated cases are (n=3, k=g),
/// worth f_g(a,b), and (n=2, k=0, g=1), worth b_1^2/12. Dimension-matching
/// cases beyond those two are reported as not determined.
struct ThetaPowerResult {
    enum class Kind { value, vanishes, not_determined };
    Kind kind = Kind::vanishes;
    Rational value{};
};
ThetaPowerResult theta_power_dr_value(int g, int k, const std::vector<long>& a,
                                      const std::vector<long>& b);

/// Forgetful-pullback factor: int lambda_g psi_1 Theta(0,a)^k DR_g(0,b) over
/// Mbar_{g,n+1} equals (2g-2+n) times the integral without psi_1 over
/// Mbar_{g,n}. Throws for unstable (g,n).
long psi_pullback_factor(int g, int n);

/// sum_{g<=gmax} sum_{k1+k2=2g} (-1)^{k2} (-eps^2 mu^2)^g / (2^{2g} k1! k2!)
///   u_{k1,k2} u_{k2,k1};  equals star(u,u) under mu cap 2*gmax.
DiffPoly step1_series(int gmax, const TruncationContext& trunc);

/// Frequency pair: p^a_b carries e^{i(ay+bx)}.
struct FreqPair {
    long a = 0;
    long b = 0;
    auto operator<=>(const FreqPair&) const = default;
};

struct FreqFactor {
    FreqPair p;
    int mult = 1;
    bool operator==(const FreqFactor&) const = default;
};

/// Monomial eps^e mu^q prod p^{a}_{b}; the frequency is the componentwise sum
/// of its pairs (with multiplicity).
class FourierMonomial {
public:
    FourierMonomial() = default;
    FourierMonomial(std::vector<FreqFactor> pairs, int eps, int mu);

    const std::vector<FreqFactor>& pairs() const { return pairs_; }
    int eps() const { return eps_; }
    int mu() const { return mu_; }
    FreqPair frequency() const;
    int degree() const;

    FourierMonomial times(const FourierMonomial& o) const;
    std::strong_ordering operator<=>(const FourierMonomial& o) const;
    bool operator==(const FourierMonomial& o) const { return (*this <=> o) == 0; }

private:
    std::vector<FreqFactor> pairs_;  // sorted, distinct, mult >= 1
    int eps_ = 0;
    int mu_ = 0;
};

/// Finitely supported polynomial in the p^a_b with Gaussian-rational
/// coefficients carrying eps/mu exponents.
class FourierPoly {
public:
    const std::map<FourierMonomial, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const FourierMonomial& m) const;
    void add_term(const FourierMonomial& m, const Scalar& c);

    FourierPoly operator+(const FourierPoly& o) const;
    FourierPoly operator-(const FourierPoly& o) const;
    FourierPoly operator*(const FourierPoly& o) const;
    FourierPoly operator*(const Scalar& c) const;
    /// The frequency-(0,0) part.
    FourierPoly constant_frequency_part() const;

    bool operator==(const FourierPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<FourierMonomial, Scalar> terms_;
};

/// Substitutes u_{k1,k2} -> sum_{(a,b) in support} (ib)^{k1} (ia)^{k2} p^a_b
/// and expands. Exact; a ring morphism intertwining dx with multiplication by
/// i times the total b-frequency.
FourierPoly fourier_substitute(const DiffPoly& f, const std::vector<FreqPair>& support);

/// True iff the constant-frequency Fourier coefficients of the two densities
/// agree as polynomials in p for every support with |a|,|b| <= support_bound
/// and size up to the jet count + 1. Jet-free terms are ignored (constants
/// are quotiented out of local functionals).
bool functional_equal(const LocalFunctional& F, const LocalFunctional& G, long support_bound);

/// int_{DR_g(0,b_1..b_n)} lambda_g psi_1^d Theta^k read off the Hamiltonian
/// density G = g_d: (-1)^g k! |Aut| times the coefficient of
/// eps^{2g} mu^{2k} prod p^{a_j}_{b_j} in the constant-frequency expansion.
/// Vectors must sum to zero; the window of G must cover (2g, 2k), else
/// std::invalid_argument. An absent coefficient is a legitimate vanishing.
Rational extract_intersection_numbers(const LocalFunctional& G, int d, int g, int k,
                                      const std::vector<long>& aVec,
                                      const std::vector<long>& bVec);

/// CSV table "g,a1,a2,b1,b2,value" of quadratic DR integrals over the ranges
/// g <= gmax, |a_i| <= amax, |b_i| <= bmax.
std::string quadratic_table_csv(int gmax, long amax, long bmax);

}  // namespace moyallax
