#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moyallax/truncation.hpp"

namespace moyallax::verify {

struct CheckResult {
    std::string name;
    bool pass = false;
    /// Exact discrepancy, printed when nonzero (always a polynomial or an
    /// exact rational, never a rounded number).
    std::string discrepancy;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckResult> checks;
    bool pass = true;
    void add(CheckResult c);
};

/// compose(sqrt_lax(L), sqrt_lax(L)) - L vanishes on every retained order,
/// and deepening by one order changes no retained coefficient.
SuiteReport suite_sqrt(const TruncationContext& trunc, int depth);

/// Star-product algebra on seeded random homogeneous inputs: associativity,
/// unit, derivation law for dx/dy, bidegree additivity, mu->0 limit.
SuiteReport suite_assoc(const TruncationContext& trunc, std::uint64_t seed, int triples);

/// flow_rhs(1) == 1/2 dx(u*u) + eps^2/12 u_{3,0}.
SuiteReport suite_flow1(const TruncationContext& trunc, int depth);

/// flow_commutator(flow_rhs(1), flow_rhs(d)) == 0.
SuiteReport suite_commute(int d, const TruncationContext& trunc, int depth);

/// dispersionless_limit(flow_rhs(d)) == dx(u^{d+1}/(d+1)!) for d = 1..dmax.
SuiteReport suite_dispersionless(int dmax, const TruncationContext& trunc);

/// step1_series(max_mu/2) == star(u,u).
SuiteReport suite_step1(const TruncationContext& trunc);

/// Extraction ground truth for d=1: b^2/12 for b = 1..5 and the three-point
/// (2g+1) f_g relation for g <= 3.
SuiteReport suite_extract_d1();

}  // namespace moyallax::verify
