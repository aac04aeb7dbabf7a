#pragma once

#include <optional>

#include "moyallax/diffpoly.hpp"
#include "moyallax/psdo.hpp"

namespace moyallax {

/// A density regarded modulo total x/y-derivatives and constants. Equality of
/// local functionals is an operation (drgeom's functional_equal), not
/// structural equality of densities.
struct LocalFunctional {
    DiffPoly density;
};

/// Right-hand side of flow d of the noncommutative KdV hierarchy,
///   dL/dt_d = eps^{2d}/(2d+1)!! [(L^{d+1/2})_+, L]_*,
/// returned as du/dt_d (the order-0 coefficient divided by 2 eps^-2). Checks
/// that the commutator is an order-0 operator and that the result is
/// homogeneous of bidegree (1,0); throws ConsistencyError otherwise.
/// `depth` defaults to -(2d + max_mu + 4).
DiffPoly flow_rhs(int d, const TruncationContext& trunc, std::optional<int> depth = std::nullopt);

/// The pieces flow_rhs is assembled from, exposed for cross-checks: the
/// scaled commutator eps^{2d}/(2d+1)!! [(L^{d+1/2})_+, L]_* as an operator.
PseudoDiffOp lax_flow_operator(int d, const TruncationContext& trunc,
                               std::optional<int> depth = std::nullopt);

/// Prolongation of du/dt = P applied to f:
///   sum_{k1,k2} (dx^{k1} dy^{k2} P) df/du_{k1,k2}.
DiffPoly evolutionary_derivative(const DiffPoly& P, const DiffPoly& f);

/// Commutator of the evolutionary flows with right-hand sides P and Q; zero
/// iff the flows commute.
DiffPoly flow_commutator(const DiffPoly& P, const DiffPoly& Q);

/// Density of {F, G}: (dF/du) dx(dG/du) in variational derivatives.
LocalFunctional poisson_bracket(const LocalFunctional& F, const LocalFunctional& G);

/// dx(variational derivative of the density).
DiffPoly hamiltonian_flow(const LocalFunctional& G);

/// Inverts dx on its image by repeated integration by parts on the leading
/// monomial. Throws NotExactDerivative when f is not a total x-derivative.
DiffPoly dx_preimage(const DiffPoly& f);

/// Variational homotopy: density = sum_j u * h_j / (j+1) where h_j is the
/// jet-degree-j part of h. Requires h to have no jet-free terms; checks
/// a posteriori that variational_derivative(density) == h and throws
/// NotExactDerivative otherwise.
LocalFunctional reconstruct_density(const DiffPoly& h);

/// Hamiltonian density g_d of flow d: dx is inverted on the flow and the
/// result run through the homotopy. Defined up to exact terms and constants,
/// which LocalFunctional equality quotients out.
LocalFunctional hamiltonian_density(int d, const TruncationContext& trunc,
                                    std::optional<int> depth = std::nullopt);

/// The eps^0 part. Requires P to be polynomial in eps (no negative
/// exponents); throws std::invalid_argument otherwise.
DiffPoly dispersionless_limit(const DiffPoly& P);

/// dx(u^{d+1}/(d+1)!), the expected dispersionless limit of flow d.
DiffPoly dispersionless_expected(int d, const TruncationContext& trunc);

}  // namespace moyallax
