#pragma once

#include "moyallax/diffpoly.hpp"

namespace moyallax {

/// Moyal star product
///   f*g = sum_{n>=0} sum_{k1+k2=n} (-1)^{k2} (i eps mu)^n / (2^n k1! k2!)
///         (dx^{k1} dy^{k2} f)(dx^{k2} dy^{k1} g).
/// Each order n carries mu^n, so the n-sum stops at the window's mu cap; the
/// result is exact through the declared mu order by construction.
DiffPoly star(const DiffPoly& f, const DiffPoly& g);

/// star(f,g) - star(g,f); the even Moyal orders cancel.
DiffPoly star_commutator(const DiffPoly& f, const DiffPoly& g);

/// Left-associated n-fold star power; n = 0 gives 1.
DiffPoly star_power(const DiffPoly& f, int n);

}  // namespace moyallax
