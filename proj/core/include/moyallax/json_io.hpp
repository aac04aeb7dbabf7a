#pragma once

#include <json.hpp>

#include "moyallax/drgeom.hpp"
#include "moyallax/psdo.hpp"

namespace moyallax {

using ojson = nlohmann::ordered_json;

ojson to_json(const TruncationContext& t);
TruncationContext truncation_from_json(const ojson& j);

/// Canonical array form: [{"c": {"re","im"}, "eps", "mu", "jets": [[kx,ky,mult]...]}].
ojson terms_to_json(const DiffPoly& f);
DiffPoly diffpoly_from_json(const ojson& terms, const TruncationContext& trunc);

/// {"depth": int|null, "coeffs": {"<exponent>": terms-array}} in ascending
/// exponent order.
ojson to_json(const PseudoDiffOp& A);
PseudoDiffOp psdo_from_json(const ojson& j, const TruncationContext& trunc);

/// Mirrors the DiffPoly conventions with "pairs": [[a,b,mult]...].
ojson to_json(const FourierPoly& f);
FourierPoly fourier_from_json(const ojson& terms);

}  // namespace moyallax
