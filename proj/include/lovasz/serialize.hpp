#pragma once

#include <json.hpp>
#include <string>

#include "lovasz/bounds.hpp"
#include "lovasz/theta.hpp"

namespace lovasz {

using Json = nlohmann::ordered_json;

/// {n, bounds:{hoffman, walkgen, closed_form:{value, condition}, laplacian},
///  dominance_ok, alpha_witness}; absent values are null.
Json to_json(const BoundReport& r);

/// {upper, lower, iterations, converged, weights:[...]}
Json to_json(const ThetaEstimate& e);

/// Single line, no trailing newline.
std::string to_line(const Json& j);

}  // namespace lovasz
