#pragma once

#include <json.hpp>

#include "picard/gaussian.hpp"

namespace picard {

using json = nlohmann::json;

// Gaussian integers travel as [re, im]; re and im are decimal strings when
// they do not fit in 64 bits.
json to_json(const GaussianInt& z);
json to_json(const GVec3& v);
json to_json(const GMat3& m);

GaussianInt gaussian_from_json(const json& j);
GVec3 vector_from_json(const json& j);
GMat3 matrix_from_json(const json& j);

}  // namespace picard
