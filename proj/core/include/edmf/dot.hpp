#pragma once

#include <string>

#include "edmf/artinian.hpp"

namespace edmf {

// Graphviz rendering of an AR quiver. Vertices are named V1..Vn, the
// projective vertex is filled light blue, and tau is drawn as dashed loops.
std::string to_dot(const ARQuiver& q);

}  // namespace edmf
