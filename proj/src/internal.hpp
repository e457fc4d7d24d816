#pragma once

#include <optional>

#include "qpcluster/quiver.hpp"

namespace qpc::detail {

/// Mutation without the deletion step. With a degree, new arrows get the
/// graded weights |[ab]| = |a|+|b|, |a*| = |W|-|a| (a out of s), |b*| = -|b|
/// (b into s); without one they get weight 1.
Quiver premutated_quiver(const Quiver& q, Vertex s, std::optional<int> degree);

}  // namespace qpc::detail
