#pragma once

#include <cstddef>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

// Reference membership oracle, independent of the double-description code
// path: decides whether x is a nonnegative rational combination of the
// generators by Fourier-Motzkin elimination of the combination multipliers.
// Used by tests and the acceptance suite to cross-check RationalCone; the
// cone engine itself never calls it.
bool fm_cone_contains(std::size_t ambient_dim, const std::vector<QVector>& generators,
                      const QVector& x);

}  // namespace conelab
