#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

// Irredundant inequality description of a finitely generated cone:
//   x in cone  <=>  e . x = 0 for every span equation
//              and  n . x >= 0 for every inward facet normal.
// Normals are facets of the cone inside its linear span, projected into the
// span, primitive, sorted lexicographically.  Span equations are a canonical
// basis of the orthogonal complement of the span.
struct FacetData {
  std::vector<QVector> normals;
  std::vector<QVector> span_equations;
};

// Finitely generated cone over Q with exact arithmetic.  Immutable after
// construction; the facet description is computed lazily, at most once, and
// may be requested from several threads concurrently.
class RationalCone {
 public:
  // Generators are canonicalized: zero vectors dropped (recorded as a
  // warning), the rest scaled to primitive integer direction, duplicates
  // removed, input order otherwise kept.
  static RationalCone from_generators(std::size_t ambient_dim,
                                      const std::vector<QVector>& generators);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<QVector>& generators() const { return gens_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  const FacetData& facets() const;

  bool contains(const QVector& x) const;
  // Topological interior: nonempty only for full-dimensional cones.
  bool interior_contains(const QVector& x) const;
  // Interior relative to the linear span.
  bool relative_interior_contains(const QVector& x) const;

  // Canonical basis of {x : x and -x both in the cone}; empty iff the cone
  // is strongly convex.
  std::vector<QVector> lineality_space() const;
  bool is_strongly_convex() const;

  RationalCone(const RationalCone& other);
  RationalCone& operator=(const RationalCone& other);

 private:
  RationalCone() = default;

  std::size_t dim_ = 0;
  std::vector<QVector> gens_;
  std::vector<std::string> warnings_;

  mutable std::mutex facet_mutex_;
  mutable std::shared_ptr<const FacetData> facet_cache_;
};

// Generator description of {x : e . x = 0 for e in equations,
//                               a . x >= 0 for a in inequalities},
// computed by double description with insertion in input order and the
// algebraic (rank-based) adjacency test.
struct GeneratorData {
  std::vector<QVector> rays;       // extreme rays, primitive, lex sorted
  std::vector<QVector> lineality;  // canonical basis, primitive, lex sorted
};

GeneratorData cone_from_constraints(std::size_t ambient_dim,
                                    const std::vector<QVector>& equations,
                                    const std::vector<QVector>& inequalities);

// Rays plus +/- each lineality basis vector, as one generator list.
std::vector<QVector> generator_list(const GeneratorData& g);

// Minimal generator description (extreme rays + lineality) of an existing
// cone, via its facet description.
GeneratorData minimal_generators(const RationalCone& c);

RationalCone intersect_subspace(const RationalCone& c, const std::vector<QVector>& equations);
RationalCone image_cone(const QMatrix& map, const RationalCone& c);

// Exact boundedness decision for the affine slice {x in c : x[coord] = level}
// with level > 0.  The slice is bounded iff c meets {x[coord] = 0} only in 0;
// bounded slices come with the vertex set and the exact squared diameter,
// unbounded ones with a recession direction inside {x[coord] = 0}.
struct LevelSetReport {
  bool bounded = false;
  bool slice_empty = false;
  std::vector<QVector> vertices;
  Rational squared_diameter;
  std::optional<std::pair<QVector, QVector>> diameter_pair;
  std::optional<QVector> recession_direction;
};

LevelSetReport level_set_diameter_bounded(const RationalCone& c, std::size_t rank_coordinate,
                                          const Rational& level);

// functional . g >= 0 for every generator.
bool halfspace_contains(const QVector& functional, const RationalCone& c);

}  // namespace conelab
