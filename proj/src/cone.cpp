#include "conelab/cone.hpp"

#include <algorithm>

namespace conelab {

namespace {

void check_dim(const QVector& v, std::size_t dim, const char* what) {
  if (v.size() != dim)
    throw input_error(std::string(what) + ": expected vector of length " + std::to_string(dim) +
                      ", got " + std::to_string(v.size()));
}

std::vector<QVector> dedup_sorted(std::vector<QVector> vs) {
  std::sort(vs.begin(), vs.end(), lex_less);
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// ---- double description ----
//
// State describes the cone cut out by `equations` and the prefix of
// inequalities inserted so far, as span(lineality) + cone(rays).  Rays are
// extreme modulo the lineality space; the lineality basis spans exactly the
// set where all inserted constraints and equations are tight.

struct DDState {
  std::size_t dim = 0;
  std::vector<QVector> equations;
  std::vector<QVector> inserted;
  std::vector<QVector> lineality;
  std::vector<QVector> rays;
};

void dedup_rays(std::vector<QVector>& rays) {
  std::vector<QVector> out;
  for (QVector& r : rays) {
    QVector p = primitive_direction(r);
    if (is_zero(p)) continue;
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  rays = std::move(out);
}

// Rays a and b of the current cone are adjacent iff the constraints tight at
// both span a subspace of rank (dim - lineality) - 2.
bool adjacent(const DDState& st, const QVector& a, const QVector& b) {
  std::size_t full_rank = st.dim - st.lineality.size();
  if (full_rank < 2) return false;
  std::vector<QVector> active = st.equations;
  for (const QVector& c : st.inserted)
    if (sgn(dot(c, a)) == 0 && sgn(dot(c, b)) == 0) active.push_back(c);
  return matrix_rank(QMatrix::from_rows(active, st.dim)) == full_rank - 2;
}

void insert_inequality(DDState& st, const QVector& a) {
  if (is_zero(a)) return;

  // If the constraint cuts the lineality space, one lineality direction
  // becomes a ray and everything else is projected onto {a . x = 0}.
  std::size_t cut = st.lineality.size();
  for (std::size_t i = 0; i < st.lineality.size(); ++i)
    if (sgn(dot(a, st.lineality[i])) != 0) {
      cut = i;
      break;
    }
  if (cut != st.lineality.size()) {
    QVector l0 = st.lineality[cut];
    Rational al0 = dot(a, l0);
    if (sgn(al0) < 0) {
      l0 = negate(l0);
      al0 = -al0;
    }
    std::vector<QVector> new_lin;
    for (std::size_t i = 0; i < st.lineality.size(); ++i) {
      if (i == cut) continue;
      QVector l = subtract(st.lineality[i], scale(dot(a, st.lineality[i]) / al0, l0));
      new_lin.push_back(primitive_direction(l));
    }
    for (QVector& r : st.rays) r = subtract(r, scale(dot(a, r) / al0, l0));
    st.rays.push_back(l0);
    st.lineality = std::move(new_lin);
    dedup_rays(st.rays);
    st.inserted.push_back(a);
    return;
  }

  std::vector<QVector> pos, zero, neg;
  for (const QVector& r : st.rays) {
    int s = sgn(dot(a, r));
    if (s > 0) pos.push_back(r);
    else if (s < 0) neg.push_back(r);
    else zero.push_back(r);
  }
  std::vector<QVector> next = pos;
  next.insert(next.end(), zero.begin(), zero.end());
  for (const QVector& p : pos)
    for (const QVector& n : neg) {
      if (!adjacent(st, p, n)) continue;
      // dot(a, combination) = 0; both coefficients positive.
      QVector comb = add(scale(dot(a, p), n), scale(-dot(a, n), p));
      next.push_back(comb);
    }
  st.rays = std::move(next);
  dedup_rays(st.rays);
  st.inserted.push_back(a);
}

DDState run_double_description(std::size_t dim, const std::vector<QVector>& equations,
                               const std::vector<QVector>& inequalities) {
  DDState st;
  st.dim = dim;
  for (const QVector& e : equations) {
    check_dim(e, dim, "equation");
    if (!is_zero(e)) st.equations.push_back(primitive_direction(e));
  }
  st.lineality = st.equations.empty()
                     ? [&] {
                         std::vector<QVector> basis;
                         for (std::size_t i = 0; i < dim; ++i) {
                           QVector e = zero_qvector(dim);
                           e[i] = 1;
                           basis.push_back(e);
                         }
                         return basis;
                       }()
                     : nullspace_basis(QMatrix::from_rows(st.equations, dim));
  for (const QVector& a : inequalities) {
    check_dim(a, dim, "inequality");
    insert_inequality(st, a);
  }
  return st;
}

// Orthogonal (not orthonormal) basis via Gram-Schmidt; exact over Q.
std::vector<QVector> orthogonalize(const std::vector<QVector>& basis) {
  std::vector<QVector> out;
  for (const QVector& v : basis) {
    QVector w = v;
    for (const QVector& b : out) w = subtract(w, scale(dot(w, b) / dot(b, b), b));
    if (!is_zero(w)) out.push_back(primitive_direction(w));
  }
  return out;
}

QVector project_out(const QVector& v, const std::vector<QVector>& orth) {
  QVector w = v;
  for (const QVector& b : orth) w = subtract(w, scale(dot(w, b) / dot(b, b), b));
  return w;
}

}  // namespace

// ---- RationalCone ----

RationalCone RationalCone::from_generators(std::size_t ambient_dim,
                                           const std::vector<QVector>& generators) {
  if (ambient_dim == 0) throw input_error("cone requires ambient dimension >= 1");
  RationalCone c;
  c.dim_ = ambient_dim;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    check_dim(generators[i], ambient_dim, "generator");
    if (is_zero(generators[i])) {
      c.warnings_.push_back("generator " + std::to_string(i + 1) +
                            " is the zero vector and was dropped");
      continue;
    }
    QVector p = primitive_direction(generators[i]);
    if (std::find(c.gens_.begin(), c.gens_.end(), p) == c.gens_.end())
      c.gens_.push_back(std::move(p));
  }
  return c;
}

RationalCone::RationalCone(const RationalCone& other)
    : dim_(other.dim_), gens_(other.gens_), warnings_(other.warnings_) {
  std::lock_guard<std::mutex> lock(other.facet_mutex_);
  facet_cache_ = other.facet_cache_;
}

RationalCone& RationalCone::operator=(const RationalCone& other) {
  if (this == &other) return *this;
  std::shared_ptr<const FacetData> cache;
  {
    std::lock_guard<std::mutex> lock(other.facet_mutex_);
    cache = other.facet_cache_;
  }
  std::lock_guard<std::mutex> lock(facet_mutex_);
  dim_ = other.dim_;
  gens_ = other.gens_;
  warnings_ = other.warnings_;
  facet_cache_ = std::move(cache);
  return *this;
}

const FacetData& RationalCone::facets() const {
  std::lock_guard<std::mutex> lock(facet_mutex_);
  if (facet_cache_) return *facet_cache_;

  auto data = std::make_shared<FacetData>();
  // Equations cut out the linear span of the generators.
  data->span_equations = nullspace_basis(QMatrix::from_rows(gens_, dim_));
  if (!gens_.empty()) {
    // Facet normals are the extreme rays of the polar cone
    // {y : g . y >= 0 for all generators g}, taken modulo its lineality
    // space (the orthogonal complement of the span) by projecting onto
    // the span.
    DDState polar = run_double_description(dim_, {}, gens_);
    std::vector<QVector> orth = orthogonalize(data->span_equations);
    std::vector<QVector> normals;
    for (const QVector& ray : polar.rays) {
      QVector n = primitive_direction(project_out(ray, orth));
      if (!is_zero(n)) normals.push_back(std::move(n));
    }
    data->normals = dedup_sorted(std::move(normals));
  }
  facet_cache_ = std::move(data);
  return *facet_cache_;
}

bool RationalCone::contains(const QVector& x) const {
  check_dim(x, dim_, "point");
  const FacetData& f = facets();
  for (const QVector& e : f.span_equations)
    if (sgn(dot(e, x)) != 0) return false;
  for (const QVector& n : f.normals)
    if (sgn(dot(n, x)) < 0) return false;
  return true;
}

bool RationalCone::interior_contains(const QVector& x) const {
  check_dim(x, dim_, "point");
  const FacetData& f = facets();
  if (!f.span_equations.empty()) return false;  // not full-dimensional
  for (const QVector& n : f.normals)
    if (sgn(dot(n, x)) <= 0) return false;
  return true;
}

bool RationalCone::relative_interior_contains(const QVector& x) const {
  check_dim(x, dim_, "point");
  const FacetData& f = facets();
  for (const QVector& e : f.span_equations)
    if (sgn(dot(e, x)) != 0) return false;
  for (const QVector& n : f.normals)
    if (sgn(dot(n, x)) <= 0) return false;
  return true;
}

std::vector<QVector> RationalCone::lineality_space() const {
  const FacetData& f = facets();
  std::vector<QVector> rows = f.normals;
  rows.insert(rows.end(), f.span_equations.begin(), f.span_equations.end());
  return nullspace_basis(QMatrix::from_rows(rows, dim_));
}

bool RationalCone::is_strongly_convex() const { return lineality_space().empty(); }

// ---- conversions ----

GeneratorData cone_from_constraints(std::size_t ambient_dim,
                                    const std::vector<QVector>& equations,
                                    const std::vector<QVector>& inequalities) {
  DDState st = run_double_description(ambient_dim, equations, inequalities);
  GeneratorData g;
  g.rays = dedup_sorted(st.rays);
  // Recompute the lineality basis canonically: it is the null space of all
  // constraints, independent of the insertion path.
  std::vector<QVector> rows = st.equations;
  rows.insert(rows.end(), st.inserted.begin(), st.inserted.end());
  g.lineality = nullspace_basis(QMatrix::from_rows(rows, ambient_dim));
  return g;
}

std::vector<QVector> generator_list(const GeneratorData& g) {
  std::vector<QVector> out = g.rays;
  for (const QVector& l : g.lineality) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  return out;
}

GeneratorData minimal_generators(const RationalCone& c) {
  const FacetData& f = c.facets();
  return cone_from_constraints(c.ambient_dim(), f.span_equations, f.normals);
}

RationalCone intersect_subspace(const RationalCone& c, const std::vector<QVector>& equations) {
  const FacetData& f = c.facets();
  std::vector<QVector> eqs = f.span_equations;
  for (const QVector& e : equations) {
    check_dim(e, c.ambient_dim(), "equation");
    eqs.push_back(e);
  }
  GeneratorData g = cone_from_constraints(c.ambient_dim(), eqs, f.normals);
  return RationalCone::from_generators(c.ambient_dim(), generator_list(g));
}

RationalCone image_cone(const QMatrix& map, const RationalCone& c) {
  if (map.cols != c.ambient_dim())
    throw input_error("image cone: map expects dimension " + std::to_string(map.cols) +
                      ", cone lives in dimension " + std::to_string(c.ambient_dim()));
  if (map.rows == 0) throw input_error("image cone: map has target dimension 0");
  std::vector<QVector> images;
  images.reserve(c.generators().size());
  for (const QVector& g : c.generators()) images.push_back(matrix_apply(map, g));
  return RationalCone::from_generators(map.rows, images);
}

LevelSetReport level_set_diameter_bounded(const RationalCone& c, std::size_t rank_coordinate,
                                          const Rational& level) {
  if (rank_coordinate >= c.ambient_dim())
    throw input_error("rank coordinate " + std::to_string(rank_coordinate) +
                      " out of range for dimension " + std::to_string(c.ambient_dim()));
  if (sgn(level) <= 0) throw input_error("slice level must be positive");

  QVector e = zero_qvector(c.ambient_dim());
  e[rank_coordinate] = 1;
  RationalCone recession = intersect_subspace(c, {e});

  LevelSetReport report;
  report.bounded = recession.generators().empty();
  if (!report.bounded) {
    report.recession_direction = recession.generators().front();
    return report;
  }

  std::vector<QVector> verts;
  for (const QVector& g : generator_list(minimal_generators(c))) {
    if (sgn(g[rank_coordinate]) <= 0) continue;
    verts.push_back(scale(level / g[rank_coordinate], g));
  }
  verts = dedup_sorted(std::move(verts));
  report.slice_empty = verts.empty();
  report.vertices = verts;
  report.squared_diameter = 0;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Rational d2 = squared_distance(verts[i], verts[j]);
      if (d2 > report.squared_diameter) {
        report.squared_diameter = d2;
        report.diameter_pair = {verts[i], verts[j]};
      }
    }
  return report;
}

bool halfspace_contains(const QVector& functional, const RationalCone& c) {
  check_dim(functional, c.ambient_dim(), "functional");
  for (const QVector& g : c.generators())
    if (sgn(dot(functional, g)) < 0) return false;
  return true;
}

}  // namespace conelab
