#include "conelab/theorems.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace conelab {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not_applicable";
  }
  throw input_error("unknown verdict value");
}

std::string to_string(LineAssumption a) {
  switch (a) {
    case LineAssumption::gorenstein_ideal: return "gorenstein_ideal";
    case LineAssumption::rigid: return "rigid";
    case LineAssumption::non_principal: return "non_principal";
    case LineAssumption::height_one: return "height_one";
    case LineAssumption::locally_free_punctured: return "locally_free_punctured";
    case LineAssumption::dim_ge_3: return "dim_ge_3";
  }
  throw input_error("unknown line assumption value");
}

LineAssumption line_assumption_from_string(const std::string& s) {
  for (LineAssumption a :
       {LineAssumption::gorenstein_ideal, LineAssumption::rigid, LineAssumption::non_principal,
        LineAssumption::height_one, LineAssumption::locally_free_punctured,
        LineAssumption::dim_ge_3})
    if (to_string(a) == s) return a;
  throw input_error("unknown line assumption '" + s + "'");
}

namespace {

Json vec_json(const QVector& v) {
  Json arr = Json::array();
  for (const Rational& q : v) arr.push_back(format_rational(q));
  return arr;
}

Json vecs_json(const std::vector<QVector>& vs) {
  Json arr = Json::array();
  for (const QVector& v : vs) arr.push_back(vec_json(v));
  return arr;
}

Json int_vec_json(const std::vector<Integer>& v) {
  Json arr = Json::array();
  for (const Integer& z : v) arr.push_back(format_integer(z));
  return arr;
}

Json element_json(const GroupElement& e) {
  Json j;
  j["group"] = describe_group(e.presentation);
  j["free_part"] = int_vec_json(e.free_part);
  j["torsion_part"] = int_vec_json(e.torsion_part);
  return j;
}

Json class_json(const ModuleClass& m) {
  Json j;
  j["label"] = m.label;
  j["rank"] = format_integer(m.rank);
  j["kernel_part"] = element_json(m.kernel_part);
  j["realification"] = vec_json(realification(m));
  return j;
}

QVector unit_vector(std::size_t dim, std::size_t i) {
  QVector v = zero_qvector(dim);
  v[i] = 1;
  return v;
}

std::string join_provenance(std::initializer_list<std::string> parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (p.empty()) continue;
    if (out.find(p) != std::string::npos) continue;
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

std::string class_provenance(const std::vector<ModuleClass>& classes) {
  std::string out;
  for (const ModuleClass& m : classes)
    out = join_provenance({out, m.provenance});
  return out;
}

}  // namespace

RationalCone class_cone(const std::vector<ModuleClass>& classes, const RingDescriptor& ring) {
  const GroupPresentation kernel = ring.kernel_presentation();
  std::vector<QVector> points;
  points.reserve(classes.size());
  for (const ModuleClass& m : classes) {
    if (!same_shape(m.kernel_part.presentation, kernel))
      throw input_error("class '" + m.label + "' does not live in the kernel group of ring '" +
                        ring.name + "'");
    points.push_back(realification(m));
  }
  return RationalCone::from_generators(ring.zeta + 1, points);
}

ClassStream arithmetic_stream(const ModuleClass& base, const GroupElement& step,
                              bool alternating) {
  if (!same_shape(base.kernel_part.presentation, step.presentation))
    throw input_error("stream: base class and step live in different groups");
  ClassStream s;
  s.description = base.label + (alternating ? " + (-1)^n * step" : " + n * step");
  s.at = [base, step, alternating](std::size_t n) {
    Integer coeff = alternating ? Integer(n % 2 == 0 ? 1 : -1)
                                : Integer(static_cast<unsigned long>(n));
    GroupElement kernel = add(base.kernel_part, scale(coeff, step));
    return make_module_class(base.label + " + " + format_integer(coeff) + "*step", base.rank,
                             std::move(kernel), base.mcm_flag, base.provenance);
  };
  return s;
}

TheoremReport theorem1_report(const std::vector<ModuleClass>& classes, const Integer& r,
                              const RingDescriptor& ring) {
  if (r < 1) throw input_error("rank-slice chain: rank must be >= 1");
  for (const ModuleClass& m : classes) {
    if (m.rank != r)
      throw input_error("rank-slice chain: class '" + m.label + "' has rank " +
                        format_integer(m.rank) + ", expected " + format_integer(r));
    if (!m.mcm_flag.has_value() || !*m.mcm_flag)
      throw input_error("rank-slice chain: class '" + m.label +
                        "' is not declared maximal Cohen-Macaulay");
  }

  TheoremReport report;
  report.id = "t1";
  report.verdict = Verdict::holds;
  report.citation = join_provenance({ring.provenance, class_provenance(classes)});

  RationalCone c = class_cone(classes, ring);
  Json cert;
  cert["ambient_dim"] = c.ambient_dim();
  cert["rank"] = format_integer(r);
  cert["generators"] = vecs_json(c.generators());

  Json violations = Json::array();

  const FacetData& facets = c.facets();
  cert["polyhedral"] = {
      {"holds", true},
      {"facet_count", facets.normals.size()},
      {"note", "finitely generated, hence polyhedral by the facet computation"},
  };
  cert["closed"] = {
      {"holds", true},
      {"facet_normals", vecs_json(facets.normals)},
      {"span_equations", vecs_json(facets.span_equations)},
      {"note", "intersection of the listed closed halfspaces and hyperplanes"},
  };

  RationalCone rank_zero = intersect_subspace(c, {unit_vector(c.ambient_dim(), 0)});
  bool e_holds = rank_zero.generators().empty();
  Json e_json = {{"holds", e_holds}};
  if (!e_holds) {
    e_json["witness_directions"] = vecs_json(rank_zero.generators());
    violations.push_back({{"stage", "rank_zero_intersection"},
                          {"witness", vec_json(rank_zero.generators().front())}});
  }
  cert["rank_zero_intersection"] = e_json;

  LevelSetReport level = level_set_diameter_bounded(c, 0, Rational(r));
  bool f_holds = level.bounded;
  Json f_json = {{"holds", f_holds}, {"level", format_integer(r)}};
  if (f_holds) {
    f_json["vertices"] = vecs_json(level.vertices);
    f_json["squared_diameter"] = format_rational(level.squared_diameter);
    if (level.diameter_pair) {
      f_json["diameter_pair"] =
          Json::array({vec_json(level.diameter_pair->first), vec_json(level.diameter_pair->second)});
    }
  } else {
    f_json["recession_direction"] =
        level.recession_direction ? vec_json(*level.recession_direction) : Json();
    violations.push_back({{"stage", "level_set_bounded"},
                          {"witness", f_json["recession_direction"]}});
  }
  cert["level_set_bounded"] = f_json;

  bool g_holds = c.is_strongly_convex();
  Json g_json = {{"holds", g_holds}};
  if (!g_holds) {
    g_json["lineality_basis"] = vecs_json(c.lineality_space());
    violations.push_back({{"stage", "strongly_convex"},
                          {"witness", vecs_json(c.lineality_space())}});
  }
  cert["strongly_convex"] = g_json;

  Json equivalences;
  equivalences["rank_zero_iff_bounded"] = (e_holds == f_holds);
  equivalences["bounded_implies_strongly_convex"] = (!f_holds || g_holds);
  cert["equivalences"] = equivalences;
  if (e_holds != f_holds)
    violations.push_back({{"stage", "equivalence rank_zero_iff_bounded"},
                          {"witness", "the two decisions disagree"}});
  if (f_holds && !g_holds)
    violations.push_back({{"stage", "equivalence bounded_implies_strongly_convex"},
                          {"witness", "bounded slice with nontrivial lineality"}});

  if (!violations.empty()) {
    report.verdict = Verdict::violated;
    cert["violations"] = violations;
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport stream_divergence_monitor(const ClassStream& s, const Integer& r,
                                        std::size_t horizon, const Rational& bound) {
  if (horizon < 1) throw input_error("stream monitor: horizon must be >= 1");
  if (sign_of(bound) <= 0) throw input_error("stream monitor: bound must be positive");

  TheoremReport report;
  report.id = "stream";
  report.verdict = Verdict::holds;
  report.citation = s.description;

  const Rational bound_sq = bound * bound;
  Rational max_sq = 0;
  std::size_t max_index = 0;
  for (std::size_t n = 0; n <= horizon; ++n) {
    ModuleClass c = s.at(n);
    if (c.rank != r)
      throw input_error("stream '" + s.description + "' produced rank " + format_integer(c.rank) +
                        " at index " + std::to_string(n) + ", expected " + format_integer(r));
    QVector p = realification(c);
    Rational sq = squared_norm(p);
    if (sq > bound_sq) {
      QVector kernel_component = p;
      kernel_component[0] = 0;
      Json cert;
      cert["diverged"] = true;
      cert["index"] = n;
      cert["class"] = class_json(c);
      cert["point"] = vec_json(p);
      cert["kernel_component"] = vec_json(kernel_component);
      cert["squared_norm"] = format_rational(sq);
      cert["bound"] = format_rational(bound);
      cert["bound_squared"] = format_rational(bound_sq);
      cert["direction"] = is_zero(kernel_component)
                              ? Json()
                              : Json(vec_json(primitive_direction(kernel_component)));
      cert["note"] =
          "first index whose slice point leaves the ball, by exact squared-norm comparison; "
          "the direction is the primitive rational representative of the normalized kernel "
          "displacement, the limit-direction candidate";
      report.certificate = std::move(cert);
      return report;
    }
    if (sq > max_sq) {
      max_sq = sq;
      max_index = n;
    }
  }
  Json cert;
  cert["diverged"] = false;
  cert["horizon"] = horizon;
  cert["bound"] = format_rational(bound);
  cert["max_squared_norm"] = format_rational(max_sq);
  cert["max_index"] = max_index;
  cert["note"] = "bounded up to the horizon only; this does not prove the slice is bounded";
  report.certificate = std::move(cert);
  return report;
}

TheoremReport prop16_separation(const std::vector<ModuleClass>& classes) {
  TheoremReport report;
  report.id = "p16";
  report.verdict = Verdict::holds;
  report.citation = class_provenance(classes);

  for (std::size_t i = 1; i < classes.size(); ++i)
    if (!same_shape(classes[i].kernel_part.presentation, classes[0].kernel_part.presentation))
      throw input_error("separation check: classes '" + classes[0].label + "' and '" +
                        classes[i].label + "' live in different groups");

  Json identical = Json::array();
  Json collapses = Json::array();
  Json violations = Json::array();
  std::optional<Rational> min_sq;
  Json min_pair;
  std::size_t separated = 0;

  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      const ModuleClass& a = classes[i];
      const ModuleClass& b = classes[j];
      if (same_class(a, b)) {
        identical.push_back({{"labels", Json::array({a.label, b.label})},
                             {"note", "equal classes, separation vacuous"}});
        continue;
      }
      QVector ra = realification(a);
      QVector rb = realification(b);
      if (ra == rb) {
        GroupElement diff = add(a.kernel_part, negate(b.kernel_part));
        collapses.push_back({{"labels", Json::array({a.label, b.label})},
                             {"torsion_difference", element_json(diff)},
                             {"note", "distinct classes with equal realification: the torsion "
                                      "part is invisible after tensoring with the reals"}});
        continue;
      }
      Rational sq = squared_distance(ra, rb);
      ++separated;
      if (!min_sq || sq < *min_sq) {
        min_sq = sq;
        min_pair = Json::array({a.label, b.label});
      }
      if (sq < 1)
        violations.push_back({{"labels", Json::array({a.label, b.label})},
                              {"squared_distance", format_rational(sq)}});
    }
  }

  Json cert;
  cert["class_count"] = classes.size();
  cert["separated_pairs"] = separated;
  if (min_sq) {
    cert["min_squared_distance"] = format_rational(*min_sq);
    cert["min_pair"] = min_pair;
  }
  if (!identical.empty()) cert["identical_pairs"] = identical;
  if (!collapses.empty()) cert["torsion_collapses"] = collapses;
  cert["note"] = "distinct realified classes keep squared distance >= 1 (integer coordinates)";
  if (!violations.empty()) {
    report.verdict = Verdict::violated;
    cert["violations"] = violations;
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport symmetry_check(const std::vector<ModuleClass>& classes,
                             const RingDescriptor& ring) {
  TheoremReport report;
  report.id = "sym";
  report.citation = join_provenance({ring.provenance, class_provenance(classes)});

  if (!ring.has(RingFlag::canonical_module) ||
      (!ring.omega_kernel_part.has_value() && !ring.has(RingFlag::gorenstein))) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {{"missing", "canonical module class data for ring '" + ring.name + "'"}};
    return report;
  }

  Json missing = Json::array();
  for (const ModuleClass& m : classes) {
    ModuleClass dm = canonical_dual_class(m, ring);
    bool present = std::any_of(classes.begin(), classes.end(),
                               [&](const ModuleClass& x) { return same_class(x, dm); });
    if (!present)
      missing.push_back({{"class", m.label}, {"missing_dual", class_json(dm)}});
  }
  if (!missing.empty()) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing_duals", missing},
        {"note", "class list is not closed under the canonical dual; symmetry not checkable "
                 "at the generator level"},
    };
    return report;
  }

  RationalCone c = class_cone(classes, ring);
  QMatrix nu = nu_involution_matrix(ring);
  RationalCone image = image_cone(nu, c);

  Json cert;
  {
    std::vector<QVector> nu_rows;
    for (std::size_t i = 0; i < nu.rows; ++i) {
      QVector row(nu.cols);
      for (std::size_t j = 0; j < nu.cols; ++j) row[j] = nu.at(i, j);
      nu_rows.push_back(std::move(row));
    }
    cert["involution_matrix"] = vecs_json(nu_rows);
  }
  cert["generators"] = vecs_json(c.generators());
  cert["image_generators"] = vecs_json(image.generators());

  Json violations = Json::array();
  for (const QVector& g : image.generators())
    if (!c.contains(g))
      violations.push_back({{"direction", "image generator outside the cone"},
                            {"witness", vec_json(g)}});
  for (const QVector& g : c.generators())
    if (!image.contains(g))
      violations.push_back({{"direction", "cone generator outside the image"},
                            {"witness", vec_json(g)}});

  if (violations.empty()) {
    report.verdict = Verdict::holds;
    cert["mutual_containment"] = true;
    cert["note"] = "the involution maps the class cone onto itself";
  } else {
    report.verdict = Verdict::violated;
    cert["mutual_containment"] = false;
    cert["violations"] = violations;
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport prop44_boundary_check(const Integer& rank, const BettiSequence& betti,
                                    std::size_t horizon) {
  TheoremReport report;
  report.id = "p44";
  report.citation = betti.provenance;

  if (rank < 0) throw input_error("boundary check: rank must be >= 0");
  if (rank == 0) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {{"missing", "positive rank (the zero class carries no boundary data)"}};
    return report;
  }
  bool terminates = std::any_of(betti.prefix.begin(), betti.prefix.end(),
                                [](const Integer& b) { return b == 0; });
  if (!terminates && betti.closed_form &&
      betti.closed_form->kind == ClosedForm::Kind::constant && betti.closed_form->value == 0)
    terminates = true;
  if (terminates) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing", "an infinite resolution"},
        {"note", "the resolution terminates, so the module is free (total reflexivity with "
                 "finite projective dimension) and the boundary discussion is vacuous"},
    };
    return report;
  }
  if (betti.dual_prefix.empty()) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing", "dual Betti data (complete-resolution side); total reflexivity required"}};
    return report;
  }

  RankProfile prof = syzygy_rank_profile(rank, betti, horizon);
  Json cert;
  cert["rank"] = format_integer(rank);
  cert["syzygy_ranks"] = int_vec_json(prof.syzygy_ranks);
  cert["cosyzygy_ranks"] = int_vec_json(prof.cosyzygy_ranks);

  std::optional<Json> first_dip;
  for (std::size_t k = 0; k < prof.syzygy_ranks.size() && !first_dip; ++k)
    if (prof.syzygy_ranks[k] < rank)
      first_dip = Json{{"side", "syzygy"},
                       {"index", k},
                       {"value", format_integer(prof.syzygy_ranks[k])}};
  for (std::size_t k = 0; k < prof.cosyzygy_ranks.size() && !first_dip; ++k)
    if (prof.cosyzygy_ranks[k] < rank)
      first_dip = Json{{"side", "cosyzygy"},
                       {"index", k + 1},
                       {"value", format_integer(prof.cosyzygy_ranks[k])}};

  report.verdict = Verdict::holds;
  if (first_dip) {
    cert["first_dip"] = *first_dip;
    cert["conclusion"] =
        "necessary boundary condition fails: a syzygy rank drops below the module rank, so "
        "the class and its dual are interior, not on the cone boundary";
  } else {
    cert["conclusion"] =
        "necessary condition holds: every syzygy and cosyzygy rank in range is >= the module "
        "rank (inconclusive for boundary membership)";
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport theorem11_entry_indices(const ModuleClass& m, const BettiSequence& betti,
                                      const RationalCone& v, std::size_t horizon,
                                      bool declared_unbounded_ranks) {
  TheoremReport report;
  report.id = "t11";
  report.citation = join_provenance({m.provenance, betti.provenance});

  QVector m_real = realification(m);
  if (m_real.size() != v.ambient_dim())
    throw input_error("entry scan: class lives in dimension " + std::to_string(m_real.size()) +
                      " but the cone has ambient dimension " + std::to_string(v.ambient_dim()));

  QVector e0 = unit_vector(v.ambient_dim(), 0);
  if (!v.interior_contains(e0)) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing", "the free-module class as an interior point of the cone"},
        {"note", "a cone that is not full-dimensional has empty interior"},
    };
    return report;
  }

  ComplexityBound cx = complexity_lower_bound(betti);
  bool unbounded_ok = declared_unbounded_ranks || cx.unbounded || cx.value >= 2;
  if (!unbounded_ok) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing", "unbounded syzygy ranks"},
        {"complexity_lower_bound", cx.unbounded ? std::string("unbounded") : format_integer(cx.value)},
        {"note", "needs complexity >= 2 or an explicit unbounded-rank declaration"},
    };
    return report;
  }

  // Kernel position of the class: the part orthogonal to the rank axis.
  QVector kernel_point = m_real;
  kernel_point[0] = 0;

  // Facet thresholds: with every facet normal positive on the rank axis,
  // membership of (r_n, (-1)^n w) reduces to r_n >= -(-1)^n (f.w)/(f.e0)
  // per facet; take the worst facet for each parity.
  const FacetData& facets = v.facets();
  std::optional<Rational> rho_even, rho_odd;
  for (const QVector& f : facets.normals) {
    Rational f0 = f[0];
    if (sign_of(f0) <= 0)
      throw std::logic_error("interior rank axis but a facet normal is not positive on it");
    Rational fw = dot(f, kernel_point);
    Rational even = -fw / f0;
    Rational odd = fw / f0;
    if (!rho_even || even > *rho_even) rho_even = even;
    if (!rho_odd || odd > *rho_odd) rho_odd = odd;
  }

  RankProfile prof = syzygy_rank_profile(m.rank, betti, horizon);
  const std::size_t scanned = prof.syzygy_ranks.size();  // indices 0..scanned-1

  Json table = Json::array();
  std::vector<bool> member(scanned, false);
  for (std::size_t n = 0; n < scanned; ++n) {
    ModuleClass sc = syzygy_class(m, betti, n);
    QVector p = realification(sc);
    bool in = v.contains(p);
    std::optional<Rational> rho = (n % 2 == 0) ? rho_even : rho_odd;
    bool predicted = !rho || Rational(prof.syzygy_ranks[n]) >= *rho;
    if (in != predicted)
      throw std::logic_error("facet threshold prediction disagrees with cone membership");
    member[n] = in;
    table.push_back({{"index", n},
                     {"syzygy_rank", format_integer(prof.syzygy_ranks[n])},
                     {"point", vec_json(p)},
                     {"member", in},
                     {"threshold", rho ? Json(format_rational(*rho)) : Json()}});
  }

  Json ranges = Json::array();
  std::optional<std::size_t> start;
  for (std::size_t n = 0; n <= scanned; ++n) {
    bool in = n < scanned && member[n];
    if (in && !start) start = n;
    if (!in && start) {
      ranges.push_back(Json::array({*start, n - 1}));
      start.reset();
    }
  }

  Json cert;
  cert["requested_horizon"] = horizon;
  cert["scanned_indices"] = scanned;
  if (scanned < horizon + 1)
    cert["note_horizon"] = "Betti data determines fewer syzygy ranks than requested";
  cert["threshold_even"] = rho_even ? Json(format_rational(*rho_even)) : Json();
  cert["threshold_odd"] = rho_odd ? Json(format_rational(*rho_odd)) : Json();
  cert["threshold_note"] =
      "per parity, the syzygy point lies in the cone exactly when its rank reaches the "
      "threshold; thresholds come from the facet normals evaluated on the kernel position";
  cert["complexity_lower_bound"] =
      cx.unbounded ? std::string("unbounded") : format_integer(cx.value);
  if (declared_unbounded_ranks) cert["declared_unbounded_ranks"] = true;
  cert["scan"] = table;
  cert["member_ranges"] = ranges;

  bool tail_member = scanned > 0 && member[scanned - 1];
  if (tail_member) {
    std::size_t stable_from = scanned - 1;
    while (stable_from > 0 && member[stable_from - 1]) --stable_from;
    report.verdict = Verdict::holds;
    cert["stable_from"] = stable_from;
    cert["conclusion"] = "the scan witnesses entry into the cone from the stable index on; "
                         "behaviour beyond the horizon is not decided by finite data";
  } else {
    report.verdict = Verdict::violated;
    std::optional<std::size_t> last_out;
    for (std::size_t n = 0; n < scanned; ++n)
      if (!member[n]) last_out = n;
    if (last_out) cert["last_non_member"] = *last_out;
    cert["conclusion"] = "the scan window does not witness stable entry into the cone "
                         "(the final scanned index lies outside); enlarge the horizon or "
                         "re-examine the declared data";
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport theorem3_walk(const DivisorLine& line, const RingDescriptor& ring,
                            std::size_t depth) {
  TheoremReport report;
  report.id = "t3";
  report.citation = join_provenance({line.provenance, ring.provenance});
  if (depth < 1) throw input_error("walk: depth must be >= 1");

  Json missing = Json::array();
  for (LineAssumption a : {LineAssumption::gorenstein_ideal, LineAssumption::height_one,
                           LineAssumption::rigid, LineAssumption::non_principal})
    if (line.assumptions.count(a) == 0) missing.push_back(to_string(a));
  if (!ring.has(RingFlag::gorenstein)) missing.push_back("ring flag gorenstein");
  if (!ring.has(RingFlag::normal)) missing.push_back("ring flag normal");
  if (!missing.empty()) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {{"missing_assumptions", missing}};
    return report;
  }
  if (!is_zero(line.base)) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {
        {"missing", "a line through the trivial class (the declared base point is nonzero)"}};
    return report;
  }
  if (is_zero(line.direction))
    throw input_error("walk: direction is the zero class but is declared non-principal");

  const GroupElement& I = line.direction;
  Json chain = Json::array();
  for (std::size_t n = 1; n <= depth; ++n) {
    Integer nn(static_cast<unsigned long>(n));
    GroupElement lhs = add(scale(Integer(1), I), scale(-nn, I));
    GroupElement rhs = add(scale(Integer(0), I), scale(Integer(1) - nn, I));
    if (!(lhs == rhs))
      throw std::logic_error("relation chain failed to balance in exact group arithmetic");
    chain.push_back({{"n", n},
                     {"relation", "[1] + [-" + std::to_string(n) + "] = [0] + [-" +
                                      std::to_string(n - 1) + "]  (multiples of the direction)"},
                     {"value", element_json(lhs)}});
  }

  GroupElement pair_sum = add(I, negate(I));
  bool duality_instance = is_zero(pair_sum);
  if (!duality_instance)
    throw std::logic_error("rank-one duality instance failed in exact group arithmetic");

  Json cert;
  cert["direction"] = element_json(I);
  cert["chain"] = chain;
  cert["rank_one_duality_instance"] = {
      {"relation", "[1] + [-1] = 2 [0]"},
      {"value", element_json(pair_sum)},
      {"holds", true},
  };
  cert["conclusion_set"] = Json::array({-1, 0, 1});

  Json declared = Json::array();
  Json offending = Json::array();
  for (long n : line.declared_mcm) {
    declared.push_back(n);
    if (n < -1 || n > 1) offending.push_back(n);
  }
  cert["declared_mcm"] = declared;

  if (offending.empty()) {
    report.verdict = Verdict::holds;
    cert["note"] = "every declared point lies in the conclusion set {-1, 0, 1}";
  } else {
    report.verdict = Verdict::violated;
    cert["offending_indices"] = offending;
    cert["note"] = "declared points outside {-1, 0, 1} contradict the rigidity conclusion";
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport line_constraints_check(const DivisorLine& line) {
  TheoremReport report;
  report.id = "line";
  report.citation = line.provenance;

  Json missing = Json::array();
  for (LineAssumption a :
       {LineAssumption::gorenstein_ideal, LineAssumption::height_one,
        LineAssumption::locally_free_punctured, LineAssumption::dim_ge_3})
    if (line.assumptions.count(a) == 0) missing.push_back(to_string(a));
  if (!missing.empty()) {
    report.verdict = Verdict::not_applicable;
    report.certificate = {{"missing_assumptions", missing}};
    return report;
  }

  Json cert;
  Json declared = Json::array();
  for (long n : line.declared_mcm) declared.push_back(n);
  cert["declared_mcm"] = declared;

  Json violations = Json::array();
  if (!line.declared_mcm.empty()) {
    long top = *line.declared_mcm.rbegin();
    long bottom = *line.declared_mcm.begin();
    if (top > 0 || bottom < 0 || line.declared_mcm.count(0) == 0) {
      for (long i = 0; i <= std::max(top, 0L); ++i)
        if (line.declared_mcm.count(i) == 0) {
          violations.push_back({{"part", 1},
                                {"missing_index", i},
                                {"note", "declared points above it, but this index is missing "
                                         "from the downward-closed interval toward 0"}});
          break;
        }
      for (long i = 0; i >= std::min(bottom, 0L); --i)
        if (line.declared_mcm.count(i) == 0) {
          violations.push_back({{"part", 1},
                                {"missing_index", i},
                                {"note", "declared points below it, but this index is missing "
                                         "from the downward-closed interval toward 0"}});
          break;
        }
    }
    cert["interval"] = {{"min", bottom}, {"max", top}};
  } else {
    cert["interval"] = "empty declared set";
  }

  bool has_plus2 = line.declared_mcm.count(2) > 0;
  bool has_minus2 = line.declared_mcm.count(-2) > 0;
  if (line.assumptions.count(LineAssumption::non_principal) > 0) {
    if (has_plus2 && has_minus2)
      violations.push_back({{"part", 2},
                            {"indices", Json::array({-2, 2})},
                            {"note", "twice the direction and its negative cannot both be "
                                     "declared for a non-principal direction"}});
    cert["pm2_exclusion"] = "checked (direction declared non-principal)";
  } else {
    cert["pm2_exclusion"] = "skipped (direction not declared non-principal)";
  }

  if (violations.empty()) {
    report.verdict = Verdict::holds;
  } else {
    report.verdict = Verdict::violated;
    cert["violations"] = violations;
  }
  report.certificate = std::move(cert);
  return report;
}

TheoremReport chi_halfspace_report(const QVector& functional_values,
                                   const std::vector<ModuleClass>& classes,
                                   const GroupElement& probe) {
  TheoremReport report;
  report.id = "chi";
  report.verdict = Verdict::holds;
  report.citation = class_provenance(classes);

  const std::size_t zeta = probe.presentation.free_rank;
  if (functional_values.size() != zeta + 1)
    throw input_error("halfspace functional must list one value for the free-module class and "
                      "one per kernel basis class (expected " + std::to_string(zeta + 1) +
                      " values, got " + std::to_string(functional_values.size()) + ")");
  for (const ModuleClass& m : classes)
    if (!same_shape(m.kernel_part.presentation, probe.presentation))
      throw input_error("class '" + m.label + "' and the probe live in different kernel groups");

  Json cert;
  cert["functional"] = vec_json(functional_values);

  Json class_values = Json::array();
  std::vector<QVector> points;
  for (const ModuleClass& m : classes) {
    QVector p = realification(m);
    Rational val = dot(functional_values, p);
    if (sign_of(val) < 0)
      throw input_error("class '" + m.label + "' has negative functional value " +
                        format_rational(val) +
                        "; inconsistent data: classes of maximal depth pair nonnegatively "
                        "with finite-length test modules");
    class_values.push_back({{"label", m.label}, {"value", format_rational(val)}});
    points.push_back(std::move(p));
  }
  cert["class_values"] = class_values;
  cert["halfspace_contains_classes"] = true;

  QVector probe_point = zero_qvector(zeta + 1);
  {
    QVector w = realify(probe);
    for (std::size_t i = 0; i < zeta; ++i) probe_point[i + 1] = w[i];
  }
  Rational probe_value = dot(functional_values, probe_point);
  cert["probe"] = element_json(probe);
  cert["probe_point"] = vec_json(probe_point);
  cert["probe_value"] = format_rational(probe_value);

  if (sign_of(probe_value) < 0) {
    RationalCone c = RationalCone::from_generators(zeta + 1, points);
    if (c.contains(probe_point))
      throw std::logic_error("probe with negative functional value inside the class cone");
    Json exclusion;
    exclusion["probe_in_halfspace"] = false;
    exclusion["probe_in_cone"] = false;
    exclusion["note"] =
        "every class satisfies chi >= 0, so the closed cone they span lies in the closed "
        "halfspace {chi >= 0}; the probe has chi < 0 and is outside the closure";
    cert["exclusion"] = exclusion;

    if (zeta == 1) {
      Json skeleton;
      skeleton["steps"] = Json::array({
          "the halfspace {chi >= 0} is closed and contains the closed class cone",
          "the probe lies on the kernel line and has chi < 0, so it avoids the closed cone",
          "the intersection of the closed cone with the kernel line is a linear subspace",
          "a subspace of a line missing a point of the line is the origin",
          "trivial intersection with the kernel line bounds every rank slice, so each "
          "positive rank admits only finitely many lattice classes",
      });
      LevelSetReport slice = level_set_diameter_bounded(c, 0, Rational(1));
      if (slice.bounded && !slice.slice_empty) {
        Rational lo = slice.vertices.front()[1];
        Rational hi = lo;
        for (const QVector& v : slice.vertices) {
          if (v[1] < lo) lo = v[1];
          if (v[1] > hi) hi = v[1];
        }
        Integer kmin, kmax;
        mpz_cdiv_q(kmin.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        mpz_fdiv_q(kmax.get_mpz_t(), hi.get_num().get_mpz_t(), hi.get_den().get_mpz_t());
        Json candidates = Json::array();
        if (kmax - kmin <= 1000) {
          for (Integer k = kmin; k <= kmax; ++k) {
            QVector x = {Rational(1), Rational(k)};
            if (c.contains(x)) candidates.push_back(format_integer(k));
          }
        }
        skeleton["rank_one_lattice_candidates"] = candidates;
      }
      cert["finiteness_skeleton"] = skeleton;
      cert["conclusion"] =
          "only finitely many rank-one classes are possible under the declared hypotheses";
    } else {
      cert["conclusion"] = "the probe is certified outside the closed class cone";
    }
  } else if (sign_of(probe_value) == 0) {
    cert["probe_conclusion"] = "chi vanishes on the probe: it lies on the boundary "
                               "hyperplane, no exclusion follows";
  } else {
    cert["probe_conclusion"] = "chi is positive on the probe: the test is one-sided, "
                               "no conclusion follows";
  }

  report.certificate = std::move(cert);
  return report;
}

}  // namespace conelab
