#include <doctest.h>

#include <set>
#include <vector>

#include "conelab/theorems.hpp"

using namespace conelab;

namespace {

RingDescriptor quadric_like_ring() {
  RingDescriptor ring;
  ring.name = "test-quadric";
  ring.zeta = 1;
  ring.flags = {RingFlag::domain, RingFlag::normal, RingFlag::cohen_macaulay,
                RingFlag::gorenstein, RingFlag::canonical_module};
  return ring;
}

GroupElement kernel_el(const RingDescriptor& ring, long v) {
  return make_element(ring.kernel_presentation(), {Integer(v)}, {});
}

std::vector<ModuleClass> quadric_classes(const RingDescriptor& ring) {
  return {make_module_class("R", 1, kernel_el(ring, 0), true),
          make_module_class("p", 1, kernel_el(ring, -1), true),
          make_module_class("p*", 1, kernel_el(ring, 1), true)};
}

DivisorLine ruling_line(const RingDescriptor& ring) {
  DivisorLine line;
  line.base = kernel_el(ring, 0);
  line.direction = kernel_el(ring, -1);
  line.declared_mcm = {-1, 0, 1};
  line.assumptions = {LineAssumption::gorenstein_ideal, LineAssumption::rigid,
                      LineAssumption::non_principal, LineAssumption::height_one,
                      LineAssumption::locally_free_punctured, LineAssumption::dim_ge_3};
  return line;
}

BettiSequence betti_of(std::vector<long> prefix,
                       std::optional<ClosedForm> form = std::nullopt,
                       std::vector<long> dual = {}) {
  BettiSequence b;
  b.prefix.assign(prefix.begin(), prefix.end());
  b.closed_form = form;
  b.dual_prefix.assign(dual.begin(), dual.end());
  return b;
}

}  // namespace

TEST_CASE("class cone lives in rank-plus-kernel coordinates") {
  RingDescriptor ring = quadric_like_ring();
  RationalCone c = class_cone(quadric_classes(ring), ring);
  CHECK(c.ambient_dim() == 2);
  CHECK(c.generators().size() == 3);
  CHECK(c.contains({Rational(1), Rational(0)}));
  CHECK(c.contains({Rational(2), Rational(-1)}));
  CHECK(!c.contains({Rational(1), Rational(2)}));

  RingDescriptor other;
  other.name = "other";
  other.zeta = 2;
  CHECK_THROWS_AS(class_cone(quadric_classes(ring), other), input_error);
}

TEST_CASE("rank-slice chain holds on the triangle of rank-one classes") {
  RingDescriptor ring = quadric_like_ring();
  TheoremReport r = theorem1_report(quadric_classes(ring), 1, ring);
  CHECK(r.verdict == Verdict::holds);
  for (const char* stage : {"polyhedral", "closed", "rank_zero_intersection",
                            "level_set_bounded", "strongly_convex"})
    CHECK(r.certificate[stage]["holds"] == true);
  CHECK(r.certificate["equivalences"]["rank_zero_iff_bounded"] == true);
  CHECK(r.certificate["equivalences"]["bounded_implies_strongly_convex"] == true);
  CHECK(r.certificate["level_set_bounded"]["squared_diameter"] == "4");
}

TEST_CASE("rank-slice chain validates its inputs") {
  RingDescriptor ring = quadric_like_ring();
  std::vector<ModuleClass> classes = quadric_classes(ring);
  CHECK_THROWS_AS(theorem1_report(classes, 2, ring), input_error);  // wrong rank
  CHECK_THROWS_AS(theorem1_report(classes, 0, ring), input_error);  // rank must be >= 1

  std::vector<ModuleClass> undeclared = {make_module_class("m", 1, kernel_el(ring, 0))};
  CHECK_THROWS_AS(theorem1_report(undeclared, 1, ring), input_error);  // not declared MCM
}

TEST_CASE("stream monitor certifies divergence with an exact direction") {
  RingDescriptor ring = quadric_like_ring();
  ModuleClass base = make_module_class("R", 1, kernel_el(ring, 0), true);
  GroupElement step = kernel_el(ring, 1);

  ClassStream linear = arithmetic_stream(base, step, false);
  TheoremReport diverged = stream_divergence_monitor(linear, 1, 100, Rational(10));
  CHECK(diverged.certificate["diverged"] == true);
  CHECK(diverged.certificate["index"] == 10);  // first n with 1 + n^2 > 100
  CHECK(diverged.certificate["direction"] == Json::array({"0", "1"}));
  CHECK(diverged.certificate["squared_norm"] == "101");

  ClassStream alternating = arithmetic_stream(base, step, true);
  TheoremReport bounded = stream_divergence_monitor(alternating, 1, 100, Rational(10));
  CHECK(bounded.certificate["diverged"] == false);
  CHECK(bounded.certificate["max_squared_norm"] == "2");

  CHECK_THROWS_AS(stream_divergence_monitor(linear, 2, 10, Rational(5)), input_error);
  CHECK_THROWS_AS(stream_divergence_monitor(linear, 1, 0, Rational(5)), input_error);
  CHECK_THROWS_AS(stream_divergence_monitor(linear, 1, 10, Rational(0)), input_error);
}

TEST_CASE("separation of realified classes") {
  RingDescriptor ring = quadric_like_ring();
  TheoremReport r = prop16_separation(quadric_classes(ring));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.certificate["separated_pairs"] == 3);
  CHECK(r.certificate["min_squared_distance"] == "1");

  RingDescriptor torsion;
  torsion.name = "torsion";
  torsion.zeta = 0;
  torsion.torsion_orders = {Integer(4)};
  GroupPresentation kp = torsion.kernel_presentation();
  std::vector<ModuleClass> collapsing = {
      make_module_class("a", 1, make_element(kp, {}, {Integer(1)}), true),
      make_module_class("b", 1, make_element(kp, {}, {Integer(2)}), true),
      make_module_class("a-again", 1, make_element(kp, {}, {Integer(1)}), true)};
  TheoremReport t = prop16_separation(collapsing);
  CHECK(t.verdict == Verdict::holds);
  CHECK(t.certificate["torsion_collapses"].size() == 2);
  CHECK(t.certificate["identical_pairs"].size() == 1);
  CHECK(t.certificate["separated_pairs"] == 0);
}

TEST_CASE("symmetry of the class cone under canonical duality") {
  RingDescriptor ring = quadric_like_ring();
  TheoremReport holds = symmetry_check(quadric_classes(ring), ring);
  CHECK(holds.verdict == Verdict::holds);
  CHECK(holds.certificate["mutual_containment"] == true);

  std::vector<ModuleClass> open_list = {make_module_class("p", 1, kernel_el(ring, -1), true)};
  TheoremReport missing = symmetry_check(open_list, ring);
  CHECK(missing.verdict == Verdict::not_applicable);
  CHECK(missing.certificate.contains("missing_duals"));

  RingDescriptor no_omega = ring;
  no_omega.flags = {RingFlag::domain, RingFlag::normal, RingFlag::cohen_macaulay};
  TheoremReport na = symmetry_check(quadric_classes(ring), no_omega);
  CHECK(na.verdict == Verdict::not_applicable);
}

TEST_CASE("boundary rank condition") {
  BettiSequence flat = betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2},
                                {2, 2, 2, 2});
  TheoremReport ok = prop44_boundary_check(1, flat, 8);
  CHECK(ok.verdict == Verdict::holds);
  CHECK(!ok.certificate.contains("first_dip"));
  CHECK(ok.certificate["conclusion"].get<std::string>().find("necessary condition holds") !=
        std::string::npos);

  BettiSequence three = betti_of({3, 3}, ClosedForm{ClosedForm::Kind::constant, 3},
                                 {3, 3, 3, 3});
  TheoremReport dip = prop44_boundary_check(2, three, 8);
  CHECK(dip.verdict == Verdict::holds);
  REQUIRE(dip.certificate.contains("first_dip"));
  CHECK(dip.certificate["first_dip"]["side"] == "syzygy");
  CHECK(dip.certificate["first_dip"]["index"] == 1);
  CHECK(dip.certificate["conclusion"].get<std::string>().find("interior") != std::string::npos);

  CHECK(prop44_boundary_check(0, flat, 8).verdict == Verdict::not_applicable);
  CHECK(prop44_boundary_check(1, betti_of({2, 1, 0}), 8).verdict == Verdict::not_applicable);
  BettiSequence no_dual = betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2});
  CHECK(prop44_boundary_check(1, no_dual, 8).verdict == Verdict::not_applicable);
}

TEST_CASE("entry-index scan with facet thresholds") {
  RingDescriptor ring = quadric_like_ring();
  RationalCone v = RationalCone::from_generators(
      2, {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}});
  ModuleClass m = make_module_class("m", 1, kernel_el(ring, 3), true);
  std::vector<long> prefix;
  for (long k = 0; k <= 10; ++k) prefix.push_back(2 * k + 3);
  BettiSequence b = betti_of(prefix, ClosedForm{ClosedForm::Kind::polynomial, 1});

  TheoremReport r = theorem11_entry_indices(m, b, v, 10);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.certificate["threshold_even"] == "3");
  CHECK(r.certificate["threshold_odd"] == "3");
  CHECK(r.certificate["member_ranges"] == Json::array({Json::array({2, 10})}));
  CHECK(r.certificate["stable_from"] == 2);
  CHECK(r.certificate["complexity_lower_bound"] == "2");

  // Constant Betti numbers never reach the threshold: the window fails.
  BettiSequence flat = betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2});
  TheoremReport fail = theorem11_entry_indices(m, flat, v, 6, true);
  CHECK(fail.verdict == Verdict::violated);
  CHECK(fail.certificate["member_ranges"] == Json::array());
  CHECK(fail.certificate["last_non_member"] == 6);

  // Complexity one without a declaration is not applicable.
  TheoremReport na = theorem11_entry_indices(m, flat, v, 6);
  CHECK(na.verdict == Verdict::not_applicable);

  // A cone with empty interior cannot contain the free class as interior point.
  RationalCone ray = RationalCone::from_generators(2, {{Rational(1), Rational(0)}});
  TheoremReport no_interior = theorem11_entry_indices(m, b, ray, 6);
  CHECK(no_interior.verdict == Verdict::not_applicable);

  RationalCone wrong_dim = RationalCone::from_generators(
      3, {{Rational(1), Rational(0), Rational(0)}});
  CHECK_THROWS_AS(theorem11_entry_indices(m, b, wrong_dim, 6), input_error);
}

TEST_CASE("relation walk down a divisor line") {
  RingDescriptor ring = quadric_like_ring();
  DivisorLine line = ruling_line(ring);
  TheoremReport r = theorem3_walk(line, ring, 3);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.certificate["conclusion_set"] == Json::array({-1, 0, 1}));
  CHECK(r.certificate["chain"].size() == 3);
  CHECK(r.certificate["chain"][0]["value"] ==
        r.certificate["rank_one_duality_instance"]["value"]);

  DivisorLine tampered = line;
  tampered.declared_mcm = {-1, 0, 1, 2};
  TheoremReport bad = theorem3_walk(tampered, ring, 3);
  CHECK(bad.verdict == Verdict::violated);
  CHECK(bad.certificate["offending_indices"] == Json::array({2}));

  DivisorLine unassumed = line;
  unassumed.assumptions.erase(LineAssumption::rigid);
  TheoremReport na = theorem3_walk(unassumed, ring, 3);
  CHECK(na.verdict == Verdict::not_applicable);
  CHECK(na.certificate["missing_assumptions"] == Json::array({"rigid"}));

  DivisorLine shifted = line;
  shifted.base = kernel_el(ring, 1);
  CHECK(theorem3_walk(shifted, ring, 3).verdict == Verdict::not_applicable);

  DivisorLine degenerate = line;
  degenerate.direction = kernel_el(ring, 0);
  CHECK_THROWS_AS(theorem3_walk(degenerate, ring, 3), input_error);
  CHECK_THROWS_AS(theorem3_walk(line, ring, 0), input_error);
}

TEST_CASE("declared line structure constraints") {
  RingDescriptor ring = quadric_like_ring();
  DivisorLine line = ruling_line(ring);
  TheoremReport ok = line_constraints_check(line);
  CHECK(ok.verdict == Verdict::holds);
  CHECK(ok.certificate["interval"]["min"] == -1);
  CHECK(ok.certificate["interval"]["max"] == 1);

  DivisorLine gap = line;
  gap.declared_mcm = {0, 3};
  TheoremReport g = line_constraints_check(gap);
  CHECK(g.verdict == Verdict::violated);
  CHECK(g.certificate["violations"][0]["part"] == 1);
  CHECK(g.certificate["violations"][0]["missing_index"] == 1);

  DivisorLine both2 = line;
  both2.declared_mcm = {-2, -1, 0, 1, 2};
  TheoremReport b = line_constraints_check(both2);
  CHECK(b.verdict == Verdict::violated);
  CHECK(b.certificate["violations"][0]["part"] == 2);
  CHECK(b.certificate["violations"][0]["indices"] == Json::array({-2, 2}));

  DivisorLine principal = both2;
  principal.assumptions.erase(LineAssumption::non_principal);
  TheoremReport p = line_constraints_check(principal);
  CHECK(p.verdict == Verdict::holds);  // exclusion only binds non-principal directions
  CHECK(p.certificate["pm2_exclusion"].get<std::string>().find("skipped") != std::string::npos);

  DivisorLine empty_set = line;
  empty_set.declared_mcm = {};
  CHECK(line_constraints_check(empty_set).verdict == Verdict::holds);

  DivisorLine unassumed = line;
  unassumed.assumptions.erase(LineAssumption::dim_ge_3);
  CHECK(line_constraints_check(unassumed).verdict == Verdict::not_applicable);
}

TEST_CASE("halfspace functional and probe exclusion") {
  RingDescriptor ring = quadric_like_ring();
  std::vector<ModuleClass> classes = quadric_classes(ring);
  QVector functional = {Rational(1), Rational(-1)};

  TheoremReport r = chi_halfspace_report(functional, classes, kernel_el(ring, 1));
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.certificate["probe_value"] == "-1");
  CHECK(r.certificate["halfspace_contains_classes"] == true);
  CHECK(r.certificate["exclusion"]["probe_in_cone"] == false);
  CHECK(r.certificate["finiteness_skeleton"]["rank_one_lattice_candidates"] ==
        Json::array({"-1", "0", "1"}));

  TheoremReport positive = chi_halfspace_report(functional, classes, kernel_el(ring, -1));
  CHECK(positive.certificate["probe_value"] == "1");
  CHECK(!positive.certificate.contains("exclusion"));

  TheoremReport zero = chi_halfspace_report(functional, classes, kernel_el(ring, 0));
  CHECK(zero.certificate["probe_value"] == "0");
  CHECK(zero.certificate["probe_conclusion"].get<std::string>().find("boundary") !=
        std::string::npos);

  // A functional negative on a declared class is inconsistent data.
  CHECK_THROWS_AS(
      chi_halfspace_report({Rational(0), Rational(1)}, classes, kernel_el(ring, 1)),
      input_error);
  CHECK_THROWS_AS(chi_halfspace_report({Rational(1)}, classes, kernel_el(ring, 1)),
                  input_error);
}
