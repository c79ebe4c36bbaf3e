#include <doctest.h>

#include <vector>

#include "conelab/classes.hpp"

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

std::vector<Integer> ints(const std::vector<long>& v) {
  return std::vector<Integer>(v.begin(), v.end());
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

TEST_CASE("ring presentations split rank and kernel") {
  RingDescriptor ring = quadric_like_ring();
  CHECK(describe_group(ring.kernel_presentation()) == "Z");
  CHECK(describe_group(ring.group_presentation()) == "Z^2");

  RingDescriptor torsion;
  torsion.name = "torsion";
  torsion.zeta = 0;
  torsion.torsion_orders = {Integer(4)};
  CHECK(describe_group(torsion.kernel_presentation()) == "Z/4");
  CHECK(describe_group(torsion.group_presentation()) == "Z + Z/4");
}

TEST_CASE("canonical class data rules") {
  RingDescriptor ring = quadric_like_ring();
  CHECK(is_zero(omega_kernel(ring)));  // Gorenstein: implicitly trivial

  RingDescriptor no_canonical = ring;
  no_canonical.flags.erase(RingFlag::canonical_module);
  CHECK_THROWS_AS(omega_kernel(no_canonical), input_error);

  RingDescriptor declared = ring;
  declared.flags.erase(RingFlag::gorenstein);
  CHECK_THROWS_AS(omega_kernel(declared), input_error);  // no data, not Gorenstein
  declared.omega_kernel_part = kernel_el(ring, 2);
  CHECK(omega_kernel(declared).free_part == ints({2}));
}

TEST_CASE("module classes and realification") {
  RingDescriptor ring = quadric_like_ring();
  ModuleClass p = make_module_class("p", 1, kernel_el(ring, -1), true);
  QVector r = realification(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == 1);
  CHECK(r[1] == -1);
  CHECK(rank_functional(p) == 1);
  CHECK(rank_functional_real(r) == 1);
  CHECK_THROWS_AS(make_module_class("bad", -1, kernel_el(ring, 0)), input_error);
}

TEST_CASE("determinant negates kernel coordinates") {
  RingDescriptor ring = quadric_like_ring();
  ModuleClass p = make_module_class("p", 1, kernel_el(ring, -1), true);
  CHECK(determinant_class(p, ring).free_part == ints({1}));
  ModuleClass r3 = make_module_class("R3", 3, kernel_el(ring, 0), true);
  CHECK(is_zero(determinant_class(r3, ring)));

  RingDescriptor not_normal = ring;
  not_normal.flags.erase(RingFlag::normal);
  CHECK_THROWS_AS(determinant_class(p, not_normal), input_error);
}

TEST_CASE("duals and the rank-one pairing identity") {
  RingDescriptor ring = quadric_like_ring();
  ModuleClass p = make_module_class("p", 1, kernel_el(ring, -1), true);
  ModuleClass d = dual_class(p);
  CHECK(d.kernel_part.free_part == ints({1}));
  CHECK(same_class(dual_class(d), p));

  // [M] + [M*] = 2 rank [R] in the rationalized group.
  QVector sum = add(realification(p), realification(d));
  CHECK(sum == QVector{Rational(2), Rational(0)});
}

TEST_CASE("canonical duality is an involution") {
  RingDescriptor ring = quadric_like_ring();
  ring.flags.erase(RingFlag::gorenstein);
  ring.omega_kernel_part = kernel_el(ring, 2);

  ModuleClass m = make_module_class("m", 3, kernel_el(ring, -1), true);
  ModuleClass md = canonical_dual_class(m, ring);
  CHECK(md.kernel_part.free_part == ints({7}));  // 3*2 - (-1)
  CHECK(same_class(canonical_dual_class(md, ring), m));

  QMatrix nu = nu_involution_matrix(ring);
  QMatrix sq = matrix_multiply(nu, nu);
  CHECK(sq == QMatrix::identity(2));
  // nu sends the realified class to the realified canonical dual.
  CHECK(matrix_apply(nu, realification(m)) == realification(md));
}

TEST_CASE("betti values from prefix and closed form") {
  BettiSequence constant = betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2});
  CHECK(constant.value(0) == Integer(2));
  CHECK(constant.value(17) == Integer(2));

  BettiSequence poly = betti_of({1, 2, 3}, ClosedForm{ClosedForm::Kind::polynomial, 1});
  CHECK(poly.value(2) == Integer(3));
  CHECK(!poly.value(3).has_value());  // polynomial form fixes growth, not values

  BettiSequence bare = betti_of({5});
  CHECK(bare.value(0) == Integer(5));
  CHECK(!bare.value(1).has_value());
}

TEST_CASE("syzygy classes alternate kernel sign and track ranks") {
  RingDescriptor ring = quadric_like_ring();
  ModuleClass p = make_module_class("p", 1, kernel_el(ring, -1), true);
  BettiSequence b = betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2});

  ModuleClass s1 = syzygy_class(p, b, 1);
  CHECK(s1.rank == 1);
  CHECK(s1.kernel_part.free_part == ints({1}));
  ModuleClass s2 = syzygy_class(p, b, 2);
  CHECK(s2.rank == 1);
  CHECK(s2.kernel_part.free_part == ints({-1}));
  CHECK(syzygy_class(p, b, 0).rank == 1);

  // Rank 3 against b_0 = 1 would give a negative first syzygy rank.
  ModuleClass fat = make_module_class("fat", 3, kernel_el(ring, 0), true);
  CHECK_THROWS_AS(syzygy_class(fat, betti_of({1, 1}), 1), input_error);

  // Exhausted Betti data is reported, not extrapolated.
  CHECK_THROWS_AS(syzygy_class(p, betti_of({2}), 2), input_error);
}

TEST_CASE("syzygy rank profiles") {
  // b_k = k + 3 with rank 1: ranks 1, 2, 2, 3, 3, 4, 4, ...
  BettiSequence grow = betti_of({3, 4, 5, 6, 7, 8});
  RankProfile prof = syzygy_rank_profile(1, grow, 6);
  CHECK(prof.syzygy_ranks == ints({1, 2, 2, 3, 3, 4, 4}));
  CHECK(prof.cosyzygy_ranks.empty());

  BettiSequence dual = betti_of({3, 3}, ClosedForm{ClosedForm::Kind::constant, 3},
                                {3, 3, 3, 3});
  RankProfile both = syzygy_rank_profile(2, dual, 4);
  CHECK(both.syzygy_ranks == ints({2, 1, 2, 1, 2}));
  CHECK(both.cosyzygy_ranks == ints({1, 2, 1, 2}));
}

TEST_CASE("free modules have constant profiles") {
  BettiSequence free_data = betti_of({2}, ClosedForm{ClosedForm::Kind::constant, 0});
  RankProfile prof = syzygy_rank_profile(2, free_data, 5);
  CHECK(prof.syzygy_ranks == ints({2, 0, 0, 0, 0, 0}));
}

TEST_CASE("complexity lower bounds") {
  ComplexityBound c1 = complexity_lower_bound(
      betti_of({2, 2}, ClosedForm{ClosedForm::Kind::constant, 2}));
  CHECK(!c1.unbounded);
  CHECK(c1.value == 1);
  CHECK(c1.exact);

  ComplexityBound c2 = complexity_lower_bound(
      betti_of({1, 2}, ClosedForm{ClosedForm::Kind::polynomial, 1}));
  CHECK(c2.value == 2);
  CHECK(c2.exact);

  ComplexityBound cx = complexity_lower_bound(
      betti_of({1, 2}, ClosedForm{ClosedForm::Kind::exponential, 0}));
  CHECK(cx.unbounded);

  ComplexityBound fit = complexity_lower_bound(betti_of({1, 2, 4, 8}));
  CHECK(!fit.unbounded);
  CHECK(fit.value == 3);
  CHECK(fit.prefix_only);

  ComplexityBound flat = complexity_lower_bound(betti_of({2, 2, 2, 2}));
  CHECK(flat.value == 1);
  CHECK(flat.prefix_only);

  ComplexityBound finite = complexity_lower_bound(betti_of({3, 1, 0}));
  CHECK(finite.value == 0);
  CHECK(finite.exact);

  CHECK_THROWS_AS(complexity_lower_bound(BettiSequence{}), input_error);
}

TEST_CASE("pushforward matrices") {
  QMatrix map = QMatrix::from_rows({{Rational(2), Rational(0)}, {Rational(1), Rational(1)}});
  QVector image = pushforward(map, {Rational(1), Rational(1)});
  CHECK(image == QVector{Rational(2), Rational(2)});
  CHECK_NOTHROW(validate_pushforward_matrix(map, true));

  QMatrix degenerate = QMatrix::from_rows({{Rational(1), Rational(1)},
                                           {Rational(2), Rational(2)}});
  CHECK_NOTHROW(validate_pushforward_matrix(degenerate, false));
  CHECK_THROWS_AS(validate_pushforward_matrix(degenerate, true), input_error);
}
