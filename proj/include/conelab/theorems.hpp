#pragma once

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "conelab/classes.hpp"
#include "conelab/cone.hpp"
#include "conelab/lattice.hpp"
#include "conelab/rational.hpp"

namespace conelab {

using Json = nlohmann::json;

enum class Verdict { holds, violated, not_applicable };
std::string to_string(Verdict v);

// Outcome of one validator run.  A violated verdict always carries a
// certificate whose facts replay the violation through the public
// operations; not_applicable names the missing hypothesis.
struct TheoremReport {
  std::string id;
  Verdict verdict = Verdict::not_applicable;
  Json certificate;
  std::string citation;
};

// Deterministic producer of classes indexed by 0, 1, 2, ....
struct ClassStream {
  std::string description;
  std::function<ModuleClass(std::size_t)> at;
};

// A line J + Z I in the divisor class group, with the set of integers n for
// which J + nI is declared maximal Cohen-Macaulay, plus the declared
// hypotheses under which the line validators may run.
enum class LineAssumption {
  gorenstein_ideal,
  rigid,
  non_principal,
  height_one,
  locally_free_punctured,
  dim_ge_3,
};

std::string to_string(LineAssumption a);
LineAssumption line_assumption_from_string(const std::string& s);

struct DivisorLine {
  GroupElement base;       // J, in the kernel presentation
  GroupElement direction;  // I
  std::set<long> declared_mcm;
  std::set<LineAssumption> assumptions;
  std::string provenance;
};

// Cone spanned by the realifications of the classes, in dimension zeta + 1.
RationalCone class_cone(const std::vector<ModuleClass>& classes, const RingDescriptor& ring);

// Stream n |-> base + n * step (or base + (-1)^n * step when alternating),
// moving in the kernel group at constant rank.
ClassStream arithmetic_stream(const ModuleClass& base, const GroupElement& step,
                              bool alternating = false);

// Finite-data chain for the cone of classes of a fixed positive rank r, all
// declared maximal Cohen-Macaulay:
//   (c) polyhedral, (d) closed, (e) cone meets {rank = 0} only in 0,
//   (f) the rank-r slice is bounded, (g) strongly convex;
// asserts (e) <=> (f) and (f) => (g).
TheoremReport theorem1_report(const std::vector<ModuleClass>& classes, const Integer& r,
                              const RingDescriptor& ring);

// Watches the rank-r slice points of a stream; reports a divergence
// certificate (index, exact direction) as soon as a squared norm exceeds
// bound^2, otherwise "bounded up to horizon" (explicitly not a proof).
TheoremReport stream_divergence_monitor(const ClassStream& s, const Integer& r,
                                        std::size_t horizon, const Rational& bound);

// Distinct classes with different realifications sit at squared distance
// >= 1 (integer lattice); classes differing only by torsion collapse to the
// same realification and are flagged, not counted as violations.
TheoremReport prop16_separation(const std::vector<ModuleClass>& classes);

// The canonical-duality involution maps the class cone onto itself.
// Requires the class list to be closed under canonical duals.
TheoremReport symmetry_check(const std::vector<ModuleClass>& classes,
                             const RingDescriptor& ring);

// Boundary necessary condition: on the cone boundary every syzygy and
// cosyzygy rank is >= the module rank.  A rank dip certifies (by
// contraposition) that the class and its dual are not on the boundary.
TheoremReport prop44_boundary_check(const Integer& rank, const BettiSequence& betti,
                                    std::size_t horizon = 32);

// Membership indices of normalized syzygy classes in the cone v up to the
// horizon, with the exact per-facet rank thresholds for each parity.
// Requires the free-module class to be interior to v and unbounded syzygy
// ranks (complexity >= 2 or an explicit declaration).
TheoremReport theorem11_entry_indices(const ModuleClass& m, const BettiSequence& betti,
                                      const RationalCone& v, std::size_t horizon,
                                      bool declared_unbounded_ranks = false);

// Replays the relation chain [(1)] + [(-n)] = [(0)] + [(-n+1)] down the
// line ZI, checks the n = 1 instance against the rank-one duality relation,
// and emits the conclusion set {-1, 0, 1}.  Declared points outside that
// set contradict the rigidity hypotheses: verdict violated.
TheoremReport theorem3_walk(const DivisorLine& line, const RingDescriptor& ring,
                            std::size_t depth = 3);

// Structure of the declared points on a line J + Z I: each sign side is an
// interval closed toward 0, and +2 and -2 cannot both appear unless the
// direction is principal.
TheoremReport line_constraints_check(const DivisorLine& line);

// Halfspace bound from an intersection-multiplicity functional, given by its
// values on the free-module class and the kernel basis classes: every
// declared class must satisfy chi >= 0 (else the data is inconsistent and
// rejected); a probe (an element of the kernel group) with chi < 0 is
// certified to lie outside the closed class cone, with the finiteness
// skeleton when the kernel free rank is 1.
TheoremReport chi_halfspace_report(const QVector& functional_values,
                                   const std::vector<ModuleClass>& classes,
                                   const GroupElement& probe);

}  // namespace conelab
