#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "conelab/lattice.hpp"
#include "conelab/rational.hpp"

namespace conelab {

// Declared structural properties of a catalog ring.  These are data, never
// inferred: operations check for the flags they require and reject or
// report not-applicable otherwise.
enum class RingFlag {
  domain,
  normal,
  cohen_macaulay,
  gorenstein,
  isolated_singularity,
  canonical_module,
};

std::string to_string(RingFlag f);
RingFlag ring_flag_from_string(const std::string& s);

// A ring is recorded through the shape of its class group data: zeta is the
// free rank of the kernel summand (so the rationalized group of classes has
// dimension zeta + 1, with the free-module class as the extra coordinate).
struct RingDescriptor {
  std::string name;
  std::size_t zeta = 0;
  std::vector<Integer> torsion_orders;
  std::set<RingFlag> flags;
  // Class of the canonical module minus the free class, as a kernel element;
  // implicitly zero for Gorenstein rings.
  std::optional<GroupElement> omega_kernel_part;
  std::string provenance;

  bool has(RingFlag f) const { return flags.count(f) > 0; }
  // Kernel summand: free rank zeta plus the torsion part.
  GroupPresentation kernel_presentation() const;
  // Full group: free rank zeta + 1 (free-module class first) plus torsion.
  GroupPresentation group_presentation() const;
};

// Kernel element of the canonical module class: the declared value, or zero
// when the ring is Gorenstein.  Rejects rings without canonical data.
GroupElement omega_kernel(const RingDescriptor& ring);

// The class of a finitely generated module: its generic rank plus the
// kernel component (the part of the class not visible to the rank).
struct ModuleClass {
  std::string label;
  Integer rank;              // >= 0
  GroupElement kernel_part;  // element of the kernel presentation
  std::optional<bool> mcm_flag;
  std::string provenance;
};

ModuleClass make_module_class(std::string label, Integer rank, GroupElement kernel_part,
                              std::optional<bool> mcm_flag = std::nullopt,
                              std::string provenance = {});
bool same_class(const ModuleClass& a, const ModuleClass& b);

// (rank, realified kernel): the image of the class in the rationalized
// group, length zeta + 1 with the rank as coordinate 0.
QVector realification(const ModuleClass& m);
Integer rank_functional(const ModuleClass& m);
Rational rank_functional_real(const QVector& x);

// Determinant of the class as an element of the divisor class group, under
// the convention that the kernel basis classes are residue classes R/p of
// height-one primes, whose determinant is -p: coordinates are negated.
// Requires the ring to be declared normal.
GroupElement determinant_class(const ModuleClass& m, const RingDescriptor& ring);

// [M*] = 2 rank [R] - [M]: same rank, negated kernel part.
ModuleClass dual_class(const ModuleClass& m);
// [M+] = rank [omega] - ... : same rank, kernel goes to rank*omega - kernel.
ModuleClass canonical_dual_class(const ModuleClass& m, const RingDescriptor& ring);
// Matrix of the involution on the rationalized group: the free-module class
// maps to the canonical-module class, every kernel coordinate negates.
// Squares to the identity.
QMatrix nu_involution_matrix(const RingDescriptor& ring);

// ---- Betti data and syzygies ----

struct ClosedForm {
  enum class Kind { constant, polynomial, exponential };
  Kind kind = Kind::constant;
  Integer value;  // the constant, or the polynomial degree
};

// Betti numbers b_0, b_1, ... as an explicit prefix and/or a closed-form
// growth tag; dual_prefix holds b_{-1}, b_{-2}, ... of the complete
// resolution when the module is declared totally reflexive.
struct BettiSequence {
  std::vector<Integer> prefix;
  std::optional<ClosedForm> closed_form;
  std::vector<Integer> dual_prefix;
  std::string provenance;

  // b_k, or nullopt when the data does not determine it.
  std::optional<Integer> value(std::size_t k) const;
};

// Rank recursion r_0 = rank(M), r_{k+1} = b_k - r_k; the kernel part of
// syz^n is (-1)^n times the kernel part of M.  Negative derived ranks mean
// inconsistent Betti data and are rejected.
ModuleClass syzygy_class(const ModuleClass& m, const BettiSequence& betti, std::size_t n);

struct RankProfile {
  std::vector<Integer> syzygy_ranks;    // rank of syz^0, syz^1, ...
  std::vector<Integer> cosyzygy_ranks;  // rank of syz^-1, syz^-2, ... (dual side)
};

RankProfile syzygy_rank_profile(const Integer& rank, const BettiSequence& betti,
                                std::size_t horizon = 32);

// Lower bound for the complexity (polynomial scale of Betti growth plus 1).
// Closed forms give the exact value; a finite prefix gives a certified fit:
// 1 + the deepest finite-difference level of the prefix that stays >= 1
// over at least two entries, flagged prefix_only.
struct ComplexityBound {
  bool unbounded = false;       // growth beyond every polynomial
  Integer value;                // meaningful when !unbounded
  bool exact = false;           // closed form vs prefix fit
  bool prefix_only = false;     // valid only if the observed growth continues
};

ComplexityBound complexity_lower_bound(const BettiSequence& betti);

// Induced map on rationalized groups along a module-finite ring map,
// supplied as declared data.  When the extension is declared injective and
// finite the matrix must be surjective; validated at catalog load.
QVector pushforward(const QMatrix& map, const QVector& x);
void validate_pushforward_matrix(const QMatrix& map, bool declared_injective_finite);

}  // namespace conelab
