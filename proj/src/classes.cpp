#include "conelab/classes.hpp"

#include <algorithm>

namespace conelab {

std::string to_string(RingFlag f) {
  switch (f) {
    case RingFlag::domain: return "domain";
    case RingFlag::normal: return "normal";
    case RingFlag::cohen_macaulay: return "cohen_macaulay";
    case RingFlag::gorenstein: return "gorenstein";
    case RingFlag::isolated_singularity: return "isolated_singularity";
    case RingFlag::canonical_module: return "canonical_module";
  }
  throw input_error("unknown ring flag value");
}

RingFlag ring_flag_from_string(const std::string& s) {
  for (RingFlag f : {RingFlag::domain, RingFlag::normal, RingFlag::cohen_macaulay,
                     RingFlag::gorenstein, RingFlag::isolated_singularity,
                     RingFlag::canonical_module})
    if (to_string(f) == s) return f;
  throw input_error("unknown ring flag '" + s + "'");
}

GroupPresentation RingDescriptor::kernel_presentation() const {
  GroupPresentation p;
  p.free_rank = zeta;
  p.torsion_orders = torsion_orders;
  validate_presentation(p);
  return p;
}

GroupPresentation RingDescriptor::group_presentation() const {
  GroupPresentation p;
  p.free_rank = zeta + 1;
  p.torsion_orders = torsion_orders;
  validate_presentation(p);
  return p;
}

GroupElement omega_kernel(const RingDescriptor& ring) {
  if (!ring.has(RingFlag::canonical_module))
    throw input_error("ring '" + ring.name + "' has no declared canonical module");
  if (ring.omega_kernel_part) {
    if (!same_shape(ring.omega_kernel_part->presentation, ring.kernel_presentation()))
      throw input_error("ring '" + ring.name +
                        "': canonical class data does not match the kernel presentation");
    return *ring.omega_kernel_part;
  }
  if (ring.has(RingFlag::gorenstein)) return zero_element(ring.kernel_presentation());
  throw input_error("ring '" + ring.name +
                    "' declares a canonical module but no canonical class data");
}

ModuleClass make_module_class(std::string label, Integer rank, GroupElement kernel_part,
                              std::optional<bool> mcm_flag, std::string provenance) {
  if (rank < 0) throw input_error("module class '" + label + "': rank must be >= 0");
  return ModuleClass{std::move(label), std::move(rank), std::move(kernel_part), mcm_flag,
                     std::move(provenance)};
}

bool same_class(const ModuleClass& a, const ModuleClass& b) {
  return a.rank == b.rank && a.kernel_part == b.kernel_part;
}

QVector realification(const ModuleClass& m) {
  QVector kernel = realify(m.kernel_part);
  QVector v;
  v.reserve(kernel.size() + 1);
  v.push_back(Rational(m.rank));
  v.insert(v.end(), kernel.begin(), kernel.end());
  return v;
}

Integer rank_functional(const ModuleClass& m) { return m.rank; }

Rational rank_functional_real(const QVector& x) {
  if (x.empty()) throw input_error("rank functional: empty vector");
  return x[0];
}

GroupElement determinant_class(const ModuleClass& m, const RingDescriptor& ring) {
  if (!ring.has(RingFlag::normal))
    throw input_error("determinant requires a ring declared normal; '" + ring.name + "' is not");
  if (!same_shape(m.kernel_part.presentation, ring.kernel_presentation()))
    throw input_error("class '" + m.label + "' does not live over ring '" + ring.name + "'");
  // Kernel basis classes are residues R/p with determinant -p, so the
  // coordinates of the determinant in the ideal-class basis are negated.
  return negate(m.kernel_part);
}

ModuleClass dual_class(const ModuleClass& m) {
  return make_module_class(m.label + "*", m.rank, negate(m.kernel_part), m.mcm_flag,
                           m.provenance.empty() ? "" : "dual of " + m.label);
}

ModuleClass canonical_dual_class(const ModuleClass& m, const RingDescriptor& ring) {
  GroupElement w = omega_kernel(ring);
  if (!same_shape(m.kernel_part.presentation, ring.kernel_presentation()))
    throw input_error("class '" + m.label + "' does not live over ring '" + ring.name + "'");
  GroupElement kernel = add(scale(m.rank, w), negate(m.kernel_part));
  return make_module_class(m.label + "+", m.rank, std::move(kernel), m.mcm_flag,
                           m.provenance.empty() ? "" : "canonical dual of " + m.label);
}

QMatrix nu_involution_matrix(const RingDescriptor& ring) {
  GroupElement w = omega_kernel(ring);
  QVector w_real = realify(w);
  const std::size_t n = ring.zeta + 1;
  QMatrix nu(n, n);
  nu.at(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) {
    nu.at(i, 0) = w_real[i - 1];
    nu.at(i, i) = -1;
  }
  return nu;
}

std::optional<Integer> BettiSequence::value(std::size_t k) const {
  if (k < prefix.size()) return prefix[k];
  if (closed_form && closed_form->kind == ClosedForm::Kind::constant) return closed_form->value;
  return std::nullopt;
}

namespace {

// r_0 = rank, r_{k+1} = b_k - r_k, up to r_count ranks.
std::vector<Integer> rank_recursion(const Integer& rank, const std::vector<Integer>& b,
                                    const BettiSequence* betti, std::size_t count,
                                    const char* side) {
  std::vector<Integer> r{rank};
  for (std::size_t k = 0; k + 1 < count; ++k) {
    Integer bk;
    if (betti) {
      std::optional<Integer> v = betti->value(k);
      if (!v) break;
      bk = *v;
    } else {
      if (k >= b.size()) break;
      bk = b[k];
    }
    if (bk < 0) throw input_error(std::string(side) + ": negative Betti number at index " +
                                  std::to_string(k));
    Integer next = bk - r.back();
    if (next < 0)
      throw input_error(std::string(side) + ": inconsistent Betti data, derived rank " +
                        next.get_str() + " at index " + std::to_string(k + 1) + " is negative");
    r.push_back(next);
  }
  return r;
}

}  // namespace

ModuleClass syzygy_class(const ModuleClass& m, const BettiSequence& betti, std::size_t n) {
  std::vector<Integer> ranks = rank_recursion(m.rank, {}, &betti, n + 1, "syzygy ranks");
  if (ranks.size() <= n)
    throw input_error("Betti data exhausted: need b_0..b_" + std::to_string(n - 1) +
                      " to reach syzygy index " + std::to_string(n));
  GroupElement kernel = (n % 2 == 0) ? m.kernel_part : negate(m.kernel_part);
  return make_module_class("syz^" + std::to_string(n) + "(" + m.label + ")", ranks[n],
                           std::move(kernel), m.mcm_flag);
}

RankProfile syzygy_rank_profile(const Integer& rank, const BettiSequence& betti,
                                std::size_t horizon) {
  if (rank < 0) throw input_error("syzygy profile: rank must be >= 0");
  RankProfile p;
  p.syzygy_ranks = rank_recursion(rank, {}, &betti, horizon + 1, "syzygy ranks");
  if (!betti.dual_prefix.empty()) {
    std::size_t count = std::min(horizon, betti.dual_prefix.size()) + 1;
    std::vector<Integer> co = rank_recursion(rank, betti.dual_prefix, nullptr, count,
                                             "cosyzygy ranks");
    p.cosyzygy_ranks.assign(co.begin() + 1, co.end());
  }
  return p;
}

ComplexityBound complexity_lower_bound(const BettiSequence& betti) {
  ComplexityBound out;
  if (betti.closed_form) {
    switch (betti.closed_form->kind) {
      case ClosedForm::Kind::constant:
        out.value = betti.closed_form->value > 0 ? 1 : 0;
        out.exact = true;
        return out;
      case ClosedForm::Kind::polynomial:
        out.value = betti.closed_form->value + 1;
        out.exact = true;
        return out;
      case ClosedForm::Kind::exponential:
        out.unbounded = true;
        out.exact = true;
        return out;
    }
  }
  if (betti.prefix.empty()) throw input_error("complexity bound: no Betti data");
  for (const Integer& b : betti.prefix) {
    if (b < 0) throw input_error("complexity bound: negative Betti number");
    if (b == 0) {  // the resolution terminates inside the prefix
      out.value = 0;
      out.exact = true;
      return out;
    }
  }
  // Deepest finite-difference level of the prefix that stays entrywise >= 1
  // over at least two entries witnesses growth at least like a polynomial
  // of that degree; only trustworthy if the observed growth continues.
  auto all_positive = [](const std::vector<Integer>& v) {
    return std::all_of(v.begin(), v.end(), [](const Integer& z) { return z >= 1; });
  };
  std::size_t depth = 0;
  std::vector<Integer> level = betti.prefix;
  while (level.size() >= 3) {
    std::vector<Integer> next;
    for (std::size_t i = 0; i + 1 < level.size(); ++i) next.push_back(level[i + 1] - level[i]);
    if (!all_positive(next)) break;
    ++depth;
    level = std::move(next);
  }
  out.value = Integer(static_cast<unsigned long>(depth + 1));
  out.prefix_only = true;
  return out;
}

QVector pushforward(const QMatrix& map, const QVector& x) { return matrix_apply(map, x); }

void validate_pushforward_matrix(const QMatrix& map, bool declared_injective_finite) {
  if (!declared_injective_finite) return;
  if (matrix_rank(map) != map.rows)
    throw input_error("pushforward matrix of a declared injective finite extension must be "
                      "surjective, but its rank is below the target dimension");
}

}  // namespace conelab
