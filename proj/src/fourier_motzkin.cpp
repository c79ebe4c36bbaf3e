#include "conelab/fourier_motzkin.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace conelab {

namespace {

// One inequality over the multipliers: coeffs . lambda >= rhs.  `history`
// records which rows of the original system this row descends from, for the
// Chernikov redundancy rule below.
struct Row {
  QVector coeffs;
  Rational rhs;
  std::uint64_t history = 0;
};

// Scale to integer entries with content 1 (positive factor only, so the
// inequality direction is preserved); used to keep rows comparable.
Row normalized(Row r) {
  QVector all = r.coeffs;
  all.push_back(r.rhs);
  QVector p = primitive_direction(all);
  Row out;
  out.coeffs.assign(p.begin(), p.end() - 1);
  out.rhs = p.back();
  out.history = r.history;
  return out;
}

bool row_less(const Row& a, const Row& b) {
  if (a.coeffs != b.coeffs) return lex_less(a.coeffs, b.coeffs);
  return a.rhs < b.rhs;
}

bool row_eq(const Row& a, const Row& b) { return a.coeffs == b.coeffs && a.rhs == b.rhs; }

}  // namespace

bool fm_cone_contains(std::size_t ambient_dim, const std::vector<QVector>& generators,
                      const QVector& x) {
  if (x.size() != ambient_dim) throw input_error("oracle: point has wrong dimension");
  const std::size_t m = generators.size();
  for (const QVector& g : generators)
    if (g.size() != ambient_dim) throw input_error("oracle: generator has wrong dimension");

  std::vector<Row> rows;
  for (std::size_t i = 0; i < m; ++i) {  // lambda_i >= 0
    Row r{zero_qvector(m), Rational(0), 0};
    r.coeffs[i] = 1;
    rows.push_back(std::move(r));
  }
  for (std::size_t j = 0; j < ambient_dim; ++j) {  // sum lambda_i g_i[j] = x[j]
    Row ge{zero_qvector(m), x[j], 0}, le{zero_qvector(m), -x[j], 0};
    for (std::size_t i = 0; i < m; ++i) {
      ge.coeffs[i] = generators[i][j];
      le.coeffs[i] = -generators[i][j];
    }
    rows.push_back(std::move(ge));
    rows.push_back(std::move(le));
  }

  // Chernikov's rule: after eliminating k variables, any derived row whose
  // history holds more than k + 1 original rows is a redundant consequence
  // and may be dropped without changing the projection.  Tracked as a
  // bitmask, so it only applies while the original system is small enough.
  const bool track_history = rows.size() <= 64;
  if (track_history)
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].history = std::uint64_t(1) << i;

  for (std::size_t var = 0; var < m; ++var) {
    std::vector<Row> pos, neg, next;
    for (Row& r : rows) {
      int s = sgn(r.coeffs[var]);
      if (s > 0) pos.push_back(std::move(r));
      else if (s < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    const unsigned max_history = static_cast<unsigned>(var) + 2;  // k + 1 after k = var + 1
    for (const Row& p : pos)
      for (const Row& n : neg) {
        std::uint64_t history = p.history | n.history;
        if (track_history && static_cast<unsigned>(std::popcount(history)) > max_history)
          continue;
        // Positive combination eliminating `var`.
        Rational a = -n.coeffs[var], b = p.coeffs[var];
        Row comb{zero_qvector(m), a * p.rhs + b * n.rhs, history};
        for (std::size_t i = 0; i < m; ++i) comb.coeffs[i] = a * p.coeffs[i] + b * n.coeffs[i];
        next.push_back(std::move(comb));
      }
    // Normalize, drop tautologies, detect contradictions, dedup (keeping the
    // shortest history so later pruning stays as strong as possible).
    std::vector<Row> cleaned;
    for (Row& r : next) {
      Row nr = normalized(std::move(r));
      if (is_zero(nr.coeffs)) {
        if (sgn(nr.rhs) > 0) return false;  // 0 >= positive: infeasible
        continue;
      }
      cleaned.push_back(std::move(nr));
    }
    std::sort(cleaned.begin(), cleaned.end(), [](const Row& a, const Row& b) {
      if (!row_eq(a, b)) return row_less(a, b);
      return std::popcount(a.history) < std::popcount(b.history);
    });
    cleaned.erase(std::unique(cleaned.begin(), cleaned.end(), row_eq), cleaned.end());
    rows = std::move(cleaned);
  }

  for (const Row& r : rows)
    if (sgn(r.rhs) > 0) return false;
  return true;
}

}  // namespace conelab
