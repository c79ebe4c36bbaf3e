#include "conelab/lattice.hpp"

#include <algorithm>
#include <optional>

namespace conelab {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<Integer>>& rows_in,
                                       std::size_t cols_hint) {
  std::size_t c = cols_hint;
  for (const auto& r : rows_in) {
    if (c == 0) c = r.size();
    if (r.size() != c) throw input_error("matrix rows of unequal length");
  }
  IntegerMatrix m(rows_in.size(), c);
  for (std::size_t i = 0; i < rows_in.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols != b.rows) throw input_error("integer matrix product: inner dimensions disagree");
  IntegerMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[a] += q * row[b]
void add_row(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m.at(a, j) += q * m.at(b, j);
}

void add_col(IntegerMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows; ++i) m.at(i, a) += q * m.at(i, b);
}

void negate_row(IntegerMatrix& m, std::size_t a) {
  for (std::size_t j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
}

// Smallest |entry| != 0 in the submatrix with corner (t, t); ties broken by
// lowest (row, col) in row-major order.
std::optional<std::pair<std::size_t, std::size_t>> locate_pivot(const IntegerMatrix& m,
                                                                std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = t; i < m.rows; ++i)
    for (std::size_t j = t; j < m.cols; ++j) {
      const Integer& e = m.at(i, j);
      if (e == 0) continue;
      if (!best || mpz_cmpabs(e.get_mpz_t(), m.at(best->first, best->second).get_mpz_t()) < 0)
        best = {i, j};
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& m) {
  SmithDecomposition s{IntegerMatrix::identity(m.rows), m, IntegerMatrix::identity(m.cols)};
  IntegerMatrix& d = s.d;
  const std::size_t steps = std::min(m.rows, m.cols);

  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = locate_pivot(d, t);
      if (!pivot) break;  // remaining submatrix is zero
      swap_rows(d, t, pivot->first);
      swap_rows(s.u, t, pivot->first);
      swap_cols(d, t, pivot->second);
      swap_cols(s.v, t, pivot->second);

      // Clear the pivot column and row with truncated division; nonzero
      // remainders become strictly smaller pivot candidates next pass.
      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows; ++i) {
        if (d.at(i, t) == 0) continue;
        Integer q = d.at(i, t) / d.at(t, t);
        add_row(d, i, t, -q);
        add_row(s.u, i, t, -q);
        if (d.at(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols; ++j) {
        if (d.at(t, j) == 0) continue;
        Integer q = d.at(t, j) / d.at(t, t);
        add_col(d, j, t, -q);
        add_col(s.v, j, t, -q);
        if (d.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot is lone in its row and column.  Enforce the divisibility
      // chain: fold the first offending row into row t and start over.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < d.rows && divides_all; ++i)
        for (std::size_t j = t + 1; j < d.cols; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            add_row(d, t, i, Integer(1));
            add_row(s.u, t, i, Integer(1));
            divides_all = false;
            break;
          }
      if (divides_all) break;
    }
  }

  for (std::size_t t = 0; t < steps; ++t)
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.u, t);
    }
  return s;
}

std::vector<Integer> diagonal_of(const IntegerMatrix& d) {
  std::vector<Integer> out;
  for (std::size_t t = 0; t < std::min(d.rows, d.cols); ++t) out.push_back(d.at(t, t));
  return out;
}

// ---- groups ----

bool same_shape(const GroupPresentation& a, const GroupPresentation& b) {
  return a.free_rank == b.free_rank && a.torsion_orders == b.torsion_orders;
}

void validate_presentation(const GroupPresentation& p) {
  for (std::size_t j = 0; j < p.torsion_orders.size(); ++j) {
    if (p.torsion_orders[j] < 2)
      throw input_error("torsion order " + p.torsion_orders[j].get_str() +
                        " invalid: orders must be >= 2");
    if (j + 1 < p.torsion_orders.size() &&
        !mpz_divisible_p(p.torsion_orders[j + 1].get_mpz_t(), p.torsion_orders[j].get_mpz_t()))
      throw input_error("torsion orders violate the divisibility chain at position " +
                        std::to_string(j));
  }
}

std::string describe_group(const GroupPresentation& p) {
  std::vector<std::string> parts;
  if (p.free_rank == 1) parts.push_back("Z");
  else if (p.free_rank > 1) parts.push_back("Z^" + std::to_string(p.free_rank));
  for (const Integer& t : p.torsion_orders) parts.push_back("Z/" + t.get_str());
  if (parts.empty()) return "0";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

std::vector<Integer> reduce_torsion(const GroupPresentation& p, std::vector<Integer> t) {
  for (std::size_t j = 0; j < t.size(); ++j)
    mpz_fdiv_r(t[j].get_mpz_t(), t[j].get_mpz_t(), p.torsion_orders[j].get_mpz_t());
  return t;
}

}  // namespace

GroupElement make_element(const GroupPresentation& p, std::vector<Integer> free_part,
                          std::vector<Integer> torsion_part) {
  validate_presentation(p);
  if (free_part.size() != p.free_rank)
    throw input_error("element has " + std::to_string(free_part.size()) +
                      " free coordinates; presentation has free rank " +
                      std::to_string(p.free_rank));
  if (torsion_part.size() != p.torsion_orders.size())
    throw input_error("element has " + std::to_string(torsion_part.size()) +
                      " torsion coordinates; presentation has " +
                      std::to_string(p.torsion_orders.size()));
  return GroupElement{p, std::move(free_part), reduce_torsion(p, std::move(torsion_part))};
}

GroupElement zero_element(const GroupPresentation& p) {
  return make_element(p, std::vector<Integer>(p.free_rank, Integer(0)),
                      std::vector<Integer>(p.torsion_orders.size(), Integer(0)));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  return same_shape(a.presentation, b.presentation) && a.free_part == b.free_part &&
         a.torsion_part == b.torsion_part;
}

static void require_same_presentation(const GroupElement& a, const GroupElement& b) {
  if (!same_shape(a.presentation, b.presentation))
    throw input_error("presentation mismatch: " + describe_group(a.presentation) + " vs " +
                      describe_group(b.presentation));
}

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_presentation(a, b);
  std::vector<Integer> f(a.free_part.size()), t(a.torsion_part.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = a.free_part[i] + b.free_part[i];
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = a.torsion_part[j] + b.torsion_part[j];
  return make_element(a.presentation, std::move(f), std::move(t));
}

GroupElement negate(const GroupElement& a) { return scale(Integer(-1), a); }

GroupElement scale(const Integer& n, const GroupElement& a) {
  std::vector<Integer> f(a.free_part.size()), t(a.torsion_part.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = n * a.free_part[i];
  for (std::size_t j = 0; j < t.size(); ++j) t[j] = n * a.torsion_part[j];
  return make_element(a.presentation, std::move(f), std::move(t));
}

bool is_zero(const GroupElement& a) {
  auto zero = [](const Integer& z) { return z == 0; };
  return std::all_of(a.free_part.begin(), a.free_part.end(), zero) &&
         std::all_of(a.torsion_part.begin(), a.torsion_part.end(), zero);
}

QVector realify(const GroupElement& a) {
  QVector v(a.free_part.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(a.free_part[i]);
  return v;
}

GroupPresentation presentation_from_relations(std::size_t generators,
                                              const IntegerMatrix& relations,
                                              std::vector<std::string> basis_labels) {
  if (relations.rows > 0 && relations.cols != generators)
    throw input_error("relation matrix has " + std::to_string(relations.cols) +
                      " columns; expected one per generator (" + std::to_string(generators) + ")");
  SmithDecomposition s = smith_normal_form(relations);
  GroupPresentation p;
  std::size_t rank = 0;
  for (const Integer& e : diagonal_of(s.d)) {
    if (e == 0) continue;
    ++rank;
    if (e > 1) p.torsion_orders.push_back(e);
  }
  p.free_rank = generators - rank;
  p.basis_labels = std::move(basis_labels);
  validate_presentation(p);
  return p;
}

}  // namespace conelab
