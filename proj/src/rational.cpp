#include "conelab/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace conelab {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

int sign_of(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

QVector zero_qvector(std::size_t n) { return QVector(n, Rational(0)); }

static void require_same_size(const QVector& a, const QVector& b, const char* what) {
  if (a.size() != b.size())
    throw input_error(std::string(what) + ": dimension mismatch (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + ")");
}

QVector add(const QVector& a, const QVector& b) {
  require_same_size(a, b, "vector addition");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector subtract(const QVector& a, const QVector& b) {
  require_same_size(a, b, "vector subtraction");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector scale(const Rational& s, const QVector& v) {
  QVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

QVector negate(const QVector& v) { return scale(Rational(-1), v); }

Rational dot(const QVector& a, const QVector& b) {
  require_same_size(a, b, "dot product");
  Rational r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return sgn(q) == 0; });
}

Rational squared_norm(const QVector& v) { return dot(v, v); }

Rational squared_distance(const QVector& a, const QVector& b) {
  return squared_norm(subtract(a, b));
}

QVector primitive_direction(const QVector& v) {
  if (is_zero(v)) return v;
  Integer den_lcm(1);
  for (const Rational& q : v)
    if (sgn(q) != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  Integer content(0);
  for (const Rational& q : v) {
    Integer scaled = q.get_num() * (den_lcm / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor = make_rational(den_lcm, content);  // positive
  return scale(factor, v);
}

QVector sign_normalized(const QVector& v) {
  for (const Rational& q : v) {
    int s = sgn(q);
    if (s > 0) return v;
    if (s < 0) return negate(v);
  }
  return v;
}

bool lex_less(const QVector& a, const QVector& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return a.size() < b.size();
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows_in, std::size_t cols_hint) {
  std::size_t c = cols_hint;
  for (const QVector& r : rows_in) {
    if (c == 0) c = r.size();
    if (r.size() != c) throw input_error("matrix rows of unequal length");
  }
  QMatrix m(rows_in.size(), c);
  for (std::size_t i = 0; i < rows_in.size(); ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows_in[i][j];
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    if (a.data[i] != b.data[i]) return false;
  return true;
}

namespace {

// Gaussian elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot_row = row;
    while (pivot_row < m.rows && sgn(m.at(pivot_row, col)) == 0) ++pivot_row;
    if (pivot_row == m.rows) continue;
    if (pivot_row != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(row, j), m.at(pivot_row, j));
    Rational inv = m.at(row, col);
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) /= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || sgn(m.at(i, col)) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(QMatrix m) { return rref_in_place(m).size(); }

QVector matrix_apply(const QMatrix& m, const QVector& x) {
  if (x.size() != m.cols)
    throw input_error("matrix-vector product: expected vector of length " +
                      std::to_string(m.cols) + ", got " + std::to_string(x.size()));
  QVector r(m.rows, Rational(0));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) r[i] += m.at(i, j) * x[j];
  return r;
}

QMatrix matrix_multiply(const QMatrix& a, const QMatrix& b) {
  if (a.cols != b.rows) throw input_error("matrix product: inner dimensions disagree");
  QMatrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (sgn(a.at(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return r;
}

std::vector<QVector> nullspace_basis(const QMatrix& m) {
  QMatrix r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVector v = zero_qvector(m.cols);
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, free_col);
    basis.push_back(sign_normalized(primitive_direction(v)));
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

// ---- parsing / formatting ----

Integer parse_integer(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw input_error("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw input_error("invalid integer literal '" + text + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw input_error("invalid integer literal '" + text + "'");
  return Integer(s);
}

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  std::string den_text = text.substr(slash + 1);
  Integer den = parse_integer(den_text);
  if (den <= 0) throw input_error("rational '" + text + "': denominator must be positive");
  return make_rational(num, den);
}

std::string format_integer(const Integer& z) { return z.get_str(); }

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QVector parse_qvector(const std::string& text) {
  std::string s = text;
  auto strip = [](std::string t) {
    std::size_t b = t.find_first_not_of(" \t");
    std::size_t e = t.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return t.substr(b, e - b + 1);
  };
  s = strip(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw input_error("vector literal '" + text + "' must be bracketed, e.g. [1, -3/2]");
  s = s.substr(1, s.size() - 2);
  QVector v;
  if (strip(s).empty()) return v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rational(strip(item)));
  return v;
}

std::string format_qvector(const QVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_rational(v[i]);
  }
  return out + "]";
}

}  // namespace conelab
