#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace conelab {

// Thrown for malformed or inconsistent input data.  The CLI maps this to
// exit code 2; verdicts of validators are never reported via exceptions.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Integer = mpz_class;   // arbitrary-precision integer
using Rational = mpq_class;  // exact rational, always kept canonical
using QVector = std::vector<Rational>;

Rational make_rational(const Integer& num, const Integer& den);
int sign_of(const Rational& q);

// ---- exact vector arithmetic ----

QVector zero_qvector(std::size_t n);
QVector add(const QVector& a, const QVector& b);
QVector subtract(const QVector& a, const QVector& b);
QVector scale(const Rational& s, const QVector& v);
QVector negate(const QVector& v);
Rational dot(const QVector& a, const QVector& b);
bool is_zero(const QVector& v);
Rational squared_norm(const QVector& v);
Rational squared_distance(const QVector& a, const QVector& b);

// Rescales v by a positive rational so that all entries are integers with
// content 1.  The direction is preserved; the zero vector maps to itself.
QVector primitive_direction(const QVector& v);
// Flips the sign so the first nonzero entry is positive.  Used for basis
// vectors where v and -v are interchangeable (equations, lineality).
QVector sign_normalized(const QVector& v);
bool lex_less(const QVector& a, const QVector& b);

// ---- dense rational matrices ----

struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;  // row-major

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Rational(0)) {}

  Rational& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  // cols_hint disambiguates the width when rows_in is empty.
  static QMatrix from_rows(const std::vector<QVector>& rows_in, std::size_t cols_hint = 0);
  static QMatrix identity(std::size_t n);
};

bool operator==(const QMatrix& a, const QMatrix& b);

std::size_t matrix_rank(QMatrix m);
QVector matrix_apply(const QMatrix& m, const QVector& x);
QMatrix matrix_multiply(const QMatrix& a, const QMatrix& b);
// Canonical basis of {x : m x = 0}: computed from the reduced row echelon
// form, each vector primitive with positive leading entry, sorted
// lexicographically.  Independent of row order of m.
std::vector<QVector> nullspace_basis(const QMatrix& m);

// ---- exact parsing and formatting ----
//
// Integers are decimal strings; rationals are "p" or "p/q" with gcd(p,q)=1
// and q>0; vectors are bracketed comma lists like "[1, -3/2]".  Formatting
// always emits the canonical form, so format(parse(s)) == s for canonical s.

Integer parse_integer(const std::string& text);
Rational parse_rational(const std::string& text);
std::string format_integer(const Integer& z);
std::string format_rational(const Rational& q);
QVector parse_qvector(const std::string& text);
std::string format_qvector(const QVector& v);

}  // namespace conelab
