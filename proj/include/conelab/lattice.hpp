#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conelab/rational.hpp"

namespace conelab {

// ---- integer matrices and Smith normal form ----

struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;  // row-major

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, Integer(0)) {}

  Integer& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  static IntegerMatrix from_rows(const std::vector<std::vector<Integer>>& rows_in,
                                 std::size_t cols_hint = 0);
  static IntegerMatrix identity(std::size_t n);
};

bool operator==(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);

// u * m * v = d with u, v unimodular and d diagonal, entries nonnegative,
// each diagonal entry dividing the next.  Pivot choice: the entry of the
// working submatrix with smallest absolute value, ties broken by lowest
// (row, col); this makes the decomposition deterministic, so transform
// matrices can be pinned in regression tests.
struct SmithDecomposition {
  IntegerMatrix u;
  IntegerMatrix d;
  IntegerMatrix v;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);
std::vector<Integer> diagonal_of(const IntegerMatrix& d);

// ---- finitely generated abelian groups ----

// Z^free_rank (+) sum of Z/theta_j with theta_j >= 2 and theta_j | theta_{j+1}.
// basis_labels are metadata only and never participate in equality.
struct GroupPresentation {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion_orders;
  std::vector<std::string> basis_labels;

  std::size_t torsion_rank() const { return torsion_orders.size(); }
};

bool same_shape(const GroupPresentation& a, const GroupPresentation& b);
void validate_presentation(const GroupPresentation& p);
// "Z^2 + Z/3 + Z/6", or "0" for the trivial group.
std::string describe_group(const GroupPresentation& p);

// An element carries its presentation so mixed-group arithmetic is rejected.
// Torsion residues are kept canonical: 0 <= torsion_part[j] < theta_j.
struct GroupElement {
  GroupPresentation presentation;
  std::vector<Integer> free_part;
  std::vector<Integer> torsion_part;
};

GroupElement make_element(const GroupPresentation& p, std::vector<Integer> free_part,
                          std::vector<Integer> torsion_part);
GroupElement zero_element(const GroupPresentation& p);
bool operator==(const GroupElement& a, const GroupElement& b);
GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement negate(const GroupElement& a);
GroupElement scale(const Integer& n, const GroupElement& a);
bool is_zero(const GroupElement& a);
// Image in the rationalization: the free part as exact rationals.  Torsion
// is annihilated (theta_j * psi_j = 0 forces every torsion image to vanish).
QVector realify(const GroupElement& a);

// Cokernel presentation of Z^generators by the rows of `relations`
// (each row is one relation among the generators), computed via the Smith
// normal form: free_rank = generators - rank, torsion orders are the
// diagonal entries > 1.
GroupPresentation presentation_from_relations(std::size_t generators,
                                              const IntegerMatrix& relations,
                                              std::vector<std::string> basis_labels = {});

}  // namespace conelab
