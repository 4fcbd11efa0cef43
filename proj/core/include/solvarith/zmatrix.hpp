#pragma once

#include <vector>

#include "solvarith/matrix.hpp"
#include "solvarith/rat.hpp"

namespace solvarith {

/// Dense integer matrix; the workhorse behind Hermite forms, integer kernels and
/// lattice arithmetic.
class ZMat {
 public:
  ZMat() : rows_(0), cols_(0) {}
  ZMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  ZMat(std::initializer_list<std::initializer_list<Int>> rows);

  static ZMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Int& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Int& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }

  ZMat operator*(const ZMat& o) const;
  ZMat transpose() const;
  ZMat hcat(const ZMat& right) const;
  ZMat vcat(const ZMat& bottom) const;
  ZMat submatrix(int i0, int j0, int nrows, int ncols) const;

  RatMat to_rat() const;
  static ZMat from_rat_cleared(const RatMat& m, Int& denominator_out);  // m * lcm(dens)

  Int det() const;  // via fraction-free elimination on a copy

 private:
  int rows_, cols_;
  std::vector<Int> e_;
};

/// In-place column-style Hermite normal form: lower-triangular shape with pivot
/// rows strictly increasing down the columns, positive pivots, and entries to the
/// left of each pivot reduced into [0, pivot). Nonzero columns end up first.
/// If `transform` is non-null it receives a unimodular U with A_in * U = A_out.
/// Returns the rank (number of nonzero columns).
int col_hnf(ZMat& a, ZMat* transform = nullptr);

/// HNF basis of the integer kernel {z : a z = 0}, columns spanning (saturated).
ZMat z_kernel(const ZMat& a);

/// Columns of the intersection of the column-span lattices of b1 and b2.
ZMat z_lattice_intersect(const ZMat& b1, const ZMat& b2);

/// Completes a saturated full-column-rank lattice basis (n x k, k <= n) to a
/// basis of Z^n; returns an n x n unimodular matrix whose first k columns span
/// the same lattice. Throws if the input columns are not a saturated lattice.
ZMat complete_unimodular(const ZMat& basis);

/// Spec operation: canonical column HNF basis of the Z-span of rational vectors.
struct HnfBasis {
  RatMat basis;  // n x rank, rational entries
  int rank;
};
HnfBasis hnf_basis(const std::vector<RatMat>& vectors);

}  // namespace solvarith
