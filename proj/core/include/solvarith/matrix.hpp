#pragma once

#include <initializer_list>
#include <vector>

#include "solvarith/errors.hpp"
#include "solvarith/rat.hpp"

namespace solvarith {

/// Dense matrix of exact rationals. Group elements and Lie algebra elements are
/// square; column collections (lattice generators, kernels) may be rectangular.
class RatMat {
 public:
  RatMat() : rows_(0), cols_(0) {}
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

  /// Row-major brace construction, mostly for tests: RatMat({{1,2},{3,4}}).
  RatMat(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMat identity(int n);
  static RatMat zero(int rows, int cols) { return RatMat(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rat& operator()(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  Rat& operator()(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_; }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat operator-() const;
  RatMat operator*(const RatMat& o) const;
  RatMat operator*(const Rat& s) const;

  RatMat transpose() const;

  Rat trace() const;
  Rat det() const;
  RatMat inverse() const;  // throws SingularMatrix
  int rank() const;

  /// m^k, with k < 0 going through the inverse.
  RatMat pow(long k) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_integer() const;
  /// (m - I)^rows == 0, all eigenvalues 1.
  bool is_unipotent() const;
  /// m^rows == 0.
  bool is_nilpotent() const;

  /// lcm of the denominators of all entries (1 for an integer matrix).
  Int denominator_lcm() const;
  /// gcd of numerators of an integer matrix (content); 0 for the zero matrix.
  Int integer_content() const;

  RatMat col(int j) const;
  void set_col(int j, const RatMat& v);
  RatMat submatrix(int i0, int j0, int nrows, int ncols) const;
  void paste(int i0, int j0, const RatMat& block);

  /// Columns of `cols` appended on the right.
  RatMat hcat(const RatMat& right) const;

  /// Commutator a*b - b*a of square matrices.
  friend RatMat bracket(const RatMat& a, const RatMat& b) { return a * b - b * a; }

 private:
  int rows_, cols_;
  std::vector<Rat> e_;
};

inline RatMat operator*(const Rat& s, const RatMat& m) { return m * s; }

/// Solve a*x = rhs for square invertible a.
RatMat solve(const RatMat& a, const RatMat& rhs);

/// Basis of the right kernel {v : a v = 0}, returned as columns (cols x k).
RatMat kernel(const RatMat& a);

/// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(RatMat& a);

/// Printable single-line form, for diagnostics.
std::string to_string(const RatMat& m);

}  // namespace solvarith
