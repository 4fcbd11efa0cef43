#include "solvarith/matrix.hpp"

#include <sstream>

namespace solvarith {

RatMat::RatMat(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  e_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw DimensionMismatch("ragged initializer");
    for (const auto& x : r) e_.push_back(x);
  }
}

RatMat RatMat::identity(int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator+(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("add");
  RatMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("sub");
  RatMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

RatMat RatMat::operator-() const {
  RatMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
  return r;
}

RatMat RatMat::operator*(const RatMat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("mul");
  RatMat r(rows_, o.cols_);
  Rat t;
  for (int i = 0; i < rows_; ++i) {
    for (int k = 0; k < cols_; ++k) {
      const Rat& aik = (*this)(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Rat& bkj = o(k, j);
        if (bkj == 0) continue;
        t = aik * bkj;
        r(i, j) += t;
      }
    }
  }
  return r;
}

RatMat RatMat::operator*(const Rat& s) const {
  RatMat r(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] * s;
  return r;
}

RatMat RatMat::transpose() const {
  RatMat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Rat RatMat::trace() const {
  if (!is_square()) throw DimensionMismatch("trace of non-square");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Rat RatMat::det() const {
  if (!is_square()) throw DimensionMismatch("det of non-square");
  RatMat a = *this;
  Rat d = 1;
  const int n = rows_;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = col; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    Rat inv_p = 1 / a(col, col);
    for (int i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rat f = a(i, col) * inv_p;
      for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

std::vector<int> rref(RatMat& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    Rat inv_p = 1 / a(row, col);
    for (int j = 0; j < a.cols(); ++j) a(row, j) *= inv_p;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat f = a(i, col);
      for (int j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int RatMat::rank() const {
  RatMat a = *this;
  return static_cast<int>(rref(a).size());
}

RatMat RatMat::inverse() const {
  if (!is_square()) throw DimensionMismatch("inverse of non-square");
  const int n = rows_;
  RatMat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) throw SingularMatrix();
  return aug.submatrix(0, n, n, n);
}

RatMat RatMat::pow(long k) const {
  if (!is_square()) throw DimensionMismatch("pow of non-square");
  RatMat base = k < 0 ? inverse() : *this;
  unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
  RatMat r = identity(rows_);
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

bool RatMat::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool RatMat::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RatMat::is_integer() const {
  for (const auto& x : e_)
    if (x.get_den() != 1) return false;
  return true;
}

bool RatMat::is_nilpotent() const {
  if (!is_square()) return false;
  // (typical inputs are visibly nilpotent long before the n-th power)
  RatMat p = *this;
  for (int k = 1; k <= rows_; ++k) {
    if (p.is_zero()) return true;
    p = p * (*this);
  }
  return p.is_zero();
}

bool RatMat::is_unipotent() const {
  if (!is_square()) return false;
  return (*this - identity(rows_)).is_nilpotent();
}

Int RatMat::denominator_lcm() const {
  Int l = 1;
  for (const auto& x : e_) l = lcm(l, x.get_den());
  return l;
}

Int RatMat::integer_content() const {
  Int g = 0;
  for (const auto& x : e_) {
    if (x.get_den() != 1) throw DimensionMismatch("content of non-integer matrix");
    g = gcd(g, x.get_num());
  }
  return g;
}

RatMat RatMat::col(int j) const {
  RatMat v(rows_, 1);
  for (int i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
  return v;
}

void RatMat::set_col(int j, const RatMat& v) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
}

RatMat RatMat::submatrix(int i0, int j0, int nrows, int ncols) const {
  RatMat r(nrows, ncols);
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
  return r;
}

void RatMat::paste(int i0, int j0, const RatMat& block) {
  for (int i = 0; i < block.rows(); ++i)
    for (int j = 0; j < block.cols(); ++j) (*this)(i0 + i, j0 + j) = block(i, j);
}

RatMat RatMat::hcat(const RatMat& right) const {
  if (rows_ != right.rows_) throw DimensionMismatch("hcat");
  RatMat r(rows_, cols_ + right.cols_);
  r.paste(0, 0, *this);
  r.paste(0, cols_, right);
  return r;
}

RatMat solve(const RatMat& a, const RatMat& rhs) { return a.inverse() * rhs; }

RatMat kernel(const RatMat& a) {
  RatMat r = a;
  auto pivots = rref(r);
  const int n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < n; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  RatMat k(n, static_cast<int>(free_cols.size()));
  for (size_t fc = 0; fc < free_cols.size(); ++fc) {
    int j = free_cols[fc];
    k(j, static_cast<int>(fc)) = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr) k(pivots[pr], static_cast<int>(fc)) = -r(static_cast<int>(pr), j);
  }
  return k;
}

std::string to_string(const RatMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "; " : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace solvarith
