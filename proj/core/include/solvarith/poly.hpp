#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "solvarith/matrix.hpp"
#include "solvarith/rat.hpp"

namespace solvarith {

/// Polynomial over Q, coefficients in ascending degree order, no trailing zeros.
/// The empty coefficient list is the zero polynomial.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& a) { return RatPoly({a}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
  /// c0 + c1 X + ... from a brace list.
  RatPoly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const Rat& operator[](int i) const { return c_[i]; }
  const Rat& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool integer_coeffs() const;

  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;

  RatPoly monic() const;
  RatPoly derivative() const;

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& divisor) const;
  /// Exact division; throws if the remainder is nonzero.
  RatPoly divexact(const RatPoly& divisor) const;

  Rat eval(const Rat& x) const;
  RatMat eval(const RatMat& m) const;

  std::string str() const;  // human form, "X^2 - 5/2*X + 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Monic gcd.
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Squarefree part p / gcd(p, p').
RatPoly squarefree_part(const RatPoly& p);

/// Yun's algorithm: p = lc * prod f_i^i with f_i squarefree, pairwise coprime, monic.
std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p);

/// Characteristic polynomial (monic degree n, Faddeev-LeVerrier) and minimal
/// polynomial (first linear dependency among powers) of a square matrix.
struct CharMinPoly {
  RatPoly charpoly;
  RatPoly minpoly;
};
CharMinPoly char_min_poly(const RatMat& m);

struct PolyFactorization {
  std::vector<std::pair<RatPoly, int>> factors;  // monic irreducible of degree <= 2
  std::optional<RatPoly> residual;               // unresolved part (degree >= 3 content), if any
  Rat unit;                                      // input = unit * prod(factors^mult) * residual
};

struct FactorOptions {
  // Trial-division bound for the divisor search behind rational roots.
  unsigned long trial_division_bound = 1000000;
  // Numeric precisions (bits) tried for quadratic-factor candidates.
  std::vector<int> precisions = {64, 192, 512};
};

/// Squarefree decomposition is always complete; within each squarefree part all
/// linear and irreducible quadratic factors are extracted exactly; whatever is
/// left of degree >= 3 goes into `residual` and it is the caller's decision.
/// Every accepted factor has been verified by exact division.
PolyFactorization factor_rational_poly(const RatPoly& p, const FactorOptions& opt = {});

}  // namespace solvarith
