#include "solvarith/poly.hpp"

#include <sstream>

namespace solvarith {

bool RatPoly::integer_coeffs() const {
  for (const auto& c : c_)
    if (c.get_den() != 1) return false;
  return true;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] += o.c_[i];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] += c_[i];
    if (i < o.c_.size()) r[i] -= o.c_[i];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  std::vector<Rat> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(r));
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> rem = c_;
  const int dd = divisor.degree();
  if (degree() < dd) return {RatPoly(), *this};
  std::vector<Rat> quot(c_.size() - dd);
  Rat inv_l = 1 / divisor.leading();
  for (int i = degree(); i >= dd; --i) {
    Rat f = rem[i] * inv_l;
    quot[i - dd] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * divisor[j];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divexact(const RatPoly& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error("polynomial division is not exact");
  return q;
}

Rat RatPoly::eval(const Rat& x) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

RatMat RatPoly::eval(const RatMat& m) const {
  RatMat r = RatMat::zero(m.rows(), m.cols());
  for (size_t i = c_.size(); i-- > 0;) {
    r = r * m;
    for (int d = 0; d < m.rows(); ++d) r(d, d) += c_[i];
  }
  return r;
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0 || a != 1) {
      os << a.get_str();
      if (i > 0) os << "*";
    }
    if (i > 0) {
      os << "X";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.degree() <= 0) return p.monic();
  RatPoly g = poly_gcd(p, p.derivative());
  return p.divexact(g).monic();
}

std::vector<std::pair<RatPoly, int>> squarefree_decomposition(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  if (p.degree() <= 0) return out;
  RatPoly f = p.monic();
  // Yun
  RatPoly d = f.derivative();
  RatPoly a = poly_gcd(f, d);
  RatPoly b = f.divexact(a);
  RatPoly c = d.divexact(a);
  int i = 1;
  while (b.degree() > 0) {
    RatPoly w = c - b.derivative();
    RatPoly g = poly_gcd(b, w);
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    b = b.divexact(g);
    c = w.divexact(g);
    ++i;
  }
  return out;
}

CharMinPoly char_min_poly(const RatMat& m) {
  if (!m.is_square()) throw DimensionMismatch("char_min_poly of non-square");
  const int n = m.rows();
  // Faddeev-LeVerrier: exact over Q, O(n) matrix products.
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMat mk = RatMat::identity(n);
  for (int k = 1; k <= n; ++k) {
    mk = m * mk;
    Rat ck = -mk.trace() / Rat(k);
    c[n - k] = ck;
    for (int d = 0; d < n; ++d) mk(d, d) += ck;
  }
  RatPoly charpoly{std::vector<Rat>(c)};

  // Minimal polynomial: first linear dependency among I, m, m^2, ... found by
  // incremental elimination on vectorized powers.
  const int nn = n * n;
  std::vector<std::vector<Rat>> rows;          // reduced rows, pivot normalized to 1
  std::vector<int> pivot_of_row;               // pivot column per reduced row
  std::vector<std::vector<Rat>> combo_of_row;  // expression of each row in powers of m
  RatMat p = RatMat::identity(n);
  for (int k = 0;; ++k) {
    std::vector<Rat> v(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = p(i, j);
    std::vector<Rat> combo(n + 2);
    combo[k] = 1;
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat f = v[pivot_of_row[r]];
      if (f == 0) continue;
      for (int j = 0; j < nn; ++j)
        if (rows[r][j] != 0) v[j] -= f * rows[r][j];
      for (int t = 0; t < n + 2; ++t) combo[t] -= f * combo_of_row[r][t];
    }
    int piv = -1;
    for (int j = 0; j < nn; ++j)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) {
      // m^k = sum combo[t] * m^t (t < k) gives the minimal polynomial
      std::vector<Rat> mc(k + 1);
      mc[k] = 1;
      for (int t = 0; t < k; ++t) mc[t] = -combo[t];
      return {charpoly, RatPoly(std::move(mc))};
    }
    Rat inv_l = 1 / v[piv];
    for (int j = 0; j < nn; ++j) v[j] *= inv_l;
    for (auto& t : combo) t *= inv_l;
    rows.push_back(std::move(v));
    pivot_of_row.push_back(piv);
    combo_of_row.push_back(std::move(combo));
    p = p * m;
  }
}

}  // namespace solvarith
