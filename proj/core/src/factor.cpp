#include <algorithm>

#include "solvarith/poly.hpp"

// factor_rational_poly: squarefree decomposition is exact; linear factors come from
// a divisor search on the integerized polynomial; quadratic factors come from
// pairing numeric root approximations and are only ever accepted after exact trial
// division, so no numeric error can leak into a result.

namespace solvarith {
namespace {

struct Cplx {
  mpf_class re, im;
  Cplx(int prec) : re(0, prec), im(0, prec) {}
  Cplx(const mpf_class& r, const mpf_class& i) : re(r), im(i) {}
};

Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
Cplx operator*(const Cplx& a, const Cplx& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Cplx operator/(const Cplx& a, const Cplx& b) {
  mpf_class d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class norm2(const Cplx& a) { return a.re * a.re + a.im * a.im; }

std::vector<Cplx> durand_kerner(const RatPoly& monic, int prec) {
  const int d = monic.degree();
  std::vector<Cplx> coeff;  // ascending, excluding leading 1
  coeff.reserve(d);
  for (int i = 0; i < d; ++i) coeff.emplace_back(mpf_class(monic[i], prec), mpf_class(0, prec));

  auto eval = [&](const Cplx& z) {
    Cplx r(mpf_class(1, prec), mpf_class(0, prec));
    for (int i = d - 1; i >= 0; --i) r = r * z + coeff[i];
    return r;
  };

  // Cauchy-style radius keeps the start circle around all roots.
  mpf_class radius(1, prec);
  for (int i = 0; i < d; ++i) {
    mpf_class a = abs(mpf_class(monic[i], prec)) + 1;
    if (a > radius) radius = a;
  }
  std::vector<Cplx> z;
  z.reserve(d);
  // (0.4 + 0.9i)^k starting points, scaled; the usual non-symmetric seed
  Cplx seed(mpf_class(0.4, prec), mpf_class(0.9, prec));
  Cplx cur(mpf_class(0.5, prec) * radius, mpf_class(0.1, prec));
  for (int i = 0; i < d; ++i) {
    z.push_back(cur);
    cur = cur * seed + Cplx(mpf_class(0.13, prec), mpf_class(0.21, prec));
  }

  mpf_class eps(1, prec);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), prec - 8);
  eps = eps * eps;  // compared against squared updates

  for (int it = 0; it < 60 * d + 400; ++it) {
    mpf_class worst(0, prec);
    for (int i = 0; i < d; ++i) {
      Cplx denom(mpf_class(1, prec), mpf_class(0, prec));
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        denom = denom * (z[i] - z[j]);
      }
      if (norm2(denom) == 0) {
        // coincident iterates; nudge
        z[i].re += mpf_class(0.001, prec) * (i + 1);
        continue;
      }
      Cplx delta = eval(z[i]) / denom;
      z[i] = z[i] - delta;
      mpf_class d2 = norm2(delta);
      if (d2 > worst) worst = d2;
    }
    if (worst < eps) break;
  }
  return z;
}

/// Nearest rational with bounded denominator via continued fractions; accepted
/// only when it approximates x to tol.
bool reconstruct_rational(const mpf_class& x, const Int& den_bound, const mpf_class& tol, Rat& out) {
  mpf_class v = x;
  Int p0 = 1, q0 = 0;  // convergents
  Int p1, q1;
  {
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
    p1 = Int(mpz_class(fl));
    q1 = 1;
    v -= fl;
  }
  for (int step = 0; step < 200; ++step) {
    Rat cand(p1, q1);
    cand.canonicalize();
    mpf_class err = abs(mpf_class(cand, x.get_prec()) - x);
    if (err < tol) {
      out = cand;
      return true;
    }
    if (v == 0) return false;
    v = 1 / v;
    mpf_class fl;
    mpf_floor(fl.get_mpf_t(), v.get_mpf_t());
    Int a(mpz_class(fl));
    v -= fl;
    Int p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > den_bound) return false;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  return false;
}

/// All positive divisors of |n|, or empty if the factorization cap was hit or
/// there would be too many.
std::vector<Int> divisors_of(Int n, unsigned long trial_bound) {
  std::vector<std::pair<Int, int>> fac;
  if (n < 0) n = -n;
  if (n == 0) return {};
  Int rest = n;
  for (Int p = 2; p * p <= rest && mpz_cmp_ui(p.get_mpz_t(), trial_bound) <= 0; ++p) {
    if (rest % p == 0) {
      Int cof;
      int e = static_cast<int>(remove_factor(rest, p, cof));
      fac.emplace_back(p, e);
      rest = cof;
    }
  }
  if (rest > 1) {
    if (!is_probable_prime(rest)) return {};  // cap hit; caller falls back to numerics
    fac.emplace_back(rest, 1);
  }
  std::vector<Int> divs = {Int(1)};
  for (const auto& [p, e] : fac) {
    size_t base = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
      if (divs.size() > 20000) return {};
    }
  }
  return divs;
}

/// Exact rational roots of a squarefree polynomial via the divisor search.
std::vector<Rat> rational_roots_exact(const RatPoly& f, unsigned long trial_bound) {
  // integerize: primitive integer polynomial with the same roots
  Int den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
  std::vector<Int> ic(f.coeffs().size());
  Int content = 0;
  for (size_t i = 0; i < ic.size(); ++i) {
    Rat t = f[static_cast<int>(i)] * Rat(den);
    ic[i] = t.get_num();
    content = gcd(content, ic[i]);
  }
  if (content > 1)
    for (auto& c : ic) c /= content;

  std::vector<Rat> roots;
  // strip X^k
  size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));
  if (low + 1 >= ic.size()) return roots;

  Int a0 = ic[low];
  Int ad = ic.back();
  auto num_divs = divisors_of(a0, trial_bound);
  auto den_divs = divisors_of(ad, trial_bound);
  if (num_divs.empty() || den_divs.empty()) return roots;  // incomplete; numerics may still catch them
  for (const Int& r : num_divs) {
    for (const Int& s : den_divs) {
      for (int sign = 1; sign >= -1; sign -= 2) {
        Rat cand(sign * r, s);
        cand.canonicalize();
        if (f.eval(cand) == 0) {
          if (std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
        }
      }
    }
  }
  return roots;
}

/// Split X^2 + bX + c exactly: two rational roots when the discriminant is a
/// rational square, otherwise irreducible.
bool split_quadratic(const RatPoly& q, Rat& r1, Rat& r2) {
  Rat b = q[1], c = q[0];
  Rat disc = b * b - 4 * c;
  if (disc < 0) return false;
  Int sn, sd;
  if (!perfect_square_root(disc.get_num(), sn)) return false;
  if (!perfect_square_root(disc.get_den(), sd)) return false;
  Rat s(sn, sd);
  r1 = (-b + s) / 2;
  r2 = (-b - s) / 2;
  return true;
}

RatPoly linear_factor(const Rat& root) { return RatPoly{-root, Rat(1)}; }

/// Factor one monic squarefree polynomial into linear/quadratic pieces plus an
/// unresolved remainder of degree >= 3 (or 0).
void factor_squarefree(const RatPoly& part, const FactorOptions& opt, std::vector<RatPoly>& out,
                       RatPoly& unresolved) {
  RatPoly f = part.monic();
  // exact rational roots first
  for (const Rat& r : rational_roots_exact(f, opt.trial_division_bound)) {
    out.push_back(linear_factor(r));
    f = f.divexact(out.back());
  }
  if (f.degree() >= 2) {
    // numeric candidates, verified by exact division; retried at higher precision
    for (int prec : opt.precisions) {
      if (f.degree() <= 0) break;
      if (f.degree() <= 2) break;
      auto roots = durand_kerner(f, prec);
      mpf_class tol(1, prec);
      mpf_div_2exp(tol.get_mpf_t(), tol.get_mpf_t(), std::max(24, prec / 3));
      Int den_bound = Int(1) << std::max(16, prec / 4);

      bool progress = true;
      while (progress && f.degree() > 2) {
        progress = false;
        // linear candidates from nearly-real roots
        for (const auto& z : roots) {
          Rat r;
          if (abs(z.im) < tol && reconstruct_rational(z.re, den_bound, tol, r)) {
            RatPoly cand = linear_factor(r);
            auto [quot, rem] = f.divmod(cand);
            if (rem.is_zero()) {
              out.push_back(cand);
              f = quot;
              progress = true;
            }
          }
          if (f.degree() <= 2) break;
        }
        // quadratic candidates from root pairs
        for (size_t i = 0; i < roots.size() && f.degree() > 2; ++i) {
          for (size_t j = i + 1; j < roots.size() && f.degree() > 2; ++j) {
            Cplx s = roots[i] + roots[j];
            Cplx pr = roots[i] * roots[j];
            if (abs(s.im) > tol || abs(pr.im) > tol) continue;
            Rat b, c;
            if (!reconstruct_rational(s.re, den_bound, tol, b)) continue;
            if (!reconstruct_rational(pr.re, den_bound, tol, c)) continue;
            RatPoly cand{c, -b, Rat(1)};
            auto [quot, rem] = f.divmod(cand);
            if (!rem.is_zero()) continue;
            Rat r1, r2;
            if (split_quadratic(cand, r1, r2)) {
              out.push_back(linear_factor(r1));
              out.push_back(linear_factor(r2));
            } else {
              out.push_back(cand);
            }
            f = quot;
            progress = true;
          }
        }
      }
      if (f.degree() <= 2) break;
    }
  }
  if (f.degree() == 1) {
    out.push_back(f);
    f = RatPoly{Rat(1)};
  } else if (f.degree() == 2) {
    Rat r1, r2;
    if (split_quadratic(f, r1, r2)) {
      out.push_back(linear_factor(r1));
      out.push_back(linear_factor(r2));
    } else {
      out.push_back(f);
    }
    f = RatPoly{Rat(1)};
  }
  unresolved = f.degree() >= 3 ? f : RatPoly{Rat(1)};
}

}  // namespace

PolyFactorization factor_rational_poly(const RatPoly& p, const FactorOptions& opt) {
  if (p.is_zero()) throw Error("factor of zero polynomial");
  PolyFactorization result;
  result.unit = p.leading();
  if (p.degree() == 0) return result;

  RatPoly residual_acc{Rat(1)};
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    std::vector<RatPoly> pieces;
    RatPoly unresolved;
    factor_squarefree(part, opt, pieces, unresolved);
    for (auto& f : pieces) result.factors.emplace_back(std::move(f), mult);
    for (int k = 0; k < mult; ++k) residual_acc = residual_acc * unresolved;
  }
  if (residual_acc.degree() > 0) result.residual = residual_acc;
  return result;
}

}  // namespace solvarith
