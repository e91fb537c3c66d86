#pragma once

#include "hahnosc/exact/hyp.hpp"
#include "hahnosc/exact/rational.hpp"
#include "hahnosc/specfun/hahn.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hahnosc::exact {

/// Left and right hand sides of a summation identity.
struct Sides {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

namespace detail {

inline Rational quotient(const Rational& num, const Rational& den, const char* what) {
  if (den == Rational(0)) throw PoleInRange(std::string("vanishing denominator in ") + what, what);
  return num / den;
}

inline Rational binomial(int n, int k) { return pochhammer(Rational(n - k + 1), k) / pochhammer(Rational(1), k); }

inline Rational sign(int m) { return m % 2 ? Rational(-1) : Rational(1); }

// (b+c+2n-1)/(b+c+n-1) (b+c)_n, read as (b+c+2n-1)(b+c)_{n-1} for n >= 1 and 1 for n = 0
inline Rational leading(int n, const Rational& bc) {
  if (n == 0) return Rational(1);
  return (bc + Rational(2 * n - 1)) * pochhammer(bc, n - 1);
}

inline void check_indices(int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0) throw DomainError("p, q, r must be nonnegative");
  if (r > p + q) throw DomainError("r must not exceed p+q");
}

}  // namespace detail

/// Both sides of the bilinear 4F3 sum in its Thomae-transformed form:
///
///   sum_{n=0}^{p+q} C(P,n) (b+c+2n-1)/(b+c+n-1) (b+c)_n (b)_n / ((c)_n (b+c+P)_n)
///     4F3(-n, n+b+c-1, -q, q+a+b-1; b, a+b+c+P-1, -P)
///     4F3(-n, n+b+c-1, -r, r+1-a-c-2P; b, 1-a-P, -P)
///   = (-1)^r (b+c)_P (1-c-P)_r / ((c)_p (a+b+c+P-1)_q (1-a-P)_r)
///     4F3(-q, q+a+b-1, -r, r+1-a-c-2P; b, 1-c-P, -P)
///
/// with P = p+q and 0 <= r <= P. rhs_scale multiplies the right side (mutation testing).
inline Sides bilinear_sum_transformed_sides(int p, int q, int r, const Rational& a, const Rational& b, const Rational& c,
                       const Rational& rhs_scale = Rational(1)) {
  detail::check_indices(p, q, r);
  const int P = p + q;
  const Rational one(1), bc = b + c, g = a + b + c + Rational(P - 1);
  Rational lhs(0);
  for (int n = 0; n <= P; ++n) {
    Rational co = detail::binomial(P, n) * detail::leading(n, bc) * pochhammer(b, n);
    co = detail::quotient(co, pochhammer(c, n) * pochhammer(bc + Rational(P), n), "transformed sum coefficient");
    const Rational f1 = exact_hyp({Rational(-n), bc + Rational(n - 1), Rational(-q), a + b + Rational(q - 1)},
                                  {b, g, Rational(-P)});
    const Rational f2 = exact_hyp({Rational(-n), bc + Rational(n - 1), Rational(-r), Rational(r + 1 - 2 * P) - a - c},
                                  {b, one - a - Rational(P), Rational(-P)});
    lhs += co * f1 * f2;
  }
  Rational pre = detail::sign(r) * pochhammer(bc, P) * pochhammer(one - c - Rational(P), r);
  pre = detail::quotient(pre, pochhammer(c, p) * pochhammer(g, q) * pochhammer(one - a - Rational(P), r),
                         "transformed sum prefactor");
  const Rational f = exact_hyp({Rational(-q), a + b + Rational(q - 1), Rational(-r), Rational(r + 1 - 2 * P) - a - c},
                               {b, one - c - Rational(P), Rational(-P)});
  return {lhs, rhs_scale * pre * f};
}

/// Both sides of the bilinear 4F3 sum:
///
///   sum_{n=0}^{p+q} C(P,n) (b+c+2n-1)/(b+c+n-1) (b+c)_n (a+b+c+P-1)_n / ((b+c+P)_n (1-a-P)_n)
///     4F3(-n, n+b+c-1, -q, q+a+b-1; b, a+b+c+P-1, -P)
///     4F3(-n, n+b+c-1, -r, r+a+c-1; c, a+b+c+P-1, -P)
///   = (-1)^(p-r) (b+c)_P (a)_r (a)_q / ((a)_P (b)_q (c)_r)
///     4F3(-q, q+a+b-1, -r, r+a+c-1; a, a+b+c+P-1, -P)
inline Sides bilinear_sum_sides(int p, int q, int r, const Rational& a, const Rational& b, const Rational& c) {
  detail::check_indices(p, q, r);
  const int P = p + q;
  const Rational one(1), bc = b + c, g = a + b + c + Rational(P - 1);
  Rational lhs(0);
  for (int n = 0; n <= P; ++n) {
    Rational co = detail::binomial(P, n) * detail::leading(n, bc) * pochhammer(g, n);
    co = detail::quotient(co, pochhammer(bc + Rational(P), n) * pochhammer(one - a - Rational(P), n),
                          "bilinear sum coefficient");
    const Rational f1 = exact_hyp({Rational(-n), bc + Rational(n - 1), Rational(-q), a + b + Rational(q - 1)},
                                  {b, g, Rational(-P)});
    const Rational f2 = exact_hyp({Rational(-n), bc + Rational(n - 1), Rational(-r), a + c + Rational(r - 1)},
                                  {c, g, Rational(-P)});
    lhs += co * f1 * f2;
  }
  Rational pre = detail::sign(p - r < 0 ? r - p : p - r) * pochhammer(bc, P) * pochhammer(a, r) * pochhammer(a, q);
  pre = detail::quotient(pre, pochhammer(a, P) * pochhammer(b, q) * pochhammer(c, r), "bilinear sum prefactor");
  const Rational f = exact_hyp({Rational(-q), a + b + Rational(q - 1), Rational(-r), a + c + Rational(r - 1)},
                               {a, g, Rational(-P)});
  return {lhs, pre * f};
}

inline bool bilinear_sum_transformed_check(int p, int q, int r, const Rational& a, const Rational& b, const Rational& c) {
  return bilinear_sum_transformed_sides(p, q, r, a, b, c).equal();
}

inline bool bilinear_sum_check(int p, int q, int r, const Rational& a, const Rational& b, const Rational& c) {
  return bilinear_sum_sides(p, q, r, a, b, c).equal();
}

/// Coefficient of the n-th term of the transformed sum after p=J-K, q=K, r=L, a=1/2,
/// b=alpha+t, c=-2J-alpha, in the limit t -> 1, next to the claimed value
/// (2J)!/(alpha+1)_{2J} (-1)^n w(n; alpha, alpha, 2J), halved for n = J.
struct LimitCoefficient {
  int n;
  Rational limit;
  Rational claimed;
};

inline std::vector<LimitCoefficient> limit_substitution_coefficients(int J, int K, int L, const Rational& alpha) {
  if (J < 0 || K < 0 || L < 0 || K > J || L > J) throw DomainError("limit substitution needs 0 <= K, L <= J");
  const Rational one(1);
  const BasicHahnParams<Rational> w2(alpha, alpha, 2 * J);
  const Rational factor = pochhammer(one, 2 * J) / pochhammer(alpha + one, 2 * J);
  const Rational b = alpha + one, c = Rational(-2 * J) - alpha, bc = Rational(1 - 2 * J);
  std::vector<LimitCoefficient> out;
  for (int n = 0; n <= J; ++n) {
    Rational lim;
    if (n < J || J == 0) {
      // t = 1 directly; b+c+P = 1-J keeps (b+c+P)_n nonzero for n < J
      Rational co = detail::binomial(J, n) * detail::leading(n, bc) * pochhammer(b, n);
      lim = detail::quotient(co, pochhammer(c, n) * pochhammer(bc + Rational(J), n), "limit coefficient");
    } else {
      // the vanishing factors (t-1) of b+c+2J-1 and of (b+c+J)_J cancel
      Rational num = pochhammer(bc, J) * pochhammer(b, J);
      lim = detail::quotient(num, Rational(-J) * pochhammer(c, J) * pochhammer(Rational(1 - J), J - 1),
                             "limit coefficient at n = J");
    }
    Rational claimed = factor * detail::sign(n) * hahn_weight(n, w2);
    if (n == J) claimed /= Rational(2);
    out.push_back({n, lim, claimed});
  }
  return out;
}

inline bool limit_substitution_check(int J, int K, int L, const Rational& alpha) {
  for (const auto& c : limit_substitution_coefficients(J, K, L, alpha))
    if (c.limit != c.claimed) return false;
  return true;
}

}  // namespace hahnosc::exact
