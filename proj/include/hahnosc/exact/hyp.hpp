#pragma once

#include "hahnosc/exact/rational.hpp"
#include "hahnosc/specfun/series.hpp"

namespace hahnosc::exact {

/// Exact value of a terminating series with rational parameters.
///
/// Each term is formed from its own Pochhammer products rather than from the
/// running term ratio used by the floating engine.
inline Rational exact_hyp(const HypSeries<Rational>& s) {
  Rational sum(0);
  for (std::size_t t = 0; t <= s.termination_index(); ++t) {
    const unsigned k = static_cast<unsigned>(t);
    Rational num(1), den = pochhammer(Rational(1), k);
    for (const auto& a : s.numerator()) num *= pochhammer(a, k);
    for (const auto& b : s.denominator()) den *= pochhammer(b, k);
    Rational z(1);
    for (unsigned i = 0; i < k; ++i) z *= s.argument();
    sum += num * z / den;
  }
  return sum;
}

inline Rational exact_hyp(std::vector<Rational> num, std::vector<Rational> den, Rational z = Rational(1)) {
  return exact_hyp(HypSeries<Rational>(std::move(num), std::move(den), std::move(z)));
}

}  // namespace hahnosc::exact
