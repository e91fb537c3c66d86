#pragma once

#include "hahnosc/exact/hyp.hpp"
#include "hahnosc/exact/bilinear.hpp"
#include "hahnosc/exact/rational.hpp"
#include "hahnosc/fourier/poisson.hpp"
#include "hahnosc/specfun/identities.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace hahnosc::exact {

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct IdentityReport {
  std::string identity;
  int passed = 0;
  int rejected = 0;  // draws that hit a pole and were redrawn
  std::vector<ParamList> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

struct FuzzOptions {
  std::uint64_t seed = 42;
  int count = 500;
  /// Multiplies the right side of bilinear_sum_transformed; anything but 1 must produce counterexamples.
  Rational transformed_rhs_scale{1};
};

/// Seeded exact-rational instances of the summation and transformation identities.
///
/// Parameters come from the grid n/d with d in {1,2,3,4} and n in [-8, 8].
/// Draws that place a pole inside a summation range or a prefactor are redrawn.
/// The first instance of each identity is its smallest (smoke) case.
class IdentityFuzzer {
 public:
  explicit IdentityFuzzer(FuzzOptions opt = {}) : opt_(std::move(opt)) {}

  static const std::vector<std::string>& identities() {
    static const std::vector<std::string> names = {"thomae", "bilinear_sum", "bilinear_sum_transformed", "hahn_parity",
                                                   "quartic_forms", "forward_shift", "sum_split"};
    return names;
  }

  IdentityReport run(const std::string& name) const {
    const auto& names = identities();
    std::size_t idx = 0;
    while (idx < names.size() && names[idx] != name) ++idx;
    if (idx == names.size()) throw DomainError("unknown identity '" + name + "'");
    std::mt19937_64 rng(opt_.seed + 0x9E3779B97F4A7C15ULL * (idx + 1));
    IdentityReport rep{name, 0, 0, {}};
    const long max_draws = 1000L * opt_.count + 1000;
    long draws = 0;
    while (rep.passed + static_cast<int>(rep.counterexamples.size()) < opt_.count) {
      if (++draws > max_draws) throw DomainError("identity fuzzer could not draw enough pole-free instances");
      const bool smoke = rep.passed + rep.counterexamples.size() + rep.rejected == 0;
      ParamList params;
      bool holds = false;
      try {
        holds = instance(idx, rng, smoke, params);
      } catch (const PoleInRange&) {
        ++rep.rejected;
        continue;
      }
      if (holds)
        ++rep.passed;
      else
        rep.counterexamples.push_back(params);
    }
    return rep;
  }

  std::vector<IdentityReport> run_all() const {
    std::vector<IdentityReport> out;
    for (const auto& n : identities()) out.push_back(run(n));
    return out;
  }

 private:
  static int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  static Rational grid(std::mt19937_64& rng) {
    const int d = uniform(rng, 1, 4);
    const int n = uniform(rng, -8, 8);
    return Rational(n) / Rational(d);
  }

  static Rational grid_alpha(std::mt19937_64& rng) {
    for (;;) {
      Rational a = grid(rng);
      if (a > Rational(-1)) return a;
    }
  }

  // a denominator -d with d < length would be reached by a sum of that nominal length
  static void require_no_pole(const std::vector<Rational>& den, int length, const char* where) {
    for (const auto& b : den) {
      auto d = scalar_traits<Rational>::nonpositive_integer(b);
      if (d && *d < length) throw PoleInRange(std::string("pole in ") + where, where);
    }
  }

  bool instance(std::size_t idx, std::mt19937_64& rng, bool smoke, ParamList& out) const {
    auto put = [&](const char* k, const auto& v) {
      if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Rational>)
        out.emplace_back(k, v.str());
      else
        out.emplace_back(k, std::to_string(v));
    };
    switch (idx) {
      case 0: {  // thomae
        const int N = smoke ? 0 : uniform(rng, 0, 6);
        Rational a = grid(rng), b = grid(rng), c = grid(rng), e = grid(rng), f = grid(rng);
        Rational g = Rational(1 - N) + a + b + c - e - f;
        put("a", a), put("b", b), put("c", c), put("N", N), put("e", e), put("f", f), put("g", g);
        require_no_pole({e, f, g}, N, "thomae lhs");
        require_no_pole({e, e + f - a - b, e + g - a - b}, N, "thomae rhs");
        return thomae_transform_check(a, b, c, N, e, f, g);
      }
      case 1:
      case 2: {  // the two bilinear sums
        const int max_pq = idx == 1 ? 4 : 5;
        int p = 0, q = 0, r = 0;
        if (!smoke) {
          p = uniform(rng, 0, max_pq);
          q = uniform(rng, 0, max_pq - p);
          r = uniform(rng, 0, p + q);
        }
        Rational a = grid(rng), b = grid(rng), c = grid(rng);
        put("p", p), put("q", q), put("r", r), put("a", a), put("b", b), put("c", c);
        if (idx == 1) return bilinear_sum_sides(p, q, r, a, b, c).equal();
        if (opt_.transformed_rhs_scale != Rational(1)) put("rhs_scale", opt_.transformed_rhs_scale);
        return bilinear_sum_transformed_sides(p, q, r, a, b, c, opt_.transformed_rhs_scale).equal();
      }
      case 3: {  // hahn parity
        const int N = smoke ? 0 : uniform(rng, 0, 12);
        const int k = uniform(rng, 0, N), x = uniform(rng, 0, N);
        Rational al = grid_alpha(rng);
        put("k", k), put("x", x), put("alpha", al), put("N", N);
        return hahn_parity_check(k, x, al, N);
      }
      case 4: {  // quartic forms
        const int N = smoke ? 0 : uniform(rng, 0, 12);
        const int d = uniform(rng, 0, N), x = uniform(rng, 0, N);
        Rational al = grid_alpha(rng);
        put("degree", d), put("x", x), put("alpha", al), put("N", N);
        return hahn_4f3_forms_check(d, x, al, N);
      }
      case 5: {  // forward shift
        const int j = smoke ? 1 : uniform(rng, 1, 10);
        const int k = smoke ? 1 : uniform(rng, 1, j), i = smoke ? 0 : uniform(rng, 0, j - 1);
        Rational al = grid_alpha(rng);
        put("k", k), put("i", i), put("alpha", al), put("j", j);
        return forward_shift_check(k, i, al, j);
      }
      default: {  // sum split
        const int J = smoke ? 0 : uniform(rng, 0, 4);
        const int K = uniform(rng, 0, J), L = uniform(rng, 0, J);
        Rational al = grid_alpha(rng);
        put("K", K), put("L", L), put("alpha", al), put("J", J);
        return sum_split_check(K, L, al, J);
      }
    }
  }

  FuzzOptions opt_;
};

}  // namespace hahnosc::exact
