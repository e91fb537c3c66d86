#pragma once

#include "hahnosc/errors.hpp"
#include "hahnosc/specfun/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <ostream>
#include <string>

namespace hahnosc::exact {

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
class Rational {
 public:
  using integer = boost::multiprecision::cpp_int;

  Rational() = default;
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(long long v) : v_(v) {}
  Rational(const integer& num, const integer& den) {
    if (den == 0) throw DomainError("Rational: zero denominator");
    v_ = value_type(num, den);
  }

  /// Parses "p/q" or an integer literal. Decimals are rejected.
  static Rational parse(const std::string& s) {
    auto bad = [&] { return DomainError("not a rational literal (expected p/q): '" + s + "'"); };
    auto parse_int = [&](const std::string& t) {
      if (t.empty()) throw bad();
      std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
      if (i == t.size()) throw bad();
      for (std::size_t k = i; k < t.size(); ++k)
        if (t[k] < '0' || t[k] > '9') throw bad();
      return integer(t[0] == '+' ? t.substr(1) : t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_int(s), integer(1));
    return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
  }

  integer numerator() const { return boost::multiprecision::numerator(v_); }
  integer denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }
  double to_double() const { return static_cast<double>(v_); }

  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw DomainError("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend Rational abs(const Rational& a) { return a < Rational(0) ? -a : a; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using value_type = boost::multiprecision::cpp_rational;
  value_type v_{0};
};

}  // namespace hahnosc::exact

namespace hahnosc {

template <>
struct scalar_traits<exact::Rational> {
  static constexpr bool exact = true;
  static std::optional<long> nonpositive_integer(const exact::Rational& v) {
    if (!v.is_integer() || v > exact::Rational(0)) return std::nullopt;
    return static_cast<long>(-v.numerator());
  }
  static double to_double(const exact::Rational& v) { return v.to_double(); }
};

}  // namespace hahnosc
