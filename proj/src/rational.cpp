#include "lclab/rational.hpp"

#include <stdexcept>

namespace lclab {

Rational pow2(int k) {
  BigInt one = 1;
  if (k >= 0) return Rational(one << k, 1);
  return Rational(one, one << (-k));
}

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational rat_min(const Rational& a, const Rational& b) { return a < b ? a : b; }

Rational rat_max(const Rational& a, const Rational& b) { return a > b ? a : b; }

BigInt rat_floor(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

BigInt rat_ceil(const Rational& q) { return -rat_floor(-q); }

std::string rat_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> parse_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  try {
    auto slash = s.find('/');
    if (slash != std::string::npos) {
      BigInt n(s.substr(0, slash));
      BigInt d(s.substr(slash + 1));
      if (d == 0) return std::nullopt;
      return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
      std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
      if (fp.empty()) return std::nullopt;
      bool neg = !ip.empty() && ip[0] == '-';
      if (neg || (!ip.empty() && ip[0] == '+')) ip = ip.substr(1);
      if (ip.empty()) ip = "0";
      BigInt n(ip), f(fp);
      BigInt scale = 1;
      for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
      Rational r = Rational(n, 1) + Rational(f, scale);
      return neg ? Rational(-r) : r;
    }
    return Rational(BigInt(s), 1);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace lclab
