#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fgc {

// Exact rational arithmetic. All cocycle values in this library are exact;
// floating point appears only in the quadrature module.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; i++) r *= i;
  return r;
}

// Renders as "p/q" in lowest terms with q > 0, including "p/1".
inline std::string to_fraction(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p". Round-trips to_fraction.
inline Rational parse_fraction(std::string_view s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt p(std::string(s.substr(0, slash)));
    BigInt q(std::string(s.substr(slash + 1)));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad fraction '" + std::string(s) + "': " + e.what());
  }
}

}  // namespace fgc
