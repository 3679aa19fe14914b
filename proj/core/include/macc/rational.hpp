#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator, normalized with
// positive denominator. Intermediates go through 128 bits; anything that
// cannot be narrowed back throws instead of wrapping.

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace macc {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {} // NOLINT: implicit by design
  Rat(long long n, long long d) : num(n), den(d) { normalize(); }

  static Rat from_uint(std::uint64_t v) {
    if (v > static_cast<std::uint64_t>(INT64_MAX)) throw std::overflow_error("Rat: value too large");
    return Rat(static_cast<long long>(v));
  }

  void normalize() {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  static long long narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<long long>(v);
  }

  static Rat make(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    Rat r;
    r.num = narrow(n);
    r.den = narrow(d);
    return r;
  }

  friend Rat operator+(const Rat& x, const Rat& y) {
    return make(static_cast<__int128>(x.num) * y.den + static_cast<__int128>(y.num) * x.den,
                static_cast<__int128>(x.den) * y.den);
  }
  friend Rat operator-(const Rat& x, const Rat& y) {
    return make(static_cast<__int128>(x.num) * y.den - static_cast<__int128>(y.num) * x.den,
                static_cast<__int128>(x.den) * y.den);
  }
  friend Rat operator*(const Rat& x, const Rat& y) {
    return make(static_cast<__int128>(x.num) * y.num, static_cast<__int128>(x.den) * y.den);
  }
  friend Rat operator/(const Rat& x, const Rat& y) {
    if (y.num == 0) throw std::domain_error("Rat: division by zero");
    return make(static_cast<__int128>(x.num) * y.den, static_cast<__int128>(x.den) * y.num);
  }

  friend bool operator==(const Rat& x, const Rat& y) { return x.num == y.num && x.den == y.den; }
  friend std::strong_ordering operator<=>(const Rat& x, const Rat& y) {
    const __int128 lhs = static_cast<__int128>(x.num) * y.den;
    const __int128 rhs = static_cast<__int128>(y.num) * x.den;
    return lhs < rhs ? std::strong_ordering::less
         : lhs > rhs ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string to_fraction_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

} // namespace macc
