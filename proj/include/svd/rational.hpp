#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace svd {

// Exact rational, always reduced, den > 0. Every metric quantity in the
// toolkit is a rational, so equality and ordering are exact; doubles appear
// only in fitted growth rates.
class Rat {
public:
  constexpr Rat() = default;
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  static Rat parse(const std::string& text);
  std::string str() const;

  double to_double() const { return double(num_) / double(den_); }
  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from_wide(wide(a.num_) * b.den_ + wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return from_wide(wide(a.num_) * b.den_ - wide(b.num_) * a.den_,
                     wide(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from_wide(wide(a.num_) * b.num_, wide(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::invalid_argument("rational: division by zero");
    return from_wide(wide(a.num_) * b.den_, wide(a.den_) * b.num_);
  }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return wide(a.num_) * b.den_ < wide(b.num_) * a.den_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
  using wide = __int128;

  static Rat from_wide(wide n, wide d);
  void reduce();

  long long num_ = 0;
  long long den_ = 1;
};

inline void Rat::reduce() {
  if (den_ == 0) throw std::invalid_argument("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

inline Rat Rat::from_wide(wide n, wide d) {
  if (d == 0) throw std::invalid_argument("rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  // Euclid on wide values keeps intermediates exact before narrowing.
  wide x = n < 0 ? -n : n, y = d;
  while (y != 0) {
    wide t = x % y;
    x = y;
    y = t;
  }
  wide g = x == 0 ? 1 : x;
  n /= g;
  d /= g;
  constexpr wide lim = wide(1) << 62;
  if (n >= lim || n <= -lim || d >= lim)
    throw std::overflow_error("rational: value outside supported range");
  Rat r;
  r.num_ = (long long)n;
  r.den_ = (long long)d;
  return r;
}

inline Rat Rat::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      long long n = std::stoll(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Rat(n);
    }
    std::size_t used = 0;
    long long n = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument(text);
    long long d = std::stoll(text.substr(slash + 1), &used);
    if (used != text.size() - slash - 1) throw std::invalid_argument(text);
    return Rat(n, d);
  } catch (const std::overflow_error&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rational: cannot parse '" + text + "'");
  }
}

inline std::string Rat::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace svd
