#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chevalley {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVec = std::vector<std::int64_t>;
using BigVec = std::vector<BigInt>;
using RatVec = std::vector<Rational>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an int64 kernel would overflow.
class OverflowError : public Error {
 public:
  OverflowError() : Error("int64 overflow in exact kernel") {}
};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError();
  return r;
}

inline std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError();
  return static_cast<std::int64_t>(v);
}

inline RatVec to_rational(const IntVec& v) {
  return RatVec(v.begin(), v.end());
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline bool is_integral(const RatVec& v) {
  for (const auto& q : v)
    if (!is_integral(q)) return false;
  return true;
}

/// Floor division for BigInt with a positive divisor.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::string to_string(const Rational& q);
std::string to_string(const RatVec& v);
std::string to_string(const IntVec& v);

}  // namespace chevalley
