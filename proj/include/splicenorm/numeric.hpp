#pragma once

// Exact integer/rational types and overflow-checked 64-bit helpers shared by
// every module. Exponents, linking numbers and norms live in int64 and are
// checked on every operation; polynomial coefficients are arbitrary precision.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace splicenorm {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base of every error raised by the library. `name()` is module-qualified,
/// e.g. "laurent.NotDivisible", and is what the CLI prints on failure.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& what)
      : Error("numeric.Overflow", what) {}
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 addition overflow");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 subtraction overflow");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 multiplication overflow");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("int64 negation overflow");
  return -a;
}

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

inline std::int64_t pow(std::int64_t base, int exp) {
  if (exp < 0) throw std::invalid_argument("checked::pow: negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r = mul(r, base);
  return r;
}

/// a*x + b*y, the pairing every module keeps recomputing.
inline std::int64_t dot(std::int64_t a, std::int64_t b, std::int64_t x, std::int64_t y) {
  return add(mul(a, x), mul(b, y));
}

}  // namespace checked

inline std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(checked::abs(a), checked::abs(b));
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

inline bool is_integral(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

/// Numerator of an integral rational, narrowed to int64.
inline std::int64_t to_int64(const Rational& q) {
  if (!is_integral(q)) throw std::domain_error("to_int64: rational is not an integer");
  const BigInt& n = boost::multiprecision::numerator(q);
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("rational does not fit in int64");
  return static_cast<std::int64_t>(n);
}

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace splicenorm
