#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rainbow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

inline BigInt pow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

namespace detail {

// Thrown by the fixed-width fast path; callers rerun in BigInt.
struct Overflow {};

// Arithmetic shims so counting kernels can be written once for both
// std::uint64_t (checked) and BigInt.
inline void add_to(std::uint64_t& acc, std::uint64_t x) {
  if (__builtin_add_overflow(acc, x, &acc)) throw Overflow{};
}
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline void add_to(BigInt& acc, const BigInt& x) { acc += x; }
inline BigInt mul(const BigInt& a, const BigInt& b) { return a * b; }

inline bool is_zero(std::uint64_t x) { return x == 0; }
inline bool is_zero(const BigInt& x) { return x.is_zero(); }

// Runs `kernel(std::uint64_t{})`, retrying with BigInt on overflow. The
// kernel's result is converted to the BigInt flavour via `widen`.
template <typename Kernel, typename Widen>
auto with_overflow_fallback(Kernel&& kernel, Widen&& widen) {
  try {
    return widen(kernel(std::uint64_t{}));
  } catch (const Overflow&) {
    return kernel(BigInt{});
  }
}

}  // namespace detail
}  // namespace rainbow
