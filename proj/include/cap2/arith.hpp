#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cap2 {

using Int = std::int64_t;

class ArithmeticOverflow : public std::overflow_error {
 public:
  explicit ArithmeticOverflow(const std::string& what)
      : std::overflow_error("integer overflow in " + what) {}
};

// Checked primitives. Coordinates in the free class-3 group are unbounded in
// principle; every value the library produces fits comfortably in 64 bits, and
// anything that does not is reported instead of wrapping.
inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

/// m(m-1)/2 for every integer m.
inline Int binom2(Int m) {
  // one of m, m-1 is even
  return (m % 2 == 0) ? mul(m / 2, sub(m, 1)) : mul(m, sub(m, 1) / 2);
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

/// Representative of a in [0, m) for m > 0.
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

inline Int pow2(int k) {
  if (k < 0 || k > 62) throw std::out_of_range("pow2 exponent " + std::to_string(k));
  return Int{1} << k;
}

}  // namespace cap2
