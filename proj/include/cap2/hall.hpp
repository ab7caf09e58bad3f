#pragma once

// Exact arithmetic in the free nilpotent group of class three on a, b.
//
// Every element has a unique normal form a^r b^s c^t d^u e^v with
// c = [a,b], d = [a,b,a], e = [a,b,b] and [x,y] = x^-1 y^-1 x y. The
// weight-three generators d and e are central; anything of weight four is
// trivial.

#include <iosfwd>
#include <string>

#include "cap2/arith.hpp"

namespace cap2 {

struct FreeElt {
  Int r = 0;
  Int s = 0;
  Int t = 0;
  Int u = 0;
  Int v = 0;

  friend bool operator==(const FreeElt&, const FreeElt&) = default;
  friend auto operator<=>(const FreeElt&, const FreeElt&) = default;

  [[nodiscard]] bool is_identity() const { return *this == FreeElt{}; }
  /// True when the element lies in the commutator subgroup.
  [[nodiscard]] bool in_derived() const { return r == 0 && s == 0; }
};

namespace hall {

inline constexpr FreeElt identity{};
inline constexpr FreeElt a{1, 0, 0, 0, 0};
inline constexpr FreeElt b{0, 1, 0, 0, 0};
inline constexpr FreeElt comm_ab{0, 0, 1, 0, 0};
inline constexpr FreeElt comm_aba{0, 0, 0, 1, 0};
inline constexpr FreeElt comm_abb{0, 0, 0, 0, 1};

FreeElt mul(const FreeElt& x, const FreeElt& y);
FreeElt inverse(const FreeElt& x);
FreeElt power(const FreeElt& x, Int n);
/// x^-1 y^-1 x y
FreeElt commutator(const FreeElt& x, const FreeElt& y);

}  // namespace hall

inline FreeElt operator*(const FreeElt& x, const FreeElt& y) { return hall::mul(x, y); }

std::string to_string(const FreeElt& x);
std::ostream& operator<<(std::ostream& os, const FreeElt& x);

}  // namespace cap2
