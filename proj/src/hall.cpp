#include "cap2/hall.hpp"

#include <ostream>
#include <sstream>

namespace cap2::hall {

// Collected product of a^r1 b^s1 c^t1 d^u1 e^v1 and a^r2 b^s2 c^t2 d^u2 e^v2.
// Moving a^r2 left across c^t1 contributes d^(r2 t1); across b^s1 it
// contributes c^(-r2 s1) d^(-s1 C(r2,2)) e^(-r2 C(s1,2)); moving b^s2 left
// across the accumulated c^(t1 - r2 s1) contributes e^(s2 (t1 - r2 s1)).
FreeElt mul(const FreeElt& x, const FreeElt& y) {
  const Int cross = sub(x.t, cap2::mul(y.r, x.s));
  FreeElt z;
  z.r = add(x.r, y.r);
  z.s = add(x.s, y.s);
  z.t = add(cross, y.t);
  z.u = add(add(x.u, y.u), sub(cap2::mul(y.r, x.t), cap2::mul(x.s, binom2(y.r))));
  z.v = add(add(x.v, y.v), sub(cap2::mul(y.s, cross), cap2::mul(y.r, binom2(x.s))));
  return z;
}

FreeElt inverse(const FreeElt& x) {
  FreeElt y;
  y.r = neg(x.r);
  y.s = neg(x.s);
  y.t = sub(neg(x.t), cap2::mul(x.r, x.s));
  y.u = add(sub(cap2::mul(x.r, x.t), x.u), cap2::mul(x.s, binom2(neg(x.r))));
  y.v = sub(sub(cap2::mul(x.s, add(x.t, cap2::mul(x.r, x.s))), x.v),
            cap2::mul(x.r, binom2(x.s)));
  return y;
}

FreeElt power(const FreeElt& x, Int n) {
  if (n < 0) {
    if (n == INT64_MIN) throw ArithmeticOverflow("power exponent");
    return power(inverse(x), -n);
  }
  FreeElt result;
  FreeElt base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

FreeElt commutator(const FreeElt& x, const FreeElt& y) {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

}  // namespace cap2::hall

namespace cap2 {

std::string to_string(const FreeElt& x) {
  std::ostringstream os;
  os << '(' << x.r << ',' << x.s << ',' << x.t << ',' << x.u << ',' << x.v << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const FreeElt& x) { return os << to_string(x); }

}  // namespace cap2
