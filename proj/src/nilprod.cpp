#include "cap2/nilprod.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "cap2/oracle.hpp"

namespace cap2 {

namespace {

Vec3 block(const FreeElt& g) { return {g.t, g.u, g.v}; }

std::vector<Vec3> struik_generators(const CommLattice& lattice) {
  std::vector<Vec3> rows;
  for (const auto& row : lattice.basis())
    rows.push_back({sub(row[0], mul(2, add(row[1], row[2]))), row[1], row[2]});
  return rows;
}

CommLattice lattice_of(const std::vector<Vec3>& gens) { return CommLattice::from_generators(gens); }

}  // namespace

std::string to_string(const GroupSpec& spec) {
  std::ostringstream os;
  os << "G(" << spec.alpha << ',' << spec.beta << ')';
  if (!spec.extra_central.empty()) {
    os << "/<";
    for (std::size_t i = 0; i < spec.extra_central.size(); ++i)
      os << (i ? "," : "") << to_string(spec.extra_central[i]);
    os << '>';
  }
  return os.str();
}

std::string to_string(const NilElt& x) {
  std::ostringstream os;
  os << '(' << x.r << ',' << x.s << ',' << x.t << ',' << x.u << ',' << x.v << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const NilElt& x) { return os << to_string(x); }

NilGroup::NilGroup(GroupSpec spec, CommLattice lattice)
    : spec_(std::move(spec)),
      lattice_(lattice),
      struik_lattice_(lattice_of(struik_generators(lattice))),
      r_mod_(pow2(spec_.alpha)),
      s_mod_(pow2(spec_.beta)),
      order_(cap2::mul(cap2::mul(r_mod_, s_mod_), lattice.index())) {}

NilGroup build(const GroupSpec& spec) {
  if (spec.beta < 1) throw ParameterError("β≥1", "β=" + std::to_string(spec.beta));
  if (spec.alpha < spec.beta)
    throw ParameterError("α≥β", "α=" + std::to_string(spec.alpha) + ", β=" + std::to_string(spec.beta));
  if (spec.alpha + 4 * spec.beta > 62)
    throw ParameterError("α+4β≤62", "product too large for 64-bit coordinates");

  const Int A = pow2(spec.alpha);
  const Int B = pow2(spec.beta);
  // Consequences of a^A = b^B = 1 inside the commutator block. The
  // commutators of [a^A,b] with a and b contribute d^A, e^A, which are
  // multiples of the d^B, e^B rows since A >= B.
  std::vector<Vec3> gens{block(hall::commutator(hall::power(hall::a, A), hall::b)),
                         block(hall::commutator(hall::a, hall::power(hall::b, B))),
                         {0, B, 0},
                         {0, 0, B}};
  CommLattice lattice = lattice_of(gens);
  const int expected_log2 = spec.alpha + 4 * spec.beta - (spec.alpha == spec.beta ? 1 : 0);
  if (mul(mul(A, B), lattice.index()) != pow2(expected_log2))
    throw std::logic_error("relation lattice of G(" + std::to_string(spec.alpha) + "," + std::to_string(spec.beta) +
                           ") does not reproduce the normal-form count 2^" + std::to_string(expected_log2));

  for (std::size_t i = 0; i < spec.extra_central.size(); ++i) {
    const FreeElt& x = spec.extra_central[i];
    if (!x.in_derived())
      throw NonCentralExtra("extra #" + std::to_string(i) + " " + to_string(x) + " is not in the commutator subgroup");
    // [c^t d^u e^v, a] = d^t and [c^t d^u e^v, b] = e^t
    const FreeElt with_a = hall::commutator(x, hall::a);
    const FreeElt with_b = hall::commutator(x, hall::b);
    if (!lattice.contains(block(with_a)))
      throw NonCentralExtra("extra #" + std::to_string(i) + " " + to_string(x) + " is not central: [x,a] = " +
                            to_string(with_a) + " is nontrivial");
    if (!lattice.contains(block(with_b)))
      throw NonCentralExtra("extra #" + std::to_string(i) + " " + to_string(x) + " is not central: [x,b] = " +
                            to_string(with_b) + " is nontrivial");
    gens.push_back(block(x));
    lattice = lattice_of(gens);
  }
  return NilGroup(spec, lattice);
}

NilElt NilGroup::reduce(const FreeElt& g) const {
  const Vec3 tuv = lattice_.reduce(block(g));
  return {floor_mod(g.r, r_mod_), floor_mod(g.s, s_mod_), tuv[0], tuv[1], tuv[2]};
}

NilElt NilGroup::power(const NilElt& x, Int n) const {
  if (n < 0) return power(inverse(x), -n);
  NilElt result;
  NilElt base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

bool NilGroup::is_central(const NilElt& x) const {
  return commutator(x, a()) == identity() && commutator(x, b()) == identity();
}

Id NilGroup::index(const NilElt& x) const {
  if (order_ > Int{1} << 32) throw std::length_error("group too large for element ids");
  const auto [p0, p1, p2] = box();
  return static_cast<Id>((((x.r * s_mod_ + x.s) * p0 + x.t) * p1 + x.u) * p2 + x.v);
}

NilElt NilGroup::element(Id id) const {
  const auto [p0, p1, p2] = box();
  Int n = id;
  NilElt x;
  x.v = n % p2;
  n /= p2;
  x.u = n % p1;
  n /= p1;
  x.t = n % p0;
  n /= p0;
  x.s = n % s_mod_;
  x.r = n / s_mod_;
  return x;
}

StruikCoords NilGroup::to_struik(const NilElt& x) const {
  const Vec3 w = struik_lattice_.reduce({cap2::sub(x.t, cap2::mul(2, cap2::add(x.u, x.v))), x.u, x.v});
  return {x.r, x.s, w[0], w[1], w[2]};
}

std::array<Int, 3> NilGroup::struik_box() const {
  return {struik_lattice_.pivot(0), struik_lattice_.pivot(1), struik_lattice_.pivot(2)};
}

Int order_of(const NilElt& x, const NilGroup& group) {
  Int order = 1;
  NilElt y = x;
  for (int k = 0; k < 63; ++k) {
    if (y == group.identity()) return order;
    y = group.mul(y, y);
    order *= 2;
  }
  throw std::logic_error("element order is not a power of two");
}

std::vector<Id> subgroup_elements(const NilGroup& group, const std::vector<NilElt>& gens) {
  std::unordered_set<Id> seen{group.index(group.identity())};
  std::deque<NilElt> queue{group.identity()};
  while (!queue.empty()) {
    const NilElt x = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const NilElt y = group.mul(x, g);
      if (seen.insert(group.index(y)).second) queue.push_back(y);
    }
  }
  std::vector<Id> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NilElt> center(const NilGroup& group) {
  const CommLattice& lattice = group.comm_lattice();
  // For z = a^r b^s c^t (times anything in the d,e block):
  //   [z,a] = c^-s d^t e^-C(s,2),   [z,b] = c^r d^C(r,2) e^(rs+t).
  std::vector<NilElt> solutions;
  for (Int r = 0; r < group.r_modulus(); ++r)
    for (Int s = 0; s < group.s_modulus(); ++s)
      for (Int t = 0; t < lattice.pivot(0); ++t) {
        if (!lattice.contains({neg(s), t, neg(binom2(s))})) continue;
        if (!lattice.contains({r, binom2(r), add(mul(r, s), t)})) continue;
        solutions.push_back(group.reduce({r, s, t, 0, 0}));
      }

  std::vector<NilElt> gens;
  std::unordered_set<Id> span{group.index(group.identity())};
  auto absorb = [&](const NilElt& g) {
    if (span.contains(group.index(g))) return;
    gens.push_back(g);
    const auto elems = subgroup_elements(group, gens);
    span = std::unordered_set<Id>(elems.begin(), elems.end());
  };
  absorb(group.reduce(hall::comm_aba));
  absorb(group.reduce(hall::comm_abb));
  for (const auto& z : solutions) absorb(z);
  return gens;
}

GroupTable enumerate(const NilGroup& group, std::size_t bound) {
  const auto n = static_cast<std::size_t>(group.order());
  if (n > bound) throw BudgetExceeded(n, bound);
  return GroupTable(
      n, group.index(group.identity()), {group.index(group.a()), group.index(group.b())},
      [group](Id x, Id y) { return group.index(group.mul(group.element(x), group.element(y))); },
      [group](Id x) { return to_string(group.element(x)); });
}

GroupTable central_quotient_table(const NilGroup& group, std::size_t bound) {
  return quotient_central(enumerate(group, bound), subgroup_elements(group, center(group)));
}

TypeParams central_quotient(const NilGroup& group, std::size_t bound) {
  const GroupTable quotient = central_quotient_table(group, bound);
  auto recognized = recognize(quotient);
  if (!recognized) throw std::runtime_error("central quotient of " + to_string(group.spec()) +
                                            " is not a 2-generator class-two 2-group");
  return *recognized;
}

}  // namespace cap2
