#include "cap2/class2.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace cap2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const char* constraint, const std::string& detail) {
  if (!ok) throw ParameterError(constraint, detail);
}

void require_range(int x, const char* name) {
  require(x <= kMaxExponent, "exponent≤30", std::string(name) + " = " + std::to_string(x) +
                                                " exceeds the supported range");
}

Word power_of(Basic b, Int e) { return {{b, e}}; }

std::vector<Relation> relations_for(const TypeParams& p) {
  const Relation abaTrivial{power_of(Basic::aba, 1), {}};
  const Relation abbTrivial{power_of(Basic::abb, 1), {}};
  return std::visit(
      overloaded{
          [&](const TypeI& q) {
            return std::vector<Relation>{{power_of(Basic::a, pow2(q.alpha)), {}},
                                         {power_of(Basic::b, pow2(q.beta)), {}},
                                         {power_of(Basic::ab, pow2(q.gamma)), {}},
                                         abaTrivial,
                                         abbTrivial};
          },
          [&](const TypeII& q) {
            return std::vector<Relation>{
                {power_of(Basic::a, pow2(q.alpha)), {}},
                {power_of(Basic::b, pow2(q.beta)), {}},
                abaTrivial,
                abbTrivial,
                {power_of(Basic::a, pow2(q.alpha + q.sigma - q.gamma)), power_of(Basic::ab, pow2(q.sigma))}};
          },
          [&](const TypeIII& q) {
            return std::vector<Relation>{{power_of(Basic::a, pow2(q.gamma + 1)), {}},
                                         {power_of(Basic::b, pow2(q.gamma + 1)), {}},
                                         {power_of(Basic::ab, pow2(q.gamma)), {}},
                                         abaTrivial,
                                         abbTrivial,
                                         {power_of(Basic::a, pow2(q.gamma)), power_of(Basic::b, pow2(q.gamma))},
                                         {power_of(Basic::b, pow2(q.gamma)), power_of(Basic::ab, pow2(q.gamma - 1))}};
          },
      },
      p);
}

}  // namespace

Kind kind_of(const TypeParams& p) {
  return std::visit(overloaded{[](const TypeI&) { return Kind::I; }, [](const TypeII&) { return Kind::II; },
                               [](const TypeIII&) { return Kind::III; }},
                    p);
}

int order_log2(const TypeParams& p) {
  return std::visit(overloaded{[](const TypeI& q) { return q.alpha + q.beta + q.gamma; },
                               [](const TypeII& q) { return q.alpha + q.beta + q.sigma; },
                               [](const TypeIII& q) { return 3 * q.gamma; }},
                    p);
}

std::string to_string(Kind k) {
  switch (k) {
    case Kind::I: return "i";
    case Kind::II: return "ii";
    case Kind::III: return "iii";
  }
  return "?";
}

std::optional<Kind> parse_kind(const std::string& s) {
  std::string lower = s;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "i" || lower == "1") return Kind::I;
  if (lower == "ii" || lower == "2") return Kind::II;
  if (lower == "iii" || lower == "3") return Kind::III;
  return std::nullopt;
}

std::string to_string(const TypeParams& p) {
  std::ostringstream os;
  std::visit(overloaded{[&](const TypeI& q) { os << "I(" << q.alpha << ',' << q.beta << ',' << q.gamma << ')'; },
                        [&](const TypeII& q) {
                          os << "II(" << q.alpha << ',' << q.beta << ',' << q.gamma << ',' << q.sigma << ')';
                        },
                        [&](const TypeIII& q) { os << "III(" << q.gamma << ')'; }},
             p);
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TypeParams& p) { return os << to_string(p); }

TypeParams validate(const TypeParams& p) {
  std::visit(overloaded{
                 [](const TypeI& q) {
                   require_range(q.alpha, "α");
                   require(q.alpha >= q.beta, "α≥β", "α=" + std::to_string(q.alpha) + ", β=" + std::to_string(q.beta));
                   require(q.beta >= q.gamma, "β≥γ", "β=" + std::to_string(q.beta) + ", γ=" + std::to_string(q.gamma));
                   require(q.gamma >= 1, "γ≥1", "γ=" + std::to_string(q.gamma));
                 },
                 [](const TypeII& q) {
                   require_range(q.alpha, "α");
                   require_range(q.beta, "β");
                   require(q.beta >= q.gamma, "β≥γ", "β=" + std::to_string(q.beta) + ", γ=" + std::to_string(q.gamma));
                   require(q.gamma > q.sigma, "γ>σ", "γ=" + std::to_string(q.gamma) + ", σ=" + std::to_string(q.sigma));
                   require(q.sigma >= 0, "σ≥0", "σ=" + std::to_string(q.sigma));
                   require(q.alpha + q.sigma >= 2 * q.gamma, "α+σ≥2γ",
                           "α+σ=" + std::to_string(q.alpha + q.sigma) + ", 2γ=" + std::to_string(2 * q.gamma));
                   require(q.alpha + q.beta + q.sigma > 3, "α+β+σ>3",
                           "α+β+σ=" + std::to_string(q.alpha + q.beta + q.sigma) +
                               "; this tuple is the dihedral group of order 8, presented as type i (1,1,1)");
                 },
                 [](const TypeIII& q) {
                   require_range(q.gamma, "γ");
                   require(q.gamma >= 1, "γ≥1", "γ=" + std::to_string(q.gamma));
                 },
             },
             p);
  return p;
}

TypeParams validate(const RawParams& raw) {
  if (!raw.kind) throw ParameterError("type", "missing group type (i, ii or iii)");
  auto need = [](const std::optional<int>& x, const char* name) {
    if (!x) throw ParameterError(name, std::string("missing parameter ") + name);
    return *x;
  };
  auto forbid = [&](const std::optional<int>& x, const char* name) {
    if (x) throw ParameterError(name, std::string(name) + " does not apply to type " + to_string(*raw.kind));
  };
  switch (*raw.kind) {
    case Kind::I:
      forbid(raw.sigma, "σ");
      return validate(TypeI{need(raw.alpha, "α"), need(raw.beta, "β"), need(raw.gamma, "γ")});
    case Kind::II:
      return validate(TypeII{need(raw.alpha, "α"), need(raw.beta, "β"), need(raw.gamma, "γ"), need(raw.sigma, "σ")});
    case Kind::III:
      forbid(raw.alpha, "α");
      forbid(raw.beta, "β");
      forbid(raw.sigma, "σ");
      return validate(TypeIII{need(raw.gamma, "γ")});
  }
  throw ParameterError("type", "unknown type");
}

std::vector<TypeParams> params_of_order(int n) {
  std::vector<TypeParams> out;
  auto try_add = [&](const TypeParams& p) {
    try {
      validate(p);
    } catch (const ParameterError&) {
      return;
    }
    if (order_log2(p) == n) out.push_back(p);
  };
  for (int alpha = 1; alpha <= n; ++alpha)
    for (int beta = 1; beta <= n; ++beta)
      for (int gamma = 1; gamma <= n; ++gamma) {
        try_add(TypeI{alpha, beta, gamma});
        for (int sigma = 0; sigma < gamma; ++sigma) try_add(TypeII{alpha, beta, gamma, sigma});
      }
  for (int gamma = 1; 3 * gamma <= n; ++gamma) try_add(TypeIII{gamma});
  return out;
}

std::optional<TypeParams> isomorphic_alias(const TypeParams& p) {
  const auto* q = std::get_if<TypeII>(&p);
  if (q && q->beta >= 2 && q->alpha == q->beta + 1 && q->gamma == q->beta && q->sigma == q->beta - 1)
    return TypeI{q->beta, q->beta, q->beta};
  return std::nullopt;
}

Class2Group::Class2Group(const TypeParams& params) : params_(validate(params)), relations_(relations_for(params)) {
  std::visit(overloaded{[&](const TypeI& q) {
                          mi_ = pow2(q.alpha);
                          mj_ = pow2(q.beta);
                          mk_ = pow2(q.gamma);
                        },
                        [&](const TypeII& q) {
                          mi_ = pow2(q.alpha);
                          mj_ = pow2(q.beta);
                          mk_ = pow2(q.sigma);
                        },
                        [&](const TypeIII& q) {
                          mi_ = pow2(q.gamma + 1);
                          mj_ = pow2(q.gamma);
                          mk_ = pow2(q.gamma - 1);
                        }},
             params_);
}

Elt2 Class2Group::fold(Int i, Int j, Int k) const {
  std::visit(overloaded{[&](const TypeI&) {},
                        [&](const TypeII& q) {
                          // [a,b]^(2^σ) -> a^(2^(α+σ-γ)), which is central
                          const Int carry = floor_div(k, mk_);
                          k = sub(k, cap2::mul(carry, mk_));
                          i = add(i, cap2::mul(carry, pow2(q.alpha + q.sigma - q.gamma)));
                        },
                        [&](const TypeIII& q) {
                          // b^(2^γ) and [a,b]^(2^(γ-1)) both -> a^(2^γ), central
                          const Int carry_k = floor_div(k, mk_);
                          const Int carry_j = floor_div(j, mj_);
                          k = sub(k, cap2::mul(carry_k, mk_));
                          j = sub(j, cap2::mul(carry_j, mj_));
                          i = add(i, cap2::mul(add(carry_j, carry_k), pow2(q.gamma)));
                        }},
             params_);
  return {floor_mod(i, mi_), floor_mod(j, mj_), floor_mod(k, mk_)};
}

Elt2 Class2Group::mul(const Elt2& x, const Elt2& y) const {
  // b^j1 a^i2 = a^i2 b^j1 [a,b]^(-j1 i2) in class two
  return fold(add(x.i, y.i), add(x.j, y.j), sub(add(x.k, y.k), cap2::mul(x.j, y.i)));
}

Elt2 Class2Group::inverse(const Elt2& x) const { return fold(neg(x.i), neg(x.j), sub(neg(x.k), cap2::mul(x.i, x.j))); }

Elt2 Class2Group::power(const Elt2& x, Int n) const {
  if (n < 0) return power(inverse(x), -n);
  Elt2 result;
  Elt2 base = x;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Elt2 Class2Group::commutator(const Elt2& x, const Elt2& y) const {
  return mul(mul(inverse(x), inverse(y)), mul(x, y));
}

Int Class2Group::order_of(const Elt2& x) const {
  Int order = 1;
  for (Elt2 y = x; !(y == identity()); y = mul(y, y)) order *= 2;
  return order;
}

Elt2 Class2Group::element(Id id) const {
  const Int n = id;
  return {n / (mj_ * mk_), (n / mk_) % mj_, n % mk_};
}

Class2Group model(const TypeParams& p) {
  Class2Group g(p);
  if (!satisfies_all(g, g.relations(), g.a(), g.b()))
    throw std::logic_error("model of " + to_string(p) + " violates a defining relation");
  const Elt2 c = g.commutator(g.a(), g.b());
  if (c == g.identity() || !(g.commutator(c, g.a()) == g.identity()) || !(g.commutator(c, g.b()) == g.identity()))
    throw std::logic_error("model of " + to_string(p) + " is not of class two");
  if (g.order() != pow2(order_log2(p))) throw std::logic_error("model order mismatch for " + to_string(p));
  return g;
}

GroupTable enumerate(const Class2Group& g, std::size_t bound) {
  const auto n = static_cast<std::size_t>(g.order());
  if (n > bound) throw BudgetExceeded(n, bound);
  return GroupTable(
      n, g.index(g.identity()), {g.index(g.a()), g.index(g.b())},
      [g](Id x, Id y) { return g.index(g.mul(g.element(x), g.element(y))); },
      [g](Id x) {
        const Elt2 e = g.element(x);
        return "a^" + std::to_string(e.i) + " b^" + std::to_string(e.j) + " [a,b]^" + std::to_string(e.k);
      });
}

Fingerprint fingerprint(const GroupTable& table) {
  Fingerprint f;
  const std::size_t n = table.size();
  f.order = static_cast<Int>(n);
  for (std::size_t x = 0; x < n; ++x) {
    const Int o = table.order_of(static_cast<Id>(x));
    ++f.order_histogram[o];
    f.exponent = std::max(f.exponent, o);
  }
  f.center_order = static_cast<Int>(brute_center(table).size());
  const auto [ga, gb] = table.generators();
  const Id c = table.commutator(ga, gb);
  const Subgroup derived = normal_closure(table, std::span<const Id>(&c, 1));
  f.derived_order = static_cast<Int>(derived.size());

  // Abelianization of a 2-generated group is Z_(|A|/exp) x Z_exp.
  std::vector<bool> in_derived(n, false);
  for (Id x : derived) in_derived[x] = true;
  Int ab_exponent = 1;
  for (std::size_t x = 0; x < n; ++x) {
    Int o = 1;
    for (Id y = static_cast<Id>(x); !in_derived[y]; y = table.mul(y, y)) o *= 2;
    ab_exponent = std::max(ab_exponent, o);
  }
  const Int ab_order = f.order / f.derived_order;
  f.abelian_invariants = {ab_order / ab_exponent, ab_exponent};
  return f;
}

Fingerprint fingerprint(const Class2Group& g) { return fingerprint(enumerate(g)); }

std::ostream& operator<<(std::ostream& os, const Fingerprint& f) {
  os << "order=" << f.order << " exponent=" << f.exponent << " |Z|=" << f.center_order << " |G'|=" << f.derived_order
     << " ab=" << f.abelian_invariants[0] << 'x' << f.abelian_invariants[1] << " orders={";
  bool first = true;
  for (const auto& [o, count] : f.order_histogram) {
    os << (first ? "" : ",") << o << ':' << count;
    first = false;
  }
  return os << '}';
}

}  // namespace cap2
