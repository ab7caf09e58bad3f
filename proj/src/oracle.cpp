#include "cap2/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace cap2 {

namespace {

// Letters of the collector: generators, c = [a,b] and inverses. The central
// commutators d = [a,b,a] and e = [a,b,b] are only counted.
enum class Sym : std::uint8_t { a, A, b, B, c, C };

int rank(Sym x) { return static_cast<int>(x) / 2; }

Sym inv(Sym x) { return static_cast<Sym>(static_cast<int>(x) ^ 1); }

class Collector {
 public:
  void push(Sym x) {
    if (!word_.empty()) {
      const Sym y = word_.back();
      if (y == inv(x)) {
        word_.pop_back();
        return;
      }
      if (rank(y) > rank(x)) {
        word_.pop_back();
        push(x);
        push(y);
        swap_tail(y, x);
        return;
      }
    }
    word_.push_back(x);
  }

  FreeElt result() const {
    FreeElt g;
    g.u = u_;
    g.v = v_;
    for (Sym x : word_) {
      switch (x) {
        case Sym::a: ++g.r; break;
        case Sym::A: --g.r; break;
        case Sym::b: ++g.s; break;
        case Sym::B: --g.s; break;
        case Sym::c: ++g.t; break;
        case Sym::C: --g.t; break;
      }
    }
    return g;
  }

 private:
  // y x = x y w; pushes w. Only pairs with rank(y) > rank(x) occur.
  void swap_tail(Sym y, Sym x) {
    using enum Sym;
    if (rank(y) == 1) {
      // b a = a b C,  B a = a B c E,  b A = A b c D,  B A = A B C d e
      const bool y_pos = (y == b);
      const bool x_pos = (x == a);
      if (y_pos && x_pos) {
        push(C);
      } else if (!y_pos && x_pos) {
        push(c);
        --v_;
      } else if (y_pos && !x_pos) {
        push(c);
        --u_;
      } else {
        push(C);
        ++u_;
        ++v_;
      }
      return;
    }
    // c^e x^f = x^f c^e d^(ef)  (x = a)  or  e^(ef)  (x = b)
    const int ce = (y == c) ? 1 : -1;
    const int xf = (x == a || x == b) ? 1 : -1;
    if (rank(x) == 0)
      u_ += ce * xf;
    else
      v_ += ce * xf;
  }

  std::vector<Sym> word_;
  Int u_ = 0;
  Int v_ = 0;
};

LetterWord inverse_word(const LetterWord& w) {
  LetterWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(static_cast<Letter>(static_cast<int>(*it) ^ 1));
  return out;
}

void append_power(LetterWord& out, const LetterWord& unit, Int n) {
  const LetterWord piece = n >= 0 ? unit : inverse_word(unit);
  for (Int i = 0; i < (n >= 0 ? n : -n); ++i) out.insert(out.end(), piece.begin(), piece.end());
}

LetterWord commutator_word(const LetterWord& x, const LetterWord& y) {
  LetterWord out = inverse_word(x);
  const LetterWord yi = inverse_word(y);
  out.insert(out.end(), yi.begin(), yi.end());
  out.insert(out.end(), x.begin(), x.end());
  out.insert(out.end(), y.begin(), y.end());
  return out;
}

std::optional<Isomorphism> search(const GroupTable& table, const Class2Group& target) {
  const Int ord_a = target.order_of(target.a());
  const Int ord_b = target.order_of(target.b());
  const Int ord_c = target.order_of(target.commutator(target.a(), target.b()));

  std::vector<Int> orders(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) orders[x] = table.order_of(static_cast<Id>(x));

  auto candidates = [&](Int wanted, Id preferred) {
    std::vector<Id> out;
    if (orders[preferred] == wanted) out.push_back(preferred);
    for (std::size_t x = 0; x < table.size(); ++x)
      if (orders[x] == wanted && x != preferred) out.push_back(static_cast<Id>(x));
    return out;
  };
  const auto images_a = candidates(ord_a, table.generators()[0]);
  const auto images_b = candidates(ord_b, table.generators()[1]);

  for (Id g : images_a) {
    for (Id h : images_b) {
      if (table.order_of(table.commutator(g, h)) != ord_c) continue;
      if (!satisfies_all(table, target.relations(), g, h)) continue;
      const Id pair[] = {g, h};
      if (closure(table, pair).size() != table.size()) continue;
      return Isomorphism{g, h};
    }
  }
  return std::nullopt;
}

}  // namespace

LetterWord parse_word(std::string_view text) {
  LetterWord out;
  for (char ch : text) {
    switch (ch) {
      case 'a': out.push_back(Letter::a); break;
      case 'A': out.push_back(Letter::A); break;
      case 'b': out.push_back(Letter::b); break;
      case 'B': out.push_back(Letter::B); break;
      case ' ':
      case '*': break;
      default: throw std::invalid_argument(std::string("unexpected letter '") + ch + "' in word");
    }
  }
  return out;
}

std::string to_string(const LetterWord& w) {
  std::string out;
  for (Letter x : w) out += "aAbB"[static_cast<int>(x)];
  return out;
}

LetterWord word_of(const FreeElt& x) {
  const LetterWord a{Letter::a};
  const LetterWord b{Letter::b};
  const LetterWord c = commutator_word(a, b);
  const LetterWord d = commutator_word(c, a);
  const LetterWord e = commutator_word(c, b);
  LetterWord out;
  append_power(out, a, x.r);
  append_power(out, b, x.s);
  append_power(out, c, x.t);
  append_power(out, d, x.u);
  append_power(out, e, x.v);
  return out;
}

FreeElt collect_word(std::span<const Letter> w) {
  Collector collector;
  for (Letter x : w) collector.push(static_cast<Sym>(static_cast<int>(x)));
  return collector.result();
}

FreeElt collect_word(std::string_view text) { return collect_word(parse_word(text)); }

std::optional<Isomorphism> iso_2gen(const GroupTable& table, const Class2Group& target) {
  if (static_cast<Int>(table.size()) != target.order()) return std::nullopt;
  if (!(fingerprint(table) == fingerprint(target))) return std::nullopt;
  return search(table, target);
}

std::optional<TypeParams> recognize(const GroupTable& table) {
  const std::size_t n = table.size();
  if ((n & (n - 1)) != 0) return std::nullopt;
  const auto [ga, gb] = table.generators();
  const Id c = table.commutator(ga, gb);
  if (c == table.identity()) return std::nullopt;
  if (!table.commute(c, ga) || !table.commute(c, gb)) return std::nullopt;

  int log2 = 0;
  while ((std::size_t{1} << log2) < n) ++log2;
  const Fingerprint fp = fingerprint(table);
  for (const auto& p : params_of_order(log2)) {
    const Class2Group m = model(p);
    if (!(fingerprint(m) == fp)) continue;
    if (search(table, m)) return p;
  }
  return std::nullopt;
}

}  // namespace cap2
