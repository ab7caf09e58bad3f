#include "cap2/words.hpp"

namespace cap2 {

namespace {

const char* name(Basic b) {
  switch (b) {
    case Basic::a: return "a";
    case Basic::b: return "b";
    case Basic::ab: return "[a,b]";
    case Basic::aba: return "[a,b,a]";
    case Basic::abb: return "[a,b,b]";
  }
  return "?";
}

}  // namespace

std::string to_string(const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& f : word) {
    if (!out.empty()) out += '*';
    out += name(f.basic);
    if (f.exponent != 1) out += '^' + std::to_string(f.exponent);
  }
  return out;
}

std::string to_string(const Relation& rel) { return to_string(rel.lhs) + " = " + to_string(rel.rhs); }

}  // namespace cap2
