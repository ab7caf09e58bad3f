#include "cap2/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cap2/oracle.hpp"

namespace cap2::cli {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct ParamFlags {
  std::string type;
  std::optional<int> alpha, beta, gamma, sigma;

  void attach(CLI::App* cmd) {
    cmd->add_option("--type", type, "group type: i, ii or iii")->required();
    cmd->add_option("--alpha", alpha, "a has order 2^alpha");
    cmd->add_option("--beta", beta, "b has order 2^beta");
    cmd->add_option("--gamma", gamma, "[a,b] has order 2^gamma (types i, ii); type iii parameter");
    cmd->add_option("--sigma", sigma, "type ii only");
  }

  TypeParams resolve() const {
    RawParams raw;
    raw.kind = parse_kind(type);
    if (!raw.kind) throw ParameterError("type", "unknown type '" + type + "' (expected i, ii or iii)");
    raw.alpha = alpha;
    raw.beta = beta;
    raw.gamma = gamma;
    raw.sigma = sigma;
    return validate(raw);
  }
};

std::string dash_or(const std::optional<int>& x) { return x ? std::to_string(*x) : "-"; }

struct Columns {
  std::optional<int> alpha, beta, gamma, sigma;
};

Columns columns_of(const TypeParams& p) {
  return std::visit(overloaded{[](const TypeI& q) { return Columns{q.alpha, q.beta, q.gamma, std::nullopt}; },
                               [](const TypeII& q) { return Columns{q.alpha, q.beta, q.gamma, q.sigma}; },
                               [](const TypeIII& q) { return Columns{std::nullopt, std::nullopt, q.gamma, std::nullopt}; }},
                    p);
}

std::string verdict_word(const Verdict& v) { return v.capable ? "capable" : "not_capable"; }
std::string clause_word(const Verdict& v) { return v.capable ? to_string(v.clause) : "-"; }

std::string verified_word(const std::optional<VerifyStatus>& s, bool capable, bool verify_requested) {
  if (!capable) return "n/a";
  if (!verify_requested) return "skipped";
  return s ? to_string(*s) : "-";
}

std::size_t default_max_order() {
  if (const char* env = std::getenv("CAP2_MAX_ORDER"); env && *env) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(env, &pos);
      if (pos == std::string(env).size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw ParameterError("CAP2_MAX_ORDER", std::string("not a positive integer: ") + env);
  }
  return kDefaultEnumerationBound;
}

std::string relator(const Relation& rel, const char* x, const char* y) {
  auto basic = [&](Basic b) -> std::string {
    switch (b) {
      case Basic::a: return x;
      case Basic::b: return y;
      case Basic::ab: return std::string("Comm(") + x + "," + y + ")";
      case Basic::aba: return std::string("Comm(Comm(") + x + "," + y + ")," + x + ")";
      case Basic::abb: return std::string("Comm(Comm(") + x + "," + y + ")," + y + ")";
    }
    return "?";
  };
  auto render = [&](const Word& w, int sign) {
    std::vector<std::string> parts;
    for (const auto& f : w) {
      const Int e = sign * f.exponent;
      parts.push_back(e == 1 ? basic(f.basic) : basic(f.basic) + "^" + std::to_string(e));
    }
    if (sign < 0) std::reverse(parts.begin(), parts.end());
    return parts;
  };
  auto parts = render(rel.lhs, 1);
  for (auto& s : render(rel.rhs, -1)) parts.push_back(s);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out.empty() ? std::string("One(F)") : out;
}

std::string gap_free_elt(const FreeElt& g) {
  std::vector<std::string> parts;
  auto add = [&](Int e, const std::string& base) {
    if (e != 0) parts.push_back(base + "^" + std::to_string(e));
  };
  add(g.r, "x");
  add(g.s, "y");
  add(g.t, "Comm(x,y)");
  add(g.u, "Comm(Comm(x,y),x)");
  add(g.v, "Comm(Comm(x,y),y)");
  if (parts.empty()) return "One(FK)";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "*" : "") + parts[i];
  return out;
}

int cmd_classify(const TypeParams& p, const std::string& format, std::ostream& out) {
  const Class2Group g = model(p);
  const Fingerprint f = fingerprint(g);
  if (format == "tsv") {
    out << "type\talpha\tbeta\tgamma\tsigma\torder\texponent\tcenter\tderived\n";
    const Columns c = columns_of(p);
    out << to_string(kind_of(p)) << '\t' << dash_or(c.alpha) << '\t' << dash_or(c.beta) << '\t' << dash_or(c.gamma)
        << '\t' << dash_or(c.sigma) << '\t' << f.order << '\t' << f.exponent << '\t' << f.center_order << '\t'
        << f.derived_order << '\n';
    return 0;
  }
  out << "group=" << to_string(p) << '\n';
  out << "relations:";
  for (const auto& r : g.relations()) out << "  " << to_string(r) << ';';
  out << '\n';
  out << "|G|=" << g.order() << " |a|=" << g.order_of(g.a()) << " |b|=" << g.order_of(g.b())
      << " |[a,b]|=" << g.order_of(g.commutator(g.a(), g.b())) << '\n';
  out << "fingerprint: " << f << '\n';
  return 0;
}

int cmd_decide(const TypeParams& p, const std::string& format, std::ostream& out) {
  const Verdict v = decide(p);
  if (format == "tsv") {
    out << tsv_header() << '\n' << tsv_row(p, v, std::nullopt, false) << '\n';
    return 0;
  }
  out << "verdict=" << verdict_word(v) << " clause=" << clause_word(v) << '\n';
  if (!v.capable) out << "obstruction=" << to_string(v.obstruction) << '\n';
  out << "rationale: " << v.rationale << '\n';
  return 0;
}

int cmd_witness(const TypeParams& p, std::ostream& out) {
  const WitnessSpec w = build_witness(p);
  const NilGroup K = build(w.ambient);
  out << "target=" << to_string(w.target) << '\n';
  out << "ambient=G(" << w.ambient.alpha << ',' << w.ambient.beta << ")\n";
  out << "construction: " << w.construction << '\n';
  out << "extras (a^r b^s [a,b]^t [a,b,a]^u [a,b,b]^v as (r,s,t,u,v)):";
  if (w.ambient.extra_central.empty()) out << " none";
  for (const auto& e : w.ambient.extra_central) out << ' ' << to_string(e);
  out << '\n';
  const auto box = K.box();
  out << "|K|=" << K.order() << " box=(" << K.r_modulus() << ',' << K.s_modulus() << ',' << box[0] << ','
      << box[1] << ',' << box[2] << ")\n";
  return 0;
}

int cmd_verify(const TypeParams& p, std::size_t max_order, std::ostream& out, std::ostream& err) {
  const WitnessReport r = verify_witness(build_witness(p), {max_order});
  out << format_report(r);
  if (r.status == VerifyStatus::budget_exceeded) err << "raise --max-order or CAP2_MAX_ORDER to enumerate this witness\n";
  return r.passed() ? 0 : 1;
}

int cmd_export(const TypeParams& p, std::size_t max_order, std::ostream& out, std::ostream& err) {
  const WitnessSpec w = build_witness(p);
  const WitnessReport r = verify_witness(w, {max_order});
  if (!r.passed()) {
    err << "refusing to export an unverified witness (" << to_string(r.status) << "): " << r.message << '\n';
    return 1;
  }
  out << export_cas(p, w, r);
  return 0;
}

int cmd_sweep(int max_alpha, const SweepOptions& options, const std::string& format, std::ostream& out,
              std::ostream& err) {
  if (max_alpha < 1 || max_alpha > kMaxExponent)
    throw ParameterError("max-alpha", "must lie in [1, " + std::to_string(kMaxExponent) + "]");
  const auto rows = sweep(max_alpha, options);
  int budget = 0, failed = 0;
  if (format == "tsv") out << tsv_header() << '\n';
  for (const auto& row : rows) {
    if (row.verified == VerifyStatus::budget_exceeded) ++budget;
    if (row.verified == VerifyStatus::fail) ++failed;
    if (format == "tsv") {
      out << tsv_row(row.params, row.verdict, row.verified, options.verify) << '\n';
      continue;
    }
    out << std::left << std::setw(14) << to_string(row.params) << std::setw(10)
        << ("2^" + std::to_string(order_log2(row.params))) << std::setw(12) << verdict_word(row.verdict)
        << std::setw(4) << clause_word(row.verdict)
        << verified_word(row.verified, row.verdict.capable, options.verify) << '\n';
  }
  if (budget > 0)
    err << "warning: " << budget << " witness(es) exceed the enumeration budget of " << options.max_order
        << "; table is partial, rerun with a larger --max-order\n";
  for (const auto& row : rows)
    if (row.verified == VerifyStatus::fail) err << "FAIL " << to_string(row.params) << ": " << row.message << '\n';
  return failed > 0 ? 1 : 0;
}

int cmd_selftest(std::ostream& out) {
  int failures = 0;
  auto check = [&](const std::string& name, auto&& body) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      out << "FAIL " << name << " (" << e.what() << ")\n";
      ++failures;
      return;
    }
    out << (ok ? "PASS " : "FAIL ") << name << '\n';
    if (!ok) ++failures;
  };

  check("collector agrees with the multiplication law", [] {
    std::mt19937 rng(20240501);
    std::uniform_int_distribution<int> letter(0, 3), len(0, 24);
    for (int n = 0; n < 500; ++n) {
      LetterWord w(static_cast<std::size_t>(len(rng)));
      FreeElt direct = hall::identity;
      for (auto& l : w) {
        l = static_cast<Letter>(letter(rng));
        const FreeElt g = (l == Letter::a || l == Letter::A) ? hall::a : hall::b;
        direct = hall::mul(direct, (l == Letter::A || l == Letter::B) ? hall::inverse(g) : g);
      }
      if (collect_word(w) != direct) return false;
    }
    return true;
  });
  check("|G(2,1)| = 64 by enumeration", [] { return enumerate(build({2, 1, {}})).size() == 64; });
  check("solved center of G(2,1) matches brute force", [] {
    const NilGroup g = build({2, 1, {}});
    return subgroup_elements(g, center(g)) == brute_center(enumerate(g));
  });
  check("I(1,1,1) witness verifies", [] { return verify_witness(build_witness(TypeI{1, 1, 1})).passed(); });
  check("II(3,2,2,1) witness verifies", [] { return verify_witness(build_witness(TypeII{3, 2, 2, 1})).passed(); });
  check("decision table samples", [] {
    return decide(TypeI{2, 2, 1}).clause == Clause::a && decide(TypeII{4, 4, 2, 1}).clause == Clause::c &&
           decide(TypeII{3, 2, 2, 1}).clause == Clause::d && !decide(TypeIII{1}).capable &&
           !decide(TypeI{3, 2, 1}).capable;
  });
  out << (failures == 0 ? "selftest: all checks passed\n" : "selftest: " + std::to_string(failures) + " failed\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

std::vector<TypeParams> sweep_params(int max_alpha) {
  std::vector<TypeParams> out;
  auto valid = [](const TypeParams& p) {
    try {
      validate(p);
      return true;
    } catch (const ParameterError&) {
      return false;
    }
  };
  for (int a = 1; a <= max_alpha; ++a)
    for (int b = 1; b <= a; ++b)
      for (int g = 1; g <= b; ++g) out.emplace_back(TypeI{a, b, g});
  for (int a = 1; a <= max_alpha; ++a)
    for (int b = 1; b <= max_alpha; ++b)
      for (int g = 1; g <= b; ++g)
        for (int s = 0; s < g; ++s)
          if (valid(TypeII{a, b, g, s})) out.emplace_back(TypeII{a, b, g, s});
  for (int g = 1; g <= max_alpha; ++g) out.emplace_back(TypeIII{g});
  return out;
}

std::vector<SweepRow> sweep(int max_alpha, const SweepOptions& options) {
  const auto params = sweep_params(max_alpha);
  std::vector<SweepRow> rows(params.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < params.size(); i = next++) {
      SweepRow& row = rows[i];
      row.params = params[i];
      row.verdict = decide(params[i]);
      if (!row.verdict.capable || !options.verify) continue;
      try {
        const WitnessReport r = verify_witness(build_witness(params[i]), {options.max_order});
        row.verified = r.status;
        row.message = r.message;
      } catch (const std::exception& e) {
        row.verified = VerifyStatus::fail;
        row.message = e.what();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(params.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string tsv_header() { return "type\talpha\tbeta\tgamma\tsigma\torder\tverdict\tclause\tverified"; }

std::string tsv_row(const TypeParams& p, const Verdict& v, const std::optional<VerifyStatus>& verified,
                    bool verify_requested) {
  const Columns c = columns_of(p);
  std::ostringstream os;
  os << to_string(kind_of(p)) << '\t' << dash_or(c.alpha) << '\t' << dash_or(c.beta) << '\t' << dash_or(c.gamma)
     << '\t' << dash_or(c.sigma) << '\t' << pow2(order_log2(p)) << '\t' << verdict_word(v) << '\t' << clause_word(v)
     << '\t' << verified_word(verified, v.capable, verify_requested);
  return os.str();
}

TypeParams parse_tsv_row(std::string_view line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in{std::string(line)};
  while (std::getline(in, cell, '\t')) cells.push_back(cell);
  if (cells.size() < 5) throw std::invalid_argument("sweep row has fewer than five columns");
  auto num = [](const std::string& s) -> std::optional<int> {
    if (s == "-") return std::nullopt;
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number '" + s + "'");
    return v;
  };
  RawParams raw;
  raw.kind = parse_kind(cells[0]);
  raw.alpha = num(cells[1]);
  raw.beta = num(cells[2]);
  raw.gamma = num(cells[3]);
  raw.sigma = num(cells[4]);
  return validate(raw);
}

std::string export_cas(const TypeParams& p, const WitnessSpec& w, const WitnessReport& report) {
  if (!report.passed()) throw std::invalid_argument("witness for " + to_string(p) + " has not been verified");
  const Class2Group g = model(p);
  std::ostringstream os;
  os << "# GAP 4 script: rebuild G = " << to_string(p) << " and K = " << to_string(w.ambient) << ",\n";
  os << "# then check that K/Z(K) is isomorphic to G.\n";
  os << "# Comm(x,y) = x^-1*y^-1*x*y, matching [x,y] in the report.\n\n";
  os << "F := FreeGroup(\"a\", \"b\");; a := F.1;; b := F.2;;\n";
  os << "relsG := [\n";
  const auto& rels = g.relations();
  for (std::size_t i = 0; i < rels.size(); ++i)
    os << "  " << relator(rels[i], "a", "b") << (i + 1 < rels.size() ? "," : "") << "  # " << to_string(rels[i])
       << '\n';
  os << "];;\n";
  os << "G := Image(EpimorphismPGroup(F / relsG, 2));;\n";
  os << "if Size(G) <> " << g.order() << " then Error(\"unexpected |G|\"); fi;\n\n";

  os << "FK := FreeGroup(\"x\", \"y\");; x := FK.1;; y := FK.2;;\n";
  os << "relsK := [ x^" << pow2(w.ambient.alpha) << ", y^" << pow2(w.ambient.beta) << ",\n";
  os << "  # class three: every left-normed commutator of weight four vanishes\n";
  const char* gens[] = {"x", "y"};
  bool first = true;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      if (i == j) continue;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          os << (first ? "  " : ", ") << "Comm(Comm(Comm(" << gens[i] << "," << gens[j] << ")," << gens[k] << "),"
             << gens[l] << ")";
          first = false;
        }
    }
  for (const auto& e : w.ambient.extra_central) os << ",\n  " << gap_free_elt(e);
  os << " ];;\n";
  os << "K := Image(EpimorphismPGroup(FK / relsK, 3));;\n";
  os << "if Size(K) <> " << report.k_order << " then Error(\"unexpected |K|\"); fi;\n";
  os << "if Size(Centre(K)) <> " << report.center_order << " then Error(\"unexpected |Z(K)|\"); fi;\n";
  os << "Q := Image(NaturalHomomorphismByNormalSubgroup(K, Centre(K)));;\n";
  os << "if IsomorphismGroups(Q, G) = fail then Error(\"K/Z(K) is not isomorphic to G\"); fi;\n";
  os << "Print(\"K/Z(K) ~ " << to_string(p) << ": ok\\n\");\n";
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capability of two-generator 2-groups of class two", "cap2"};
  app.require_subcommand(1);
  std::string format = "text";
  std::optional<std::size_t> max_order;
  auto add_common = [&](CLI::App* cmd, bool budget) {
    cmd->add_option("--format", format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
    if (budget) cmd->add_option("--max-order", max_order, "largest group order to enumerate (env CAP2_MAX_ORDER)");
  };

  ParamFlags flags;
  std::vector<std::pair<std::string, CLI::App*>> param_cmds;
  const std::pair<const char*, const char*> descriptions[] = {
      {"classify", "show the presentation, model and fingerprint"},
      {"decide", "report whether the group is capable"},
      {"witness", "print the class-three witness recipe"},
      {"verify", "build the witness and check K/Z(K) against the model"},
      {"export-cas", "emit a GAP script re-checking a verified witness"},
  };
  for (const auto& [name, help] : descriptions) {
    CLI::App* cmd = app.add_subcommand(name, help);
    flags.attach(cmd);
    add_common(cmd, std::string(name) == "verify" || std::string(name) == "export-cas");
    param_cmds.emplace_back(name, cmd);
  }
  int max_alpha = 3;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool no_verify = false;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "decide and verify every tuple with exponents up to --max-alpha");
  sweep_cmd->add_option("--max-alpha", max_alpha, "bound on every exponent")->capture_default_str();
  sweep_cmd->add_option("--threads", threads, "worker threads (default: hardware concurrency)")->check(CLI::PositiveNumber);
  sweep_cmd->add_flag("--no-verify", no_verify, "skip witness verification");
  add_common(sweep_cmd, true);
  CLI::App* selftest_cmd = app.add_subcommand("selftest", "run a quick internal consistency battery");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto& [name, cmd] : param_cmds)
      if (cmd->parsed()) err << cmd->help();
    return 2;
  }

  try {
    const std::size_t budget = max_order ? *max_order : default_max_order();
    if (budget == 0) throw ParameterError("max-order", "must be positive");
    if (selftest_cmd->parsed()) return cmd_selftest(out);
    if (sweep_cmd->parsed()) return cmd_sweep(max_alpha, {budget, threads, !no_verify}, format, out, err);
    const TypeParams p = flags.resolve();
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "classify") return cmd_classify(p, format, out);
    if (name == "decide") return cmd_decide(p, format, out);
    if (name == "witness") return cmd_witness(p, out);
    if (name == "verify") return cmd_verify(p, budget, out, err);
    return cmd_export(p, budget, out, err);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotCapable& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cap2::cli
