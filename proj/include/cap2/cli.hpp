#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cap2/capability.hpp"

namespace cap2::cli {

/// Runs one command line (without the program name). Returns 0 on success,
/// 1 on a failed verification and 2 on invalid parameters or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Every valid parameter tuple with all exponents at most max_alpha, in a
/// fixed order: type i, then ii, then iii, each lexicographic.
std::vector<TypeParams> sweep_params(int max_alpha);

struct SweepOptions {
  std::size_t max_order = kDefaultEnumerationBound;
  unsigned threads = 1;
  bool verify = true;
};

struct SweepRow {
  TypeParams params;
  Verdict verdict;
  /// Empty for non-capable rows and when verification is switched off.
  std::optional<VerifyStatus> verified;
  std::string message;
};

std::vector<SweepRow> sweep(int max_alpha, const SweepOptions& options = {});

std::string tsv_header();
std::string tsv_row(const TypeParams& p, const Verdict& v, const std::optional<VerifyStatus>& verified,
                    bool verify_requested = true);
/// Parses the first five columns of a sweep row back into validated parameters.
TypeParams parse_tsv_row(std::string_view line);

/// GAP script rebuilding G and K from presentations and re-checking
/// K/Z(K) ≅ G. Throws std::invalid_argument unless the report passed.
std::string export_cas(const TypeParams& p, const WitnessSpec& w, const WitnessReport& report);

}  // namespace cap2::cli
