#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fqpts/bounds.hpp"
#include "fqpts/sections.hpp"
#include "fqpts/variety.hpp"

namespace fqpts {

/// RFC 4180 style quoting for fields containing commas, quotes or newlines.
std::string csv_field(std::string_view s);

/// `estimate,rhs,applicable,condition` plus one row per estimate, sorted by name.
std::string bounds_csv(const BoundReport& report);

/// `key,value` rows followed by fail_witness_1..10, witnesses in canonical tuple order.
std::string scan_csv(const VarietyDescriptor& v, const ScanReport& report);

enum class Verdict { Pass, Fail, NotApplicable };
std::string_view to_string(Verdict v);

struct VerifyRow {
  std::string name;
  std::optional<SurdSum> rhs;
  bool applicable = false;
  Verdict verdict = Verdict::NotApplicable;
};

struct VerifyReport {
  std::uint64_t point_count = 0;
  BigInt p_r;
  /// |N - p_r|.
  BigInt deviation;
  BoundReport bounds;
  std::vector<VerifyRow> rows;
  /// N <= delta p_r.
  bool trivial_ok = false;

  bool all_pass() const;
};

/// Counts V(F_q) and checks it against every estimate in exact arithmetic.
VerifyReport verify_estimates(const VarietyDescriptor& v, std::optional<int> s = std::nullopt,
                              std::optional<BigInt> betti = std::nullopt, unsigned workers = 1);

/// `estimate,deviation,rhs,rhs_ceil,applicable,verdict` plus one row per estimate.
std::string verify_csv(const VerifyReport& report);

/// Writes bytes verbatim; IoError on failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace fqpts
