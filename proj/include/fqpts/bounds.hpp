#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace fqpts {

using BigInt = boost::multiprecision::cpp_int;
/// 50 significant decimal digits; used for display only.
using HighPrecision = boost::multiprecision::cpp_dec_float_50;

struct VarietyDescriptor;

/// eta_m(d, n) = sum over nonzero eps in {0,1}^m of
/// (-1)^{|eps|+1} d^eps q^{|n| + m - |eps|}.
BigInt eta(std::uint64_t q, std::span<const std::uint64_t> d, std::span<const std::uint64_t> n);

/// D^{r-s-1} (D + r - s) delta. Requires 0 <= s <= r - 2.
BigInt bertini_degree(std::uint64_t bigD, int r, int s, std::uint64_t delta);

/// (D - 2) delta + 2; InvalidInput when negative.
BigInt betti_b1(std::uint64_t bigD, std::uint64_t delta);

/// q^r + ... + q + 1 without a size limit.
BigInt projective_count(std::uint64_t q, int r);

/// (delta p_r, delta q^r).
std::pair<BigInt, BigInt> trivial_bounds(std::uint64_t q, int r, std::uint64_t delta);

/// sqrt(factor) * q^{half_exp / 2}; half_exp may be negative or odd.
struct RadicalTerm {
  BigInt factor;
  int half_exp = 0;
};

/// An exact nonnegative real (a + sqrt(k_1) + sqrt(k_2)) / den with
/// integers a, k_i >= 0 and den >= 1. Comparisons against integers are
/// decided exactly by squaring; at most two irrational radicals are kept.
class SurdSum {
 public:
  SurdSum() = default;
  static SurdSum integer(BigInt value);
  static SurdSum from_terms(std::uint64_t q, const std::vector<RadicalTerm>& terms);

  /// Exact ordering of `value` relative to this number.
  std::strong_ordering compare_integer(const BigInt& value) const;
  bool bounds(const BigInt& value) const { return compare_integer(value) != std::strong_ordering::greater; }

  BigInt floor() const;
  BigInt ceil() const;
  HighPrecision approx() const;

  const BigInt& integer_part() const noexcept { return integer_; }
  const std::vector<BigInt>& radicands() const noexcept { return radicands_; }
  const BigInt& denominator() const noexcept { return den_; }

 private:
  BigInt integer_ = 0;
  std::vector<BigInt> radicands_;
  BigInt den_ = 1;
};

/// Twelve significant digits in scientific notation, e.g. 1.79446673934e+02.
std::string format_real12(const HighPrecision& x);
/// Thirty significant digits in scientific notation.
std::string format_real30(const HighPrecision& x);

struct BoundInputs {
  std::uint64_t q = 0;
  int n = 0;
  int r = 0;
  int s = -1;
  std::vector<unsigned> d;
  std::uint64_t delta = 1;
  std::uint64_t bigD = 0;
  /// b'_{r-s-1} as supplied by the user, if any.
  std::optional<BigInt> betti;
};

/// Inputs read off a descriptor; `s` defaults to the asserted singular dimension.
BoundInputs bound_inputs(const VarietyDescriptor& v, std::optional<int> s = std::nullopt,
                         std::optional<BigInt> betti = std::nullopt);

struct EstimateRow {
  std::string name;
  std::optional<SurdSum> rhs;
  bool applicable = false;
  std::string condition;
};

struct BoundReport {
  BoundInputs inputs;
  /// The b'_{r-s-1} actually used (user value or the curve formula).
  BigInt betti;
  /// Sorted by name: cmp, deligne, gl, hooley-katz, normal-ci.
  std::vector<EstimateRow> rows;
  BigInt trivial_projective;
  BigInt trivial_affine;

  const EstimateRow& row(std::string_view name) const;
};

/// All explicit |V(F_q)| - p_r estimates with their applicability.
/// Throws MissingBetti when r-s-1 != 1 and no Betti number was supplied,
/// BadSingularDim unless s = -1 or 0 <= s <= r-2.
BoundReport estimate_suite(const BoundInputs& in);

}  // namespace fqpts
