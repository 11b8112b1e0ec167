#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqpts/bounds.hpp"
#include "fqpts/variety.hpp"

namespace fqpts {

/// s+1 covectors over the base field cutting out L = {gamma_i . x = 0}.
/// Any tuple is legal, including zero and linearly dependent ones.
struct SectionTuple {
  std::vector<std::vector<FieldElement>> gamma;

  std::size_t size() const noexcept { return gamma.size(); }
  friend bool operator==(const SectionTuple&, const SectionTuple&) = default;
};

/// Number of F_{q^e}-points of V on L. The empty or all-zero tuple gives |V(F_{q^e})|.
std::uint64_t section_count(const VarietyDescriptor& v, const SectionTuple& gamma, unsigned ext = 1);

enum class SectionClass { Pass, RankFail, Degenerate };

struct SectionVerdict {
  SectionTuple gamma;
  /// N(gamma) over the base field.
  std::uint64_t point_count = 0;
  SectionClass cls = SectionClass::Pass;
  /// First point of V cap L, in enumeration order over the smallest failing
  /// extension, where the Jacobian rows stacked on gamma lose rank.
  std::optional<ProjPoint> witness;
  unsigned witness_ext = 0;
  unsigned checked_extensions = 1;
};

/// Degenerate when the covectors are dependent. Otherwise Pass iff the
/// stacked (n-r+s+1) x (n+1) matrix has full rank at every F_{q^e}-point of
/// V cap L for e = 1..max_ext. Requires 1 <= gamma.size() <= r-1.
SectionVerdict section_smooth_check(const VarietyDescriptor& v, const SectionTuple& gamma, unsigned max_ext = 1);

enum class ScanMode { Affine, Projective };

struct ScanReport {
  ScanMode mode = ScanMode::Affine;
  std::uint64_t q = 0;
  int n = 0;
  int r = 0;
  int s = 0;
  unsigned max_ext = 1;
  std::uint64_t total = 0;
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t degenerate = 0;
  /// Passing tuples that also satisfy the second-moment (Hooley) condition.
  std::uint64_t hooley_pass = 0;
  /// d = D^{r-s-1}(D+r-s)delta.
  BigInt bertini_degree;
  /// (q-d)^{s+1} q^{n(s+1)} when q > d, else 0. Projective mode divides by
  /// (q-1)^{s+1}, rounding up.
  BigInt floor;
  bool floor_applicable = false;
  /// eta_{s+1}((d,...,d), (n,...,n)).
  BigInt eta_ceiling;
  /// Up to ten failing tuples in canonical order.
  std::vector<SectionVerdict> fail_witnesses;
};

inline constexpr std::size_t kMaxScanWitnesses = 10;

/// Exhaustive classification of every tuple. Affine mode walks
/// F_q^{(n+1)(s+1)}; projective mode walks (P^n(F_q))^{s+1}. `s` defaults to
/// max(asserted singular dimension, 0) and must lie in that value..r-2.
ScanReport bertini_scan(const VarietyDescriptor& v, std::optional<int> s, unsigned max_ext, ScanMode mode,
                        unsigned workers = 1);

/// hist[c] = number of gamma in F_q^{(n+1)(s+1)} with N(gamma) = c.
enum class HistogramPath { Auto, Bitset, Direct };
std::vector<std::uint64_t> section_histogram(const VarietyDescriptor& v, int s, unsigned workers = 1,
                                             HistogramPath path = HistogramPath::Auto);

struct SecondMoment {
  std::uint64_t point_count = 0;
  std::uint64_t total = 0;
  BigInt computed;
  BigInt lemma_value;
  bool equal = false;
};

/// sum over all gamma of (N - q^{s+1} N(gamma))^2 against N q^{(n+1)(s+1)} (q^{s+1} - 1).
SecondMoment second_moment(const VarietyDescriptor& v, int s, unsigned workers = 1);

struct HooleyCensus {
  std::uint64_t satisfying = 0;
  std::uint64_t total = 0;
  bool half_mass = false;
};

/// (N - q^{s+1} c)^2 <= 2 N (q^{s+1} - 1), decided in integers.
bool hooley_condition(std::uint64_t n_points, std::uint64_t q, int s, std::uint64_t section_points);

HooleyCensus hooley_condition_census(const VarietyDescriptor& v, int s, unsigned workers = 1);

}  // namespace fqpts
