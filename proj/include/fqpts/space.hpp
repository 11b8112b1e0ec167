#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fqpts/field.hpp"

namespace fqpts {

/// Cap on the number of tuples or points any single enumeration may produce.
inline constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 26;

/// p_r = q^r + ... + q + 1. Throws ArithmeticOverflow past 2^64.
std::uint64_t count_projective(std::uint64_t q, unsigned r);

/// q^e with overflow detection.
std::uint64_t checked_pow(std::uint64_t q, unsigned e);

/// Canonical representative: the first nonzero coordinate is 1.
struct ProjPoint {
  std::vector<FieldElement> coords;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// F_q^n in odometer order (last coordinate fastest).
class AffineSpace {
 public:
  AffineSpace(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  std::vector<FieldElement> tuple_at(std::uint64_t index) const;

  /// Calls fn(span<const FieldElement>) for tuples with index in [begin, end).
  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::vector<FieldElement> cur = tuple_at(begin);
    const std::uint32_t q = field_.order();
    for (std::uint64_t idx = begin;;) {
      fn(std::span<const FieldElement>(cur));
      if (++idx == end) break;
      for (std::size_t j = n_; j-- > 0;) {
        if (++cur[j].value < q) break;
        cur[j].value = 0;
      }
    }
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, size_, std::forward<Fn>(fn));
  }

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t size_;
};

/// P^n(F_q) stratified by pivot: pivot 0 first, each stratum in odometer
/// order over the coordinates after the pivot. Index space [0, p_n).
class ProjectiveSpace {
 public:
  ProjectiveSpace(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return size_; }

  ProjPoint point_at(std::uint64_t index) const;
  /// Position of a canonical representative in the enumeration.
  std::uint64_t index_of(std::span<const FieldElement> coords) const;

  template <class Fn>
  void for_each(std::uint64_t begin, std::uint64_t end, Fn&& fn) const {
    if (begin >= end) return;
    std::vector<FieldElement> cur = point_at(begin).coords;
    std::size_t pivot = 0;
    while (cur[pivot].is_zero()) ++pivot;
    const std::uint32_t q = field_.order();
    for (std::uint64_t idx = begin;;) {
      fn(std::span<const FieldElement>(cur));
      if (++idx == end) break;
      bool carried = true;
      for (std::size_t j = n_ + 1; j-- > pivot + 1;) {
        if (++cur[j].value < q) {
          carried = false;
          break;
        }
        cur[j].value = 0;
      }
      if (carried) {
        cur[pivot] = field_.zero();
        ++pivot;
        cur[pivot] = field_.one();
      }
    }
  }
  template <class Fn>
  void for_each(Fn&& fn) const {
    for_each(0, size_, std::forward<Fn>(fn));
  }

 private:
  Field field_;
  std::size_t n_;
  std::uint64_t size_;
};

}  // namespace fqpts
