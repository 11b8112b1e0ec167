#include "fqpts/space.hpp"

#include "fqpts/error.hpp"

namespace fqpts {

std::uint64_t checked_pow(std::uint64_t q, unsigned e) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (__builtin_mul_overflow(out, q, &out)) {
      throw Error(ErrorCode::ArithmeticOverflow, "power exceeds 64 bits");
    }
  }
  return out;
}

std::uint64_t count_projective(std::uint64_t q, unsigned r) {
  std::uint64_t sum = 0;
  for (unsigned i = 0; i <= r; ++i) {
    if (__builtin_add_overflow(sum, checked_pow(q, i), &sum)) {
      throw Error(ErrorCode::ArithmeticOverflow, "p_r exceeds 64 bits");
    }
  }
  return sum;
}

namespace {

std::uint64_t budgeted(std::uint64_t (*count)(std::uint64_t, unsigned), std::uint64_t q, std::size_t n) {
  std::uint64_t size = 0;
  try {
    size = count(q, static_cast<unsigned>(n));
  } catch (const Error&) {
    size = kMaxEnumeration + 1;
  }
  if (size > kMaxEnumeration) throw Error(ErrorCode::BudgetExceeded, "enumeration exceeds 2^26 elements");
  return size;
}

}  // namespace

AffineSpace::AffineSpace(Field field, std::size_t n)
    : field_(std::move(field)), n_(n), size_(budgeted(&checked_pow, field_.order(), n)) {}

std::vector<FieldElement> AffineSpace::tuple_at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::IndexOutOfRange, "affine index out of range");
  std::vector<FieldElement> out(n_, field_.zero());
  const std::uint32_t q = field_.order();
  for (std::size_t j = n_; j-- > 0;) {
    out[j].value = static_cast<std::uint32_t>(index % q);
    index /= q;
  }
  return out;
}

ProjectiveSpace::ProjectiveSpace(Field field, std::size_t n)
    : field_(std::move(field)), n_(n), size_(budgeted(&count_projective, field_.order(), n)) {}

ProjPoint ProjectiveSpace::point_at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::IndexOutOfRange, "projective index out of range");
  const std::uint32_t q = field_.order();
  ProjPoint pt{std::vector<FieldElement>(n_ + 1, field_.zero())};
  for (std::size_t pivot = 0; pivot <= n_; ++pivot) {
    const std::uint64_t stratum = checked_pow(q, static_cast<unsigned>(n_ - pivot));
    if (index < stratum) {
      pt.coords[pivot] = field_.one();
      for (std::size_t j = n_; j > pivot; --j) {
        pt.coords[j].value = static_cast<std::uint32_t>(index % q);
        index /= q;
      }
      return pt;
    }
    index -= stratum;
  }
  throw Error(ErrorCode::IndexOutOfRange, "projective index out of range");
}

std::uint64_t ProjectiveSpace::index_of(std::span<const FieldElement> coords) const {
  if (coords.size() != n_ + 1) throw Error(ErrorCode::ArityMismatch, "wrong number of coordinates");
  const std::uint32_t q = field_.order();
  std::size_t pivot = 0;
  while (pivot <= n_ && coords[pivot].is_zero()) ++pivot;
  if (pivot > n_ || coords[pivot] != field_.one()) {
    throw Error(ErrorCode::InvalidInput, "point is not a canonical representative");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < pivot; ++i) index += checked_pow(q, static_cast<unsigned>(n_ - i));
  std::uint64_t offset = 0;
  for (std::size_t j = pivot + 1; j <= n_; ++j) offset = offset * q + coords[j].value;
  return index + offset;
}

}  // namespace fqpts
