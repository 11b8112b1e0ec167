#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fqpts {

/// Largest field order the engine accepts.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// An element of some F_{p^k}. `value` is the residue coefficient sequence
/// (c_0, ..., c_{k-1}) read as the base-p integer sum c_i p^i, which is also
/// the element's position in the field's enumeration order. `field_id`
/// identifies the owning field; elements of different fields never mix.
struct FieldElement {
  std::uint32_t value = 0;
  std::uint32_t field_id = 0;

  bool is_zero() const noexcept { return value == 0; }
  friend bool operator==(FieldElement, FieldElement) = default;
  friend auto operator<=>(FieldElement, FieldElement) = default;
};

enum class ArithOp { Add, Sub, Mul, Neg };

/// F_q with q = p^k, represented as F_p[x]/(modulus). Cheap to copy; two
/// Field handles compare equal iff they describe the same (p, modulus).
class Field {
 public:
  /// Builds F_{p^k}. When `modulus` is omitted and k > 1 the lexicographically
  /// smallest monic irreducible of degree k is chosen (coefficients compared
  /// from the constant term upward).
  static Field make(std::uint64_t p, unsigned k = 1,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime() const noexcept { return degree() == 1; }
  /// k+1 ascending coefficients; {0, 1} for prime fields.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  std::uint32_t id() const noexcept { return id_; }

  bool contains(FieldElement a) const noexcept { return a.field_id == id(); }

  FieldElement zero() const noexcept { return {0, id_}; }
  FieldElement one() const noexcept { return {1, id_}; }
  /// Constant residue v mod p.
  FieldElement from_int(std::int64_t v) const noexcept;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  /// The index-th element of the enumeration order.
  FieldElement at(std::uint64_t index) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a, b);
    if (k_ == 1) {
      std::uint32_t s = a.value + b.value;
      return {s >= p_ ? s - p_ : s, id_};
    }
    return add_ext(a, b);
  }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a, b);
    if (k_ == 1) {
      return {static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_), id_};
    }
    return mul_ext(a, b);
  }
  FieldElement neg(FieldElement a) const {
    check(a, a);
    if (k_ == 1) return {a.value == 0 ? 0 : p_ - a.value, id_};
    return neg_ext(a);
  }
  FieldElement arith(FieldElement a, FieldElement b, ArithOp op) const;
  /// Extended Euclid on the residue polynomial and the modulus.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;

  /// All q elements: 0, 1, then ascending base-p order.
  std::vector<FieldElement> elements() const;

  /// F_{p^e} built with make(p, e). Only defined over prime fields.
  Field extension(unsigned e) const;
  /// Image of an element of the prime field `base` as a constant residue.
  FieldElement embed(const Field& base, FieldElement a) const;

  /// "3" for prime fields, "c0;c1;...;c_{k-1}" otherwise.
  std::string format(FieldElement a) const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.id() == b.id(); }

  struct Impl;

 private:
  explicit Field(std::shared_ptr<const Impl> impl);
  void check(FieldElement a, FieldElement b) const {
    if (a.field_id != id_ || b.field_id != id_) mismatch();
  }
  [[noreturn]] void mismatch() const;
  FieldElement add_ext(FieldElement a, FieldElement b) const;
  FieldElement mul_ext(FieldElement a, FieldElement b) const;
  FieldElement neg_ext(FieldElement a) const;

  std::shared_ptr<const Impl> impl_;
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t id_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over F_p (ascending coefficients),
/// by root search and exhaustive trial division up to half the degree.
bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p);

}  // namespace fqpts
