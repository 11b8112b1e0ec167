#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqpts/field.hpp"

namespace fqpts {

/// Upper limit on the total degree of any single term.
inline constexpr unsigned kMaxTermDegree = 1u << 16;

struct Term {
  FieldElement coeff;
  std::vector<std::uint32_t> exps;

  unsigned degree() const;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Multivariate polynomial over a finite field in canonical sparse form:
/// nonzero coefficients, distinct exponent vectors, terms sorted by exponent
/// vector in descending lexicographic order.
class SparsePolynomial {
 public:
  SparsePolynomial(Field field, std::size_t nvars);

  /// Normalizes an arbitrary term list (combines like terms, drops zeros).
  static SparsePolynomial from_terms(Field field, std::size_t nvars, std::vector<Term> terms);
  static SparsePolynomial constant(Field field, std::size_t nvars, FieldElement c);
  static SparsePolynomial variable(Field field, std::size_t nvars, std::size_t index);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  unsigned total_degree() const;

  FieldElement eval(std::span<const FieldElement> point) const;
  /// Formal partial derivative; exponents reduce in characteristic p.
  SparsePolynomial derivative(std::size_t var) const;
  /// Same polynomial with prime-field coefficients mapped into `ext`.
  SparsePolynomial embed(const Field& ext) const;

  /// Canonical text in the term grammar; the zero polynomial prints as
  /// "0:0,...,0", which parses back to zero.
  std::string format() const;

  SparsePolynomial operator+(const SparsePolynomial& o) const;
  SparsePolynomial operator-(const SparsePolynomial& o) const;
  SparsePolynomial operator*(const SparsePolynomial& o) const;
  SparsePolynomial scaled(FieldElement c) const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

 private:
  void require_compatible(const SparsePolynomial& o) const;

  Field field_;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Parses `coeff:e0,...,e_{n-1}` terms joined by " + ". Coefficients are
/// integers in [0,p) over prime fields and `c0;...;c_{k-1}` otherwise.
SparsePolynomial parse_poly(std::string_view text, std::size_t nvars, const Field& field);

struct Homogeneity {
  enum class Kind { Homogeneous, AnyDegree, NotHomogeneous };
  Kind kind;
  unsigned degree = 0;
};

Homogeneity check_homogeneous(const SparsePolynomial& f);

/// Consecutive variable groups of the given sizes (n_1+1, ..., n_m+1).
class VariableGrouping {
 public:
  explicit VariableGrouping(std::vector<std::size_t> sizes);

  const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
  std::size_t groups() const noexcept { return sizes_.size(); }
  std::size_t total() const noexcept;

 private:
  std::vector<std::size_t> sizes_;
};

struct MultiHomogeneity {
  enum class Kind { Multihomogeneous, AnyDegree, NotMultihomogeneous };
  Kind kind;
  std::vector<unsigned> degrees;
};

MultiHomogeneity check_multihomogeneous(const SparsePolynomial& f, const VariableGrouping& grouping);

}  // namespace fqpts
