#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fqpts/field.hpp"
#include "fqpts/linalg.hpp"
#include "fqpts/poly.hpp"
#include "fqpts/space.hpp"

namespace fqpts {

/// A complete intersection V = {F_1 = ... = F_{n-r} = 0} in P^n with
/// asserted dimension r and asserted singular-locus dimension s (-1 when
/// nonsingular). Neither assertion is verified; every bound derived from
/// the descriptor is conditional on them.
struct VarietyDescriptor {
  Field field;
  std::size_t nvars = 0;
  /// Sorted so that generators[i] has degree multidegree[i].
  std::vector<SparsePolynomial> generators;
  int dim = 0;
  int sing_dim = -1;
  /// d_1 >= d_2 >= ... >= d_{n-r}.
  std::vector<unsigned> multidegree;
  /// Product of the d_i.
  std::uint64_t delta = 1;
  /// Sum of (d_i - 1).
  std::uint64_t bigD = 0;

  std::size_t ambient_dim() const noexcept { return nvars - 1; }
  std::size_t codim() const noexcept { return generators.size(); }
  std::uint32_t q() const noexcept { return field.order(); }
};

/// Validates and derives multidegree, delta and D.
VarietyDescriptor make_variety(Field field, std::size_t nvars, std::vector<SparsePolynomial> generators, int dim,
                               int sing_dim);

/// Reads the line-oriented variety file format.
VarietyDescriptor parse_variety(std::string_view text);
VarietyDescriptor load_variety(const std::filesystem::path& path);
/// Inverse of parse_variety up to comments and generator order.
std::string format_variety(const VarietyDescriptor& v);

struct PointClassification {
  ProjPoint point;
  std::size_t jacobian_rank = 0;
  bool smooth = false;
};

/// The generators and their Jacobian read over F_{q^e}. Extensions are only
/// available over prime base fields.
class VarietyOverField {
 public:
  VarietyOverField(const VarietyDescriptor& v, unsigned ext);

  const Field& field() const noexcept { return field_; }
  unsigned extension() const noexcept { return ext_; }
  const VarietyDescriptor& descriptor() const noexcept { return v_; }

  bool contains(std::span<const FieldElement> x) const;
  /// (n-r) x (n+1) matrix of partial derivatives at x.
  Matrix jacobian(std::span<const FieldElement> x) const;
  /// Rank of the Jacobian; throws PointNotOnVariety when x is not on V.
  std::size_t jacobian_rank(std::span<const FieldElement> x) const;

  /// Rational points over F_{q^e} in projective enumeration order.
  std::vector<ProjPoint> points(unsigned workers = 1) const;
  std::uint64_t count(unsigned workers = 1) const;

 private:
  VarietyDescriptor v_;
  unsigned ext_;
  Field field_;
  std::vector<SparsePolynomial> generators_;
  std::vector<std::vector<SparsePolynomial>> partials_;
};

/// |V(F_{q^e})|.
std::uint64_t count_points(const VarietyDescriptor& v, unsigned ext = 1, unsigned workers = 1);

/// Jacobian rank at any nonzero representative x of a point of V(F_q).
std::size_t jacobian_rank_at(const VarietyDescriptor& v, std::span<const FieldElement> x);

/// F_{q^e}-points of V at which the Jacobian drops rank, in enumeration order.
std::vector<PointClassification> rational_singular_points(const VarietyDescriptor& v, unsigned ext = 1,
                                                          unsigned workers = 1);

/// A diagnostic when count lies outside [p_r/(2 delta), 2 delta p_r] over
/// F_{q^e}, which usually means the asserted dimension is wrong.
std::optional<std::string> dimension_drift_warning(const VarietyDescriptor& v, unsigned ext, std::uint64_t count);

}  // namespace fqpts
