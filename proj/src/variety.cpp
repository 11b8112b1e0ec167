#include "fqpts/variety.hpp"

#include <algorithm>
#include <numeric>

#include "fqpts/error.hpp"
#include "fqpts/parallel.hpp"

namespace fqpts {

VarietyDescriptor make_variety(Field field, std::size_t nvars, std::vector<SparsePolynomial> generators, int dim,
                               int sing_dim) {
  if (nvars < 1) throw Error(ErrorCode::InvalidInput, "need at least one variable");
  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (!(g.field() == field) || g.nvars() != nvars) {
      throw Error(ErrorCode::ArityMismatch, "generator " + std::to_string(i) + " has wrong field or arity", i);
    }
    const auto h = check_homogeneous(g);
    if (h.kind == Homogeneity::Kind::AnyDegree) {
      throw Error(ErrorCode::ZeroGenerator, "generator " + std::to_string(i) + " is zero", i);
    }
    if (h.kind == Homogeneity::Kind::NotHomogeneous) {
      throw Error(ErrorCode::NotHomogeneous, "generator " + std::to_string(i) + " is not homogeneous", i);
    }
    if (h.degree < 1) throw Error(ErrorCode::InvalidInput, "generator " + std::to_string(i) + " is constant", i);
    degrees.push_back(h.degree);
  }
  const long expected_dim = static_cast<long>(nvars) - 1 - static_cast<long>(generators.size());
  if (expected_dim < 0 || dim != expected_dim) {
    throw Error(ErrorCode::DimensionMismatch, "asserted dimension " + std::to_string(dim) + " but nvars-1-#generators = " +
                                                  std::to_string(expected_dim));
  }
  if (sing_dim < -1 || sing_dim > dim) {
    throw Error(ErrorCode::BadSingularDim, "singular locus dimension must lie in [-1, dim]");
  }

  std::vector<std::size_t> order(generators.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return degrees[a] > degrees[b]; });

  VarietyDescriptor v{field, nvars, {}, dim, sing_dim, {}, 1, 0};
  for (auto i : order) {
    v.generators.push_back(generators[i]);
    v.multidegree.push_back(degrees[i]);
    if (__builtin_mul_overflow(v.delta, std::uint64_t{degrees[i]}, &v.delta)) {
      throw Error(ErrorCode::ArithmeticOverflow, "degree product exceeds 64 bits");
    }
    v.bigD += degrees[i] - 1;
  }
  return v;
}

VarietyOverField::VarietyOverField(const VarietyDescriptor& v, unsigned ext)
    : v_(v), ext_(ext), field_(ext == 1 ? v.field : v.field.extension(ext)) {
  if (ext < 1) throw Error(ErrorCode::InvalidInput, "extension degree must be >= 1");
  for (const auto& g : v.generators) {
    generators_.push_back(g.embed(field_));
    std::vector<SparsePolynomial> row;
    for (std::size_t j = 0; j < v.nvars; ++j) row.push_back(generators_.back().derivative(j));
    partials_.push_back(std::move(row));
  }
}

bool VarietyOverField::contains(std::span<const FieldElement> x) const {
  return std::all_of(generators_.begin(), generators_.end(), [&](const auto& g) { return g.eval(x).is_zero(); });
}

Matrix VarietyOverField::jacobian(std::span<const FieldElement> x) const {
  Matrix out;
  for (const auto& row : partials_) {
    std::vector<FieldElement> r;
    r.reserve(row.size());
    for (const auto& d : row) r.push_back(d.eval(x));
    out.push_back(std::move(r));
  }
  return out;
}

std::size_t VarietyOverField::jacobian_rank(std::span<const FieldElement> x) const {
  if (x.size() != v_.nvars) throw Error(ErrorCode::ArityMismatch, "point has wrong number of coordinates");
  if (std::all_of(x.begin(), x.end(), [](FieldElement c) { return c.is_zero(); })) {
    throw Error(ErrorCode::InvalidInput, "the zero vector is not a projective point");
  }
  if (!contains(x)) throw Error(ErrorCode::PointNotOnVariety, "generators do not vanish at the point");
  return matrix_rank(field_, jacobian(x));
}

std::vector<ProjPoint> VarietyOverField::points(unsigned workers) const {
  const ProjectiveSpace space(field_, v_.ambient_dim());
  auto chunks = parallel_chunks<std::vector<ProjPoint>>(space.size(), workers, [&](std::uint64_t b, std::uint64_t e) {
    std::vector<ProjPoint> found;
    space.for_each(b, e, [&](std::span<const FieldElement> x) {
      if (contains(x)) found.push_back(ProjPoint{{x.begin(), x.end()}});
    });
    return found;
  });
  std::vector<ProjPoint> out;
  for (auto& c : chunks) out.insert(out.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  return out;
}

std::uint64_t VarietyOverField::count(unsigned workers) const {
  const ProjectiveSpace space(field_, v_.ambient_dim());
  auto chunks = parallel_chunks<std::uint64_t>(space.size(), workers, [&](std::uint64_t b, std::uint64_t e) {
    std::uint64_t n = 0;
    space.for_each(b, e, [&](std::span<const FieldElement> x) { n += contains(x) ? 1 : 0; });
    return n;
  });
  return std::accumulate(chunks.begin(), chunks.end(), std::uint64_t{0});
}

std::uint64_t count_points(const VarietyDescriptor& v, unsigned ext, unsigned workers) {
  return VarietyOverField(v, ext).count(workers);
}

std::size_t jacobian_rank_at(const VarietyDescriptor& v, std::span<const FieldElement> x) {
  return VarietyOverField(v, 1).jacobian_rank(x);
}

std::vector<PointClassification> rational_singular_points(const VarietyDescriptor& v, unsigned ext, unsigned workers) {
  const VarietyOverField view(v, ext);
  std::vector<PointClassification> out;
  for (auto& pt : view.points(workers)) {
    const std::size_t rank = matrix_rank(view.field(), view.jacobian(pt.coords));
    if (rank < v.codim()) out.push_back(PointClassification{std::move(pt), rank, false});
  }
  return out;
}

std::optional<std::string> dimension_drift_warning(const VarietyDescriptor& v, unsigned ext, std::uint64_t count) {
  const std::uint64_t big_q = checked_pow(v.q(), ext);
  const std::uint64_t pr = count_projective(big_q, static_cast<unsigned>(v.dim));
  const unsigned __int128 lo_lhs = static_cast<unsigned __int128>(count) * 2 * v.delta;
  const unsigned __int128 hi_rhs = static_cast<unsigned __int128>(pr) * 2 * v.delta;
  if (lo_lhs >= pr && count <= hi_rhs) return std::nullopt;
  return "warning: |V(F_" + std::to_string(big_q) + ")| = " + std::to_string(count) + " lies outside [p_r/(2*delta), 2*delta*p_r] for r = " +
         std::to_string(v.dim) + "; the asserted dimension may be wrong";
}

}  // namespace fqpts
