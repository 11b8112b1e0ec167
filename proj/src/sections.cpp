#include "fqpts/sections.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "fqpts/error.hpp"
#include "fqpts/parallel.hpp"

namespace fqpts {

namespace {

std::uint64_t tuple_budget(std::uint64_t base, std::uint64_t exponent, const char* what) {
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(total, base, &total) || total > kMaxEnumeration) {
      throw Error(ErrorCode::BudgetExceeded, std::string(what) + " exceeds the 2^26 enumeration budget");
    }
  }
  return total;
}

void check_tuple(const VarietyDescriptor& v, const SectionTuple& gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    if (gamma.gamma[i].size() != v.nvars) {
      throw Error(ErrorCode::ArityMismatch,
                  "covector " + std::to_string(i) + " has " + std::to_string(gamma.gamma[i].size()) +
                      " entries, expected " + std::to_string(v.nvars),
                  i);
    }
    for (auto c : gamma.gamma[i]) {
      if (!v.field.contains(c)) throw Error(ErrorCode::FieldMismatch, "covector entry from another field", i);
    }
  }
}

FieldElement dot(const Field& f, std::span<const FieldElement> a, std::span<const FieldElement> b) {
  FieldElement acc = f.zero();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc = f.add(acc, f.mul(a[i], b[i]));
  }
  return acc;
}

std::vector<std::vector<FieldElement>> embed_tuple(const Field& base, const Field& target,
                                                   const std::vector<std::vector<FieldElement>>& gamma) {
  if (base == target) return gamma;
  std::vector<std::vector<FieldElement>> out;
  for (const auto& row : gamma) {
    std::vector<FieldElement> r;
    for (auto c : row) r.push_back(target.embed(base, c));
    out.push_back(std::move(r));
  }
  return out;
}

bool on_section(const Field& f, const std::vector<std::vector<FieldElement>>& gamma, std::span<const FieldElement> x) {
  return std::all_of(gamma.begin(), gamma.end(), [&](const auto& g) { return dot(f, g, x).is_zero(); });
}

struct SectionPoint {
  std::vector<FieldElement> coords;
  Matrix jacobian;
};

/// Points of V with their Jacobians over F_{q^e} for e = 1..max_ext.
class SectionContext {
 public:
  SectionContext(const VarietyDescriptor& v, unsigned max_ext, unsigned workers) : v_(v) {
    if (max_ext < 1) throw Error(ErrorCode::InvalidInput, "extension depth must be >= 1");
    if (max_ext > 1 && !v.field.is_prime()) {
      throw Error(ErrorCode::UnsupportedExtension, "extensions are only available over prime fields");
    }
    for (unsigned e = 1; e <= max_ext; ++e) {
      const VarietyOverField view(v, e);
      fields_.push_back(view.field());
      std::vector<SectionPoint> pts;
      for (auto& p : view.points(workers)) {
        Matrix jac = view.jacobian(p.coords);
        pts.push_back({std::move(p.coords), std::move(jac)});
      }
      points_.push_back(std::move(pts));
    }
  }

  std::uint64_t base_count() const noexcept { return points_.front().size(); }

  SectionVerdict classify(SectionTuple gamma) const {
    SectionVerdict out;
    out.checked_extensions = static_cast<unsigned>(fields_.size());
    const std::size_t full_rank = v_.codim() + gamma.size();
    out.cls = matrix_rank(v_.field, gamma.gamma) < gamma.size() ? SectionClass::Degenerate : SectionClass::Pass;
    for (std::size_t e = 0; e < fields_.size(); ++e) {
      const Field& f = fields_[e];
      const auto g = embed_tuple(v_.field, f, gamma.gamma);
      for (const auto& pt : points_[e]) {
        if (!on_section(f, g, pt.coords)) continue;
        if (e == 0) ++out.point_count;
        if (out.cls != SectionClass::Pass) continue;
        Matrix m = pt.jacobian;
        m.insert(m.end(), g.begin(), g.end());
        if (matrix_rank(f, std::move(m)) < full_rank) {
          out.cls = SectionClass::RankFail;
          out.witness = ProjPoint{pt.coords};
          out.witness_ext = static_cast<unsigned>(e + 1);
        }
      }
      if (out.cls != SectionClass::Pass) break;
    }
    out.gamma = std::move(gamma);
    return out;
  }

 private:
  const VarietyDescriptor& v_;
  std::vector<Field> fields_;
  std::vector<std::vector<SectionPoint>> points_;
};

SectionTuple split_flat(std::span<const FieldElement> flat, std::size_t width) {
  SectionTuple t;
  for (std::size_t i = 0; i < flat.size(); i += width) t.gamma.emplace_back(flat.begin() + i, flat.begin() + i + width);
  return t;
}

std::vector<std::uint64_t> merge_histograms(const std::vector<std::vector<std::uint64_t>>& parts, std::size_t size) {
  std::vector<std::uint64_t> hist(size, 0);
  for (const auto& p : parts) {
    for (std::size_t c = 0; c < p.size(); ++c) hist[c] += p[c];
  }
  return hist;
}

}  // namespace

std::uint64_t section_count(const VarietyDescriptor& v, const SectionTuple& gamma, unsigned ext) {
  check_tuple(v, gamma);
  const VarietyOverField view(v, ext);
  const auto g = embed_tuple(v.field, view.field(), gamma.gamma);
  const ProjectiveSpace space(view.field(), v.ambient_dim());
  std::uint64_t n = 0;
  space.for_each([&](std::span<const FieldElement> x) {
    if (on_section(view.field(), g, x) && view.contains(x)) ++n;
  });
  return n;
}

SectionVerdict section_smooth_check(const VarietyDescriptor& v, const SectionTuple& gamma, unsigned max_ext) {
  check_tuple(v, gamma);
  if (gamma.size() < 1 || static_cast<int>(gamma.size()) > v.dim - 1) {
    throw Error(ErrorCode::InvalidInput, "a section tuple needs between 1 and r-1 covectors");
  }
  return SectionContext(v, max_ext, 1).classify(gamma);
}

ScanReport bertini_scan(const VarietyDescriptor& v, std::optional<int> s_opt, unsigned max_ext, ScanMode mode,
                        unsigned workers) {
  const int s = s_opt.value_or(std::max(v.sing_dim, 0));
  if (s < 0 || s < v.sing_dim || s > v.dim - 2) {
    throw Error(ErrorCode::BadSingularDim, "scan needs max(singdim, 0) <= s <= r-2 (r=" + std::to_string(v.dim) +
                                               ", singdim=" + std::to_string(v.sing_dim) +
                                               ", s=" + std::to_string(s) + ")");
  }
  const std::size_t width = v.nvars;
  const std::uint64_t q = v.q();
  const int n = static_cast<int>(v.ambient_dim());
  const ProjectiveSpace pn(v.field, v.ambient_dim());
  const std::uint64_t total = mode == ScanMode::Affine ? tuple_budget(q, width * (s + 1), "affine scan")
                                                       : tuple_budget(pn.size(), s + 1, "projective scan");

  ScanReport rep;
  rep.mode = mode;
  rep.q = q;
  rep.n = n;
  rep.r = v.dim;
  rep.s = s;
  rep.max_ext = max_ext;
  rep.total = total;
  rep.bertini_degree = bertini_degree(v.bigD, v.dim, s, v.delta);
  rep.floor_applicable = BigInt(q) > rep.bertini_degree;
  if (rep.floor_applicable) {
    rep.floor = boost::multiprecision::pow(BigInt(q) - rep.bertini_degree, s + 1) *
                boost::multiprecision::pow(BigInt(q), n * (s + 1));
    if (mode == ScanMode::Projective) {
      // Each projective tuple stands for (q-1)^{s+1} affine ones.
      const BigInt scale = boost::multiprecision::pow(BigInt(q - 1), s + 1);
      rep.floor = (rep.floor + scale - 1) / scale;
    }
  }
  if (rep.bertini_degree > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::ArithmeticOverflow, "Bertini degree exceeds 64 bits");
  }
  const std::vector<std::uint64_t> ds(s + 1, rep.bertini_degree.convert_to<std::uint64_t>());
  const std::vector<std::uint64_t> ns(s + 1, static_cast<std::uint64_t>(n));
  rep.eta_ceiling = eta(q, ds, ns);

  const SectionContext ctx(v, max_ext, workers);
  const std::uint64_t big_n = ctx.base_count();
  std::vector<bool> hooley_ok(big_n + 1);
  for (std::uint64_t c = 0; c <= big_n; ++c) hooley_ok[c] = hooley_condition(big_n, q, s, c);

  struct Tally {
    std::uint64_t pass = 0, fail = 0, degenerate = 0, hooley_pass = 0;
    std::vector<SectionVerdict> witnesses;
  };
  auto chunks = parallel_chunks<Tally>(total, workers, [&](std::uint64_t b, std::uint64_t e) {
    Tally t;
    auto visit = [&](SectionTuple gamma) {
      SectionVerdict verdict = ctx.classify(std::move(gamma));
      switch (verdict.cls) {
        case SectionClass::Pass:
          ++t.pass;
          if (hooley_ok[verdict.point_count]) ++t.hooley_pass;
          break;
        case SectionClass::Degenerate:
          ++t.degenerate;
          break;
        case SectionClass::RankFail:
          ++t.fail;
          if (t.witnesses.size() < kMaxScanWitnesses) t.witnesses.push_back(std::move(verdict));
          break;
      }
    };
    if (mode == ScanMode::Affine) {
      const AffineSpace space(v.field, width * (s + 1));
      space.for_each(b, e, [&](std::span<const FieldElement> flat) { visit(split_flat(flat, width)); });
    } else {
      for (std::uint64_t idx = b; idx < e; ++idx) {
        SectionTuple gamma;
        gamma.gamma.resize(s + 1);
        std::uint64_t rest = idx;
        for (int i = s; i >= 0; --i) {
          gamma.gamma[i] = pn.point_at(rest % pn.size()).coords;
          rest /= pn.size();
        }
        visit(std::move(gamma));
      }
    }
    return t;
  });
  for (auto& t : chunks) {
    rep.pass += t.pass;
    rep.fail += t.fail;
    rep.degenerate += t.degenerate;
    rep.hooley_pass += t.hooley_pass;
    for (auto& w : t.witnesses) {
      if (rep.fail_witnesses.size() < kMaxScanWitnesses) rep.fail_witnesses.push_back(std::move(w));
    }
  }
  return rep;
}

std::vector<std::uint64_t> section_histogram(const VarietyDescriptor& v, int s, unsigned workers, HistogramPath path) {
  if (s < 0) throw Error(ErrorCode::InvalidInput, "s must be nonnegative");
  const std::size_t width = v.nvars;
  const std::uint64_t total = tuple_budget(v.q(), width * (s + 1), "second-moment sum");
  const auto points = VarietyOverField(v, 1).points(workers);
  const std::size_t npts = points.size();
  const Field& f = v.field;

  const AffineSpace covectors(f, width);
  const std::uint64_t words = (npts + 63) / 64;
  // Bitsets of annihilated points per covector; the direct path avoids the table when it would be large.
  constexpr std::uint64_t kMaxBitsetWords = std::uint64_t{1} << 24;
  if (path == HistogramPath::Auto) {
    path = covectors.size() * std::max<std::uint64_t>(words, 1) <= kMaxBitsetWords ? HistogramPath::Bitset
                                                                                   : HistogramPath::Direct;
  }

  std::vector<std::vector<std::uint64_t>> parts;
  if (path == HistogramPath::Direct) {
    const AffineSpace space(f, width * (s + 1));
    parts = parallel_chunks<std::vector<std::uint64_t>>(total, workers, [&](std::uint64_t b, std::uint64_t e) {
      std::vector<std::uint64_t> hist(npts + 1, 0);
      space.for_each(b, e, [&](std::span<const FieldElement> flat) {
        std::uint64_t c = 0;
        for (const auto& p : points) {
          bool on = true;
          for (std::size_t i = 0; on && i < flat.size(); i += width) on = dot(f, flat.subspan(i, width), p.coords).is_zero();
          c += on ? 1 : 0;
        }
        ++hist[c];
      });
      return hist;
    });
  } else {
    std::vector<std::uint64_t> bits(covectors.size() * words, 0);
    std::uint64_t cov = 0;
    covectors.for_each([&](std::span<const FieldElement> g) {
      for (std::size_t j = 0; j < npts; ++j) {
        if (dot(f, g, points[j].coords).is_zero()) bits[cov * words + j / 64] |= std::uint64_t{1} << (j % 64);
      }
      ++cov;
    });
    const std::uint64_t ncov = covectors.size();
    parts = parallel_chunks<std::vector<std::uint64_t>>(total, workers, [&](std::uint64_t b, std::uint64_t e) {
      std::vector<std::uint64_t> hist(npts + 1, 0);
      std::vector<std::uint64_t> digits(s + 1);
      for (std::uint64_t idx = b; idx < e; ++idx) {
        std::uint64_t rest = idx;
        for (int i = s; i >= 0; --i) {
          digits[i] = rest % ncov;
          rest /= ncov;
        }
        std::uint64_t c = 0;
        for (std::uint64_t w = 0; w < words; ++w) {
          std::uint64_t acc = ~std::uint64_t{0};
          for (auto d : digits) acc &= bits[d * words + w];
          c += static_cast<std::uint64_t>(std::popcount(acc));
        }
        ++hist[c];
      }
      return hist;
    });
  }
  return merge_histograms(parts, npts + 1);
}

bool hooley_condition(std::uint64_t n_points, std::uint64_t q, int s, std::uint64_t section_points) {
  const BigInt qs = boost::multiprecision::pow(BigInt(q), s + 1);
  const BigInt dev = BigInt(n_points) - qs * section_points;
  return dev * dev <= 2 * BigInt(n_points) * (qs - 1);
}

SecondMoment second_moment(const VarietyDescriptor& v, int s, unsigned workers) {
  const auto hist = section_histogram(v, s, workers);
  SecondMoment out;
  out.point_count = hist.size() - 1;
  const BigInt qs = boost::multiprecision::pow(BigInt(v.q()), s + 1);
  out.computed = 0;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    out.total += hist[c];
    if (hist[c] == 0) continue;
    const BigInt dev = BigInt(out.point_count) - qs * c;
    out.computed += dev * dev * hist[c];
  }
  out.lemma_value = BigInt(out.point_count) * out.total * (qs - 1);
  out.equal = out.computed == out.lemma_value;
  return out;
}

HooleyCensus hooley_condition_census(const VarietyDescriptor& v, int s, unsigned workers) {
  const auto hist = section_histogram(v, s, workers);
  const std::uint64_t big_n = hist.size() - 1;
  HooleyCensus out;
  for (std::size_t c = 0; c < hist.size(); ++c) {
    out.total += hist[c];
    if (hooley_condition(big_n, v.q(), s, c)) out.satisfying += hist[c];
  }
  out.half_mass = 2 * out.satisfying >= out.total;
  return out;
}

}  // namespace fqpts
