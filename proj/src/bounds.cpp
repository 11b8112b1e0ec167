#include "fqpts/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "fqpts/error.hpp"
#include "fqpts/variety.hpp"

namespace fqpts {

namespace {

BigInt big_pow(std::uint64_t base, unsigned e) { return boost::multiprecision::pow(BigInt(base), e); }

BigInt to_bigint_floor(const HighPrecision& x) {
  return HighPrecision(boost::multiprecision::floor(x)).convert_to<BigInt>();
}

HighPrecision to_high(const BigInt& v) { return HighPrecision(v.str()); }

}  // namespace

BigInt eta(std::uint64_t q, std::span<const std::uint64_t> d, std::span<const std::uint64_t> n) {
  const std::size_t m = d.size();
  if (m == 0 || n.size() != m) throw Error(ErrorCode::InvalidInput, "eta needs equally long nonempty d and n");
  if (m > 24) throw Error(ErrorCode::InvalidInput, "eta supports at most 24 groups");
  std::uint64_t n_total = 0;
  for (auto ni : n) n_total += ni;
  BigInt sum = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    BigInt d_eps = 1;
    unsigned weight = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask >> i & 1) {
        d_eps *= d[i];
        ++weight;
      }
    }
    BigInt term = d_eps * big_pow(q, static_cast<unsigned>(n_total + m - weight));
    if (weight % 2 == 1) sum += term;
    else sum -= term;
  }
  return sum;
}

BigInt bertini_degree(std::uint64_t bigD, int r, int s, std::uint64_t delta) {
  if (s < 0 || s > r - 2) throw Error(ErrorCode::InvalidInput, "bertini degree needs 0 <= s <= r-2");
  if (delta < 1) throw Error(ErrorCode::InvalidInput, "delta must be positive");
  return big_pow(bigD, static_cast<unsigned>(r - s - 1)) * (BigInt(bigD) + (r - s)) * delta;
}

BigInt betti_b1(std::uint64_t bigD, std::uint64_t delta) {
  BigInt value = (BigInt(bigD) - 2) * delta + 2;
  if (value < 0) throw Error(ErrorCode::InvalidInput, "(D-2)delta+2 is negative for D=" + std::to_string(bigD));
  return value;
}

BigInt projective_count(std::uint64_t q, int r) {
  BigInt sum = 0;
  for (int i = 0; i <= r; ++i) sum += big_pow(q, static_cast<unsigned>(i));
  return sum;
}

std::pair<BigInt, BigInt> trivial_bounds(std::uint64_t q, int r, std::uint64_t delta) {
  return {projective_count(q, r) * delta, big_pow(q, static_cast<unsigned>(std::max(r, 0))) * delta};
}

SurdSum SurdSum::integer(BigInt value) {
  if (value < 0) throw Error(ErrorCode::InvalidInput, "surd sums are nonnegative");
  SurdSum s;
  s.integer_ = std::move(value);
  return s;
}

SurdSum SurdSum::from_terms(std::uint64_t q, const std::vector<RadicalTerm>& terms) {
  int shift = 0;  // den = q^shift clears negative half-exponents
  for (const auto& t : terms) {
    if (t.half_exp < 0) shift = std::max(shift, (-t.half_exp + 1) / 2);
  }
  SurdSum s;
  s.den_ = big_pow(q, static_cast<unsigned>(shift));
  for (const auto& t : terms) {
    if (t.factor < 0) throw Error(ErrorCode::InvalidInput, "radical factor must be nonnegative");
    if (t.factor == 0) continue;
    BigInt radicand = t.factor * big_pow(q, static_cast<unsigned>(t.half_exp + 2 * shift));
    BigInt root = boost::multiprecision::sqrt(radicand);
    if (root * root == radicand) {
      s.integer_ += root;
      continue;
    }
    auto same = std::find(s.radicands_.begin(), s.radicands_.end(), radicand);
    if (same != s.radicands_.end()) {
      *same *= 4;  // sqrt(k) + sqrt(k) = sqrt(4k)
    } else {
      s.radicands_.push_back(std::move(radicand));
    }
  }
  if (s.radicands_.size() > 2) throw std::logic_error("SurdSum supports at most two irrational radicals");
  return s;
}

std::strong_ordering SurdSum::compare_integer(const BigInt& value) const {
  const BigInt t = value * den_ - integer_;
  if (t < 0) return std::strong_ordering::less;
  auto cmp = [](const BigInt& a, const BigInt& b) {
    return a < b ? std::strong_ordering::less : (a == b ? std::strong_ordering::equal : std::strong_ordering::greater);
  };
  if (radicands_.empty()) return cmp(t, 0);
  if (radicands_.size() == 1) return cmp(t * t, radicands_[0]);
  // t vs sqrt(k1) + sqrt(k2): square once, isolate the cross term, square again.
  const BigInt u = t * t - radicands_[0] - radicands_[1];
  if (u < 0) return std::strong_ordering::less;
  return cmp(u * u, 4 * radicands_[0] * radicands_[1]);
}

HighPrecision SurdSum::approx() const {
  HighPrecision sum = to_high(integer_);
  for (const auto& k : radicands_) sum += boost::multiprecision::sqrt(to_high(k));
  return sum / to_high(den_);
}

BigInt SurdSum::floor() const {
  // The 50-digit estimate can be far off for huge radicands; gallop to an
  // exact bracket lo <= S < hi and bisect.
  const BigInt guess = to_bigint_floor(approx());
  BigInt lo = guess, hi = guess + 1, step = 1;
  while (compare_integer(lo) == std::strong_ordering::greater) {
    lo -= step;
    step *= 2;
  }
  step = 1;
  while (compare_integer(hi) != std::strong_ordering::greater) {
    hi += step;
    step *= 2;
  }
  while (hi - lo > 1) {
    const BigInt mid = (lo + hi) / 2;
    if (compare_integer(mid) == std::strong_ordering::greater) hi = mid;
    else lo = mid;
  }
  return lo;
}

BigInt SurdSum::ceil() const {
  BigInt f = floor();
  return compare_integer(f) == std::strong_ordering::equal ? f : f + 1;
}

std::string format_real12(const HighPrecision& x) { return x.str(11, std::ios_base::scientific); }
std::string format_real30(const HighPrecision& x) { return x.str(29, std::ios_base::scientific); }

BoundInputs bound_inputs(const VarietyDescriptor& v, std::optional<int> s, std::optional<BigInt> betti) {
  BoundInputs in;
  in.q = v.q();
  in.n = static_cast<int>(v.ambient_dim());
  in.r = v.dim;
  in.s = s.value_or(v.sing_dim);
  if (in.s < v.sing_dim) {
    throw Error(ErrorCode::BadSingularDim, "s = " + std::to_string(in.s) + " is below the asserted singular dimension");
  }
  in.d = v.multidegree;
  in.delta = v.delta;
  in.bigD = v.bigD;
  in.betti = std::move(betti);
  return in;
}

const EstimateRow& BoundReport::row(std::string_view name) const {
  for (const auto& r : rows) {
    if (r.name == name) return r;
  }
  throw Error(ErrorCode::InvalidInput, "no estimate named " + std::string(name));
}

BoundReport estimate_suite(const BoundInputs& in) {
  const int r = in.r, s = in.s, n = in.n;
  if (!(s == -1 || (s >= 0 && s <= r - 2))) {
    throw Error(ErrorCode::BadSingularDim, "estimates need s = -1 or 0 <= s <= r-2 (r=" + std::to_string(r) +
                                               ", s=" + std::to_string(s) + ")");
  }
  if (!std::is_sorted(in.d.begin(), in.d.end(), std::greater<>())) {
    throw Error(ErrorCode::InvalidInput, "multidegree must be sorted descending");
  }
  const int betti_index = r - s - 1;
  BoundReport report;
  report.inputs = in;
  if (in.betti) {
    if (*in.betti < 0) throw Error(ErrorCode::InvalidInput, "Betti number must be nonnegative");
    report.betti = *in.betti;
  } else if (betti_index == 1) {
    report.betti = betti_b1(in.bigD, in.delta);
  } else {
    throw Error(ErrorCode::MissingBetti,
                "b'_" + std::to_string(betti_index) + " must be supplied (only b'_1 has a built-in formula)");
  }
  const BigInt& b = report.betti;
  const std::uint64_t q = in.q;
  const bool normal_case = r >= 2 && s == r - 2;

  {
    EstimateRow row{"cmp", std::nullopt, normal_case, "s = r-2 and r >= 2"};
    if (r >= 1) {
      const BigInt lead = betti_b1(in.bigD, in.delta);
      const BigInt tail = 14 * BigInt(in.bigD) * in.bigD * in.delta * in.delta;
      row.rhs = SurdSum::from_terms(q, {{lead * lead, 2 * r - 1}, {tail * tail, 2 * r - 2}});
    }
    report.rows.push_back(std::move(row));
  }
  {
    EstimateRow row{"deligne", std::nullopt, s == -1, "s = -1 (nonsingular)"};
    if (s == -1) row.rhs = SurdSum::from_terms(q, {{b * b, r}});
    report.rows.push_back(std::move(row));
  }
  {
    const std::uint64_t d_max = in.d.empty() ? 0 : in.d.front();
    const BigInt c = 9 * big_pow(2, static_cast<unsigned>(n - r)) *
                     boost::multiprecision::pow(BigInt(n - r) * d_max + 3, static_cast<unsigned>(n + 1));
    EstimateRow row{"gl", SurdSum::from_terms(q, {{b * b, r + s + 1}, {c * c, r + s}}), true,
                    "valid without restriction on q"};
    report.rows.push_back(std::move(row));
  }
  {
    EstimateRow row{"hooley-katz", std::nullopt, false, "needs 0 <= s <= r-2"};
    if (s >= 0) {
      const BigInt threshold = 2 * BigInt(s + 1) * bertini_degree(in.bigD, r, s, in.delta);
      row.applicable = BigInt(q) > threshold;
      row.condition = "q > 2(s+1)D^(r-s-1)(D+r-s)delta = " + threshold.str();
      row.rhs = SurdSum::from_terms(q, {{(b + 1) * (b + 1), r + s + 1}, {4 * BigInt(in.delta), r + s + 1}});
    }
    report.rows.push_back(std::move(row));
  }
  {
    EstimateRow row{"normal-ci", std::nullopt, normal_case, "s = r-2 and r >= 2"};
    if (r >= 1) {
      const BigInt factor = 9 * BigInt(r) * (BigInt(in.bigD) + 1) * (BigInt(in.bigD) + 1) *
                            boost::multiprecision::pow(BigInt(in.delta), 3);
      row.rhs = SurdSum::from_terms(q, {{factor, 2 * r - 1}});
    }
    report.rows.push_back(std::move(row));
  }

  std::tie(report.trivial_projective, report.trivial_affine) = trivial_bounds(q, r, in.delta);
  return report;
}

}  // namespace fqpts
