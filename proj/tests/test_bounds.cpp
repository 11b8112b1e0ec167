#include <doctest.h>

#include <random>

#include "fqpts/bounds.hpp"
#include "fqpts/error.hpp"
#include "fqpts/space.hpp"
#include "support.hpp"

using namespace fqpts;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an fqpts::Error");
  return ErrorCode::InvalidInput;
}

BigInt eta_of(std::uint64_t q, std::vector<std::uint64_t> d, std::vector<std::uint64_t> n) { return eta(q, d, n); }

BigInt big_pow(std::uint64_t q, unsigned e) { return boost::multiprecision::pow(BigInt(q), e); }

/// Zeros of f in the affine product space F_q^{sum (n_i + 1)}.
std::uint64_t affine_zeros(const SparsePolynomial& f) {
  std::uint64_t zeros = 0;
  AffineSpace(f.field(), f.nvars()).for_each([&](std::span<const FieldElement> x) { zeros += f.eval(x).is_zero(); });
  return zeros;
}

}  // namespace

TEST_SUITE("bounds") {
  TEST_CASE("eta examples") {
    CHECK(eta_of(5, {2}, {2}) == 50);
    CHECK(eta_of(2, {1, 1}, {1, 1}) == 12);
    CHECK(eta_of(3, {2, 1}, {1, 1}) == 63);
    CHECK(eta_of(13, {6}, {3}) == 13182);
    CHECK(code_of([] { eta_of(3, {}, {}); }) == ErrorCode::InvalidInput);
    CHECK(code_of([] { eta_of(3, {1, 1}, {1}); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("the product of two linear forms attains eta") {
    const Field f = Field::make(2);
    const auto g = parse_poly("1:1,0,1,0", 4, f);
    CHECK(affine_zeros(g) == 12);
    CHECK(eta_of(2, {1, 1}, {1, 1}) == 12);
  }

  TEST_CASE("eta properties") {
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u}) {
      for (std::uint64_t d1 = 0; d1 < q; ++d1) {
        for (std::uint64_t d2 = 0; d2 < q; ++d2) {
          for (std::uint64_t n1 = 0; n1 <= 3; ++n1) {
            for (std::uint64_t n2 = 0; n2 <= 2; ++n2) {
              const BigInt e = eta_of(q, {d1, d2}, {n1, n2});
              const BigInt whole = big_pow(q, static_cast<unsigned>(n1 + n2 + 2));
              const BigInt complement = (big_pow(q, n1 + 1) - d1 * big_pow(q, n1)) *
                                        (big_pow(q, n2 + 1) - d2 * big_pow(q, n2));
              CHECK(whole - e == complement);
              CHECK(e < whole);
              CHECK(e <= eta_of(q, {d1 + 1, d2}, {n1, n2}));
            }
          }
        }
      }
    }
  }

  TEST_CASE("random multihomogeneous zero counts never exceed eta") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const std::uint64_t q = std::vector<std::uint64_t>{3, 5}[trial % 2];
      const Field f = Field::make(q);
      const std::vector<unsigned> n = trial % 3 ? std::vector<unsigned>{1, 1} : std::vector<unsigned>{2};
      std::vector<unsigned> d;
      for (std::size_t i = 0; i < n.size(); ++i) d.push_back(1 + static_cast<unsigned>(rng() % (q - 1)));
      const auto g = testing::random_multihomogeneous(f, n, d, 1 + rng() % 4, rng);
      if (g.is_zero()) continue;
      std::vector<std::uint64_t> d64(d.begin(), d.end()), n64(n.begin(), n.end());
      CHECK(BigInt(affine_zeros(g)) <= eta(q, d64, n64));
    }
  }

  TEST_CASE("a nonzero point exists when every degree is below q") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
      const std::uint64_t q = std::vector<std::uint64_t>{3, 5, 7}[trial % 3];
      const Field f = Field::make(q);
      const std::vector<unsigned> n{1, 1};
      const std::vector<unsigned> d{1 + static_cast<unsigned>(rng() % (q - 1)), 1 + static_cast<unsigned>(rng() % (q - 1))};
      const auto g = testing::random_multihomogeneous(f, n, d, 1 + rng() % 5, rng);
      if (g.is_zero()) continue;
      const ProjectiveSpace line(f, 1);
      bool found = false;
      for (std::uint64_t i = 0; i < line.size() && !found; ++i) {
        for (std::uint64_t j = 0; j < line.size() && !found; ++j) {
          auto x = line.point_at(i).coords;
          const auto y = line.point_at(j).coords;
          x.insert(x.end(), y.begin(), y.end());
          found = !g.eval(x).is_zero();
        }
      }
      CHECK(found);
    }
  }

  TEST_CASE("closed forms") {
    CHECK(bertini_degree(0, 2, 0, 1) == 0);
    CHECK(bertini_degree(1, 2, 0, 2) == 6);
    CHECK(bertini_degree(2, 3, 0, 4) == 4 * 5 * 4);
    CHECK(code_of([] { bertini_degree(1, 2, 1, 2); }) == ErrorCode::InvalidInput);
    CHECK(betti_b1(2, 3) == 2);
    CHECK(betti_b1(2, 4) == 2);
    CHECK(betti_b1(1, 2) == 0);
    CHECK(code_of([] { betti_b1(0, 3); }) == ErrorCode::InvalidInput);
    CHECK(projective_count(13, 2) == 183);
    CHECK(projective_count(1u << 20, 5) == BigInt("1267651809155201938729997434881"));
    const auto [proj, aff] = trivial_bounds(13, 2, 2);
    CHECK(proj == 366);
    CHECK(aff == 338);
  }

  TEST_CASE("surd sums compare exactly") {
    const auto three = SurdSum::integer(3);
    CHECK(three.compare_integer(3) == std::strong_ordering::equal);
    CHECK(three.floor() == 3);
    CHECK(three.ceil() == 3);
    // sqrt(2) + sqrt(3) = 3.146...
    const auto s = SurdSum::from_terms(1, {{2, 0}, {3, 0}});
    CHECK(s.floor() == 3);
    CHECK(s.ceil() == 4);
    CHECK(s.bounds(3));
    CHECK_FALSE(s.bounds(4));
    // sqrt(2) * 2 + sqrt(8) = sqrt(32) is kept as one radical.
    const auto merged = SurdSum::from_terms(2, {{2, 2}, {8, 0}});
    CHECK(merged.radicands().size() == 1);
    CHECK(merged.floor() == 5);
    // 2 * 4^{1/2} = 4, a perfect square.
    CHECK(SurdSum::from_terms(4, {{4, 1}}).compare_integer(4) == std::strong_ordering::equal);
    // Negative half exponents: sqrt(9) * 5^{-1/2} = 3 / sqrt(5) = 1.34...
    const auto small = SurdSum::from_terms(5, {{9, -1}});
    CHECK(small.floor() == 1);
    CHECK(small.denominator() == 5);
    // Boundary: sqrt(a) + sqrt(b) hits an integer exactly.
    const auto exact = SurdSum::from_terms(1, {{4, 0}, {9, 0}});
    CHECK(exact.compare_integer(5) == std::strong_ordering::equal);
  }

  TEST_CASE("surd floors agree with high precision on random inputs") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 500; ++i) {
      const std::uint64_t q = 2 + rng() % 50;
      const auto s = SurdSum::from_terms(q, {{BigInt(rng() % 1000), static_cast<int>(rng() % 9) - 2},
                                             {BigInt(rng() % 1000), static_cast<int>(rng() % 9) - 2}});
      const BigInt f = s.floor();
      CHECK(s.bounds(f));
      CHECK_FALSE(s.bounds(f + 1));
      CHECK(HighPrecision(f.str()) <= s.approx());
      CHECK(HighPrecision(BigInt(f + 1).str()) > s.approx());
    }
    // Radicands far beyond 50 digits still floor exactly.
    const auto huge = SurdSum::from_terms(1u << 20, {{BigInt(2), 21}, {BigInt(3), 20}});
    const BigInt f = huge.floor();
    CHECK(huge.bounds(f));
    CHECK_FALSE(huge.bounds(f + 1));
  }

  TEST_CASE("estimates for the cone over F_13") {
    const auto report = estimate_suite(bound_inputs(testing::cone(13)));
    CHECK(report.betti == 0);
    const auto& hk = report.row("hooley-katz");
    CHECK(hk.applicable);
    CHECK(format_real30(hk.rhs->approx()) == "1.79446673934444266391283703312e+02");
    CHECK(format_real12(hk.rhs->approx()) == "1.79446673934e+02");
    CHECK(hk.rhs->ceil() == 180);
    CHECK(report.row("cmp").rhs->compare_integer(728) == std::strong_ordering::equal);
    CHECK(report.row("gl").rhs->compare_integer(146250) == std::strong_ordering::equal);
    CHECK(format_real12(report.row("normal-ci").rhs->approx()) == "1.12493199794e+03");
    CHECK_FALSE(report.row("deligne").applicable);
    CHECK_FALSE(report.row("deligne").rhs.has_value());
    // Dominance of the leading estimate over the alternatives.
    CHECK(hk.rhs->approx() < report.row("cmp").rhs->approx());
    CHECK(report.row("cmp").rhs->approx() < report.row("normal-ci").rhs->approx());
    CHECK(report.row("normal-ci").rhs->approx() < report.row("gl").rhs->approx());
    CHECK(report.trivial_projective == 366);
    std::vector<std::string> names;
    for (const auto& r : report.rows) names.push_back(r.name);
    CHECK(names == std::vector<std::string>{"cmp", "deligne", "gl", "hooley-katz", "normal-ci"});
  }

  TEST_CASE("applicability rules") {
    // Cone over F_5: q = 5 does not exceed 2 * 6.
    CHECK_FALSE(estimate_suite(bound_inputs(testing::cone(5))).row("hooley-katz").applicable);
    // Fermat cubic: only Deligne and GL apply.
    const auto fermat = estimate_suite(bound_inputs(testing::fermat_cubic(7)));
    CHECK(fermat.betti == 2);
    CHECK(fermat.row("deligne").applicable);
    CHECK(fermat.row("deligne").rhs->compare_integer(5) == std::strong_ordering::less);
    CHECK(fermat.row("gl").applicable);
    CHECK_FALSE(fermat.row("normal-ci").applicable);
    CHECK_FALSE(fermat.row("cmp").applicable);
    CHECK_FALSE(fermat.row("hooley-katz").applicable);

    CHECK(code_of([] { estimate_suite(bound_inputs(testing::smooth_quadric(3))); }) == ErrorCode::MissingBetti);
    CHECK_NOTHROW(estimate_suite(bound_inputs(testing::smooth_quadric(3), std::nullopt, BigInt(1))));
    CHECK(code_of([] { bound_inputs(testing::cone(3), -1); }) == ErrorCode::BadSingularDim);
    CHECK(code_of([] { estimate_suite(bound_inputs(testing::cone(3), 1)); }) == ErrorCode::BadSingularDim);
    CHECK(code_of([] { estimate_suite(bound_inputs(testing::cone(3), std::nullopt, BigInt(-1))); }) ==
          ErrorCode::InvalidInput);
  }

  TEST_CASE("Hasse bound for the Fermat cubic") {
    for (std::uint64_t p : {5u, 7u, 11u, 13u, 17u, 19u}) {
      const auto n = count_points(testing::fermat_cubic(p));
      const BigInt dev = BigInt(n) - (p + 1);
      CHECK(dev * dev <= 4 * BigInt(p));
      const auto report = estimate_suite(bound_inputs(testing::fermat_cubic(p)));
      CHECK(report.row("deligne").rhs->bounds(abs(dev)));
    }
  }
}
