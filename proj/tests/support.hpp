#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fqpts/field.hpp"
#include "fqpts/poly.hpp"
#include "fqpts/variety.hpp"

namespace fqpts::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(FQPTS_TEST_DATA) / name;
}

inline VarietyDescriptor variety(std::uint64_t p, std::size_t nvars, int dim, int sing_dim,
                                 const std::vector<std::string>& polys) {
  const Field f = Field::make(p);
  std::vector<SparsePolynomial> gens;
  for (const auto& s : polys) gens.push_back(parse_poly(s, nvars, f));
  return make_variety(f, nvars, std::move(gens), dim, sing_dim);
}

inline std::string neg_one(std::uint64_t p) { return std::to_string(p - 1); }

/// X0 X1 - X2^2 in P^3, singular at (0:0:0:1).
inline VarietyDescriptor cone(std::uint64_t p) {
  return variety(p, 4, 2, 0, {"1:1,1,0,0 + " + neg_one(p) + ":0,0,2,0"});
}

/// X0 X1 - X2 X3 in P^3.
inline VarietyDescriptor smooth_quadric(std::uint64_t p) {
  return variety(p, 4, 2, -1, {"1:1,1,0,0 + " + neg_one(p) + ":0,0,1,1"});
}

inline VarietyDescriptor fermat_cubic(std::uint64_t p) {
  return variety(p, 3, 1, -1, {"1:3,0,0 + 1:0,3,0 + 1:0,0,3"});
}

/// X0 X1 - X2^2 in P^2.
inline VarietyDescriptor conic(std::uint64_t p) { return variety(p, 3, 1, -1, {"1:1,1,0 + " + neg_one(p) + ":0,0,2"}); }

/// X1 = 0 in P^1, the single point (1:0).
inline VarietyDescriptor point(std::uint64_t p) { return variety(p, 2, 0, -1, {"1:0,1"}); }

/// A binary quadric without F_p-roots (two conjugate points over F_{p^2}).
inline VarietyDescriptor empty(std::uint64_t p) {
  if (p == 3) return variety(p, 2, 0, -1, {"1:2,0 + 1:0,2"});
  return variety(p, 2, 0, -1, {"1:2,0 + 1:1,1 + 1:0,2"});
}

struct CorpusEntry {
  std::string name;
  VarietyDescriptor v;
  /// b'_{r-s-1} at the asserted s when it has no closed formula.
  std::optional<std::uint64_t> betti;
};

/// The six reference varieties over F_p (p in {2, 3, 5, ...}; empty() needs p = 2, 3 or 5).
inline std::vector<CorpusEntry> corpus(std::uint64_t p) {
  return {{"cone", cone(p), std::nullopt},          {"smooth-quadric", smooth_quadric(p), 1},
          {"fermat-cubic", fermat_cubic(p), std::nullopt}, {"conic", conic(p), std::nullopt},
          {"point", point(p), 0},                   {"empty", empty(p), 1}};
}

inline FieldElement random_element(const Field& f, std::mt19937_64& rng) {
  return f.at(std::uniform_int_distribution<std::uint64_t>(0, f.order() - 1)(rng));
}

inline FieldElement random_nonzero(const Field& f, std::mt19937_64& rng) {
  return f.at(std::uniform_int_distribution<std::uint64_t>(1, f.order() - 1)(rng));
}

inline std::vector<FieldElement> random_point(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<FieldElement> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(random_element(f, rng));
  return x;
}

/// Up to `terms` random monomials with per-variable exponent at most max_exp.
inline SparsePolynomial random_poly(const Field& f, std::size_t nvars, std::size_t terms, unsigned max_exp,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<Term> ts;
  for (std::size_t t = 0; t < terms; ++t) {
    Term term{random_element(f, rng), {}};
    for (std::size_t i = 0; i < nvars; ++i) term.exps.push_back(exp(rng));
    ts.push_back(std::move(term));
  }
  return SparsePolynomial::from_terms(f, nvars, std::move(ts));
}

/// A random homogeneous polynomial of the given degree.
inline SparsePolynomial random_homogeneous(const Field& f, std::size_t nvars, unsigned degree, std::size_t terms,
                                           std::mt19937_64& rng) {
  std::vector<Term> ts;
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (std::size_t t = 0; t < terms; ++t) {
    Term term{random_nonzero(f, rng), std::vector<std::uint32_t>(nvars, 0)};
    for (unsigned k = 0; k < degree; ++k) ++term.exps[var(rng)];
    ts.push_back(std::move(term));
  }
  return SparsePolynomial::from_terms(f, nvars, std::move(ts));
}

/// A random polynomial of multidegree `d` in groups of sizes n_i + 1.
inline SparsePolynomial random_multihomogeneous(const Field& f, const std::vector<unsigned>& n,
                                                const std::vector<unsigned>& d, std::size_t terms,
                                                std::mt19937_64& rng) {
  std::size_t nvars = 0;
  for (auto ni : n) nvars += ni + 1;
  std::vector<Term> ts;
  for (std::size_t t = 0; t < terms; ++t) {
    Term term{random_nonzero(f, rng), std::vector<std::uint32_t>(nvars, 0)};
    std::size_t offset = 0;
    for (std::size_t g = 0; g < n.size(); ++g) {
      std::uniform_int_distribution<std::size_t> var(offset, offset + n[g]);
      for (unsigned k = 0; k < d[g]; ++k) ++term.exps[var(rng)];
      offset += n[g] + 1;
    }
    ts.push_back(std::move(term));
  }
  return SparsePolynomial::from_terms(f, nvars, std::move(ts));
}

}  // namespace fqpts::testing
