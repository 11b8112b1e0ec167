#include "fqpts/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fqpts/error.hpp"

namespace fqpts {

namespace {

using TermMap = std::map<std::vector<std::uint32_t>, FieldElement, std::greater<>>;

std::vector<Term> flatten(TermMap&& acc) {
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [exps, c] : acc) {
    if (c.is_zero()) continue;
    out.push_back(Term{c, exps});
  }
  return out;
}

void check_degree(const std::vector<std::uint32_t>& exps) {
  std::uint64_t deg = 0;
  for (auto e : exps) deg += e;
  if (deg > kMaxTermDegree) throw Error(ErrorCode::InvalidInput, "term degree exceeds 2^16");
}

}  // namespace

unsigned Term::degree() const {
  return std::accumulate(exps.begin(), exps.end(), 0u);
}

SparsePolynomial::SparsePolynomial(Field field, std::size_t nvars) : field_(std::move(field)), nvars_(nvars) {}

SparsePolynomial SparsePolynomial::from_terms(Field field, std::size_t nvars, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.exps.size() != nvars) throw Error(ErrorCode::ExponentArityMismatch, "term has wrong number of exponents");
    check_degree(t.exps);
    auto [it, fresh] = acc.try_emplace(std::move(t.exps), t.coeff);
    if (!fresh) it->second = field.add(it->second, t.coeff);
    else if (!field.contains(t.coeff)) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  }
  SparsePolynomial out(field, nvars);
  out.terms_ = flatten(std::move(acc));
  return out;
}

SparsePolynomial SparsePolynomial::constant(Field field, std::size_t nvars, FieldElement c) {
  return from_terms(field, nvars, {Term{c, std::vector<std::uint32_t>(nvars, 0)}});
}

SparsePolynomial SparsePolynomial::variable(Field field, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  std::vector<std::uint32_t> exps(nvars, 0);
  exps[index] = 1;
  auto one = field.one();
  return from_terms(std::move(field), nvars, {Term{one, std::move(exps)}});
}

unsigned SparsePolynomial::total_degree() const {
  unsigned deg = 0;
  for (const auto& t : terms_) deg = std::max(deg, t.degree());
  return deg;
}

FieldElement SparsePolynomial::eval(std::span<const FieldElement> point) const {
  if (point.size() != nvars_) throw Error(ErrorCode::ArityMismatch, "point has wrong number of coordinates");
  for (auto x : point) {
    if (!field_.contains(x)) throw Error(ErrorCode::FieldMismatch, "point coordinate from another field");
  }
  FieldElement acc = field_.zero();
  for (const auto& t : terms_) {
    FieldElement prod = t.coeff;
    for (std::size_t j = 0; j < nvars_ && !prod.is_zero(); ++j) {
      if (t.exps[j] != 0) prod = field_.mul(prod, field_.pow(point[j], t.exps[j]));
    }
    acc = field_.add(acc, prod);
  }
  return acc;
}

SparsePolynomial SparsePolynomial::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(ErrorCode::IndexOutOfRange, "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const std::uint32_t e = t.exps[var];
    if (e == 0) continue;
    FieldElement c = field_.mul(t.coeff, field_.from_int(e));
    if (c.is_zero()) continue;
    Term d{c, t.exps};
    d.exps[var] = e - 1;
    out.push_back(std::move(d));
  }
  return from_terms(field_, nvars_, std::move(out));
}

SparsePolynomial SparsePolynomial::embed(const Field& ext) const {
  if (ext == field_) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{ext.embed(field_, t.coeff), t.exps});
  return from_terms(ext, nvars_, std::move(out));
}

std::string SparsePolynomial::format() const {
  auto term_text = [&](FieldElement c, const std::vector<std::uint32_t>& exps) {
    std::string s = field_.format(c) + ":";
    for (std::size_t j = 0; j < exps.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(exps[j]);
    }
    return s;
  };
  if (terms_.empty()) return term_text(field_.zero(), std::vector<std::uint32_t>(nvars_, 0));
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += " + ";
    out += term_text(terms_[i].coeff, terms_[i].exps);
  }
  return out;
}

void SparsePolynomial::require_compatible(const SparsePolynomial& o) const {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
  if (nvars_ != o.nvars_) throw Error(ErrorCode::ArityMismatch, "polynomials in different variable counts");
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
  require_compatible(o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(field_, nvars_, std::move(all));
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const {
  return *this + o.scaled(field_.neg(field_.one()));
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
  require_compatible(o);
  TermMap acc;
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      std::vector<std::uint32_t> exps(nvars_);
      for (std::size_t j = 0; j < nvars_; ++j) exps[j] = a.exps[j] + b.exps[j];
      check_degree(exps);
      const FieldElement c = field_.mul(a.coeff, b.coeff);
      auto [it, fresh] = acc.try_emplace(std::move(exps), c);
      if (!fresh) it->second = field_.add(it->second, c);
    }
  }
  SparsePolynomial out(field_, nvars_);
  out.terms_ = flatten(std::move(acc));
  return out;
}

SparsePolynomial SparsePolynomial::scaled(FieldElement c) const {
  std::vector<Term> out;
  for (const auto& t : terms_) out.push_back(Term{field_.mul(t.coeff, c), t.exps});
  return from_terms(field_, nvars_, std::move(out));
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, std::size_t nvars, const Field& field)
      : text_(text), nvars_(nvars), field_(field) {}

  SparsePolynomial run() {
    std::vector<Term> terms;
    terms.push_back(term());
    while (pos_ < text_.size()) {
      expect(" + ");
      terms.push_back(term());
    }
    return SparsePolynomial::from_terms(field_, nvars_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at byte " + std::to_string(pos_), pos_);
  }

  void expect(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::uint64_t{1} << 40)) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected digit");
    return v;
  }

  FieldElement coefficient() {
    const std::size_t start = pos_;
    std::vector<std::uint32_t> digits;
    const unsigned k = field_.degree();
    for (unsigned i = 0; i < k; ++i) {
      if (i) expect(";");
      const std::uint64_t v = integer();
      if (v >= field_.characteristic()) {
        throw Error(ErrorCode::CoefficientOutOfRange,
                    "coefficient outside [0,p) at byte " + std::to_string(start), start);
      }
      digits.push_back(static_cast<std::uint32_t>(v));
    }
    return field_.from_coeffs(digits);
  }

  Term term() {
    Term t{coefficient(), {}};
    expect(":");
    const std::size_t start = pos_;
    t.exps.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(integer(), kMaxTermDegree + 1)));
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      t.exps.push_back(static_cast<std::uint32_t>(std::min<std::uint64_t>(integer(), kMaxTermDegree + 1)));
    }
    if (t.exps.size() != nvars_) {
      throw Error(ErrorCode::ExponentArityMismatch,
                  "term at byte " + std::to_string(start) + " lists " + std::to_string(t.exps.size()) +
                      " exponents, expected " + std::to_string(nvars_),
                  start);
    }
    return t;
  }

  std::string_view text_;
  std::size_t nvars_;
  const Field& field_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_poly(std::string_view text, std::size_t nvars, const Field& field) {
  return TermParser(text, nvars, field).run();
}

Homogeneity check_homogeneous(const SparsePolynomial& f) {
  if (f.is_zero()) return {Homogeneity::Kind::AnyDegree, 0};
  const unsigned d = f.terms().front().degree();
  for (const auto& t : f.terms()) {
    if (t.degree() != d) return {Homogeneity::Kind::NotHomogeneous, 0};
  }
  return {Homogeneity::Kind::Homogeneous, d};
}

VariableGrouping::VariableGrouping(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw Error(ErrorCode::InvalidInput, "grouping needs at least one group");
  for (auto s : sizes_) {
    if (s == 0) throw Error(ErrorCode::InvalidInput, "variable groups must be nonempty");
  }
}

std::size_t VariableGrouping::total() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::size_t{0});
}

MultiHomogeneity check_multihomogeneous(const SparsePolynomial& f, const VariableGrouping& grouping) {
  if (grouping.total() != f.nvars()) {
    throw Error(ErrorCode::ArityMismatch, "grouping does not partition the variables");
  }
  if (f.is_zero()) return {MultiHomogeneity::Kind::AnyDegree, {}};
  auto degrees_of = [&](const Term& t) {
    std::vector<unsigned> out;
    std::size_t j = 0;
    for (auto size : grouping.sizes()) {
      unsigned d = 0;
      for (std::size_t i = 0; i < size; ++i) d += t.exps[j++];
      out.push_back(d);
    }
    return out;
  };
  auto first = degrees_of(f.terms().front());
  for (const auto& t : f.terms()) {
    if (degrees_of(t) != first) return {MultiHomogeneity::Kind::NotMultihomogeneous, {}};
  }
  return {MultiHomogeneity::Kind::Multihomogeneous, std::move(first)};
}

}  // namespace fqpts
