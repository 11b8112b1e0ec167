#include "fqpts/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fqpts/error.hpp"

namespace fqpts {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ExponentArityMismatch: return "ExponentArityMismatch";
    case ErrorCode::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ZeroGenerator: return "ZeroGenerator";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::BadSingularDim: return "BadSingularDim";
    case ErrorCode::UnsupportedExtension: return "UnsupportedExtension";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::MissingBetti: return "MissingBetti";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending, no trailing zeros

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder and quotient of a by b (b nonzero).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  Poly quot;
  if (a.size() < b.size()) return {quot, a};
  quot.assign(a.size() - b.size() + 1, 0);
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  for (std::size_t i = a.size(); i-- >= b.size();) {
    const std::uint64_t c = a[i] * lead_inv % p;
    if (c == 0) continue;
    const std::size_t shift = i + 1 - b.size();
    quot[shift] = static_cast<std::uint32_t>(c);
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
    }
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

Poly mul_poly(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>((out[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(out);
  return out;
}

Poly sub_poly(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

std::uint64_t checked_power(std::uint64_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) return kMaxFieldOrder + 1;
  }
  return q;
}

}  // namespace

struct Field::Impl {
  std::uint32_t p;
  unsigned k;
  std::uint32_t q;
  std::uint32_t id;
  std::vector<std::uint32_t> modulus;

  void digits(std::uint32_t v, std::uint32_t* out) const {
    for (unsigned i = 0; i < k; ++i) {
      out[i] = v % p;
      v /= p;
    }
  }
  std::uint32_t encode(const std::uint32_t* d) const {
    std::uint32_t v = 0;
    for (unsigned i = k; i-- > 0;) v = v * p + d[i];
    return v;
  }
};

namespace {

std::shared_ptr<const Field::Impl> intern(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus) {
  static std::mutex mu;
  static std::map<std::vector<std::uint32_t>, std::shared_ptr<const Field::Impl>> registry;
  std::vector<std::uint32_t> key{p};
  key.insert(key.end(), modulus.begin(), modulus.end());
  std::lock_guard lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second;
  auto impl = std::make_shared<Field::Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = static_cast<std::uint32_t>(checked_power(p, k));
  impl->id = static_cast<std::uint32_t>(registry.size() + 1);
  impl->modulus = std::move(modulus);
  registry.emplace(std::move(key), impl);
  return impl;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const std::uint32_t> monic, std::uint32_t p) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned deg = static_cast<unsigned>(f.size() - 1);
  if (deg == 1) return true;
  for (std::uint32_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return false;
  }
  for (unsigned d = 2; 2 * d <= deg; ++d) {
    const std::uint64_t count = checked_power(p, d);
    Poly g(d + 1, 0);
    g[d] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (divmod(f, g, p).second.empty()) return false;
    }
  }
  return true;
}

Field::Field(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)), p_(impl_->p), k_(impl_->k), q_(impl_->q), id_(impl_->id) {}

Field Field::make(std::uint64_t p, unsigned k, std::optional<std::vector<std::uint32_t>> modulus) {
  if (k < 1) throw Error(ErrorCode::InvalidInput, "extension degree must be >= 1");
  if (p > kMaxFieldOrder) throw Error(ErrorCode::BudgetExceeded, "p exceeds 2^20");
  if (!fqpts::is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (checked_power(p, k) > kMaxFieldOrder) {
    throw Error(ErrorCode::BudgetExceeded, "p^k exceeds 2^20");
  }
  const auto pp = static_cast<std::uint32_t>(p);
  if (modulus) {
    auto& m = *modulus;
    if (m.size() != k + 1) throw Error(ErrorCode::InvalidInput, "modulus must have k+1 coefficients");
    if (std::any_of(m.begin(), m.end(), [&](std::uint32_t c) { return c >= pp; })) {
      throw Error(ErrorCode::CoefficientOutOfRange, "modulus coefficient outside [0,p)");
    }
    if (m.back() != 1) throw Error(ErrorCode::NotIrreducible, "modulus is not monic");
    if (!is_irreducible(m, pp)) throw Error(ErrorCode::NotIrreducible, "modulus factors over F_p");
    if (k == 1) m = {0, 1};
    return Field(intern(pp, k, std::move(m)));
  }
  if (k == 1) return Field(intern(pp, 1, {0, 1}));
  const std::uint64_t count = checked_power(pp, k);
  std::vector<std::uint32_t> cand(k + 1, 0);
  cand[k] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // c_0 is the most significant digit of idx: lexicographic from the constant term.
    std::uint64_t v = idx;
    for (unsigned i = k; i-- > 0;) {
      cand[i] = static_cast<std::uint32_t>(v % pp);
      v /= pp;
    }
    if (is_irreducible(cand, pp)) return Field(intern(pp, k, cand));
  }
  throw Error(ErrorCode::NotIrreducible, "no irreducible polynomial found");
}

const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

void Field::mismatch() const {
  throw Error(ErrorCode::FieldMismatch, "element does not belong to this field");
}

FieldElement Field::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r), id_};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != k_) throw Error(ErrorCode::ArityMismatch, "expected k residue coefficients");
  for (auto c : coeffs) {
    if (c >= p_) throw Error(ErrorCode::CoefficientOutOfRange, "residue coefficient outside [0,p)");
  }
  return {impl_->encode(coeffs.data()), id_};
}

FieldElement Field::at(std::uint64_t index) const {
  if (index >= q_) throw Error(ErrorCode::IndexOutOfRange, "element index outside [0,q)");
  return {static_cast<std::uint32_t>(index), id_};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  check(a, a);
  std::vector<std::uint32_t> out(k_);
  impl_->digits(a.value, out.data());
  return out;
}

FieldElement Field::add_ext(FieldElement a, FieldElement b) const {
  std::uint32_t da[32], db[32];
  impl_->digits(a.value, da);
  impl_->digits(b.value, db);
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint32_t s = da[i] + db[i];
    da[i] = s >= p_ ? s - p_ : s;
  }
  return {impl_->encode(da), id_};
}

FieldElement Field::neg_ext(FieldElement a) const {
  std::uint32_t da[32];
  impl_->digits(a.value, da);
  for (unsigned i = 0; i < k_; ++i) da[i] = da[i] == 0 ? 0 : p_ - da[i];
  return {impl_->encode(da), id_};
}

FieldElement Field::mul_ext(FieldElement a, FieldElement b) const {
  std::uint32_t da[32], db[32];
  std::uint64_t prod[64] = {};
  impl_->digits(a.value, da);
  impl_->digits(b.value, db);
  for (unsigned i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_;
  }
  const auto& m = impl_->modulus;
  for (unsigned i = 2 * k_ - 1; i-- > k_;) {
    const std::uint64_t c = prod[i];
    if (c == 0) continue;
    // x^i = x^{i-k} * x^k and x^k = -(m_0 + ... + m_{k-1} x^{k-1}).
    for (unsigned j = 0; j < k_; ++j) prod[i - k_ + j] = (prod[i - k_ + j] + (p_ - c) * m[j]) % p_;
    prod[i] = 0;
  }
  for (unsigned i = 0; i < k_; ++i) da[i] = static_cast<std::uint32_t>(prod[i]);
  return {impl_->encode(da), id_};
}

FieldElement Field::arith(FieldElement a, FieldElement b, ArithOp op) const {
  switch (op) {
    case ArithOp::Add: return add(a, b);
    case ArithOp::Sub: return sub(a, b);
    case ArithOp::Mul: return mul(a, b);
    case ArithOp::Neg: check(b, b); return neg(a);
  }
  throw Error(ErrorCode::InvalidInput, "unknown arithmetic operation");
}

FieldElement Field::inv(FieldElement a) const {
  check(a, a);
  if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
  if (k_ == 1) return {inv_mod(a.value, p_), id_};
  // Extended Euclid: track s with s*a == r (mod modulus).
  Poly r0 = impl_->modulus, r1 = coeffs(a), s0, s1{1};
  trim(r1);
  while (!r1.empty()) {
    auto [quot, rem] = divmod(r0, r1, p_);
    Poly s2 = sub_poly(s0, mul_poly(quot, s1, p_), p_);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod(r0[0], p_);
  std::uint32_t out[32] = {};
  for (std::size_t i = 0; i < s0.size(); ++i) out[i] = static_cast<std::uint32_t>(s0[i] * scale % p_);
  return {impl_->encode(out), id_};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  check(a, a);
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e != 0) base = mul(base, base);
  }
  return result;
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i, id_};
  return out;
}

Field Field::extension(unsigned e) const {
  if (k_ != 1) {
    throw Error(ErrorCode::UnsupportedExtension, "extensions are only built over prime fields");
  }
  if (e == 1) return *this;
  return make(p_, e);
}

FieldElement Field::embed(const Field& base, FieldElement a) const {
  if (!base.contains(a)) base.mismatch();
  if (!base.is_prime() || base.characteristic() != p_) {
    throw Error(ErrorCode::UnsupportedExtension, "embedding needs a prime base field of equal characteristic");
  }
  return {a.value, id_};
}

std::string Field::format(FieldElement a) const {
  check(a, a);
  if (k_ == 1) return std::to_string(a.value);
  std::string out;
  const auto c = coeffs(a);
  for (unsigned i = 0; i < k_; ++i) {
    if (i) out += ';';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace fqpts
