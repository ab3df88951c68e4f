#include "cubicdet/gf.hpp"

#include <charconv>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace cubicdet {
namespace {

constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

// Dense polynomials over F_p, low degree first. Only used while building a
// field, so clarity wins over speed here.
using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0
  std::uint64_t result = 1, base = a % p;
  std::uint64_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Remainder of a modulo the monic-or-not nonzero polynomial b.
PolyP poly_mod(PolyP a, const PolyP& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// a * b mod f, with a, b of length m (packed digits) and f monic of degree m.
PolyP mul_mod(const PolyP& a, const PolyP& b, const PolyP& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * m - 1; k >= m; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    // x^k = x^{k-m} * x^m = -x^{k-m} * (f_0 + ... + f_{m-1} x^{m-1})
    for (std::size_t i = 0; i < m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - f[i]) % p * c) % p;
  }
  PolyP out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

PolyP unpack(std::uint32_t v, std::uint32_t p, unsigned m) {
  PolyP out(m);
  for (unsigned i = 0; i < m; ++i) {
    out[i] = v % p;
    v /= p;
  }
  return out;
}

std::uint32_t pack(const PolyP& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= base;
  return r;
}

// Exhaustive search for a monic factor of degree 1..m/2.
bool is_irreducible(const PolyP& f, std::uint32_t p) {
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  for (unsigned d = 1; 2 * d <= m; ++d) {
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      PolyP g = unpack(static_cast<std::uint32_t>(t), p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

struct Registry {
  std::mutex mutex;
  std::map<std::vector<std::uint32_t>, std::unique_ptr<FieldSpec>> fields;
  std::map<std::pair<std::uint32_t, unsigned>, const FieldSpec*> defaults;
  std::map<std::pair<const FieldSpec*, const FieldSpec*>, std::uint32_t> roots;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) noexcept {
  if (q < 2) return std::nullopt;
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return std::pair{static_cast<std::uint32_t>(p), m};
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus, bool is_default)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)),
      default_modulus_(is_default) {
  build_tables();
}

void FieldSpec::build_tables() {
  inv_.assign(q_, 0);
  if (m_ == 1) {
    for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = inv_mod(a, p_);
    return;
  }
  // Find a primitive element: g^((q-1)/r) != 1 for every prime r | q-1.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [&](const PolyP& g, std::uint64_t e) {
    PolyP result = unpack(1, p_, m_);
    PolyP base = g;
    while (e) {
      if (e & 1) result = mul_mod(result, base, modulus_, p_);
      base = mul_mod(base, base, modulus_, p_);
      e >>= 1;
    }
    return result;
  };
  PolyP g;
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    PolyP c = unpack(cand, p_, m_);
    bool primitive = true;
    for (auto r : factors) {
      if (pack(slow_pow(c, (q_ - 1) / r), p_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = std::move(c);
      break;
    }
  }
  const std::uint32_t order = q_ - 1;
  exp_.assign(2 * static_cast<std::size_t>(order), 0);
  log_.assign(q_, kNoLog);
  PolyP cur = unpack(1, p_, m_);
  for (std::uint32_t i = 0; i < order; ++i) {
    const std::uint32_t v = pack(cur, p_);
    exp_[i] = v;
    exp_[i + order] = v;
    log_[v] = i;
    cur = mul_mod(cur, g, modulus_, p_);
  }
  for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(order - log_[a]) % order];
  if (p_ != 2) {
    neg_one_log_ = order / 2;
    zech_.assign(order, kNoLog);
    for (std::uint32_t n = 0; n < order; ++n) {
      const std::uint32_t v = exp_[n];
      const std::uint32_t c0 = v % p_;
      const std::uint32_t w = v - c0 + (c0 + 1) % p_;
      zech_[n] = w == 0 ? kNoLog : log_[w];
    }
  }
}

std::string FieldSpec::literal() const { return std::to_string(p_) + "^" + std::to_string(m_); }

std::uint32_t FieldSpec::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0) return b;
  if (b == 0) return a;
  if (p_ == 2) return a ^ b;
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  const std::uint32_t la = log_[a], lb = log_[b];
  const std::uint32_t d = lb >= la ? lb - la : lb + (q_ - 1) - la;
  const std::uint32_t z = zech_[d];
  if (z == kNoLog) return 0;
  return exp_[la + z];
}

std::uint32_t FieldSpec::neg(std::uint32_t a) const noexcept {
  if (a == 0 || p_ == 2) return a;
  if (m_ == 1) return p_ - a;
  return exp_[log_[a] + neg_one_log_];
}

std::uint32_t FieldSpec::sub(std::uint32_t a, std::uint32_t b) const noexcept { return add(a, neg(b)); }

std::uint32_t FieldSpec::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  return exp_[log_[a] + log_[b]];
}

std::uint32_t FieldSpec::inv(std::uint32_t a) const noexcept { return inv_[a]; }

std::uint32_t FieldSpec::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1, base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t FieldSpec::from_int_raw(long long value) const noexcept {
  const long long r = value % static_cast<long long>(p_);
  return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
}

std::vector<std::uint32_t> FieldSpec::coeffs_of(std::uint32_t a) const { return unpack(a, p_, m_); }

FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

FieldElement FieldSpec::adjoined_root() const {
  if (m_ == 1) return FieldElement(*this, from_int_raw(-static_cast<long long>(modulus_[0])));
  return FieldElement(*this, p_);
}

FieldElement FieldSpec::from_int(long long value) const { return FieldElement(*this, from_int_raw(value)); }

FieldElement FieldSpec::from_coeffs(std::span<const long long> coeffs) const {
  if (coeffs.size() > m_) {
    throw Error(ErrorCode::InvalidArgument, "element has " + std::to_string(coeffs.size()) +
                                                " coefficients, field " + literal() + " allows " +
                                                std::to_string(m_));
  }
  PolyP c(m_, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) c[i] = from_int_raw(coeffs[i]);
  return FieldElement(*this, pack(c, p_));
}

FieldElement FieldSpec::element(std::uint32_t index) const {
  if (index >= q_) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  return FieldElement(*this, index);
}

const FieldSpec& mk_field(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus,
                          std::uint64_t cap) {
  if (!is_prime(p)) throw Error(ErrorCode::NonPrime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < m; ++i) {
    q *= p;
    if (q > cap) {
      throw Error(ErrorCode::UnsupportedSize,
                  std::to_string(p) + "^" + std::to_string(m) + " exceeds the field size cap " + std::to_string(cap));
    }
  }
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);

  bool is_default = false;
  if (!modulus) {
    if (auto it = reg.defaults.find({p, m}); it != reg.defaults.end()) return *it->second;
    // Lexicographic order with c_0 compared first: c_0 is the most
    // significant digit of the counter.
    for (std::uint64_t t = 0; t < q; ++t) {
      PolyP f(m + 1, 0);
      std::uint64_t v = t;
      for (unsigned i = m; i-- > 0;) {
        f[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      f[m] = 1;
      if (is_irreducible(f, p)) {
        modulus = std::move(f);
        break;
      }
    }
    is_default = true;
  } else {
    const auto& f = *modulus;
    if (f.size() != m + 1 || f.back() != 1) {
      throw Error(ErrorCode::InvalidArgument, "modulus must be monic of degree " + std::to_string(m));
    }
    for (auto c : f)
      if (c >= p) throw Error(ErrorCode::InvalidArgument, "modulus coefficient out of range");
    if (!is_irreducible(f, p)) throw Error(ErrorCode::Reducible, "modulus is reducible over F_" + std::to_string(p));
  }

  std::vector<std::uint32_t> key{p};
  key.insert(key.end(), modulus->begin(), modulus->end());
  auto it = reg.fields.find(key);
  if (it == reg.fields.end()) {
    // The default flag is recorded on first construction; look it up again
    // in case a caller passed the default modulus explicitly.
    if (!is_default) {
      auto d = reg.defaults.find({p, m});
      is_default = d != reg.defaults.end() && d->second->modulus() == *modulus;
    }
    auto spec = std::unique_ptr<FieldSpec>(new FieldSpec(p, m, *modulus, is_default));
    it = reg.fields.emplace(key, std::move(spec)).first;
  }
  if (is_default) {
    reg.defaults[{p, m}] = it->second.get();
    it->second->default_modulus_ = true;
  }
  return *it->second;
}

const FieldSpec& parse_field(std::string_view literal, std::uint64_t cap) {
  auto parse_uint = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw Error(ErrorCode::ParseError, "bad field literal '" + std::string(literal) + "'");
    }
    return v;
  };
  if (auto caret = literal.find('^'); caret != std::string_view::npos) {
    const auto p = parse_uint(literal.substr(0, caret));
    const auto m = parse_uint(literal.substr(caret + 1));
    if (p > std::numeric_limits<std::uint32_t>::max() || m > 64) {
      throw Error(ErrorCode::UnsupportedSize, "field literal '" + std::string(literal) + "' too large");
    }
    return mk_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(m), std::nullopt, cap);
  }
  const auto q = parse_uint(literal);
  const auto pm = prime_power(q);
  if (!pm) throw Error(ErrorCode::NonPrime, std::to_string(q) + " is not a prime power");
  return mk_field(pm->first, pm->second, std::nullopt, cap);
}

const FieldSpec& extension_field(const FieldSpec& base, unsigned k, std::uint64_t cap) {
  return mk_field(base.p(), base.m() * k, std::nullopt, cap);
}

// ---------------------------------------------------------------------------

FieldElement::FieldElement(const FieldSpec& field, std::uint32_t index) : field_(&field), index_(index) {}

const FieldSpec& FieldElement::field() const {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialised field element");
  return *field_;
}

const FieldSpec* FieldElement::checked_same(const FieldElement& b) const {
  if (!field_ || field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "operands live in different fields");
  return field_;
}

FieldElement& FieldElement::operator+=(const FieldElement& b) {
  index_ = checked_same(b)->add(index_, b.index_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& b) {
  index_ = checked_same(b)->sub(index_, b.index_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& b) {
  index_ = checked_same(b)->mul(index_, b.index_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& b) {
  const FieldSpec* f = checked_same(b);
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in F_" + std::to_string(f->q()));
  index_ = f->mul(index_, f->inv(b.index_));
  return *this;
}

FieldElement FieldElement::operator-() const { return FieldElement(field(), field_->neg(index_)); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "zero has no inverse");
  return FieldElement(field(), field_->inv(index_));
}

FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(field(), field_->pow(index_, e)); }

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return a + b;
    case ArithOp::Sub: return a - b;
    case ArithOp::Mul: return a * b;
    case ArithOp::Div: return a / b;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown arithmetic operation");
}

FieldElement frobenius(const FieldElement& a) { return a.pow(a.field().p()); }

FieldElement embed(const FieldElement& a, const FieldSpec& target) {
  const FieldSpec& src = a.field();
  if (&src == &target) return a;
  if (src.p() != target.p() || target.m() % src.m() != 0) {
    throw Error(ErrorCode::NotAnExtension, "F_" + std::to_string(target.q()) + " does not contain F_" +
                                               std::to_string(src.q()));
  }
  auto& reg = registry();
  std::uint32_t root = 0;
  {
    std::lock_guard lock(reg.mutex);
    auto key = std::pair{&src, &target};
    auto it = reg.roots.find(key);
    if (it == reg.roots.end()) {
      const auto& f = src.modulus();
      std::optional<std::uint32_t> found;
      for (std::uint32_t x = 0; x < target.q() && !found; ++x) {
        std::uint32_t acc = 0;
        for (std::size_t i = f.size(); i-- > 0;) acc = target.add(target.mul(acc, x), f[i]);
        if (acc == 0) found = x;
      }
      if (!found) throw Error(ErrorCode::BrokenInvariant, "source modulus has no root in the extension");
      it = reg.roots.emplace(key, *found).first;
    }
    root = it->second;
  }
  const auto c = a.coeffs();
  std::uint32_t acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) acc = target.add(target.mul(acc, root), c[i]);
  return FieldElement(target, acc);
}

std::vector<FieldElement> enumerate(const FieldSpec& field) {
  std::vector<FieldElement> out;
  out.reserve(field.q());
  for (std::uint32_t i = 0; i < field.q(); ++i) out.emplace_back(field, i);
  return out;
}

}  // namespace cubicdet
