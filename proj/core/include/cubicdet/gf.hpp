#pragma once

// Exact arithmetic in finite fields F_{p^m}.
//
// A field is modelled as F_p[x]/(f) for a monic irreducible f of degree m.
// Elements are stored as their coefficient vector packed into one integer,
// index = c_0 + c_1 p + ... + c_{m-1} p^{m-1}, so the enumeration order of a
// field is simply 0, 1, ..., q-1 (coefficients counted low-degree-first).
//
// FieldSpec objects are interned: constructing the same (p, modulus) twice
// yields the same immutable object, which lives for the whole program. An
// element therefore only needs a pointer to its field, and two elements
// belong to the same field iff the pointers are equal.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cubicdet/error.hpp"

namespace cubicdet {

class FieldElement;

class FieldSpec {
 public:
  /// Largest field a caller may construct through mk_field by default.
  static constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 14;
  /// Largest field the library builds internally (extension fields used by
  /// the smoothness test).
  static constexpr std::uint64_t kInternalCap = std::uint64_t{1} << 20;

  FieldSpec(const FieldSpec&) = delete;
  FieldSpec& operator=(const FieldSpec&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  unsigned m() const noexcept { return m_; }
  std::uint32_t q() const noexcept { return q_; }
  /// m+1 coefficients, low degree first; the last one is 1.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool has_default_modulus() const noexcept { return default_modulus_; }
  /// "p^m"; the literal only round-trips for fields with the default modulus.
  std::string literal() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// The class of x in F_p[x]/(f). For F_4 with the default modulus this is
  /// the element w with w^2 + w + 1 = 0.
  FieldElement adjoined_root() const;
  /// Image of an integer under Z -> F_p -> F_q.
  FieldElement from_int(long long value) const;
  /// Element with the given coefficients (low degree first); entries are
  /// reduced mod p, missing entries are zero. More than m entries is an error.
  FieldElement from_coeffs(std::span<const long long> coeffs) const;
  FieldElement element(std::uint32_t index) const;

  // Raw arithmetic on packed indices. Used by the hot loops of the census
  // and the smoothness test; the FieldElement operators are built on these.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  /// a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const noexcept;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t from_int_raw(long long value) const noexcept;
  std::vector<std::uint32_t> coeffs_of(std::uint32_t a) const;

 private:
  friend const FieldSpec& mk_field(std::uint32_t, unsigned, std::optional<std::vector<std::uint32_t>>,
                                   std::uint64_t);
  FieldSpec(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus, bool is_default);

  void build_tables();

  std::uint32_t p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  bool default_modulus_;

  // m > 1: exp_ has 2(q-1) entries so exp_[log a + log b] needs no reduction.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  // Zech logarithms for odd p, m > 1: exp_[zech_[n]] = 1 + g^n, kNoLog when 1 + g^n = 0.
  std::vector<std::uint32_t> zech_;
  std::vector<std::uint32_t> inv_;
  std::uint32_t neg_one_log_ = 0;
};

/// Constructs (or looks up) F_{p^m}. With the modulus omitted, the
/// lexicographically smallest monic irreducible of degree m is used,
/// comparing coefficients low-degree-first; for m = 1 this is x.
const FieldSpec& mk_field(std::uint32_t p, unsigned m,
                          std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                          std::uint64_t cap = FieldSpec::kDefaultCap);

/// Parses "p^m" or a bare prime power "q".
const FieldSpec& parse_field(std::string_view literal, std::uint64_t cap = FieldSpec::kDefaultCap);

/// The default-modulus field F_{p^(m*k)} containing `base` as a subfield.
const FieldSpec& extension_field(const FieldSpec& base, unsigned k,
                                 std::uint64_t cap = FieldSpec::kInternalCap);

bool is_prime(std::uint64_t n) noexcept;
/// Returns (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, unsigned>> prime_power(std::uint64_t q) noexcept;

class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FieldSpec& field, std::uint32_t index);

  const FieldSpec& field() const;
  const FieldSpec* field_ptr() const noexcept { return field_; }
  std::uint32_t index() const noexcept { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field().coeffs_of(index_); }

  bool is_zero() const noexcept { return index_ == 0; }
  bool is_one() const noexcept { return index_ == 1; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  FieldElement& operator+=(const FieldElement& b);
  FieldElement& operator-=(const FieldElement& b);
  FieldElement& operator*=(const FieldElement& b);
  FieldElement& operator/=(const FieldElement& b);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.field_ == b.field_ && a.index_ == b.index_;
  }
  /// Orders by enumeration index; only meaningful within one field.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept {
    return a.index_ <=> b.index_;
  }

 private:
  const FieldSpec* checked_same(const FieldElement& b) const;

  const FieldSpec* field_ = nullptr;
  std::uint32_t index_ = 0;
};

enum class ArithOp { Add, Sub, Mul, Div };

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);
/// a^p.
FieldElement frobenius(const FieldElement& a);
/// Ring embedding F_{p^m} -> F_{p^{mk}} sending the source's adjoined root to
/// the smallest (by enumeration index) root of the source modulus in target.
FieldElement embed(const FieldElement& a, const FieldSpec& target);
/// All q elements in enumeration order.
std::vector<FieldElement> enumerate(const FieldSpec& field);

}  // namespace cubicdet
