#pragma once

// Projective plane geometry over F_q: ternary cubic forms, points of P^2,
// smoothness, tangents, flexes and coordinate changes.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cubicdet/gf.hpp"
#include "cubicdet/linalg.hpp"

namespace cubicdet {

/// Exponents (X, Y, Z) of the cubic monomials in coefficient order
/// a000 X^3, a001 X^2Y, a002 X^2Z, a011 XY^2, a012 XYZ, a022 XZ^2,
/// a111 Y^3, a112 Y^2Z, a122 YZ^2, a222 Z^3.
inline constexpr std::array<std::array<int, 3>, 10> kCubicExponents{{
    {3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
    {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3},
}};
inline constexpr std::array<std::string_view, 10> kCubicLabels{"000", "001", "002", "011", "012",
                                                               "022", "111", "112", "122", "222"};

/// Index of the coefficient a_{ijk} for a label such as "012"; nullopt if the
/// label is not one of the ten sorted index triples.
std::optional<std::size_t> cubic_index(std::string_view label) noexcept;
/// Index of the monomial x_i x_j x_k (any order of i, j, k).
std::size_t cubic_index(int i, int j, int k) noexcept;

/// a X + b Y + c Z.
struct LinearForm {
  std::array<FieldElement, 3> c;

  static LinearForm zero(const FieldSpec& f) { return {{f.zero(), f.zero(), f.zero()}}; }
  static LinearForm variable(const FieldSpec& f, int v);
  const FieldSpec& field() const { return c[0].field(); }
  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
  FieldElement operator()(const std::array<FieldElement, 3>& v) const { return c[0] * v[0] + c[1] * v[1] + c[2] * v[2]; }
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// Ternary quadratic form, coefficients in order XX, XY, XZ, YY, YZ, ZZ.
struct QuadraticForm {
  std::array<FieldElement, 6> c;

  FieldElement operator()(const std::array<FieldElement, 3>& v) const;
  bool is_zero() const;
  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};
inline constexpr std::array<std::array<int, 3>, 6> kQuadraticExponents{{
    {2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2},
}};

/// A ternary cubic form sum a_{ijk} x_i x_j x_k. The zero form is
/// representable (a determinant may vanish identically) but every geometric
/// operation treats it as invalid input.
class TernaryCubic {
 public:
  using Raw = std::array<std::uint32_t, 10>;

  TernaryCubic() = default;
  explicit TernaryCubic(const FieldSpec& field) : field_(&field), c_{} {}
  TernaryCubic(const FieldSpec& field, const Raw& raw) : field_(&field), c_(raw) {}
  TernaryCubic(const FieldSpec& field, const std::array<long long, 10>& coeffs);

  const FieldSpec& field() const;
  const FieldSpec* field_ptr() const noexcept { return field_; }
  const Raw& raw() const noexcept { return c_; }

  FieldElement coeff(std::size_t k) const { return FieldElement(field(), c_.at(k)); }
  FieldElement coeff(std::string_view label) const;
  void set(std::size_t k, const FieldElement& v);

  bool is_zero() const noexcept;
  TernaryCubic scaled(const FieldElement& s) const;
  /// Divides by the first nonzero coefficient so forms differing by a unit
  /// compare equal. Requires a nonzero form.
  TernaryCubic monic() const;
  /// c with *this == c * other, if the forms are proportional.
  std::optional<FieldElement> ratio_to(const TernaryCubic& other) const;
  /// True when a000 = a001 = 0 and a002 = 1.
  bool is_normalized() const;

  friend bool operator==(const TernaryCubic& a, const TernaryCubic& b) noexcept {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend TernaryCubic operator+(const TernaryCubic& a, const TernaryCubic& b);

 private:
  const FieldSpec* field_ = nullptr;
  Raw c_{};
};

/// A point of P^2 scaled so its first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z);
  explicit ProjPoint(const std::array<FieldElement, 3>& v) : ProjPoint(v[0], v[1], v[2]) {}
  static ProjPoint of(const FieldSpec& f, long long x, long long y, long long z);

  const FieldSpec& field() const { return v_[0].field(); }
  const FieldElement& x() const { return v_[0]; }
  const FieldElement& y() const { return v_[1]; }
  const FieldElement& z() const { return v_[2]; }
  const std::array<FieldElement, 3>& coords() const { return v_; }

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

 private:
  std::array<FieldElement, 3> v_;
};

/// An invertible 3x3 matrix acting on forms by substitution.
class LinearTransform {
 public:
  explicit LinearTransform(Mat3 m);
  static LinearTransform identity(const FieldSpec& f) { return LinearTransform(Mat3::identity(f)); }
  const Mat3& matrix() const { return m_; }
  LinearTransform inverse() const { return LinearTransform(m_.inverse()); }
  friend LinearTransform operator*(const LinearTransform& a, const LinearTransform& b) {
    return LinearTransform(a.m_ * b.m_);
  }
  friend bool operator==(const LinearTransform&, const LinearTransform&) = default;

 private:
  Mat3 m_;
};

FieldElement evaluate(const TernaryCubic& f, const std::array<FieldElement, 3>& v);
FieldElement evaluate(const TernaryCubic& f, const ProjPoint& p);

/// Formal partial derivatives (d/dX, d/dY, d/dZ) with exponents reduced mod p.
std::array<QuadraticForm, 3> partials(const TernaryCubic& f);
std::array<FieldElement, 3> gradient(const TernaryCubic& f, const std::array<FieldElement, 3>& v);

/// The product l1 * l2 * l3 expanded into a cubic.
TernaryCubic product(const LinearForm& l1, const LinearForm& l2, const LinearForm& l3);

/// True iff F = dF/dX = dF/dY = dF/dZ = 0 has no solution in P^2 over the
/// algebraic closure. The search covers every point whose coordinates lie in
/// F_{q^k} for k <= 4 (k <= 3 once q^4 exceeds the internal field cap).
bool is_smooth(const TernaryCubic& f);

/// All points of P^2(F_q) in enumeration order: [1:y:z] (y outer, z inner),
/// then [0:1:z], then [0:0:1].
std::vector<ProjPoint> projective_points(const FieldSpec& field);
std::vector<ProjPoint> rational_points(const TernaryCubic& f);

/// Tangent line at a smooth point, scaled so the first nonzero coefficient is 1.
LinearForm tangent_line(const TernaryCubic& f, const ProjPoint& p);
/// Intersection multiplicity of the tangent line with the curve at p is >= 3.
bool is_flex(const TernaryCubic& f, const ProjPoint& p);

/// F(M (X,Y,Z)^T) for an arbitrary (possibly singular) matrix M.
TernaryCubic substitute(const Mat3& m, const TernaryCubic& f);
/// Raw version of substitute for hot loops; t is row-major.
void substitute_raw(const FieldSpec& field, const std::uint32_t* t, const TernaryCubic::Raw& f,
                    TernaryCubic::Raw& out);
/// Pullback F o T. act(S, act(T, F)) == act(T * S, F).
TernaryCubic act(const LinearTransform& t, const TernaryCubic& f);

struct Normalization {
  /// form == scale * act(transform, original); transform maps [1:0:0] to P0.
  LinearTransform transform;
  TernaryCubic form;
  FieldElement scale;
};

/// Moves P0 to [1:0:0] and its tangent to Z = 0, then scales so that
/// a000 = a001 = 0, a002 = 1. The first column of the transform is P0, the
/// second the first standard basis vector on the tangent that is independent
/// of P0 (falling back to the first point of the tangent line), the third the
/// first standard basis vector off the tangent.
Normalization normalize(const TernaryCubic& f, const ProjPoint& p0);

}  // namespace cubicdet
