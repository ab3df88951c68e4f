#pragma once

// Linear determinantal representations of plane cubics: a 3x3 matrix M of
// linear forms with det(M) = lambda * F for a nonzero constant lambda.
//
// Two representations M, M' are equivalent if M' = A M B with A, B in GL_3.
// For a smooth cubic C with a rational point P0 the equivalence classes are
// in bijection with C(F_q) \ {P0}; all_reps() builds one representative per
// point from the explicit formulas for a cubic in normal form.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cubicdet/gf.hpp"
#include "cubicdet/linalg.hpp"
#include "cubicdet/plane.hpp"

namespace cubicdet {

/// M = X*m0 + Y*m1 + Z*m2.
class LinearMatrixRep {
 public:
  using Entries = std::array<std::array<LinearForm, 3>, 3>;

  LinearMatrixRep() = default;
  explicit LinearMatrixRep(std::array<Mat3, 3> coeffs);
  explicit LinearMatrixRep(const Entries& entries);
  static LinearMatrixRep zero(const FieldSpec& f);

  const FieldSpec& field() const { return m_[0].field(); }
  const Mat3& coeff(int var) const { return m_.at(var); }
  LinearForm entry(int r, int c) const;
  Entries entries() const;
  /// The constant matrix M(v).
  Mat3 at(const std::array<FieldElement, 3>& v) const;

  friend bool operator==(const LinearMatrixRep&, const LinearMatrixRep&) = default;

 private:
  std::array<Mat3, 3> m_;
};

struct EquivalenceWitness {
  /// m2 == a * m1 * b.
  LinearTransform a;
  LinearTransform b;
};

/// A * M * B.
LinearMatrixRep transform(const Mat3& a, const LinearMatrixRep& m, const Mat3& b);
/// The representation v -> M(S v), i.e. every entry composed with S.
/// det of the result is det(M) composed with S.
LinearMatrixRep pullback(const LinearMatrixRep& m, const Mat3& s);

/// Symbolic determinant expanded into the ten cubic coefficients.
TernaryCubic det_cubic(const LinearMatrixRep& rep);
/// lambda with det(rep) = lambda * F, if rep is a representation of F.
std::optional<FieldElement> is_ldr_of(const LinearMatrixRep& rep, const TernaryCubic& f);

/// Representation attached to P = [s:t:u] with u != 0 for a normalized cubic;
/// det = -u^3 F.
LinearMatrixRep mp_case1(const TernaryCubic& normalized, const ProjPoint& p);
/// Representation attached to the point P = [s:t:0] != [1:0:0] for a
/// normalized cubic; det = a011 F.
LinearMatrixRep mp_case2(const TernaryCubic& normalized, const ProjPoint& p);

struct RepresentationEntry {
  ProjPoint point;  // in the coordinates of the original form
  LinearMatrixRep rep;
  FieldElement lambda;  // det(rep) = lambda * F
};

/// One representation per rational point other than the base point, all
/// valid for the original (not normalized) form. Defaults to the first
/// rational point in enumeration order as base point.
std::vector<RepresentationEntry> all_reps(const TernaryCubic& f, std::optional<ProjPoint> p0 = std::nullopt);

struct EquivalenceOptions {
  enum class Method {
    /// Fix B through an invertible value M(x0) and solve the remaining
    /// simultaneous-similarity problem for A as one linear system.
    Intertwiner,
    /// Iterate A over GL_3(F_q) (identity first) and solve for B.
    GroupScan,
  };
  Method method = Method::Intertwiner;
  /// Largest |GL_3(F_q)| the group scan accepts; default admits q <= 9.
  std::uint64_t cap = 728ULL * 720ULL * 648ULL;
  unsigned jobs = 1;
};

/// A witness (A, B) with m2 = A m1 B if one exists. Returns nullopt at once
/// when the two matrices are not representations of proportional cubics.
std::optional<EquivalenceWitness> equivalent(const LinearMatrixRep& m1, const LinearMatrixRep& m2,
                                             const EquivalenceOptions& options = {});

/// Number of pairwise-inequivalent members of reps.
std::size_t count_classes(std::span<const LinearMatrixRep> reps, const EquivalenceOptions& options = {});

/// Galinat's representative for Y^2Z = X^3 + aXZ^2 + bZ^3 and an affine point.
LinearMatrixRep galinat_rep(const FieldElement& a, const FieldElement& b, const ProjPoint& p);
/// The Moore matrix of a point with nonzero coordinates on X^3+Y^3+Z^3+hXYZ.
LinearMatrixRep moore_rep(const FieldElement& h, const ProjPoint& p);

TernaryCubic weierstrass_form(const FieldElement& a, const FieldElement& b);
TernaryCubic hesse_form(const FieldElement& h);

bool is_symmetric(const LinearMatrixRep& rep);
/// An invertible A with A * rep symmetric, first in a fixed enumeration of
/// the solution space; nullopt if there is none.
std::optional<Mat3> symmetrizer(const LinearMatrixRep& rep);

}  // namespace cubicdet
