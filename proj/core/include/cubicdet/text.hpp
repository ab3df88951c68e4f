#pragma once

// Human-readable rendering and parsing of field elements, forms, points and
// matrices. Extension-field elements are written as polynomials in w, the
// adjoined root of the field's modulus (so w^2 + w + 1 = 0 in F_4).
//
// Forms over prime fields use balanced residues: over F_3, 2Y^3 prints as
// -Y^3. Points print plain residues.

#include <string>
#include <string_view>

#include "cubicdet/detrep.hpp"
#include "cubicdet/gf.hpp"
#include "cubicdet/plane.hpp"

namespace cubicdet {

/// Plain residue for prime fields, "w + 1" style for extensions.
std::string format_element(const FieldElement& a);
std::string format_form(const TernaryCubic& f);
std::string format_linear(const LinearForm& l);
std::string format_point(const ProjPoint& p);
/// "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]".
std::string format_matrix(const LinearMatrixRep& m);
std::string format_mat3(const Mat3& m);

/// Expressions over Z[w] such as "2w + 1" or "-(w + 1)^2".
FieldElement parse_element(const FieldSpec& field, std::string_view text);
/// Homogeneous cubic in X, Y, Z with coefficients as in parse_element;
/// implicit multiplication, parentheses and ^ are allowed.
TernaryCubic parse_form(const FieldSpec& field, std::string_view text);
LinearForm parse_linear(const FieldSpec& field, std::string_view text);
/// "[1:0:0]" or "1,0,0".
ProjPoint parse_point(const FieldSpec& field, std::string_view text);
/// Nine linear forms in row-major order; brackets are optional and rows may
/// be separated by ';'.
LinearMatrixRep parse_matrix(const FieldSpec& field, std::string_view text);
Mat3 parse_mat3(const FieldSpec& field, std::string_view text);

}  // namespace cubicdet
