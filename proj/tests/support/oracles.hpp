#pragma once

// Slow reference implementations used only to check the library.

#include <cstdint>

#include "cubicdet/detrep.hpp"
#include "cubicdet/plane.hpp"

namespace cubicdet::oracle_ref {

/// Searches P^2 over F_{q^k} for every k in [1, max_degree] for a common
/// zero of F and its partials, evaluated monomial by monomial.
bool brute_is_smooth(const TernaryCubic& f, unsigned max_degree = 3);

/// #{v in F_q^3 \ 0 : F(v) = 0} / (q - 1).
std::uint64_t brute_point_count(const TernaryCubic& f);

/// Number of SL_2(Z) classes of positive definite forms of discriminant
/// delta, found by reducing every form with |a|, |b|, |c| <= bound.
long long brute_class_number(long long delta, long long bound = 60);

/// det(M) by cofactor expansion over sparse polynomials.
TernaryCubic cofactor_det(const LinearMatrixRep& m);

}  // namespace cubicdet::oracle_ref
