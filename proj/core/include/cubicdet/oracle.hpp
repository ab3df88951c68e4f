#pragma once

// Brute-force classification of smooth plane cubics over tiny fields by
// orbits of PGL_3(F_q). Shares nothing with the counting formulas, so it
// serves as their independent check.

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "cubicdet/counting.hpp"
#include "cubicdet/gf.hpp"
#include "cubicdet/plane.hpp"

namespace cubicdet {

struct Orbit {
  TernaryCubic representative;  // least form of the orbit by index
  std::uint64_t orbit_size = 0;
  std::uint64_t point_count = 0;
  /// Every member (first nonzero coefficient 1); filled on request only.
  std::vector<TernaryCubic> members;
};

struct OrbitCensus {
  std::uint64_t q = 0;
  const FieldSpec* field = nullptr;
  /// Smooth orbits in increasing order of representative.
  std::vector<Orbit> orbits;
  /// point count -> number of smooth orbits.
  std::map<std::uint64_t, std::uint64_t> histogram;
  /// Number of smooth forms up to scalar.
  std::uint64_t smooth_forms = 0;
};

struct CensusOptions {
  /// q = 4 takes minutes and has to be asked for explicitly.
  bool allow_slow = false;
  unsigned jobs = 1;
  bool keep_members = false;
};

/// PGL_3(F_q) as row-major matrices whose first nonzero entry is 1.
std::vector<std::array<std::uint32_t, 9>> projective_linear_group(const FieldSpec& field);

/// Index of a form with a000 as the most significant base-q digit.
std::uint64_t form_index(const TernaryCubic& f);
TernaryCubic form_from_index(const FieldSpec& field, std::uint64_t index);

/// Number of g in PGL_3 fixing the curve F = 0.
std::uint64_t stabilizer_size(const TernaryCubic& f, const std::vector<std::array<std::uint32_t, 9>>& group);

/// Classification over F_q for q in {2, 3}, or q = 4 with allow_slow.
OrbitCensus census(std::uint64_t q, const CensusOptions& options = {});

struct CrosscheckRow {
  std::uint64_t n = 0;
  std::uint64_t census = 0;
  long long formula = 0;
  bool match() const { return static_cast<long long>(census) == formula; }
};

/// Census counts against the formula for every n in [0, q + 1 + 2 sqrt(q)].
std::vector<CrosscheckRow> crosscheck(const OrbitCensus& census);

}  // namespace cubicdet
