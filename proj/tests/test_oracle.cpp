#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "cubicdet/linalg.hpp"
#include "cubicdet/oracle.hpp"
#include "cubicdet/text.hpp"
#include "support/golden.hpp"

using namespace cubicdet;

namespace {

const OrbitCensus& census_of(std::uint64_t q) {
  static const OrbitCensus c2 = [] {
    CensusOptions o;
    o.keep_members = true;
    return census(2, o);
  }();
  static const OrbitCensus c3 = [] {
    CensusOptions o;
    o.keep_members = true;
    o.jobs = 2;
    return census(3, o);
  }();
  return q == 2 ? c2 : c3;
}

std::uint64_t pgl3_order(std::uint64_t q) { return gl3_order(q) / (q - 1); }

}  // namespace

TEST(Group, Sizes) {
  EXPECT_EQ(projective_linear_group(mk_field(2, 1)).size(), 168u);
  EXPECT_EQ(projective_linear_group(mk_field(3, 1)).size(), 5616u);
  EXPECT_EQ(pgl3_order(4), 60480u);
}

TEST(FormIndex, RoundTrip) {
  const FieldSpec& f = mk_field(3, 1);
  for (std::uint64_t i = 0; i < 59049; i += 97) EXPECT_EQ(form_index(form_from_index(f, i)), i);
  // a000 is the most significant digit.
  EXPECT_EQ(form_index(parse_form(f, "Z^3")), 1u);
  EXPECT_EQ(form_index(parse_form(f, "X^3")), 19683u);
}

TEST(Census, HistogramExamples) {
  EXPECT_EQ(census_of(2).histogram.at(1), 1u);
  EXPECT_EQ(census_of(2).histogram.at(3), 2u);
  EXPECT_EQ(census_of(3).histogram.at(2), 1u);
  EXPECT_EQ(census_of(2).orbits.size(), 6u);
  EXPECT_EQ(census_of(3).orbits.size(), 10u);
}

TEST(Census, TooLargeWithoutOptIn) {
  try {
    census(4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_THROW(census(5, CensusOptions{true, 1, false}), Error);
}

TEST(Census, OrbitSizesAndMembers) {
  for (std::uint64_t q : {2u, 3u}) {
    const OrbitCensus& c = census_of(q);
    std::uint64_t sum = 0;
    std::set<std::uint64_t> seen;
    for (const auto& o : c.orbits) {
      EXPECT_EQ(pgl3_order(q) % o.orbit_size, 0u);
      EXPECT_EQ(o.members.size(), o.orbit_size);
      EXPECT_EQ(o.representative, o.members.front());
      for (const auto& m : o.members) {
        EXPECT_TRUE(seen.insert(form_index(m)).second);
        EXPECT_GE(form_index(m), form_index(o.representative));
      }
      sum += o.orbit_size;
    }
    EXPECT_EQ(sum, c.smooth_forms);
  }
}

TEST(Census, SmoothFormsMatchDirectCount) {
  for (std::uint64_t q : {2u, 3u}) {
    const FieldSpec& f = parse_field(std::to_string(q));
    std::uint64_t total = 1;
    for (int i = 0; i < 10; ++i) total *= q;
    std::uint64_t smooth = 0;
    for (std::uint64_t i = 1; i < total; ++i) {
      const TernaryCubic g = form_from_index(f, i);
      if (g.monic() == g && is_smooth(g)) ++smooth;
    }
    EXPECT_EQ(smooth, census_of(q).smooth_forms);
  }
}

TEST(Census, OrbitStabilizerForF2) {
  const auto group = projective_linear_group(mk_field(2, 1));
  for (const auto& o : census_of(2).orbits)
    EXPECT_EQ(o.orbit_size * stabilizer_size(o.representative, group), group.size());
}

TEST(Census, HasseWeil) {
  for (std::uint64_t q : {2u, 3u}) {
    const double lower = std::pow(std::sqrt(static_cast<double>(q)) - 1, 2);
    const double upper = std::pow(std::sqrt(static_cast<double>(q)) + 1, 2);
    for (const auto& o : census_of(q).orbits) {
      EXPECT_GE(static_cast<double>(o.point_count), lower);
      EXPECT_LE(static_cast<double>(o.point_count), upper);
      EXPECT_GE(o.point_count, 1u);
      for (const auto& m : o.members) ASSERT_EQ(rational_points(m).size(), o.point_count);
    }
  }
}

TEST(Census, CrosscheckAgainstFormula) {
  for (std::uint64_t q : {2u, 3u}) {
    long long census_total = 0, formula_total = 0;
    for (const auto& row : crosscheck(census_of(q))) {
      EXPECT_TRUE(row.match()) << q << " " << row.n;
      census_total += static_cast<long long>(row.census);
      formula_total += row.formula;
    }
    EXPECT_EQ(census_total, static_cast<long long>(census_of(q).orbits.size()));
    EXPECT_EQ(formula_total, census_total);
  }
}

TEST(Census, PrintedCurvesLandInDistinctOrbits) {
  std::vector<golden::GoldenCurve> all = golden::no_ldr();
  for (const auto* v : {&golden::one_ldr(), &golden::two_ldr()}) all.insert(all.end(), v->begin(), v->end());
  for (std::uint64_t q : {2u, 3u}) {
    const OrbitCensus& c = census_of(q);
    std::set<std::size_t> hit;
    int rows = 0;
    for (const auto& g : all) {
      if (g.field != std::to_string(q)) continue;
      ++rows;
      const TernaryCubic f = parse_form(*c.field, g.form).monic();
      std::optional<std::size_t> where;
      for (std::size_t i = 0; i < c.orbits.size(); ++i) {
        for (const auto& m : c.orbits[i].members) {
          if (m == f) where = i;
        }
      }
      ASSERT_TRUE(where) << g.form;
      EXPECT_EQ(c.orbits[*where].point_count, g.points.size());
      EXPECT_TRUE(hit.insert(*where).second) << g.form;
    }
    EXPECT_EQ(rows, 4);
  }
}
