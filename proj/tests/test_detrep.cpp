#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "cubicdet/detrep.hpp"
#include "cubicdet/oracle.hpp"
#include "cubicdet/text.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace cubicdet;

namespace {

const FieldSpec& fld(const std::string& q) { return parse_field(q); }
TernaryCubic form(const std::string& q, const char* text) { return parse_form(fld(q), text); }
LinearMatrixRep mat(const std::string& q, const std::string& text) { return parse_matrix(fld(q), text); }
ProjPoint pt(const std::string& q, const char* text) { return parse_point(fld(q), text); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::InvalidArgument;
}

TernaryCubic random_smooth(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  for (;;) {
    TernaryCubic::Raw raw;
    for (auto& c : raw) c = d(rng);
    TernaryCubic g(f, raw);
    if (!g.is_zero() && is_smooth(g)) return g;
  }
}

LinearMatrixRep random_rep(const FieldSpec& f, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  std::array<Mat3, 3> m{Mat3(f), Mat3(f), Mat3(f)};
  for (auto& x : m)
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) x(r, c) = f.element(d(rng));
  return LinearMatrixRep(m);
}

void expect_witness(const LinearMatrixRep& m1, const LinearMatrixRep& m2, const EquivalenceWitness& w) {
  EXPECT_TRUE(w.a.matrix().is_invertible());
  EXPECT_TRUE(w.b.matrix().is_invertible());
  EXPECT_EQ(transform(w.a.matrix(), m1, w.b.matrix()), m2);
  EXPECT_EQ(transform(w.a.matrix().inverse(), m2, w.b.matrix().inverse()), m1);
}

}  // namespace

TEST(DetCubic, Examples) {
  const FieldSpec& f5 = fld("5");
  const LinearMatrixRep xi(std::array<Mat3, 3>{Mat3::identity(f5), Mat3(f5), Mat3(f5)});
  EXPECT_EQ(det_cubic(xi), form("5", "X^3"));
  EXPECT_EQ(det_cubic(mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]")),
            form("2", "X^2Z + XYZ + Y^3 + Y^2Z + YZ^2"));
  EXPECT_TRUE(det_cubic(LinearMatrixRep::zero(f5)).is_zero());
}

TEST(DetCubic, AgreesWithCofactorExpansion) {
  std::mt19937 rng(17);
  for (const char* q : {"2", "3", "4", "5", "7", "9", "13"}) {
    for (int i = 0; i < 150; ++i) {
      const LinearMatrixRep m = random_rep(fld(q), rng);
      ASSERT_EQ(det_cubic(m), oracle_ref::cofactor_det(m)) << format_matrix(m);
    }
  }
}

TEST(DetCubic, EvaluatesPointwise) {
  std::mt19937 rng(8);
  const FieldSpec& f = fld("7");
  for (int i = 0; i < 50; ++i) {
    const LinearMatrixRep m = random_rep(f, rng);
    const TernaryCubic d = det_cubic(m);
    for (const auto& p : projective_points(f)) EXPECT_EQ(m.at(p.coords()).det(), evaluate(d, p));
  }
}

TEST(IsLdrOf, Examples) {
  const TernaryCubic f = form("2", "X^2Z + XYZ + Y^3 + Y^2Z + YZ^2");
  const auto lambda = is_ldr_of(mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]"), f);
  ASSERT_TRUE(lambda);
  EXPECT_TRUE(lambda->is_one());
  EXPECT_FALSE(is_ldr_of(LinearMatrixRep::zero(fld("2")), f));
  // Scaled curve: lambda follows the scale.
  const FieldSpec& f5 = fld("5");
  const TernaryCubic g = form("5", "X^2Z + Y^3 + 2YZ^2");
  const LinearMatrixRep m5 = mat("5", "[[0, Z, -Y], [Y, 0, -X], [X, Y, 2Z]]");
  const auto l1 = is_ldr_of(m5, g);
  const auto l2 = is_ldr_of(m5, g.scaled(f5.from_int(2)));
  ASSERT_TRUE(l1);
  ASSERT_TRUE(l2);
  EXPECT_EQ(*l2, *l1 / f5.from_int(2));
}

TEST(MpCase1, Examples) {
  EXPECT_EQ(mp_case1(form("2", "X^2Z + XY^2 + YZ^2"), pt("2", "[0:0:1]")),
            mat("2", "[[0, Z, Y], [Y, 0, X], [X, X, Z]]"));
  EXPECT_EQ(mp_case1(form("7", "X^2Z + XY^2 + 3YZ^2"), pt("7", "[0:0:1]")),
            mat("7", "[[0, Z, -Y], [Y, 0, -X], [X, X, 3Z]]"));
  const TernaryCubic f = form("2", "X^2Z + XZ^2 + Y^3");
  const LinearMatrixRep m = mp_case1(f, pt("2", "[1:0:1]"));
  const auto lambda = is_ldr_of(m, f);
  ASSERT_TRUE(lambda);
  EXPECT_TRUE(lambda->is_one());
  EXPECT_TRUE(equivalent(m, mat("2", "[[0, Z, Y], [Y, 0, X], [X + Z, Y, 0]]")));
}

TEST(MpFormulas, LambdaOnRandomNormalizedCurves) {
  std::mt19937 rng(4);
  for (const char* q : {"2", "3", "4", "5", "7", "8", "9", "11"}) {
    const FieldSpec& f = fld(q);
    for (int i = 0; i < 30; ++i) {
      const TernaryCubic g = random_smooth(f, rng);
      const auto pts = rational_points(g);
      if (pts.empty()) continue;
      const TernaryCubic n = normalize(g, pts[0]).form;
      for (const auto& p : rational_points(n)) {
        if (p == pt(q, "[1:0:0]")) continue;
        if (!p.z().is_zero()) {
          EXPECT_EQ(is_ldr_of(mp_case1(n, p), n), -(p.z() * p.z() * p.z()));
        } else {
          EXPECT_EQ(is_ldr_of(mp_case2(n, p), n), n.coeff("011"));
        }
      }
    }
  }
}

TEST(MpCase2, Examples) {
  EXPECT_EQ(mp_case2(form("2", "X^2Z + XY^2 + YZ^2"), pt("2", "[0:1:0]")),
            mat("2", "[[0, Z, Y], [Z, Y, X], [X, 0, Y]]"));
  EXPECT_EQ(mp_case2(form("5", "X^2Z + XY^2 + YZ^2 - 2XYZ"), pt("5", "[0:1:0]")),
            mat("5", "[[0, Z, -Y], [Z, Y, X - 2Y], [X, 0, -Y]]"));
  EXPECT_EQ(mp_case2(form("4", "X^2Z + XY^2 + wYZ^2"), pt("4", "[0:1:0]")),
            mat("4", "[[0, Z, Y], [Z, Y, X], [X, 0, wY]]"));
}

TEST(MpFormulas, Errors) {
  const TernaryCubic f = form("2", "X^2Z + XY^2 + YZ^2");
  EXPECT_EQ(code_of([&] { mp_case1(f, pt("2", "[0:1:0]")); }), ErrorCode::WrongCase);
  EXPECT_EQ(code_of([&] { mp_case2(f, pt("2", "[0:0:1]")); }), ErrorCode::WrongCase);
  EXPECT_EQ(code_of([&] { mp_case2(f, pt("2", "[1:0:0]")); }), ErrorCode::IsBasePoint);
  EXPECT_EQ(code_of([&] { mp_case1(f, pt("2", "[1:1:1]")); }), ErrorCode::NotOnCurve);
  EXPECT_EQ(code_of([&] { mp_case1(form("2", "Z^2X + ZY^2 + YX^2"), pt("2", "[1:0:1]")); }),
            ErrorCode::NotNormalized);
}

TEST(AllReps, Examples) {
  EXPECT_TRUE(all_reps(form("2", "X^2Z + XZ^2 + Y^3 + Y^2Z + Z^3")).empty());
  const auto one = all_reps(form("2", "X^2Z + XYZ + Y^3 + Y^2Z + YZ^2"), pt("2", "[1:0:0]"));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].point, pt("2", "[0:0:1]"));
  const auto two = all_reps(form("2", "X^2Z + XY^2 + YZ^2"), pt("2", "[1:0:0]"));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].point, pt("2", "[0:1:0]"));
  EXPECT_EQ(two[1].point, pt("2", "[0:0:1]"));
}

TEST(AllReps, Errors) {
  EXPECT_EQ(code_of([] { all_reps(form("5", "Y^2Z - X^3")); }), ErrorCode::SingularInput);
  EXPECT_EQ(code_of([] { all_reps(form("2", "X^2Z + XY^2 + YZ^2"), pt("2", "[1:1:1]")); }),
            ErrorCode::NotOnCurve);
}

TEST(AllReps, RandomCurvesAndBasePoints) {
  std::mt19937 rng(12);
  for (const char* q : {"4", "5", "7"}) {
    const FieldSpec& f = fld(q);
    int curves = 0;
    while (curves < 200) {
      const TernaryCubic g = random_smooth(f, rng);
      const auto pts = rational_points(g);
      if (pts.empty()) continue;
      ++curves;
      const ProjPoint p0 = pts[rng() % pts.size()];
      const auto reps = all_reps(g, p0);
      ASSERT_EQ(reps.size(), pts.size() - 1);
      for (const auto& r : reps) {
        EXPECT_NE(r.point, p0);
        const auto lambda = is_ldr_of(r.rep, g);
        ASSERT_TRUE(lambda);
        EXPECT_EQ(*lambda, r.lambda);
        EXPECT_FALSE(lambda->is_zero());
        EXPECT_EQ(oracle_ref::cofactor_det(r.rep), g.scaled(r.lambda));
      }
    }
  }
}

TEST(Equivalent, Reflexive) {
  const LinearMatrixRep m = mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]");
  for (auto method : {EquivalenceOptions::Method::Intertwiner, EquivalenceOptions::Method::GroupScan}) {
    EquivalenceOptions o;
    o.method = method;
    const auto w = equivalent(m, m, o);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->a, LinearTransform::identity(fld("2")));
    EXPECT_EQ(w->b, LinearTransform::identity(fld("2")));
  }
}

TEST(Equivalent, PublishedTransformation) {
  const LinearMatrixRep m = mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]");
  const LinearMatrixRep s = mat("2", "[[Y, 0, X], [0, Z, Y], [X, Y, X + Y + Z]]");
  const Mat3 a = parse_mat3(fld("2"), golden::kTransformA);
  EXPECT_EQ(transform(a, m, Mat3::identity(fld("2"))), s);
  const auto w = equivalent(m, s);
  ASSERT_TRUE(w);
  expect_witness(m, s, *w);
}

TEST(Equivalent, TwoClassesStayApart) {
  const LinearMatrixRep m1 = mat("2", "[[0, Z, Y], [Z, Y, X], [X, 0, Y]]");
  const LinearMatrixRep m2 = mat("2", "[[0, Z, Y], [Y, 0, X], [X, X, Z]]");
  for (auto method : {EquivalenceOptions::Method::Intertwiner, EquivalenceOptions::Method::GroupScan}) {
    EquivalenceOptions o;
    o.method = method;
    EXPECT_FALSE(equivalent(m1, m2, o));
  }
}

TEST(Equivalent, DifferentCurvesOrFields) {
  EXPECT_FALSE(equivalent(mat("2", "[[0, Z, Y], [Z, Y, X], [X, 0, Y]]"),
                          mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]")));
  EXPECT_FALSE(equivalent(LinearMatrixRep::zero(fld("2")), LinearMatrixRep::zero(fld("2"))));
  EXPECT_EQ(code_of([] {
              equivalent(mat("2", "[[X, 0, 0], [0, Y, 0], [0, 0, Z]]"), mat("3", "[[X, 0, 0], [0, Y, 0], [0, 0, Z]]"));
            }),
            ErrorCode::FieldMismatch);
}

TEST(Equivalent, BudgetForGroupScan) {
  EquivalenceOptions o;
  o.method = EquivalenceOptions::Method::GroupScan;
  const LinearMatrixRep m = mat("11", "[[X, 0, 0], [0, Y, 0], [0, 0, X + Y + Z]]");
  EXPECT_EQ(code_of([&] { equivalent(m, m, o); }), ErrorCode::BudgetExceeded);
  // The default method has no group budget.
  EXPECT_TRUE(equivalent(m, m));
}

TEST(Equivalent, RandomConjugatesAreFound) {
  std::mt19937 rng(21);
  for (const char* q : {"3", "5", "7", "11", "13"}) {
    const FieldSpec& f = fld(q);
    for (int i = 0; i < 10; ++i) {
      const TernaryCubic g = random_smooth(f, rng);
      const auto pts = rational_points(g);
      if (pts.size() < 2) continue;
      const LinearMatrixRep m = all_reps(g)[0].rep;
      auto rand_inv = [&] {
        for (;;) {
          Mat3 a(f);
          for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) a(r, c) = f.element(rng() % f.q());
          if (a.is_invertible()) return a;
        }
      };
      const LinearMatrixRep m2 = transform(rand_inv(), m, rand_inv());
      const auto w = equivalent(m, m2);
      ASSERT_TRUE(w);
      expect_witness(m, m2, *w);
    }
  }
}

TEST(Equivalent, MethodsAgreeOverF2AndF3) {
  std::mt19937 rng(31);
  for (std::uint64_t q : {2u, 3u}) {
    CensusOptions co;
    co.keep_members = true;
    const OrbitCensus c = census(q, co);
    int checked = 0;
    for (const auto& orbit : c.orbits) {
      const std::size_t count = q == 2 ? orbit.members.size() : 6;
      for (std::size_t i = 0; i < count && i < orbit.members.size(); ++i) {
        const TernaryCubic& g = orbit.members[(i * 7919) % orbit.members.size()];
        const auto reps = all_reps(g);
        for (std::size_t a = 0; a < reps.size(); ++a) {
          for (std::size_t b = 0; b < reps.size(); ++b) {
            EquivalenceOptions scan;
            scan.method = EquivalenceOptions::Method::GroupScan;
            const auto w1 = equivalent(reps[a].rep, reps[b].rep);
            const auto w2 = equivalent(reps[a].rep, reps[b].rep, scan);
            ASSERT_EQ(w1.has_value(), w2.has_value());
            ASSERT_EQ(w1.has_value(), a == b);
            if (w1) expect_witness(reps[a].rep, reps[b].rep, *w1);
            if (w2) expect_witness(reps[a].rep, reps[b].rep, *w2);
            ++checked;
          }
        }
      }
    }
    EXPECT_GT(checked, 0);
  }
}

TEST(Equivalent, ParallelScanIsDeterministic) {
  const LinearMatrixRep m = mat("3", "[[0, Z, -Y], [Y, 0, -X], [X, -Y + Z, Z]]");
  const LinearMatrixRep s = mat("3", "[[Y, 0, -X], [0, -Z, Y], [-X, Y, -Y - Z]]");
  EquivalenceOptions one, four;
  one.method = four.method = EquivalenceOptions::Method::GroupScan;
  four.jobs = 4;
  const auto w1 = equivalent(m, s, one);
  const auto w4 = equivalent(m, s, four);
  ASSERT_TRUE(w1);
  ASSERT_TRUE(w4);
  EXPECT_EQ(w1->a, w4->a);
  EXPECT_EQ(w1->b, w4->b);
  expect_witness(m, s, *w1);
}

TEST(CountClasses, BaseIndependentOverF2) {
  CensusOptions co;
  co.keep_members = true;
  const OrbitCensus c = census(2, co);
  for (const auto& orbit : c.orbits) {
    for (const auto& g : orbit.members) {
      const auto pts = rational_points(g);
      for (const auto& p0 : pts) {
        std::vector<LinearMatrixRep> reps;
        for (const auto& r : all_reps(g, p0)) reps.push_back(r.rep);
        ASSERT_EQ(count_classes(reps), pts.size() - 1);
      }
    }
  }
}

TEST(Galinat, Examples) {
  const FieldSpec& f5 = fld("5");
  int found = 0;
  for (const auto& p : rational_points(weierstrass_form(f5.zero(), f5.from_int(2)))) {
    if (p.z().is_zero()) continue;
    const LinearMatrixRep m = galinat_rep(f5.zero(), f5.from_int(2), p);
    EXPECT_TRUE(is_ldr_of(m, form("5", "Y^2Z - X^3 - 2Z^3")));
    ++found;
  }
  EXPECT_GT(found, 0);
  const FieldSpec& f7 = fld("7");
  const LinearMatrixRep m7 = galinat_rep(f7.one(), f7.zero(), pt("7", "[0:0:1]"));
  EXPECT_TRUE(is_ldr_of(m7, form("7", "Y^2Z - X^3 - XZ^2")));
  const FieldSpec& f2 = fld("2");
  EXPECT_EQ(code_of([&] { galinat_rep(f2.one(), f2.one(), pt("2", "[0:1:1]")); }), ErrorCode::BadCharacteristic);
  EXPECT_EQ(code_of([&] { galinat_rep(f7.zero(), f7.zero(), pt("7", "[0:0:1]")); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([&] { galinat_rep(f7.one(), f7.zero(), pt("7", "[1:1:1]")); }), ErrorCode::NotOnCurve);
  EXPECT_EQ(code_of([&] { galinat_rep(f7.one(), f7.zero(), pt("7", "[0:1:0]")); }), ErrorCode::InvalidArgument);
}

TEST(Moore, Examples) {
  const FieldSpec& f5 = fld("5");
  // h = 2 puts [1:1:1] on the curve, but that Hesse cubic is singular at
  // [1:1:1] (h^3 = -27 in F_5).
  EXPECT_FALSE(is_smooth(hesse_form(f5.from_int(2))));
  EXPECT_EQ(code_of([&] { moore_rep(f5.from_int(2), pt("5", "[1:1:1]")); }), ErrorCode::SingularCurve);
  EXPECT_EQ(code_of([&] { moore_rep(f5.from_int(1), pt("5", "[0:1:4]")); }), ErrorCode::ZeroCoordinate);
  EXPECT_EQ(code_of([&] { moore_rep(fld("3").one(), pt("3", "[1:1:1]")); }), ErrorCode::BadCharacteristic);

  // Over F_7 every Hesse cubic with a point off the coordinate triangle is
  // singular, so the scan has to go to F_11 and F_13.
  for (const char* q : {"7", "11", "13"}) {
    const FieldSpec& fq = fld(q);
    int found = 0;
    for (const auto& h : enumerate(fq)) {
      const TernaryCubic hesse = hesse_form(h);
      if (!is_smooth(hesse)) continue;
      for (const auto& p : rational_points(hesse)) {
        if (p.x().is_zero() || p.y().is_zero() || p.z().is_zero()) continue;
        EXPECT_TRUE(is_ldr_of(moore_rep(h, p), hesse));
        ++found;
      }
    }
    if (std::string(q) == "7") {
      EXPECT_EQ(found, 0);
    } else {
      EXPECT_GT(found, 0);
    }
  }
}

TEST(Symmetric, Examples) {
  EXPECT_TRUE(is_symmetric(mat("2", "[[Y, 0, X], [0, Z, Y], [X, Y, X + Y + Z]]")));
  EXPECT_FALSE(is_symmetric(mat("2", "[[0, Z, Y], [Y, 0, X], [X, Y + Z, X + Z]]")));
  EXPECT_TRUE(is_symmetric(LinearMatrixRep::zero(fld("2"))));
}

TEST(Symmetric, SymmetrizerOnOneClassCurves) {
  for (const auto& c : golden::one_ldr()) {
    const LinearMatrixRep m = all_reps(form(c.field, c.form.c_str()))[0].rep;
    const auto a = symmetrizer(m);
    ASSERT_TRUE(a) << c.form;
    EXPECT_TRUE(a->is_invertible());
    EXPECT_TRUE(is_symmetric(transform(*a, m, Mat3::identity(fld(c.field)))));
  }
}

TEST(Golden, PrintedMatricesAreValidAndMatchOneClass) {
  for (const auto* table : {&golden::one_ldr(), &golden::two_ldr()}) {
    for (const auto& c : *table) {
      const TernaryCubic f = form(c.field, c.form.c_str());
      const auto reps = all_reps(f);
      ASSERT_EQ(static_cast<int>(reps.size()), c.ldr);
      for (const auto& text : c.matrices) {
        const LinearMatrixRep m = mat(c.field, text);
        EXPECT_TRUE(is_ldr_of(m, f)) << text;
        int matches = 0;
        for (const auto& r : reps) matches += equivalent(m, r.rep).has_value();
        EXPECT_EQ(matches, 1) << text;
      }
    }
  }
  for (const auto& s : golden::symmetric()) {
    const TernaryCubic f = form(s.field, s.form.c_str());
    const LinearMatrixRep m = mat(s.field, s.matrix);
    EXPECT_TRUE(is_symmetric(m));
    EXPECT_TRUE(is_ldr_of(m, f));
    const auto reps = all_reps(f);
    ASSERT_EQ(reps.size(), 1u);
    EXPECT_TRUE(equivalent(m, reps[0].rep));
  }
}
