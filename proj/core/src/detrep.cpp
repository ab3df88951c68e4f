#include "cubicdet/detrep.hpp"

#include <algorithm>
#include <thread>

namespace cubicdet {
namespace {

LinearForm lf(const FieldElement& x, const FieldElement& y, const FieldElement& z) { return {{x, y, z}}; }

void require_same_field(const FieldSpec& a, const FieldSpec& b) {
  if (&a != &b) throw Error(ErrorCode::FieldMismatch, "objects over different fields");
}

// Shared preconditions of the two explicit formulas.
void check_formula_input(const TernaryCubic& f, const ProjPoint& p) {
  require_same_field(f.field(), p.field());
  if (!f.is_normalized()) throw Error(ErrorCode::NotNormalized, "form must satisfy a000 = a001 = 0, a002 = 1");
  if (!evaluate(f, p).is_zero()) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  const FieldSpec& fs = f.field();
  if (p == ProjPoint(fs.one(), fs.zero(), fs.zero())) throw Error(ErrorCode::IsBasePoint, "P coincides with [1:0:0]");
}

void check_det(const LinearMatrixRep& rep, const TernaryCubic& f, const FieldElement& lambda) {
  if (det_cubic(rep) != f.scaled(lambda))
    throw Error(ErrorCode::BrokenInvariant, "determinant identity failed for the explicit formula");
}

}  // namespace

LinearMatrixRep::LinearMatrixRep(std::array<Mat3, 3> coeffs) : m_(std::move(coeffs)) {
  require_same_field(m_[0].field(), m_[1].field());
  require_same_field(m_[0].field(), m_[2].field());
}

LinearMatrixRep::LinearMatrixRep(const Entries& entries) {
  for (int v = 0; v < 3; ++v) {
    std::array<std::array<FieldElement, 3>, 3> e;
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) e[r][c] = entries[r][c].c[v];
    m_[v] = Mat3(e);
  }
  require_same_field(m_[0].field(), m_[1].field());
  require_same_field(m_[0].field(), m_[2].field());
}

LinearMatrixRep LinearMatrixRep::zero(const FieldSpec& f) { return LinearMatrixRep({Mat3(f), Mat3(f), Mat3(f)}); }

LinearForm LinearMatrixRep::entry(int r, int c) const { return lf(m_[0](r, c), m_[1](r, c), m_[2](r, c)); }

LinearMatrixRep::Entries LinearMatrixRep::entries() const {
  Entries e;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) e[r][c] = entry(r, c);
  return e;
}

Mat3 LinearMatrixRep::at(const std::array<FieldElement, 3>& v) const {
  return v[0] * m_[0] + v[1] * m_[1] + v[2] * m_[2];
}

LinearMatrixRep transform(const Mat3& a, const LinearMatrixRep& m, const Mat3& b) {
  return LinearMatrixRep({a * m.coeff(0) * b, a * m.coeff(1) * b, a * m.coeff(2) * b});
}

LinearMatrixRep pullback(const LinearMatrixRep& m, const Mat3& s) {
  std::array<Mat3, 3> out;
  for (int j = 0; j < 3; ++j) out[j] = s(0, j) * m.coeff(0) + s(1, j) * m.coeff(1) + s(2, j) * m.coeff(2);
  return LinearMatrixRep(out);
}

TernaryCubic det_cubic(const LinearMatrixRep& rep) {
  static constexpr std::array<std::array<int, 3>, 6> kPerms{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {0, 2, 1}, {2, 1, 0}, {1, 0, 2}}};
  const auto e = rep.entries();
  TernaryCubic acc(rep.field());
  for (int k = 0; k < 6; ++k) {
    const auto& s = kPerms[k];
    TernaryCubic term = product(e[0][s[0]], e[1][s[1]], e[2][s[2]]);
    if (k >= 3) term = term.scaled(-rep.field().one());
    acc = acc + term;
  }
  return acc;
}

std::optional<FieldElement> is_ldr_of(const LinearMatrixRep& rep, const TernaryCubic& f) {
  require_same_field(rep.field(), f.field());
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero form has no representations");
  auto r = det_cubic(rep).ratio_to(f);
  if (!r || r->is_zero()) return std::nullopt;
  return r;
}

LinearMatrixRep mp_case1(const TernaryCubic& f, const ProjPoint& p) {
  check_formula_input(f, p);
  const FieldSpec& fs = f.field();
  const FieldElement &s = p.x(), &t = p.y(), &u = p.z();
  if (u.is_zero()) throw Error(ErrorCode::WrongCase, "the first formula needs u != 0");
  const auto a = [&](std::string_view label) { return f.coeff(label); };
  const FieldElement zero = fs.zero(), one = fs.one();
  const FieldElement u2 = u * u;
  const FieldElement q_tu = a("011") * t * t + a("012") * t * u + a("022") * u2;

  const LinearForm l1 = lf(u2 * a("011"), u2 * a("111"), u * (a("111") * t + a("112") * u));
  const LinearForm l2 = lf(u * (a("011") * t + a("012") * u), zero, a("111") * t * t + a("112") * t * u + a("122") * u2);

  const LinearMatrixRep rep(LinearMatrixRep::Entries{{
      {LinearForm::zero(fs), lf(zero, zero, one), lf(zero, -one, zero)},
      {lf(zero, u, -t), LinearForm::zero(fs), lf(-u2, zero, -(q_tu + s * u))},
      {lf(u, zero, -s), l1, l2},
  }});
  check_det(rep, f, -(u2 * u));
  return rep;
}

LinearMatrixRep mp_case2(const TernaryCubic& f, const ProjPoint& p) {
  check_formula_input(f, p);
  const FieldSpec& fs = f.field();
  if (!p.z().is_zero()) throw Error(ErrorCode::WrongCase, "the second formula needs u = 0");
  const auto a = [&](std::string_view label) { return f.coeff(label); };
  if (a("011").is_zero())
    throw Error(ErrorCode::BrokenInvariant, "a011 = 0 although a second rational point lies on Z = 0");
  const FieldElement zero = fs.zero(), one = fs.one();

  const LinearForm l1 = lf(a("111"), a("012") * a("111") - a("011") * a("112"), zero);
  const LinearForm l2 = lf(zero, a("022") * a("111") - a("011") * a("122"), -(a("011") * a("222")));

  const LinearMatrixRep rep(LinearMatrixRep::Entries{{
      {LinearForm::zero(fs), lf(zero, zero, one), lf(zero, -one, zero)},
      {lf(zero, zero, one), lf(zero, a("011"), zero), lf(one, a("012"), a("022"))},
      {lf(a("011"), a("111"), zero), l1, l2},
  }});
  check_det(rep, f, a("011"));
  return rep;
}

std::vector<RepresentationEntry> all_reps(const TernaryCubic& f, std::optional<ProjPoint> p0) {
  if (!is_smooth(f)) throw Error(ErrorCode::SingularInput, "representations are built for smooth cubics only");
  const auto points = rational_points(f);
  if (points.empty()) throw Error(ErrorCode::NoRationalPoint, "smooth cubic without a rational point");
  if (!p0) p0 = points.front();
  if (std::find(points.begin(), points.end(), *p0) == points.end())
    throw Error(ErrorCode::NotOnCurve, "base point is not on the curve");

  const Normalization norm = normalize(f, *p0);
  const Mat3 back = norm.transform.matrix().inverse();
  std::vector<RepresentationEntry> out;
  for (const auto& p : points) {
    if (p == *p0) continue;
    const ProjPoint moved(back.apply(p.coords()));
    const LinearMatrixRep local = moved.z().is_zero() ? mp_case2(norm.form, moved) : mp_case1(norm.form, moved);
    LinearMatrixRep rep = pullback(local, back);
    auto lambda = is_ldr_of(rep, f);
    if (!lambda) throw Error(ErrorCode::BrokenInvariant, "pulled-back representation lost the determinant identity");
    out.push_back({p, std::move(rep), *lambda});
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

bool same_rank_profile(const LinearMatrixRep& m1, const LinearMatrixRep& m2) {
  for (const auto& p : projective_points(m1.field()))
    if (m1.at(p.coords()).rank() != m2.at(p.coords()).rank()) return false;
  return true;
}

Mat3 from_vector(const FieldSpec& fs, const std::vector<std::uint32_t>& v) {
  Mat3 m(fs);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = FieldElement(fs, v[3 * r + c]);
  return m;
}

// First invertible matrix among the nonzero combinations of a nullspace
// basis, enumerated with the coefficient of basis[0] as the fastest digit.
std::optional<Mat3> first_invertible(const FieldSpec& fs, const std::vector<std::vector<std::uint32_t>>& basis) {
  std::uint64_t combos = 1;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    combos *= fs.q();
    if (combos > (1u << 24)) throw Error(ErrorCode::BudgetExceeded, "solution space too large to enumerate");
  }
  for (std::uint64_t n = 1; n < combos; ++n) {
    std::vector<std::uint32_t> v(9, 0);
    std::uint64_t digits = n;
    for (const auto& b : basis) {
      const auto coeff = static_cast<std::uint32_t>(digits % fs.q());
      digits /= fs.q();
      if (!coeff) continue;
      for (int e = 0; e < 9; ++e) v[e] = fs.add(v[e], fs.mul(coeff, b[e]));
    }
    Mat3 a = from_vector(fs, v);
    if (a.is_invertible()) return a;
  }
  return std::nullopt;
}

std::optional<EquivalenceWitness> verified(const LinearMatrixRep& m1, const LinearMatrixRep& m2, const Mat3& a,
                                           const Mat3& b) {
  if (transform(a, m1, b) != m2) throw Error(ErrorCode::BrokenInvariant, "equivalence witness does not verify");
  return EquivalenceWitness{LinearTransform(a), LinearTransform(b)};
}

// M2 = A M1 B and M1(x0), M2(x0) invertible force B = M1(x0)^-1 A^-1 M2(x0),
// after which A K_i = K'_i A with K_i = M1_i M1(x0)^-1, K'_i = M2_i M2(x0)^-1.
// That condition is linear in A; any invertible solution gives a witness.
std::optional<std::optional<EquivalenceWitness>> intertwiner_search(const LinearMatrixRep& m1,
                                                                    const LinearMatrixRep& m2) {
  const FieldSpec& fs = m1.field();
  std::optional<std::array<FieldElement, 3>> x0;
  for (const auto& p : projective_points(fs)) {
    if (m1.at(p.coords()).is_invertible()) {
      x0 = p.coords();
      break;
    }
  }
  if (!x0) return std::nullopt;  // caller falls back to the group scan
  const Mat3 p1 = m1.at(*x0), p2 = m2.at(*x0);
  const Mat3 p1_inv = p1.inverse(), p2_inv = p2.inverse();

  DenseMatrix sys(fs, 27, 9);
  for (int i = 0; i < 3; ++i) {
    const Mat3 k = m1.coeff(i) * p1_inv;
    const Mat3 kp = m2.coeff(i) * p2_inv;
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        const std::size_t row = 9 * i + 3 * r + c;
        for (int s = 0; s < 3; ++s) {
          auto& left = sys.at(row, 3 * s + c);
          left = fs.add(left, kp(r, s).index());
          auto& right = sys.at(row, 3 * r + s);
          right = fs.sub(right, k(s, c).index());
        }
      }
    }
  }
  const auto basis = sys.nullspace();
  if (basis.empty()) return std::optional<EquivalenceWitness>{};

  if (auto a = first_invertible(fs, basis)) {
    const Mat3 b = p1_inv * a->inverse() * p2;
    return verified(m1, m2, *a, b);
  }
  return std::optional<EquivalenceWitness>{};
}

// Solves (A M1_i) B = M2_i for B; unique since det M1 is not identically 0.
std::optional<Mat3> solve_for_b(const LinearMatrixRep& m1, const LinearMatrixRep& m2, const Mat3& a) {
  const FieldSpec& fs = m1.field();
  DenseMatrix lhs(fs, 9, 3), rhs(fs, 9, 3);
  for (int i = 0; i < 3; ++i) {
    const Mat3 am = a * m1.coeff(i);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) {
        lhs.at(3 * i + r, c) = am(r, c).index();
        rhs.at(3 * i + r, c) = m2.coeff(i)(r, c).index();
      }
  }
  auto x = solve(lhs, rhs);
  if (!x) return std::nullopt;
  Mat3 b(fs);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) b(r, c) = FieldElement(fs, x->at(r, c));
  if (!b.is_invertible() || transform(a, m1, b) != m2) return std::nullopt;
  return b;
}

std::optional<EquivalenceWitness> group_scan(const LinearMatrixRep& m1, const LinearMatrixRep& m2,
                                             const EquivalenceOptions& options) {
  const FieldSpec& fs = m1.field();
  const std::uint64_t q = fs.q();
  if (gl3_order(q) > options.cap)
    throw Error(ErrorCode::BudgetExceeded, "|GL_3(F_" + std::to_string(q) + ")| exceeds the search budget");

  const Mat3 id = Mat3::identity(fs);
  if (auto b = solve_for_b(m1, m2, id)) return verified(m1, m2, id, *b);

  // Remaining matrices in counter order, entry (0,0) most significant.
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  auto decode = [&](std::uint64_t n) {
    Mat3 a(fs);
    for (int e = 8; e >= 0; --e) {
      a(e / 3, e % 3) = FieldElement(fs, static_cast<std::uint32_t>(n % q));
      n /= q;
    }
    return a;
  };
  auto scan = [&](std::uint64_t begin, std::uint64_t end) -> std::optional<std::pair<Mat3, Mat3>> {
    for (std::uint64_t n = begin; n < end; ++n) {
      const Mat3 a = decode(n);
      if (a == id || !a.is_invertible()) continue;
      if (auto b = solve_for_b(m1, m2, a)) return std::pair{a, *b};
    }
    return std::nullopt;
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    if (auto hit = scan(0, total)) return verified(m1, m2, hit->first, hit->second);
    return std::nullopt;
  }
  // Contiguous chunks; the hit from the lowest chunk wins, so the result
  // matches the sequential scan.
  std::vector<std::optional<std::pair<Mat3, Mat3>>> hits(jobs);
  {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
      const std::uint64_t begin = std::min(total, j * chunk), end = std::min(total, begin + chunk);
      workers.emplace_back([&, j, begin, end] { hits[j] = scan(begin, end); });
    }
  }
  for (auto& hit : hits)
    if (hit) return verified(m1, m2, hit->first, hit->second);
  return std::nullopt;
}

}  // namespace

std::optional<EquivalenceWitness> equivalent(const LinearMatrixRep& m1, const LinearMatrixRep& m2,
                                             const EquivalenceOptions& options) {
  require_same_field(m1.field(), m2.field());
  const TernaryCubic d1 = det_cubic(m1), d2 = det_cubic(m2);
  if (d1.is_zero() || d2.is_zero() || !d2.ratio_to(d1)) return std::nullopt;
  if (!same_rank_profile(m1, m2)) return std::nullopt;

  if (options.method == EquivalenceOptions::Method::Intertwiner) {
    if (auto result = intertwiner_search(m1, m2)) return *result;
  }
  return group_scan(m1, m2, options);
}

std::size_t count_classes(std::span<const LinearMatrixRep> reps, const EquivalenceOptions& options) {
  std::vector<const LinearMatrixRep*> classes;
  for (const auto& rep : reps) {
    const bool known = std::any_of(classes.begin(), classes.end(),
                                   [&](const LinearMatrixRep* c) { return equivalent(*c, rep, options).has_value(); });
    if (!known) classes.push_back(&rep);
  }
  return classes.size();
}

// ---------------------------------------------------------------------------

TernaryCubic weierstrass_form(const FieldElement& a, const FieldElement& b) {
  const FieldSpec& fs = a.field();
  require_same_field(fs, b.field());
  TernaryCubic f(fs);
  f.set(*cubic_index("112"), fs.one());
  f.set(*cubic_index("000"), -fs.one());
  f.set(*cubic_index("022"), -a);
  f.set(*cubic_index("222"), -b);
  return f;
}

TernaryCubic hesse_form(const FieldElement& h) {
  const FieldSpec& fs = h.field();
  TernaryCubic f(fs);
  f.set(*cubic_index("000"), fs.one());
  f.set(*cubic_index("111"), fs.one());
  f.set(*cubic_index("222"), fs.one());
  f.set(*cubic_index("012"), h);
  return f;
}

LinearMatrixRep galinat_rep(const FieldElement& a, const FieldElement& b, const ProjPoint& p) {
  const FieldSpec& fs = a.field();
  require_same_field(fs, p.field());
  if (fs.p() == 2 || fs.p() == 3) throw Error(ErrorCode::BadCharacteristic, "Weierstrass model needs char != 2, 3");
  if ((fs.from_int(4) * a * a * a + fs.from_int(27) * b * b).is_zero())
    throw Error(ErrorCode::SingularCurve, "4a^3 + 27b^2 = 0");
  if (p.z().is_zero()) throw Error(ErrorCode::InvalidArgument, "point must lie in the affine part Z != 0");
  if (!evaluate(weierstrass_form(a, b), p).is_zero()) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");

  const FieldElement lam = p.x() / p.z(), mu = p.y() / p.z();
  const FieldElement zero = fs.zero(), one = fs.one();
  return LinearMatrixRep(LinearMatrixRep::Entries{{
      {lf(one, zero, -lam), LinearForm::zero(fs), lf(zero, -one, -mu)},
      {lf(zero, -one, mu), lf(one, zero, lam), lf(zero, zero, a + lam * lam)},
      {LinearForm::zero(fs), lf(zero, zero, one), lf(-one, zero, zero)},
  }});
}

LinearMatrixRep moore_rep(const FieldElement& h, const ProjPoint& p) {
  const FieldSpec& fs = h.field();
  require_same_field(fs, p.field());
  if (fs.p() == 2 || fs.p() == 3) throw Error(ErrorCode::BadCharacteristic, "Hesse model needs char != 2, 3");
  if (p.x().is_zero() || p.y().is_zero() || p.z().is_zero())
    throw Error(ErrorCode::ZeroCoordinate, "Moore matrix needs a point with a0 a1 a2 != 0");
  const TernaryCubic hesse = hesse_form(h);
  if (!is_smooth(hesse)) throw Error(ErrorCode::SingularCurve, "Hesse cubic is singular");
  if (!evaluate(hesse, p).is_zero()) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");

  const FieldElement &a0 = p.x(), &a1 = p.y(), &a2 = p.z();
  const FieldElement zero = fs.zero();
  return LinearMatrixRep(LinearMatrixRep::Entries{{
      {lf(a0, zero, zero), lf(zero, zero, a1), lf(zero, a2, zero)},
      {lf(zero, a1, zero), lf(a2, zero, zero), lf(zero, zero, a0)},
      {lf(zero, zero, a2), lf(zero, a0, zero), lf(a1, zero, zero)},
  }});
}

bool is_symmetric(const LinearMatrixRep& rep) {
  return rep.coeff(0).is_symmetric() && rep.coeff(1).is_symmetric() && rep.coeff(2).is_symmetric();
}

std::optional<Mat3> symmetrizer(const LinearMatrixRep& rep) {
  const FieldSpec& fs = rep.field();
  static constexpr std::array<std::array<int, 2>, 3> kOffDiagonal{{{0, 1}, {0, 2}, {1, 2}}};
  // (A M_i)[r][c] - (A M_i)[c][r] = 0, linear in the entries of A.
  DenseMatrix sys(fs, 9, 9);
  for (int i = 0; i < 3; ++i) {
    const Mat3& m = rep.coeff(i);
    for (int k = 0; k < 3; ++k) {
      const auto [r, c] = kOffDiagonal[k];
      for (int s = 0; s < 3; ++s) {
        auto& x = sys.at(3 * i + k, 3 * r + s);
        x = fs.add(x, m(s, c).index());
        auto& y = sys.at(3 * i + k, 3 * c + s);
        y = fs.sub(y, m(s, r).index());
      }
    }
  }
  return first_invertible(fs, sys.nullspace());
}

}  // namespace cubicdet
