#include "cubicdet/plane.hpp"

#include <algorithm>

namespace cubicdet {
namespace {

constexpr std::array<std::array<int, 3>, 3> kQuadIndex{{{0, 1, 2}, {1, 3, 4}, {2, 4, 5}}};

constexpr int exponent_index(std::array<int, 3> e) {
  for (int k = 0; k < 10; ++k)
    if (kCubicExponents[k] == e) return k;
  return -1;
}

// kTimesVar[qm][v]: cubic index of (quadratic monomial qm) * x_v.
constexpr std::array<std::array<int, 3>, 6> make_times_var() {
  std::array<std::array<int, 3>, 6> t{};
  for (int qm = 0; qm < 6; ++qm) {
    for (int v = 0; v < 3; ++v) {
      auto e = kQuadraticExponents[qm];
      e[v] += 1;
      t[qm][v] = exponent_index(e);
    }
  }
  return t;
}
constexpr auto kTimesVar = make_times_var();

// Variables (i <= j <= k) of each cubic monomial.
constexpr std::array<std::array<int, 3>, 10> kCubicVars{{
    {0, 0, 0}, {0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2},
    {0, 2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}, {2, 2, 2},
}};

// Univariate polynomials with packed coefficients, low degree first.
using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_rem(const FieldSpec& f, Poly a, const Poly& b) {
  const std::uint32_t lead_inv = f.inv(b.back());
  const std::size_t db = b.size() - 1;
  trim(a);
  while (a.size() >= b.size()) {
    const std::uint32_t factor = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(factor, b[i]));
    trim(a);
  }
  return a;
}

Poly poly_gcd(const FieldSpec& f, Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// True if the polynomials share a root over the algebraic closure (or all
// vanish identically).
template <std::size_t N>
bool common_root(const FieldSpec& f, std::array<Poly, N>& polys) {
  Poly g;
  for (auto& p : polys) {
    g = poly_gcd(f, std::move(g), std::move(p));
    if (g.size() == 1) return false;
  }
  return g.empty() || g.size() >= 2;
}

// Cubic and gradient coefficients in one flat table: row 0 is F, rows 1..3
// are the partials re-expressed on cubic-like exponent lists.
struct Term {
  std::uint32_t coeff;
  std::array<int, 3> exps;
};

struct SingularSystem {
  std::array<std::vector<Term>, 4> rows;
};

SingularSystem singular_system(const TernaryCubic& f) {
  SingularSystem s;
  const auto d = partials(f);
  for (int k = 0; k < 10; ++k)
    if (f.raw()[k]) s.rows[0].push_back({f.raw()[k], kCubicExponents[k]});
  for (int v = 0; v < 3; ++v)
    for (int k = 0; k < 6; ++k)
      if (!d[v].c[k].is_zero()) s.rows[v + 1].push_back({d[v].c[k].index(), kQuadraticExponents[k]});
  return s;
}

SingularSystem embed_system(const SingularSystem& s, const FieldSpec& from, const FieldSpec& to) {
  SingularSystem out = s;
  for (auto& row : out.rows)
    for (auto& t : row) t.coeff = embed(FieldElement(from, t.coeff), to).index();
  return out;
}

}  // namespace

std::optional<std::size_t> cubic_index(std::string_view label) noexcept {
  for (std::size_t k = 0; k < kCubicLabels.size(); ++k)
    if (kCubicLabels[k] == label) return k;
  return std::nullopt;
}

std::size_t cubic_index(int i, int j, int k) noexcept {
  std::array<int, 3> e{0, 0, 0};
  ++e[i];
  ++e[j];
  ++e[k];
  return static_cast<std::size_t>(exponent_index(e));
}

LinearForm LinearForm::variable(const FieldSpec& f, int v) {
  LinearForm l = zero(f);
  l.c.at(v) = f.one();
  return l;
}

FieldElement QuadraticForm::operator()(const std::array<FieldElement, 3>& v) const {
  return c[0] * v[0] * v[0] + c[1] * v[0] * v[1] + c[2] * v[0] * v[2] + c[3] * v[1] * v[1] + c[4] * v[1] * v[2] +
         c[5] * v[2] * v[2];
}

bool QuadraticForm::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const FieldElement& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------

TernaryCubic::TernaryCubic(const FieldSpec& field, const std::array<long long, 10>& coeffs) : field_(&field) {
  for (std::size_t k = 0; k < 10; ++k) c_[k] = field.from_int_raw(coeffs[k]);
}

const FieldSpec& TernaryCubic::field() const {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialised cubic form");
  return *field_;
}

FieldElement TernaryCubic::coeff(std::string_view label) const {
  const auto k = cubic_index(label);
  if (!k) throw Error(ErrorCode::InvalidArgument, "no coefficient a_" + std::string(label));
  return coeff(*k);
}

void TernaryCubic::set(std::size_t k, const FieldElement& v) {
  if (v.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  c_.at(k) = v.index();
}

bool TernaryCubic::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t x) { return x == 0; });
}

TernaryCubic TernaryCubic::scaled(const FieldElement& s) const {
  if (s.field_ptr() != field_) throw Error(ErrorCode::FieldMismatch, "scalar from another field");
  TernaryCubic out(*this);
  for (auto& x : out.c_) x = field_->mul(x, s.index());
  return out;
}

TernaryCubic TernaryCubic::monic() const {
  for (auto x : c_)
    if (x != 0) return scaled(FieldElement(field(), field_->inv(x)));
  throw Error(ErrorCode::InvalidArgument, "zero form has no monic normalisation");
}

std::optional<FieldElement> TernaryCubic::ratio_to(const TernaryCubic& other) const {
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
  if (other.is_zero()) return std::nullopt;
  std::size_t k = 0;
  while (other.c_[k] == 0) ++k;
  const FieldElement r(*field_, field_->mul(c_[k], field_->inv(other.c_[k])));
  if (other.scaled(r) == *this) return r;
  return std::nullopt;
}

bool TernaryCubic::is_normalized() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 1; }

TernaryCubic operator+(const TernaryCubic& a, const TernaryCubic& b) {
  if (a.field_ != b.field_) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
  TernaryCubic out(a);
  for (std::size_t k = 0; k < 10; ++k) out.c_[k] = a.field_->add(a.c_[k], b.c_[k]);
  return out;
}

ProjPoint::ProjPoint(const FieldElement& x, const FieldElement& y, const FieldElement& z) : v_{x, y, z} {
  const FieldSpec* f = x.field_ptr();
  if (!f || y.field_ptr() != f || z.field_ptr() != f)
    throw Error(ErrorCode::FieldMismatch, "point coordinates from different fields");
  for (auto& c : v_) {
    if (c.is_zero()) continue;
    const FieldElement s = c.inverse();
    for (auto& d : v_) d = d * s;
    return;
  }
  throw Error(ErrorCode::InvalidArgument, "[0:0:0] is not a projective point");
}

ProjPoint ProjPoint::of(const FieldSpec& f, long long x, long long y, long long z) {
  return ProjPoint(f.from_int(x), f.from_int(y), f.from_int(z));
}

LinearTransform::LinearTransform(Mat3 m) : m_(std::move(m)) {
  if (!m_.is_invertible()) throw Error(ErrorCode::InvalidArgument, "linear transform must be invertible");
}

// ---------------------------------------------------------------------------

FieldElement evaluate(const TernaryCubic& f, const std::array<FieldElement, 3>& v) {
  const FieldSpec& fs = f.field();
  for (const auto& c : v)
    if (c.field_ptr() != &fs) throw Error(ErrorCode::FieldMismatch, "point and form over different fields");
  std::uint32_t acc = 0;
  for (int k = 0; k < 10; ++k) {
    if (!f.raw()[k]) continue;
    std::uint32_t term = f.raw()[k];
    for (int var : kCubicVars[k]) term = fs.mul(term, v[var].index());
    acc = fs.add(acc, term);
  }
  return FieldElement(fs, acc);
}

FieldElement evaluate(const TernaryCubic& f, const ProjPoint& p) { return evaluate(f, p.coords()); }

std::array<QuadraticForm, 3> partials(const TernaryCubic& f) {
  const FieldSpec& fs = f.field();
  std::array<QuadraticForm, 3> out;
  for (auto& q : out) q.c.fill(fs.zero());
  for (int k = 0; k < 10; ++k) {
    const FieldElement a = f.coeff(k);
    if (a.is_zero()) continue;
    for (int v = 0; v < 3; ++v) {
      auto e = kCubicExponents[k];
      if (e[v] == 0) continue;
      const long long mult = e[v];
      e[v] -= 1;
      for (int qm = 0; qm < 6; ++qm) {
        if (kQuadraticExponents[qm] == e) out[v].c[qm] += fs.from_int(mult) * a;
      }
    }
  }
  return out;
}

std::array<FieldElement, 3> gradient(const TernaryCubic& f, const std::array<FieldElement, 3>& v) {
  const auto d = partials(f);
  return {d[0](v), d[1](v), d[2](v)};
}

TernaryCubic product(const LinearForm& l1, const LinearForm& l2, const LinearForm& l3) {
  const FieldSpec& fs = l1.field();
  TernaryCubic::Raw out{};
  std::array<std::uint32_t, 6> quad{};
  for (int r = 0; r < 3; ++r)
    for (int s = 0; s < 3; ++s)
      quad[kQuadIndex[r][s]] = fs.add(quad[kQuadIndex[r][s]], fs.mul(l1.c[r].index(), l2.c[s].index()));
  for (int qm = 0; qm < 6; ++qm)
    for (int t = 0; t < 3; ++t) {
      const int k = kTimesVar[qm][t];
      out[k] = fs.add(out[k], fs.mul(quad[qm], l3.c[t].index()));
    }
  return TernaryCubic(fs, out);
}

void substitute_raw(const FieldSpec& fs, const std::uint32_t* t, const TernaryCubic::Raw& f,
                    TernaryCubic::Raw& out) {
  out.fill(0);
  // Products of pairs of rows are shared between monomials.
  std::array<std::array<std::uint32_t, 6>, 6> pair{};
  std::array<bool, 6> have{};
  for (int k = 0; k < 10; ++k) {
    if (!f[k]) continue;
    const auto [i, j, l] = kCubicVars[k];
    const int pq = kQuadIndex[i][j];
    auto& quad = pair[pq];
    if (!have[pq]) {
      quad.fill(0);
      for (int r = 0; r < 3; ++r) {
        const std::uint32_t a = t[3 * i + r];
        if (!a) continue;
        for (int s = 0; s < 3; ++s) {
          const std::uint32_t b = t[3 * j + s];
          if (!b) continue;
          quad[kQuadIndex[r][s]] = fs.add(quad[kQuadIndex[r][s]], fs.mul(a, b));
        }
      }
      have[pq] = true;
    }
    for (int qm = 0; qm < 6; ++qm) {
      if (!quad[qm]) continue;
      const std::uint32_t aq = fs.mul(f[k], quad[qm]);
      for (int v = 0; v < 3; ++v) {
        const std::uint32_t c = t[3 * l + v];
        if (!c) continue;
        const int m = kTimesVar[qm][v];
        out[m] = fs.add(out[m], fs.mul(aq, c));
      }
    }
  }
}

TernaryCubic substitute(const Mat3& m, const TernaryCubic& f) {
  const FieldSpec& fs = f.field();
  if (&m.field() != &fs) throw Error(ErrorCode::FieldMismatch, "matrix and form over different fields");
  std::array<std::uint32_t, 9> t;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) t[3 * r + c] = m(r, c).index();
  TernaryCubic::Raw out;
  substitute_raw(fs, t.data(), f.raw(), out);
  return TernaryCubic(fs, out);
}

TernaryCubic act(const LinearTransform& t, const TernaryCubic& f) { return substitute(t.matrix(), f); }

// ---------------------------------------------------------------------------

bool is_smooth(const TernaryCubic& f) {
  if (!f.field_ptr() || f.is_zero()) return false;
  const FieldSpec& fs = f.field();
  const SingularSystem sys = singular_system(f);

  // [1:0:0]
  {
    bool all_zero = true;
    for (const auto& row : sys.rows)
      for (const auto& t : row)
        if (t.exps[1] == 0 && t.exps[2] == 0) all_zero = false;
    if (all_zero) return false;
  }
  // [x:1:0], as polynomials in x over F_q.
  {
    std::array<Poly, 4> polys;
    for (int r = 0; r < 4; ++r) {
      polys[r].assign(4, 0);
      for (const auto& t : sys.rows[r])
        if (t.exps[2] == 0) polys[r][t.exps[0]] = fs.add(polys[r][t.exps[0]], t.coeff);
    }
    if (common_root(fs, polys)) return false;
  }
  // [x:y:1] with x in F_{q^k}, as polynomials in y.
  const std::uint64_t q = fs.q();
  std::vector<unsigned> degrees;
  if (q * q * q * q <= FieldSpec::kInternalCap) {
    degrees = {3, 4};
  } else if (q * q * q <= FieldSpec::kInternalCap) {
    degrees = {2, 3};
  } else {
    throw Error(ErrorCode::UnsupportedSize, "smoothness test needs F_{q^3}, too large for q = " + std::to_string(q));
  }
  for (unsigned k : degrees) {
    const FieldSpec& ext = extension_field(fs, k);
    const SingularSystem es = embed_system(sys, fs, ext);
    std::array<Poly, 4> polys;
    for (std::uint32_t x = 0; x < ext.q(); ++x) {
      const std::array<std::uint32_t, 4> xp{1, x, ext.mul(x, x), ext.mul(ext.mul(x, x), x)};
      for (int r = 0; r < 4; ++r) {
        polys[r].assign(4, 0);
        for (const auto& t : es.rows[r]) {
          auto& slot = polys[r][t.exps[1]];
          slot = ext.add(slot, ext.mul(t.coeff, xp[t.exps[0]]));
        }
      }
      if (common_root(ext, polys)) return false;
    }
  }
  return true;
}

std::vector<ProjPoint> projective_points(const FieldSpec& field) {
  std::vector<ProjPoint> out;
  const std::uint32_t q = field.q();
  out.reserve(std::size_t{q} * q + q + 1);
  const FieldElement zero = field.zero(), one = field.one();
  for (std::uint32_t y = 0; y < q; ++y)
    for (std::uint32_t z = 0; z < q; ++z) out.emplace_back(one, field.element(y), field.element(z));
  for (std::uint32_t z = 0; z < q; ++z) out.emplace_back(zero, one, field.element(z));
  out.emplace_back(zero, zero, one);
  return out;
}

std::vector<ProjPoint> rational_points(const TernaryCubic& f) {
  std::vector<ProjPoint> out;
  for (const auto& p : projective_points(f.field()))
    if (evaluate(f, p).is_zero()) out.push_back(p);
  return out;
}

namespace {

std::array<FieldElement, 3> checked_gradient(const TernaryCubic& f, const ProjPoint& p) {
  if (&p.field() != &f.field()) throw Error(ErrorCode::FieldMismatch, "point and form over different fields");
  if (!evaluate(f, p).is_zero()) throw Error(ErrorCode::NotOnCurve, "point is not on the curve");
  auto g = gradient(f, p.coords());
  if (g[0].is_zero() && g[1].is_zero() && g[2].is_zero())
    throw Error(ErrorCode::SingularPoint, "curve is singular at the point");
  return g;
}

}  // namespace

LinearForm tangent_line(const TernaryCubic& f, const ProjPoint& p) {
  const auto g = checked_gradient(f, p);
  const ProjPoint scaled(g);
  return LinearForm{scaled.coords()};
}

bool is_flex(const TernaryCubic& f, const ProjPoint& p) {
  const LinearForm line = tangent_line(f, p);
  const FieldSpec& fs = f.field();
  for (const auto& other : projective_points(fs)) {
    if (other == p || !line(other.coords()).is_zero()) continue;
    // Restrict F to the tangent line s*P + t*Q; P sits at t = 0 and the
    // multiplicity there is the first nonvanishing coefficient of t^i.
    const Mat3 m = Mat3::from_columns(p.coords(), other.coords(), {fs.zero(), fs.zero(), fs.zero()});
    const TernaryCubic restricted = substitute(m, f);
    return restricted.coeff(3).is_zero();
  }
  throw Error(ErrorCode::BrokenInvariant, "tangent line has a single rational point");
}

Normalization normalize(const TernaryCubic& f, const ProjPoint& p0) {
  const FieldSpec& fs = f.field();
  if (!is_smooth(f)) throw Error(ErrorCode::SingularInput, "normalization needs a smooth cubic");
  const auto g = checked_gradient(f, p0);

  const FieldElement zero = fs.zero(), one = fs.one();
  auto basis = [&](int i) {
    std::array<FieldElement, 3> e{zero, zero, zero};
    e[i] = one;
    return e;
  };
  std::optional<std::array<FieldElement, 3>> second;
  for (int i = 0; i < 3 && !second; ++i)
    if (g[i].is_zero() && ProjPoint(basis(i)) != p0) second = basis(i);
  if (!second) {
    const LinearForm line{g};
    for (const auto& q : projective_points(fs)) {
      if (q != p0 && line(q.coords()).is_zero()) {
        second = q.coords();
        break;
      }
    }
  }
  int third = 0;
  while (g[third].is_zero()) ++third;

  LinearTransform t(Mat3::from_columns(p0.coords(), *second, basis(third)));
  const TernaryCubic moved = act(t, f);
  const FieldElement scale = moved.coeff(2).inverse();
  TernaryCubic form = moved.scaled(scale);
  if (!form.is_normalized()) throw Error(ErrorCode::BrokenInvariant, "normalization postcondition failed");
  return {std::move(t), std::move(form), scale};
}

}  // namespace cubicdet
