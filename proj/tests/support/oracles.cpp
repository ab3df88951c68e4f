#include "oracles.hpp"

#include <map>
#include <set>
#include <tuple>

namespace cubicdet::oracle_ref {

namespace {

using Exps = std::array<int, 3>;
using Poly = std::map<Exps, FieldElement>;

struct Ring {
  const FieldSpec* f;

  Poly mul(const Poly& a, const Poly& b) const {
    Poly r;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        const Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
        auto [it, fresh] = r.try_emplace(e, f->zero());
        it->second += ca * cb;
      }
    }
    return r;
  }
  Poly add(const Poly& a, const Poly& b, bool negate_b = false) const {
    Poly r = a;
    for (const auto& [e, c] : b) {
      auto [it, fresh] = r.try_emplace(e, f->zero());
      it->second += negate_b ? -c : c;
    }
    return r;
  }
};

Poly linear(const LinearForm& l) {
  Poly p;
  p[{1, 0, 0}] = l.c[0];
  p[{0, 1, 0}] = l.c[1];
  p[{0, 0, 1}] = l.c[2];
  return p;
}

FieldElement eval_monomial(const FieldElement& c, const Exps& e, const std::array<FieldElement, 3>& v) {
  FieldElement r = c;
  for (int i = 0; i < 3; ++i) r *= v[i].pow(e[i]);
  return r;
}

}  // namespace

TernaryCubic cofactor_det(const LinearMatrixRep& m) {
  const Ring ring{&m.field()};
  auto e = [&](int r, int c) { return linear(m.entry(r, c)); };
  auto minor = [&](int r0, int c0, int r1, int c1) {
    return ring.add(ring.mul(e(r0, c0), e(r1, c1)), ring.mul(e(r0, c1), e(r1, c0)), true);
  };
  Poly d = ring.mul(e(0, 0), minor(1, 1, 2, 2));
  d = ring.add(d, ring.mul(e(0, 1), minor(1, 0, 2, 2)), true);
  d = ring.add(d, ring.mul(e(0, 2), minor(1, 0, 2, 1)));
  TernaryCubic out(m.field());
  for (const auto& [ex, c] : d) {
    for (std::size_t k = 0; k < kCubicExponents.size(); ++k) {
      if (kCubicExponents[k] == ex) out.set(k, c);
    }
  }
  return out;
}

bool brute_is_smooth(const TernaryCubic& f, unsigned max_degree) {
  for (unsigned k = 1; k <= max_degree; ++k) {
    const FieldSpec& ext = k == 1 ? f.field() : extension_field(f.field(), k);
    std::array<FieldElement, 10> c;
    for (std::size_t i = 0; i < 10; ++i) c[i] = embed(f.coeff(i), ext);
    const auto elems = enumerate(ext);
    auto singular_at = [&](const std::array<FieldElement, 3>& v) {
      FieldElement val = ext.zero();
      std::array<FieldElement, 3> grad{ext.zero(), ext.zero(), ext.zero()};
      for (std::size_t i = 0; i < 10; ++i) {
        const Exps& e = kCubicExponents[i];
        val += eval_monomial(c[i], e, v);
        for (int d = 0; d < 3; ++d) {
          if (e[d] == 0) continue;
          Exps de = e;
          --de[d];
          grad[d] += ext.from_int(e[d]) * eval_monomial(c[i], de, v);
        }
      }
      return val.is_zero() && grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero();
    };
    const FieldElement one = ext.one(), zero = ext.zero();
    for (const auto& y : elems) {
      for (const auto& z : elems) {
        if (singular_at({one, y, z})) return false;
      }
    }
    for (const auto& z : elems) {
      if (singular_at({zero, one, z})) return false;
    }
    if (singular_at({zero, zero, one})) return false;
  }
  return true;
}

std::uint64_t brute_point_count(const TernaryCubic& f) {
  const auto elems = enumerate(f.field());
  std::uint64_t zeros = 0;
  for (const auto& x : elems) {
    for (const auto& y : elems) {
      for (const auto& z : elems) {
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        if (evaluate(f, std::array<FieldElement, 3>{x, y, z}).is_zero()) ++zeros;
      }
    }
  }
  return zeros / (f.field().q() - 1);
}

long long brute_class_number(long long delta, long long bound) {
  std::set<std::tuple<long long, long long, long long>> reduced;
  for (long long a = 1; a <= bound; ++a) {
    for (long long b = -bound; b <= bound; ++b) {
      const long long num = b * b - delta;
      if (num % (4 * a) != 0) continue;
      long long c = num / (4 * a);
      if (c < 1 || c > bound) continue;
      long long ra = a, rb = b, rc = c;
      for (;;) {
        if (!(-ra < rb && rb <= ra)) {
          // b -> b + 2ka lands in (-a, a].
          long long k = (ra - rb) / (2 * ra);
          if ((ra - rb) % (2 * ra) != 0 && ra - rb < 0) --k;
          rb += 2 * k * ra;
          if (rb <= -ra) rb += 2 * ra;
          if (rb > ra) rb -= 2 * ra;
          rc = (rb * rb - delta) / (4 * ra);
        }
        if (ra > rc) {
          std::swap(ra, rc);
          rb = -rb;
          continue;
        }
        break;
      }
      if (ra == rc && rb < 0) rb = -rb;
      reduced.emplace(ra, rb, rc);
    }
  }
  return static_cast<long long>(reduced.size());
}

}  // namespace cubicdet::oracle_ref
