#include "cubicdet/counting.hpp"

#include <cmath>
#include <cstdlib>

#include "cubicdet/error.hpp"
#include "cubicdet/gf.hpp"

namespace cubicdet {
namespace {

long long isqrt(long long n) {
  if (n < 0) return -1;
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(long long n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

long long ipow(long long b, unsigned e) {
  long long r = 1;
  while (e--) r *= b;
  return r;
}

long long mod(long long a, long long n) { return ((a % n) + n) % n; }

struct PrimePower {
  long long p;
  unsigned m;
};

PrimePower split(long long q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "q must be a prime power");
  auto pm = prime_power(static_cast<std::uint64_t>(q));
  if (!pm) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not a prime power");
  return {pm->first, pm->second};
}

// 2 (p/3)^{m/2} p^{m/2}, for even m.
long long supersingular_trace(const PrimePower& pp) {
  return 2 * ipow(kronecker_symbol(pp.p, 3), pp.m / 2) * ipow(pp.p, pp.m / 2);
}

// The unique t with t = q+1 (mod 9), p not dividing t and t^2 + k x^2 = 4q.
ExtInt scan_trace(long long q, long long p, long long k) {
  const long long bound = isqrt(4 * q);
  std::optional<long long> found;
  for (long long t = -bound; t <= bound; ++t) {
    if (mod(t - (q + 1), 9) != 0 || t % p == 0) continue;
    const long long rest = 4 * q - t * t;
    if (rest % k != 0 || !is_square(rest / k)) continue;
    if (found)
      throw Error(ErrorCode::AmbiguousT, "several traces qualify for q = " + std::to_string(q));
    found = t;
  }
  if (!found) throw Error(ErrorCode::NoSolution, "no trace qualifies for q = " + std::to_string(q));
  return ExtInt(*found);
}

}  // namespace

long long ExtInt::value() const {
  if (!v_) throw Error(ErrorCode::InvalidArgument, "value of infinity");
  return *v_;
}

std::string ExtInt::str() const { return v_ ? std::to_string(*v_) : "∞"; }

int kronecker_symbol(long long a, long long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "kronecker_symbol needs n >= 1");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const long long r = mod(a, 8);
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n.
  a = mod(a, n);
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const long long r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::vector<BinaryForm> reduced_forms(long long delta) {
  if (delta >= 0 || (mod(delta, 4) != 0 && mod(delta, 4) != 1))
    throw Error(ErrorCode::BadDiscriminant, "not a negative discriminant: " + std::to_string(delta));
  std::vector<BinaryForm> out;
  for (long long a = 1; 3 * a * a <= -delta; ++a) {
    for (long long b = -a + 1; b <= a; ++b) {
      const long long num = b * b - delta;
      if (num % (4 * a) != 0) continue;
      const long long c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      out.push_back({a, b, c});
    }
  }
  return out;
}

long long class_number_H(long long delta) { return static_cast<long long>(reduced_forms(delta).size()); }

long long count_E(long long q, long long n) {
  const PrimePower pp = split(q);
  const long long t = q + 1 - n;
  if (t * t > 4 * q) return 0;
  if (t % pp.p != 0) return class_number_H(t * t - 4 * q);
  if (pp.m % 2 == 1) {
    if (t == 0) return class_number_H(-4 * pp.p);
    if ((t * t == 2 * q && pp.p == 2) || (t * t == 3 * q && pp.p == 3)) return 1;
    return 0;
  }
  if (t == 0) return 1 - kronecker_symbol(-4, pp.p);
  if (t * t == q) return 1 - kronecker_symbol(-3, pp.p);
  if (t * t == 4 * q) {
    const long long num = pp.p + 6 - 4 * kronecker_symbol(-3, pp.p) - 3 * kronecker_symbol(-4, pp.p);
    if (num % 12 != 0) throw Error(ErrorCode::BrokenInvariant, "supersingular count is not an integer");
    return num / 12;
  }
  return 0;
}

long long count_E3(long long q, long long n) { return mod(n, 3) == 0 ? count_E(q, n) : 0; }

long long count_E33(long long q, long long n) {
  const PrimePower pp = split(q);
  const long long t = q + 1 - n;
  if (q % 3 == 1 && t * t <= 4 * q && t % pp.p != 0 && mod(t - (q + 1), 9) == 0)
    return class_number_H((t * t - 4 * q) / 9);
  if (pp.m % 2 == 0 && pp.p != 3 && t == supersingular_trace(pp)) return count_E(q, n);
  return 0;
}

ExtInt t0(long long q) {
  const PrimePower pp = split(q);
  if (q % 3 != 1) return ExtInt::infinity();
  if (pp.p % 3 != 1) return ExtInt(supersingular_trace(pp));
  return scan_trace(q, pp.p, 3);
}

ExtInt t1(long long q) {
  const PrimePower pp = split(q);
  if (q % 12 != 1 && q % 12 != 4) return ExtInt::infinity();
  if (pp.p % 4 != 1) return ExtInt(supersingular_trace(pp));
  return scan_trace(q, pp.p, 4);
}

int epsilon(long long q, long long t) {
  const PrimePower pp = split(q);
  const ExtInt a = t0(q), b = t1(q);
  const bool same = !a.is_infinite() && a == b;
  if (same && a.matches(t)) return pp.p == 2 ? 3 : 4;
  if (!same && (a.matches(t) || b.matches(t))) return 2;
  return 0;
}

CountReport cubics_with_points(long long q, long long n) {
  CountReport r;
  r.q = q;
  r.n = n;
  r.e = count_E(q, n);
  r.e3 = count_E3(q, n);
  r.e33 = count_E33(q, n);
  r.t0 = t0(q);
  r.t1 = t1(q);
  r.eps = epsilon(q, q + 1 - n);
  r.total = r.e + r.e3 + 3 * r.e33 - r.eps;
  return r;
}

CountReport cub(long long q, long long n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be nonnegative");
  return cubics_with_points(q, n + 1);
}

}  // namespace cubicdet
