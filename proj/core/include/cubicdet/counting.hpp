#pragma once

// Counting projective equivalence classes of smooth plane cubics over F_q
// with a prescribed number of rational points, via Kronecker class numbers
// and the isogeny-class counts of elliptic curves.
//
// Throughout, t = q + 1 - n is the trace attached to a point count n.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cubicdet {

/// An integer or infinity. Infinity is unequal to every integer and to
/// itself when compared with matches().
class ExtInt {
 public:
  ExtInt() = default;  // infinity
  explicit ExtInt(long long v) : v_(v) {}
  static ExtInt infinity() { return {}; }

  bool is_infinite() const { return !v_; }
  long long value() const;
  /// True iff this is finite and equal to t.
  bool matches(long long t) const { return v_ && *v_ == t; }
  /// "∞" or the decimal value.
  std::string str() const;

  friend bool operator==(const ExtInt&, const ExtInt&) = default;

 private:
  std::optional<long long> v_;
};

struct CountReport {
  long long q = 0;
  long long n = 0;
  long long e = 0;
  long long e3 = 0;
  long long e33 = 0;
  ExtInt t0;
  ExtInt t1;
  int eps = 0;
  long long total = 0;
};

/// Kronecker symbol (a | n) for n >= 1.
int kronecker_symbol(long long a, long long n);

struct BinaryForm {
  long long a, b, c;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
};

/// Reduced positive definite forms of discriminant delta, imprimitive ones
/// included, ordered by (a, b).
std::vector<BinaryForm> reduced_forms(long long delta);
/// Kronecker class number H(delta) = #reduced_forms(delta).
long long class_number_H(long long delta);

/// Number of isomorphism classes of elliptic curves over F_q with n points.
long long count_E(long long q, long long n);
/// Those with a nontrivial rational 3-torsion point.
long long count_E3(long long q, long long n);
/// Those with full rational 3-torsion.
long long count_E33(long long q, long long n);

ExtInt t0(long long q);
ExtInt t1(long long q);
int epsilon(long long q, long long t);

/// Classes of smooth plane cubics with exactly n rational points.
CountReport cubics_with_points(long long q, long long n);
/// Classes of smooth plane cubics with exactly n classes of representations
/// (n + 1 rational points).
CountReport cub(long long q, long long n);

}  // namespace cubicdet
