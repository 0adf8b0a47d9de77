#pragma once

// Exact arithmetic in Z[phi] and the integer sequences carried by it:
// Fibonacci, Lucas and Fibonacci divisors F_n^(k) = F_{kn} / F_k.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "goldcalc/error.hpp"

namespace goldcalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double kPhi = std::numbers::phi;
/// phi' = 1 - phi = -1/phi.
inline constexpr double kPhiConj = 1.0 - std::numbers::phi;

/// Element a + b*phi of Z[phi] (T = BigInt) or Q[phi] (T = BigRational).
/// Products reduce through phi^2 = phi + 1.
template <class T>
class Golden {
 public:
  Golden() = default;
  Golden(T a, T b) : a_(std::move(a)), b_(std::move(b)) {}
  explicit Golden(T a) : a_(std::move(a)), b_(0) {}

  static Golden one() { return Golden(T(1), T(0)); }
  static Golden phi() { return Golden(T(0), T(1)); }

  /// Coefficient of 1.
  const T& a() const { return a_; }
  /// Coefficient of phi.
  const T& b() const { return b_; }

  /// Image under phi -> phi' = 1 - phi; a ring automorphism.
  Golden conjugate() const { return Golden(a_ + b_, -b_); }
  /// x * conjugate(x), always rational.
  T norm() const { return a_ * a_ + a_ * b_ - b_ * b_; }
  /// x + conjugate(x), always rational.
  T trace() const { return 2 * a_ + b_; }
  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Golden& operator+=(const Golden& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  Golden& operator-=(const Golden& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  Golden& operator*=(const Golden& o) {
    T bb = b_ * o.b_;
    T a = a_ * o.a_ + bb;
    T b = a_ * o.b_ + b_ * o.a_ + bb;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }

  /// Multiplicative inverse. Over Z[phi] only units (norm +-1) are invertible.
  Golden inverse() const {
    const T n = norm();
    if (n == 0) throw DomainError("Golden::inverse: zero element");
    Golden c = conjugate();
    if constexpr (std::is_same_v<T, BigInt>) {
      if (n != 1 && n != -1) throw DomainError("Golden::inverse: element is not a unit of Z[phi]");
      if (n == -1) c = -c;
      return c;
    } else {
      return Golden(c.a_ / n, c.b_ / n);
    }
  }

  Golden& operator/=(const Golden& o) { return *this *= o.inverse(); }

  friend Golden operator+(Golden x, const Golden& y) { return x += y; }
  friend Golden operator-(Golden x, const Golden& y) { return x -= y; }
  friend Golden operator*(Golden x, const Golden& y) { return x *= y; }
  friend Golden operator/(Golden x, const Golden& y) { return x /= y; }
  friend Golden operator-(const Golden& x) { return Golden(-x.a_, -x.b_); }
  friend bool operator==(const Golden& x, const Golden& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

  friend std::ostream& operator<<(std::ostream& os, const Golden& x) {
    os << x.a_;
    if (x.b_ < 0) {
      os << " - " << T(-x.b_) << "*phi";
    } else {
      os << " + " << x.b_ << "*phi";
    }
    return os;
  }

 private:
  T a_{0};
  T b_{0};
};

using GoldenExact = Golden<BigInt>;
using GoldenRational = Golden<BigRational>;

inline GoldenRational to_rational(const GoldenExact& x) {
  return GoldenRational(BigRational(x.a()), BigRational(x.b()));
}

/// (k, n) pair addressing F_n^(k). k = 0 is rejected by every divisor query.
struct SequenceQuery {
  std::int64_t k = 1;
  std::int64_t n = 1;
};

namespace detail {

inline void require_nonzero_level(std::int64_t k, const char* where) {
  if (k == 0) throw DomainError(std::string(where) + ": hierarchy level k must be nonzero");
}

template <class T>
double to_double(const T& v) {
  return v.template convert_to<double>();
}

// (F_n, F_{n+1}) for n >= 0 by fast doubling.
inline std::pair<BigInt, BigInt> fib_pair(std::uint64_t n) {
  if (n == 0) return {BigInt(0), BigInt(1)};
  auto [f, g] = fib_pair(n / 2);
  BigInt c = f * (2 * g - f);
  BigInt d = f * f + g * g;
  if (n % 2 == 0) return {std::move(c), std::move(d)};
  BigInt e = c + d;
  return {std::move(d), std::move(e)};
}

}  // namespace detail

/// Exact phi^n for any integer n; negative powers through phi^-1 = phi - 1.
inline GoldenExact golden_pow(std::int64_t n) {
  GoldenExact base = n >= 0 ? GoldenExact::phi() : GoldenExact(BigInt(-1), BigInt(1));
  std::uint64_t e = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-(n + 1)) + 1;
  GoldenExact result = GoldenExact::one();
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

/// Fibonacci number F_n, extended to negative n by F_{-n} = (-1)^{n+1} F_n.
inline BigInt fibonacci(std::int64_t n) {
  if (n >= 0) return detail::fib_pair(static_cast<std::uint64_t>(n)).first;
  const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;
  BigInt f = detail::fib_pair(m).first;
  return (m % 2 == 0) ? BigInt(-f) : f;
}

/// Lucas number L_n = phi^n + phi'^n, read off as the trace of phi^n.
inline BigInt lucas(std::int64_t n) { return golden_pow(n).trace(); }

/// F_n^(k) as the exact quotient F_{kn} / F_k.
inline BigInt fib_divisor_by_division(std::int64_t n, std::int64_t k) {
  detail::require_nonzero_level(k, "fib_divisor");
  const BigInt num = fibonacci(k * n);
  const BigInt den = fibonacci(k);
  BigInt q;
  BigInt r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("fib_divisor: F_k does not divide F_kn");
  return q;
}

/// F_n^(k) from F_{n+1} = L_k F_n + (-1)^{k-1} F_{n-1}, F_0 = 0, F_1 = 1;
/// run backwards for negative n.
inline BigInt fib_divisor_by_recursion(std::int64_t n, std::int64_t k) {
  detail::require_nonzero_level(k, "fib_divisor");
  const BigInt lk = lucas(k);
  const int sign = (k % 2 != 0) ? 1 : -1;  // (-1)^{k-1}
  BigInt prev = 0;
  BigInt cur = 1;
  if (n == 0) return prev;
  if (n > 0) {
    for (std::int64_t i = 1; i < n; ++i) {
      BigInt next = lk * cur + sign * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  // F_{m-1} = (-1)^{k-1} (F_{m+1} - L_k F_m)
  BigInt hi = 1;  // F_1
  BigInt lo = 0;  // F_0
  for (std::int64_t m = 0; m > n; --m) {
    BigInt below = sign * (hi - lk * lo);
    hi = std::move(lo);
    lo = std::move(below);
  }
  return lo;
}

/// F_n^(k), computed along both routes; they must agree exactly.
inline BigInt fib_divisor(std::int64_t n, std::int64_t k) {
  BigInt via_division = fib_divisor_by_division(n, k);
  if (via_division != fib_divisor_by_recursion(n, k)) {
    throw std::logic_error("fib_divisor: division and recursion routes disagree");
  }
  return via_division;
}

inline BigInt fib_divisor(const SequenceQuery& q) { return fib_divisor(q.n, q.k); }

/// F_0^(k), ..., F_{n_max}^(k) by the recursion.
inline std::vector<BigInt> fib_divisor_sequence(std::int64_t k, std::int64_t n_max) {
  detail::require_nonzero_level(k, "fib_divisor_sequence");
  if (n_max < 0) throw DomainError("fib_divisor_sequence: n_max must be non-negative");
  const BigInt lk = lucas(k);
  const int sign = (k % 2 != 0) ? 1 : -1;
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.emplace_back(0);
  if (n_max >= 1) out.emplace_back(1);
  for (std::int64_t i = 2; i <= n_max; ++i) {
    out.push_back(lk * out[i - 1] + sign * out[i - 2]);
  }
  return out;
}

/// a + b*phi in double precision. When a and b*phi cancel, the value is
/// recovered as norm / conjugate, which has no cancellation.
template <class T>
double to_real(const Golden<T>& x) {
  const double a = detail::to_double(x.a());
  const double b = detail::to_double(x.b());
  const double direct = a + b * kPhi;
  const double scale = std::abs(a) + std::abs(b) * kPhi;
  if (scale == 0.0 || std::abs(direct) >= 0.5 * scale) return direct;
  const double conj = a + b * kPhiConj;
  return detail::to_double(x.norm()) / conj;
}

}  // namespace goldcalc
