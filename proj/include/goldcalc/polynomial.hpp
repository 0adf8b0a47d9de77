#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace goldcalc {

/// Dense polynomial in the power basis; coeffs()[n] multiplies x^n.
/// Trailing zero coefficients are trimmed, so the zero polynomial is empty.
template <class T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial monomial(std::size_t n, T c = T(1)) {
    std::vector<T> v(n + 1, T{});
    v[n] = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }

  T operator[](std::size_t n) const { return n < coeffs_.size() ? coeffs_[n] : T{}; }

  template <class X>
  auto operator()(const X& x) const -> decltype(T{} * x) {
    using R = decltype(T{} * x);
    R acc{};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q) {
    std::vector<T> v(std::max(p.coeffs_.size(), q.coeffs_.size()), T{});
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] + q[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q) {
    std::vector<T> v(std::max(p.coeffs_.size(), q.coeffs_.size()), T{});
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] - q[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<T> v(p.coeffs_.size() + q.coeffs_.size() - 1, T{});
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T{}) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

}  // namespace goldcalc
