#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "normality/errors.hpp"

// Closed-form values and bounds for the sums of normalities and of lambda.
// Nothing here looks at a graph; the verifier cross-checks every value
// against exhaustive computation.

namespace normality {

// Exact rational with a positive denominator, always reduced.
class Rational {
 public:
  constexpr Rational(std::int64_t num = 0, std::int64_t den = 1) : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const noexcept { return num_; }
  constexpr std::int64_t den() const noexcept { return den_; }
  constexpr bool is_integer() const noexcept { return den_ == 1; }

  friend constexpr Rational operator+(Rational a, Rational b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator-(Rational a, Rational b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend constexpr Rational operator*(Rational a, Rational b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend constexpr bool operator==(Rational, Rational) = default;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

enum class Applicability { applies, out_of_domain };

struct FormulaResult {
  std::optional<std::int64_t> value;  // set iff applicability == applies
  Applicability applicability = Applicability::out_of_domain;
  std::string branch;

  bool applies() const noexcept { return applicability == Applicability::applies; }

  static FormulaResult of(std::int64_t v, std::string branch) {
    return {v, Applicability::applies, std::move(branch)};
  }
  static FormulaResult outside(std::string branch) {
    return {std::nullopt, Applicability::out_of_domain, std::move(branch)};
  }
};

namespace detail {

inline std::int64_t checked_integer(const Rational& r, const std::string& where) {
  if (!r.is_integer())
    throw std::logic_error(where + " evaluated to the non-integer " + std::to_string(r.num()) + "/" +
                           std::to_string(r.den()));
  return r.num();
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace detail

/**
 * Norm(T̂(n,d)) in closed form:
 *   even d, n-d >= d/2 :  -(7/8)d^2 + (n+3/4)d - n            branch "even_short"
 *   even d, n-d <  d/2 :  (1/4)d^2 - (n/2)d + (n^2-n)/2       branch "even_long"
 *   odd d,  n-d >= floor(d/2): -(7/8)d^2 + (n+1/2)d - n + 3/8  branch "odd_short"
 * Odd d with n-d < floor(d/2) has no closed form and is reported out of
 * domain ("odd_long").
 */
inline FormulaResult eval_norm_t_hat(std::int64_t n, std::int64_t d) {
  if (d < 2 || d > n - 1) throw DomainError("eval_norm_t_hat requires 2 <= d <= n-1");
  const Rational N(n), D(d);
  const bool short_arm = n - d >= d / 2;
  if (d % 2 == 0) {
    if (short_arm) {
      const Rational v = Rational(-7, 8) * D * D + (N + Rational(3, 4)) * D - N;
      return FormulaResult::of(detail::checked_integer(v, "even_short"), "even_short");
    }
    const Rational v = Rational(1, 4) * D * D - N * Rational(1, 2) * D + (N * N - N) * Rational(1, 2);
    return FormulaResult::of(detail::checked_integer(v, "even_long"), "even_long");
  }
  if (short_arm) {
    const Rational v = Rational(-7, 8) * D * D + (N + Rational(1, 2)) * D - N + Rational(3, 8);
    return FormulaResult::of(detail::checked_integer(v, "odd_short"), "odd_short");
  }
  return FormulaResult::outside("odd_long");
}

// floor((2n^2 - 4n + 1) / 7)
inline std::int64_t max_norm_bound(std::int64_t n) {
  if (n < 3) throw DomainError("max_norm_bound requires n >= 3");
  return detail::floor_div(2 * n * n - 4 * n + 1, 7);
}

// Diameters of the maximizing T̂(n,d), by n mod 7.
inline std::vector<std::int64_t> optimal_diameters(std::int64_t n) {
  if (n < 3) throw DomainError("optimal_diameters requires n >= 3");
  switch (n % 7) {
    case 0: return {4 * n / 7};
    case 1: return {(4 * n - 4) / 7, (4 * n + 10) / 7};
    case 2: return {(4 * n + 6) / 7};
    case 3: return {(4 * n + 2) / 7};
    case 4: return {(4 * n - 2) / 7};
    case 5: return {(4 * n + 8) / 7};
    default: return {(4 * n + 4) / 7};
  }
}

struct IntInterval {
  std::int64_t lo;
  std::int64_t hi;

  bool contains(std::int64_t x) const noexcept { return lo <= x && x <= hi; }
  friend bool operator==(const IntInterval&, const IntInterval&) = default;
};

// [floor((4(n-k)+10)/7), ceil((4(n-k)+11)/7)]
inline IntInterval t_tilde_optimal_d_range(std::int64_t n, std::int64_t k) {
  if (k < 2 || n < k + 2) throw DomainError("t_tilde_optimal_d_range requires k >= 2 and n >= k+2");
  const std::int64_t m = n - k;
  return {detail::floor_div(4 * m + 10, 7), detail::ceil_div(4 * m + 11, 7)};
}

// Sum of the multiset {0^k, 1^k, 2^k, 3^(n-3k)}.
inline std::int64_t min_norm_k_peripheral(std::int64_t n, std::int64_t k) {
  if (k < 2 || n < 3 * k + 1) throw DomainError("min_norm_k_peripheral requires k >= 2 and n >= 3k+1");
  return 3 * n - 6 * k;
}

inline std::int64_t max_lambda_given_d(std::int64_t n, std::int64_t d) {
  if (d < 2 || d > n - 1) throw DomainError("max_lambda_given_d requires 2 <= d <= n-1");
  return d % 2 == 0 ? (2 * n - d) * d / 2 : ((2 * n - d) * d + 1) / 2;
}

// floor((n^2 + 1) / 2), stated for n >= 8.
inline std::int64_t max_lambda_bound(std::int64_t n) {
  if (n < 8) throw DomainError("max_lambda_bound requires n >= 8");
  return (n * n + 1) / 2;
}

inline std::int64_t min_lambda_bound(std::int64_t n) {
  if (n < 8) throw DomainError("min_lambda_bound requires n >= 8");
  return 12;
}

}  // namespace normality
