#pragma once

// Exact multivariate Laurent polynomials over Z in the variables
// t, z_1, ..., z_r, plus the divided-difference operators acting on them.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bicolor/errors.hpp"

namespace bicolor {

using Coeff = boost::multiprecision::cpp_int;

/// Largest number of z variables a ring may carry.
inline constexpr int kMaxZ = 12;

/// Exponent vector (t_exp, z_1 .. z_r). Unused trailing z slots stay zero, so
/// the lexicographic comparison over the full array is the canonical order.
class Monomial {
 public:
  Monomial() = default;

  int t_exp() const { return exps_[0]; }
  /// Exponent of z_i, 1-based.
  int z_exp(int i) const { return exps_[static_cast<std::size_t>(i)]; }

  void set_t_exp(int e) { exps_[0] = e; }
  void set_z_exp(int i, int e) { exps_[static_cast<std::size_t>(i)] = e; }

  Monomial& operator*=(const Monomial& o) {
    for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] += o.exps_[k];
    return *this;
  }
  Monomial& operator/=(const Monomial& o) {
    for (std::size_t k = 0; k < exps_.size(); ++k) exps_[k] -= o.exps_[k];
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  friend Monomial operator/(Monomial a, const Monomial& b) { return a /= b; }

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::size_t hash() const;

 private:
  std::array<std::int32_t, kMaxZ + 1> exps_{};
};

struct Term {
  Monomial mono;
  Coeff coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class LaurentPoly {
 public:
  /// The zero polynomial in a ring with `num_z` z-variables.
  explicit LaurentPoly(int num_z = 1);

  static LaurentPoly constant(int num_z, const Coeff& c);
  static LaurentPoly one(int num_z) { return constant(num_z, 1); }
  /// c * t^t_exp * z_i^z_exp (i is 1-based; i = 0 means no z factor).
  static LaurentPoly term(int num_z, const Coeff& c, int t_exp, int i = 0, int z_exp = 0);
  static LaurentPoly var_t(int num_z) { return term(num_z, 1, 1); }
  static LaurentPoly var_z(int num_z, int i) { return term(num_z, 1, 0, i, 1); }

  /// Builds from an unsorted term list, combining duplicates and dropping zeros.
  static LaurentPoly from_terms(int num_z, std::vector<Term> terms);

  int num_z() const { return num_z_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Terms in increasing canonical order.
  const std::vector<Term>& terms() const { return terms_; }

  /// Largest / smallest term in the canonical order. Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }
  const Term& trailing() const { return terms_.front(); }

  /// True when no term carries a negative power of t.
  bool is_t_polynomial() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  LaurentPoly mul_term(const Monomial& m, const Coeff& c) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.num_z_ == b.num_z_ && a.terms_ == b.terms_;
  }

  /// Canonical text form, e.g. "1 + -1*t^1*z1^1". The zero polynomial is "0".
  std::string to_string() const;
  static LaurentPoly parse(std::string_view text, int num_z);

  std::size_t hash() const;

 private:
  void check_same_ring(const LaurentPoly& o) const;

  int num_z_;
  std::vector<Term> terms_;
};

/// Raised when a division that must be exact leaves a remainder.
class ExactnessError : public Error {
 public:
  ExactnessError(const std::string& what, LaurentPoly remainder)
      : Error(what), remainder_(std::move(remainder)) {}
  const LaurentPoly& remainder() const { return remainder_; }

 private:
  LaurentPoly remainder_;
};

/// Single-term polynomial; z_exps.size() must equal num_z.
LaurentPoly monomial(int num_z, const Coeff& coeff, int t_exp, std::span<const int> z_exps);

/// Exchanges z_i and z_{i+1}; 1 <= i <= num_z - 1.
LaurentPoly swap_z(const LaurentPoly& p, int i);

/// q with q * d == p. Throws ExactnessError (with the remainder) if no such q.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& d);

/// D^(k)_i for k in {1,2,3,4}:
///   D1 = (z_i - z_{i+1})^-1 (z_i     - z_i     s_i)
///   D2 = (z_i - z_{i+1})^-1 (z_i     - z_{i+1} s_i)
///   D3 = (z_i - z_{i+1})^-1 (z_{i+1} - z_i     s_i)
///   D4 = (z_i - z_{i+1})^-1 (z_{i+1} - z_{i+1} s_i)
LaurentPoly divided_diff(int k, int i, const LaurentPoly& p);

/// (1 + t + ... + t^n) in the given ring.
LaurentPoly t_geometric(int num_z, int n);

/// (z_1 ... z_r)^e.
LaurentPoly z_product_power(int num_z, int e);

struct LaurentPolyHash {
  std::size_t operator()(const LaurentPoly& p) const { return p.hash(); }
};

}  // namespace bicolor
