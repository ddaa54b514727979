// Dense univariate polynomials over Q in the perturbation parameter e,
// with the valuation (lowest nonzero exponent) and the exact division
// needed by fraction-free elimination.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gsd {

class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const mpq_class& c) { coeff_ = {c}; normalize(); }  // NOLINT: implicit constant
  static EpsPoly monomial(const mpq_class& c, int exponent);

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  // Least exponent with nonzero coefficient; nullopt encodes +infinity.
  std::optional<long> valuation() const;
  const mpq_class& coeff(int exponent) const;

  EpsPoly operator+(const EpsPoly& o) const;
  EpsPoly operator-(const EpsPoly& o) const;
  EpsPoly operator-() const;
  EpsPoly operator*(const EpsPoly& o) const;
  // Exact division; throws std::domain_error when the remainder is nonzero.
  EpsPoly div_exact(const EpsPoly& o) const;
  bool operator==(const EpsPoly&) const = default;

  // Sums of c*e^k terms, e.g. "1 - e^7", "-1/2*e + 2*e^3".
  static EpsPoly parse(std::string_view text);
  std::string str() const;

 private:
  void normalize();
  std::vector<mpq_class> coeff_;  // coeff_[k] multiplies e^k
};

// Symmetric matrix over Q[e].
class EpsMatrix {
 public:
  explicit EpsMatrix(int n) : n_(n), e_(std::size_t(n) * n) {}
  int n() const { return n_; }
  const EpsPoly& at(int i, int j) const { return e_[std::size_t(i - 1) * n_ + (j - 1)]; }
  void set(int i, int j, const EpsPoly& v) {
    e_[std::size_t(i - 1) * n_ + (j - 1)] = v;
    e_[std::size_t(j - 1) * n_ + (i - 1)] = v;
  }

 private:
  int n_;
  std::vector<EpsPoly> e_;
};

// Fraction-free determinant over Q[e].
EpsPoly det_eps(std::vector<std::vector<EpsPoly>> m);

}  // namespace gsd
