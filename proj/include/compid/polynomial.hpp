#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "compid/exact.hpp"

namespace compid {

using Exponents = std::vector<int>;

/// Sparse polynomial with integer coefficients in a fixed number of variables.
/// Zero coefficients are never stored.
class MonomialPolynomial {
 public:
  MonomialPolynomial() = default;
  explicit MonomialPolynomial(std::size_t variables) : variables_(variables) {}

  static MonomialPolynomial monomial(std::size_t variables, Exponents exponents, std::int64_t coefficient = 1);

  std::size_t variable_count() const { return variables_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exponents, std::int64_t coefficient);

  MonomialPolynomial& operator+=(const MonomialPolynomial& o);
  MonomialPolynomial& operator-=(const MonomialPolynomial& o);
  friend MonomialPolynomial operator+(MonomialPolynomial a, const MonomialPolynomial& b) { return a += b; }
  friend MonomialPolynomial operator-(MonomialPolynomial a, const MonomialPolynomial& b) { return a -= b; }
  friend MonomialPolynomial operator*(const MonomialPolynomial& a, const MonomialPolynomial& b);
  MonomialPolynomial operator-() const;

  friend bool operator==(const MonomialPolynomial&, const MonomialPolynomial&) = default;

  /// Total degree of every term, or -1 when the terms disagree (or zero poly).
  int homogeneous_degree() const;
  bool involves(std::size_t variable) const;

  /// Evaluates at `point` (one value per variable).
  template <typename S>
  S evaluate(std::span<const S> point) const {
    S acc = RingTraits<S>::from_int(0);
    for (const auto& [exps, coeff] : terms_) {
      S term = RingTraits<S>::from_int(coeff);
      for (std::size_t v = 0; v < exps.size(); ++v)
        for (int k = 0; k < exps[v]; ++k) term *= point[v];
      acc += term;
    }
    return acc;
  }

  /// Terms in descending graded order, e.g. "a11*a22 - a12*a21".
  std::string to_string(const std::function<std::string(std::size_t)>& name) const;

 private:
  std::size_t variables_ = 0;
  std::map<Exponents, std::int64_t> terms_;
};

/// Product of names joined by '*', integer exponents as '^e', "1" when empty.
std::string format_monomial(std::span<const int> exponents, const std::function<std::string(std::size_t)>& name);

}  // namespace compid
