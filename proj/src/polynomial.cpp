#include "compid/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace compid {

MonomialPolynomial MonomialPolynomial::monomial(std::size_t variables, Exponents exponents, std::int64_t coefficient) {
  MonomialPolynomial p(variables);
  p.add_term(exponents, coefficient);
  return p;
}

void MonomialPolynomial::add_term(const Exponents& exponents, std::int64_t coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MonomialPolynomial& MonomialPolynomial::operator+=(const MonomialPolynomial& o) {
  variables_ = std::max(variables_, o.variables_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MonomialPolynomial& MonomialPolynomial::operator-=(const MonomialPolynomial& o) {
  variables_ = std::max(variables_, o.variables_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MonomialPolynomial operator*(const MonomialPolynomial& a, const MonomialPolynomial& b) {
  MonomialPolynomial out(std::max(a.variables_, b.variables_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(out.variables_, 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MonomialPolynomial MonomialPolynomial::operator-() const {
  MonomialPolynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

int MonomialPolynomial::homogeneous_degree() const {
  int degree = -1;
  for (const auto& [e, c] : terms_) {
    const int d = std::accumulate(e.begin(), e.end(), 0);
    if (degree == -1) {
      degree = d;
    } else if (d != degree) {
      return -1;
    }
  }
  return degree;
}

bool MonomialPolynomial::involves(std::size_t variable) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return variable < t.first.size() && t.first[variable] != 0; });
}

std::string format_monomial(std::span<const int> exponents, const std::function<std::string(std::size_t)>& name) {
  std::string out;
  for (std::size_t v = 0; v < exponents.size(); ++v) {
    if (exponents[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += name(v);
    if (exponents[v] != 1) out += '^' + std::to_string(exponents[v]);
  }
  return out.empty() ? "1" : out;
}

std::string MonomialPolynomial::to_string(const std::function<std::string(std::size_t)>& name) const {
  if (terms_.empty()) return "0";
  // Higher degree first; within a degree, earlier variables first.
  std::vector<std::pair<Exponents, std::int64_t>> sorted(terms_.begin(), terms_.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
    const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (const auto& [e, c] : sorted) {
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (constant) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += format_monomial(e, name);
    }
  }
  return out;
}

}  // namespace compid
