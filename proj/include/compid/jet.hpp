#pragma once

#include <cstddef>
#include <vector>

#include "compid/exact.hpp"

namespace compid {

/// First-order jet: a value with a dense gradient over the model parameters.
/// Arithmetic follows the Leibniz rule, so running any polynomial kernel over
/// jets yields the kernel's value together with its exact gradient.
template <typename S>
class Jet {
 public:
  Jet() = default;
  Jet(int constant) : value_(scalar_from_int<S>(constant)) {}  // NOLINT
  Jet(S value, std::size_t width) : value_(std::move(value)), partials_(width, scalar_from_int<S>(0)) {}

  static Jet constant(S value, std::size_t width) { return Jet(std::move(value), width); }
  static Jet variable(S value, std::size_t index, std::size_t width) {
    Jet j(std::move(value), width);
    j.partials_[index] = scalar_from_int<S>(1);
    return j;
  }

  const S& value() const { return value_; }
  const std::vector<S>& partials() const { return partials_; }
  const S& partial(std::size_t i) const { return partials_[i]; }
  std::size_t width() const { return partials_.size(); }

  Jet operator-() const {
    Jet r = *this;
    r.value_ = -r.value_;
    for (auto& p : r.partials_) p = -p;
    return r;
  }

  Jet& operator+=(const Jet& o) {
    value_ += o.value_;
    widen(o.width());
    for (std::size_t i = 0; i < o.width(); ++i) partials_[i] += o.partials_[i];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    value_ -= o.value_;
    widen(o.width());
    for (std::size_t i = 0; i < o.width(); ++i) partials_[i] -= o.partials_[i];
    return *this;
  }
  Jet& operator*=(const Jet& o) {
    widen(o.width());
    for (std::size_t i = 0; i < partials_.size(); ++i) {
      S term = partials_[i] * o.value_;
      if (i < o.width()) term += value_ * o.partials_[i];
      partials_[i] = term;
    }
    value_ *= o.value_;
    return *this;
  }
  /// Quotient rule; the divisor's value must be nonzero.
  Jet& operator/=(const Jet& o) {
    const S inv = scalar_from_int<S>(1) / o.value_;
    const S q = value_ * inv;
    widen(o.width());
    for (std::size_t i = 0; i < partials_.size(); ++i) {
      S num = partials_[i];
      if (i < o.width()) num -= q * o.partials_[i];
      partials_[i] = num * inv;
    }
    value_ = q;
    return *this;
  }

  Jet& operator*=(const S& k) {
    value_ *= k;
    for (auto& p : partials_) p *= k;
    return *this;
  }
  Jet& operator/=(const S& k) {
    const S inv = scalar_from_int<S>(1) / k;
    return *this *= inv;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
  friend Jet operator/(Jet a, const Jet& b) { return a /= b; }
  friend Jet operator*(Jet a, const S& k) { return a *= k; }
  friend Jet operator/(Jet a, const S& k) { return a /= k; }

  friend bool operator==(const Jet& a, const Jet& b) {
    if (a.value_ != b.value_) return false;
    const std::size_t w = a.width() > b.width() ? a.width() : b.width();
    const S zero = scalar_from_int<S>(0);
    for (std::size_t i = 0; i < w; ++i) {
      const S& x = i < a.width() ? a.partials_[i] : zero;
      const S& y = i < b.width() ? b.partials_[i] : zero;
      if (x != y) return false;
    }
    return true;
  }

 private:
  // Integer constants are built with width 0 and grow on first contact.
  void widen(std::size_t w) {
    if (partials_.size() < w) partials_.resize(w, scalar_from_int<S>(0));
  }

  S value_ = scalar_from_int<S>(0);
  std::vector<S> partials_;
};

/// Uniform access to the value of a plain scalar or a jet.
template <typename S>
const S& value_of(const S& s) {
  return s;
}
template <typename S>
const S& value_of(const Jet<S>& j) {
  return j.value();
}

template <typename S>
struct RingTraits<Jet<S>> {
  static Jet<S> from_int(std::int64_t v) { return Jet<S>(scalar_from_int<S>(v), 0); }
};

}  // namespace compid
