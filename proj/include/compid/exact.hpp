#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>

namespace compid {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Residue modulo the Mersenne prime 2^61 - 1, always kept in [0, p).
class Fp {
 public:
  static constexpr std::uint64_t kModulus = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  constexpr Fp(int v) : Fp(from_int(v)) {}  // NOLINT: literals like Fp(0) read naturally

  static constexpr Fp from_int(std::int64_t v) {
    Fp r;
    if (v >= 0) {
      r.v_ = static_cast<std::uint64_t>(v) % kModulus;
    } else {
      const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
      const std::uint64_t m = mag % kModulus;
      r.v_ = m == 0 ? 0 : kModulus - m;
    }
    return r;
  }
  static constexpr Fp from_residue(std::uint64_t v) {
    Fp r;
    r.v_ = v % kModulus;
    return r;
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  constexpr Fp operator-() const { return from_residue(v_ == 0 ? 0 : kModulus - v_); }

  constexpr Fp& operator+=(Fp o) {
    v_ += o.v_;
    if (v_ >= kModulus) v_ -= kModulus;
    return *this;
  }
  constexpr Fp& operator-=(Fp o) {
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + kModulus - o.v_;
    return *this;
  }
  constexpr Fp& operator*=(Fp o) {
    const unsigned __int128 x = static_cast<unsigned __int128>(v_) * o.v_;
    std::uint64_t s = static_cast<std::uint64_t>(x & kModulus) + static_cast<std::uint64_t>(x >> 61);
    if (s >= kModulus) s -= kModulus;
    if (s >= kModulus) s -= kModulus;
    v_ = s;
    return *this;
  }
  /// Division by zero yields zero; callers check pivots first.
  constexpr Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend constexpr Fp operator+(Fp a, Fp b) { return a += b; }
  friend constexpr Fp operator-(Fp a, Fp b) { return a -= b; }
  friend constexpr Fp operator*(Fp a, Fp b) { return a *= b; }
  friend constexpr Fp operator/(Fp a, Fp b) { return a /= b; }
  friend constexpr bool operator==(Fp a, Fp b) = default;

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc = from_residue(1);
    while (e != 0) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }
  constexpr Fp inverse() const { return pow(kModulus - 2); }

 private:
  std::uint64_t v_ = 0;
};

std::string to_string(Fp x);
std::string to_string(const Rational& x);

inline bool is_zero(Fp x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// Scalar construction from machine integers for the two exact rings.
template <typename S>
S scalar_from_int(std::int64_t v);

template <>
inline Fp scalar_from_int<Fp>(std::int64_t v) {
  return Fp::from_int(v);
}
template <>
inline Rational scalar_from_int<Rational>(std::int64_t v) {
  return Rational(static_cast<long>(v));
}

/// Uniform nonzero sample: any nonzero residue for Fp, a nonzero integer in
/// [-2^30, 2^30] for rationals. Draws from the generator in a fixed way so
/// sequences are reproducible across platforms.
/// Ring element built from a machine integer; specialised for jets.
template <typename R>
struct RingTraits {
  static R from_int(std::int64_t v) { return scalar_from_int<R>(v); }
};

template <typename S>
S sample_nonzero(std::mt19937_64& rng);

template <>
inline Fp sample_nonzero<Fp>(std::mt19937_64& rng) {
  return Fp::from_residue(1 + rng() % (Fp::kModulus - 1));
}
template <>
inline Rational sample_nonzero<Rational>(std::mt19937_64& rng) {
  constexpr std::int64_t kRange = std::int64_t{1} << 30;
  const auto raw = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(2 * kRange)) - kRange;
  return scalar_from_int<Rational>(raw >= 0 ? raw + 1 : raw);
}

/// splitmix64 finalizer, used to derive independent seeds.
constexpr std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace compid
