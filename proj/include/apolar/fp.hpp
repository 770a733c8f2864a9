#pragma once

#include <cassert>
#include <cstdint>

namespace apolar {

// Arithmetic in the prime field Z/p with p = 2^61 - 1 (a Mersenne prime, so
// products reduce by folding the high 61 bits back onto the low ones).
class Fp {
 public:
  static constexpr std::uint64_t prime = (std::uint64_t{1} << 61) - 1;

  constexpr Fp() = default;

  static constexpr Fp from_u64(std::uint64_t n) { return Fp(n % prime); }

  static constexpr Fp from_int(std::int64_t n) {
    std::int64_t r = n % static_cast<std::int64_t>(prime);
    if (r < 0) r += static_cast<std::int64_t>(prime);
    return Fp(static_cast<std::uint64_t>(r));
  }

  constexpr std::uint64_t value() const { return v_; }
  constexpr bool is_zero() const { return v_ == 0; }

  friend constexpr Fp operator+(Fp a, Fp b) {
    std::uint64_t s = a.v_ + b.v_;
    return Fp(s >= prime ? s - prime : s);
  }

  friend constexpr Fp operator-(Fp a, Fp b) {
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + prime - b.v_);
  }

  constexpr Fp operator-() const { return Fp(v_ == 0 ? 0 : prime - v_); }

  friend constexpr Fp operator*(Fp a, Fp b) {
    unsigned __int128 t = static_cast<unsigned __int128>(a.v_) * b.v_;
    std::uint64_t s = (static_cast<std::uint64_t>(t) & prime) +
                      static_cast<std::uint64_t>(t >> 61);
    s = (s & prime) + (s >> 61);
    return Fp(s >= prime ? s - prime : s);
  }

  constexpr Fp& operator+=(Fp o) { return *this = *this + o; }
  constexpr Fp& operator-=(Fp o) { return *this = *this - o; }
  constexpr Fp& operator*=(Fp o) { return *this = *this * o; }

  constexpr Fp pow(std::uint64_t e) const {
    Fp base = *this, acc = Fp(1);
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

  Fp inv() const {
    assert(v_ != 0);
    return pow(prime - 2);
  }

  friend constexpr bool operator==(Fp a, Fp b) = default;

 private:
  constexpr explicit Fp(std::uint64_t v) : v_(v) {}
  std::uint64_t v_ = 0;
};

constexpr Fp fp(std::int64_t n) { return Fp::from_int(n); }

// Falling factorial a(a-1)...(a-k+1), the coefficient picked up when a k-th
// derivative hits a monomial of degree a.  Small against p, so never zero
// unless a < k.
constexpr Fp falling(std::int64_t a, int k) {
  Fp r = fp(1);
  for (int i = 0; i < k; ++i) r *= fp(a - i);
  return r;
}

constexpr Fp factorial(int n) { return falling(n, n); }

}  // namespace apolar
