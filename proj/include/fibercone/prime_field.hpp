#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fibercone {

// Arithmetic in Z/p for a prime p < 2^31. Elements are canonical
// representatives in [0, p). All operations are exact.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p = 32003) : p_(p) {
    if (p < 2 || !is_prime(p)) {
      throw std::invalid_argument("characteristic must be prime, got " +
                                  std::to_string(p));
    }
  }

  uint32_t characteristic() const { return p_; }

  uint32_t reduce_ll(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint64_t s = static_cast<uint64_t>(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<uint32_t>(s);
  }

  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }

  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }

  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  }

  uint32_t pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p_, acc = 1;
    while (e) {
      if (e & 1) acc = acc * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<uint32_t>(acc);
  }

  uint32_t inv(uint32_t a) const {
    if (a % p_ == 0) throw std::domain_error("division by zero in prime field");
    // Extended Euclid on (a, p).
    int64_t t = 0, new_t = 1;
    int64_t r = p_, new_r = a % p_;
    while (new_r != 0) {
      int64_t q = r / new_r;
      int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
  }

  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  uint32_t p_;
};

}  // namespace fibercone
