#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>

namespace spreadhom {

// Prime field F_p with a process-wide modulus.  Default p = 32003; override
// via set_modulus() or the SPREADHOM_PRIME environment variable.
class Fp {
 public:
  Fp() : v_(0) {}
  Fp(long long n) {
    long long r = n % static_cast<long long>(p_);
    v_ = static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  static std::uint32_t modulus() { return p_; }

  static void set_modulus(std::uint32_t p) {
    if (p < 2 || p >= (1u << 30) || !is_prime(p))
      throw std::invalid_argument("field modulus must be a prime below 2^30");
    p_ = p;
  }

  static void set_modulus_from_env() {
    if (const char* s = std::getenv("SPREADHOM_PRIME"))
      set_modulus(static_cast<std::uint32_t>(std::stoul(s)));
  }

  std::uint32_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in F_p");
    // extended Euclid; gcd is 1 because p is prime
    std::int64_t t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      std::int64_t q = r / nr;
      std::int64_t u = t - q * nt;
      t = nt;
      nt = u;
      u = r - q * nr;
      r = nr;
      nr = u;
    }
    return Fp(t);
  }

  Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }

  friend Fp operator+(Fp a, Fp b) {
    std::uint32_t s = a.v_ + b.v_;
    return from_raw(s >= p_ ? s - p_ : s);
  }
  friend Fp operator-(Fp a, Fp b) {
    return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p_ - b.v_);
  }
  friend Fp operator*(Fp a, Fp b) {
    return from_raw(static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.v_) * b.v_ % p_));
  }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }

  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
  friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

  friend std::ostream& operator<<(std::ostream& os, Fp a) { return os << a.v_; }

 private:
  static Fp from_raw(std::uint32_t v) {
    Fp x;
    x.v_ = v;
    return x;
  }

  static bool is_prime(std::uint32_t p) {
    if (p % 2 == 0) return p == 2;
    for (std::uint32_t d = 3; d * static_cast<std::uint64_t>(d) <= p; d += 2)
      if (p % d == 0) return false;
    return true;
  }

  inline static std::uint32_t p_ = 32003;
  std::uint32_t v_;
};

// Restores the previous modulus on scope exit; tests fiddle with small primes.
struct ModulusGuard {
  std::uint32_t saved;
  ModulusGuard() : saved(Fp::modulus()) {}
  ~ModulusGuard() { Fp::set_modulus(saved); }
};

}  // namespace spreadhom

namespace Eigen {

template <>
struct NumTraits<spreadhom::Fp> : GenericNumTraits<spreadhom::Fp> {
  typedef spreadhom::Fp Real;
  typedef spreadhom::Fp NonInteger;
  typedef spreadhom::Fp Nested;
  typedef spreadhom::Fp Literal;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 6
  };
  static inline Real epsilon() { return spreadhom::Fp(); }
  static inline Real dummy_precision() { return spreadhom::Fp(); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
