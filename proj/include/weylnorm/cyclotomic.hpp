#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>

namespace weylnorm {

/// Exact element of Q(z), z = exp(i*pi/4), stored in the power basis
/// {1, z, z^2, z^3} with z^4 = -1. Coefficients are GMP rationals, which keep
/// themselves in lowest terms with positive denominator.
class CycloNum {
 public:
  CycloNum() = default;
  CycloNum(long value);  // NOLINT(google-explicit-constructor)
  explicit CycloNum(mpq_class c0, mpq_class c1 = 0, mpq_class c2 = 0,
                    mpq_class c3 = 0);

  /// z^k for any integer k.
  static CycloNum zeta_power(long k);
  /// The imaginary unit, z^2.
  static CycloNum imag() { return zeta_power(2); }
  static CycloNum rational(long num, long den);

  const mpq_class& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const;
  bool is_rational() const;
  /// True for rationals, which are exactly the elements fixed by conj().
  bool is_real_rational() const { return is_rational(); }
  /// If *this == +-z^k returns k in [0,8); otherwise -1.
  int unit_power() const;

  /// Complex conjugation: z -> z^{-1} = -z^3.
  CycloNum conj() const;
  /// Field automorphism z -> z^k, k odd.
  CycloNum galois(int k) const;
  /// Trace down to Q: sum of the four Galois conjugates, equal to 4*c0.
  mpq_class trace() const;
  /// Product of the four Galois conjugates.
  mpq_class norm() const;
  CycloNum inverse() const;

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend bool operator==(const CycloNum& a, const CycloNum& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

  std::size_t hash() const;

  /// Symbolic rendering such as "1/2 - z^2" or "-z^3".
  std::string to_string() const;

 private:
  std::array<mpq_class, 4> c_{};
};

/// Hash of an arbitrary-precision integer, built from its limbs.
std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_mpq(const mpq_class& q);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace weylnorm
