#include "weylnorm/cyclotomic.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "weylnorm/errors.hpp"

namespace weylnorm {

CycloNum::CycloNum(long value) { c_[0] = value; }

CycloNum::CycloNum(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (auto& c : c_) c.canonicalize();
}

CycloNum CycloNum::zeta_power(long k) {
  long r = ((k % 8) + 8) % 8;
  CycloNum out;
  if (r < 4) {
    out.c_[static_cast<std::size_t>(r)] = 1;
  } else {
    out.c_[static_cast<std::size_t>(r - 4)] = -1;
  }
  return out;
}

CycloNum CycloNum::rational(long num, long den) {
  if (den == 0) throw std::domain_error("CycloNum::rational: zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return CycloNum(q);
}

bool CycloNum::is_zero() const {
  for (const auto& c : c_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  return sgn(c_[1]) == 0 && sgn(c_[2]) == 0 && sgn(c_[3]) == 0;
}

int CycloNum::unit_power() const {
  int found = -1;
  for (int k = 0; k < 4; ++k) {
    const auto& c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    if (found != -1) return -1;
    if (c == 1) {
      found = k;
    } else if (c == -1) {
      found = k + 4;
    } else {
      return -1;
    }
  }
  return found;
}

CycloNum CycloNum::conj() const { return galois(7); }

CycloNum CycloNum::galois(int k) const {
  if (k % 2 == 0) throw std::domain_error("CycloNum::galois: exponent must be odd");
  CycloNum out;
  for (int j = 0; j < 4; ++j) {
    const auto& c = c_[static_cast<std::size_t>(j)];
    if (sgn(c) == 0) continue;
    long r = ((static_cast<long>(j) * k) % 8 + 8) % 8;
    if (r < 4) {
      out.c_[static_cast<std::size_t>(r)] += c;
    } else {
      out.c_[static_cast<std::size_t>(r - 4)] -= c;
    }
  }
  return out;
}

mpq_class CycloNum::trace() const { return 4 * c_[0]; }

mpq_class CycloNum::norm() const {
  CycloNum n = *this * galois(3) * galois(5) * galois(7);
  if (!n.is_rational()) throw ConsistencyError("CycloNum::norm: result not rational");
  return n.c_[0];
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNum::inverse: zero has no inverse");
  CycloNum adj = galois(3) * galois(5) * galois(7);
  CycloNum n = *this * adj;
  mpq_class inv_norm = 1 / n.c_[0];
  for (auto& c : adj.c_) c *= inv_norm;
  return adj;
}

CycloNum CycloNum::operator-() const {
  CycloNum out;
  for (std::size_t k = 0; k < 4; ++k) out.c_[k] = -c_[k];
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  for (std::size_t k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  CycloNum out;
  mpq_class t;
  for (std::size_t i = 0; i < 4; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < 4; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      t = a.c_[i] * b.c_[j];
      if (i + j < 4) {
        out.c_[i + j] += t;
      } else {
        out.c_[i + j - 4] -= t;
      }
    }
  }
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this = *this * o.inverse(); }

std::size_t hash_mpz(const mpz_class& z) {
  mpz_srcptr p = z.get_mpz_t();
  std::size_t seed = static_cast<std::size_t>(mpz_sgn(p) + 2);
  const std::size_t n = mpz_size(p);
  for (std::size_t i = 0; i < n; ++i)
    hash_combine(seed, std::hash<mp_limb_t>{}(mpz_getlimbn(p, static_cast<mp_size_t>(i))));
  return seed;
}

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t seed = hash_mpz(q.get_num());
  hash_combine(seed, hash_mpz(q.get_den()));
  return seed;
}

std::size_t CycloNum::hash() const {
  std::size_t seed = 0x51ed270b27f5ULL;
  for (const auto& c : c_) hash_combine(seed, hash_mpq(c));
  return seed;
}

std::string CycloNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    mpq_class c = c_[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << " ";
    os << "z";
    if (k > 1) os << "^" << k;
  }
  if (first) return "0";
  return os.str();
}

}  // namespace weylnorm
