#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "ellf/error.hpp"

namespace ellf {

// Arithmetic context for K = Q_ell(pi) with pi^e = ell, gcd(e, ell) = 1.
// Scalars live in Q(zeta_M)[sqrtq]/(sqrtq^2 - q).  Immutable after
// construction; every other type keeps a pointer to its Field.
class Field {
  public:
    long ell = 0;        // residue characteristic of K
    long e = 1;          // ramification degree, pi^e = ell
    long q = 0;          // residue field size (= ell, totally ramified)
    long delta = 0;      // different exponent, e - 1
    long p = 0;          // scalar prime, p != ell
    long nroot = 0;      // ell-power root levels available: zeta_{ell^t}, t <= nroot
    long long M = 0;     // cyclotomic conductor, ell^nroot | M, (ell-1) | M
    long long enum_cap = 1000000;

    long long phiM = 0;  // degree of Phi_M

    static Field make(long ell, long e, long p, long nroot, long long M = 0);

    // X^phiM == -phi_tail as polynomials mod Phi_M; exponents ascending.
    const std::vector<std::pair<long long, long>>& phi_tail() const { return phi_tail_; }

    bool operator==(const Field& o) const {
        return ell == o.ell && e == o.e && p == o.p && nroot == o.nroot && M == o.M;
    }

  private:
    std::vector<std::pair<long long, long>> phi_tail_;
};

bool is_prime(long n);
long long gcd_ll(long long a, long long b);
std::vector<std::pair<long long, int>> factorize(long long n);
long long euler_phi(long long n);
long long radical(long long n);

// Phi_n as a dense coefficient vector (degree phi(n)); intended for small n.
std::vector<mpz_class> cyclotomic_dense(long long n);

// Phi_n as sparse (exponent, coefficient) pairs via Phi_n(X) = Phi_rad(X^{n/rad}).
std::vector<std::pair<long long, long>> cyclotomic_sparse(long long n);

}  // namespace ellf
