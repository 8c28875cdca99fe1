#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ellf/cyclotomic.hpp"
#include "ellf/field.hpp"

namespace ellf {

inline constexpr long kValInf = 1000000000L;

// Element of K = Q_ell(pi), stored as coordinates in the basis 1, pi, ...,
// pi^{e-1} with entries in Z[1/ell].  Equivalent to a finite signed pi-adic
// digit expansion; carries resolve through pi^e = ell.
class KElem {
  public:
    KElem() = default;
    explicit KElem(const Field& F) : F_(&F), co_(static_cast<size_t>(F.e)) {}
    KElem(const Field& F, const mpq_class& x0);

    static KElem zero(const Field& F) { return KElem(F); }
    static KElem one(const Field& F) { return KElem(F, 1); }
    // c * pi^j for integer j and c in Z[1/ell]
    static KElem pi_pow(const Field& F, long j, const mpq_class& c = 1);
    static KElem from_digits(const Field& F, const std::vector<std::pair<long, long>>& digits);

    const Field* field() const { return F_; }
    bool is_zero() const;

    KElem operator+(const KElem& o) const;
    KElem operator-(const KElem& o) const;
    KElem operator-() const;
    KElem operator*(const KElem& o) const;
    bool operator==(const KElem& o) const { return co_ == o.co_; }
    bool operator!=(const KElem& o) const { return !(*this == o); }
    bool operator<(const KElem& o) const;  // deterministic order

    // pi-adic valuation; kValInf for zero.
    long val() const;
    // trace to Q_ell, exact rational
    mpq_class trace() const;
    // x * pi^m (m may be negative)
    KElem shift(long m) const;
    // representative of x mod l^N: all digit positions >= N dropped
    KElem reduce_mod(long N) const;
    // inverse of a unit (val 0) modulo l^s
    KElem unit_inverse_mod(long s) const;

    const mpq_class& coord(long i) const { return co_[static_cast<size_t>(i)]; }

    // signed canonical digit expansion, position -> digit
    std::map<long, long> digits() const;
    std::string str() const;

  private:
    const Field* F_ = nullptr;
    std::vector<mpq_class> co_;
    void check_denominators() const;
};

// zeta^{tr(x)}: the root of unity zeta_t^u where tr(x) = u/ell^t in lowest
// terms; twist replaces the generative zeta by zeta^twist (twist prime to ell).
Cyc add_char(const KElem& x, long twist = 1);

// all sums of digits at pi-positions in [lo, hi): ell^{hi-lo} elements
std::vector<KElem> enumerate_digit_range(const Field& F, long lo, long hi);

// representatives of l^{-r} o_K / l^N, exactly ell^{N+r} of them
std::vector<KElem> enumerate_cosets(const Field& F, long r, long N);

}  // namespace ellf
