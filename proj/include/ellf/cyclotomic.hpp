#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "ellf/field.hpp"
#include "ellf/rational.hpp"

namespace ellf {

// Element of R = Q(zeta_M)[sqrtq]/(sqrtq^2 - q), stored as a + b*sqrtq with
// a, b sparse rational combinations of zeta_M^k, 0 <= k < phi(M).
class Cyc {
  public:
    using Coeffs = std::map<long long, mpq_class>;

    Cyc() = default;
    Cyc(const Field& F, const mpq_class& r);

    static Cyc zero(const Field& F) { return Cyc(F, 0); }
    static Cyc one(const Field& F) { return Cyc(F, 1); }
    static Cyc sqrtq(const Field& F);
    // zeta_M^{k * M / order}; requires order | M.
    static Cyc root(const Field& F, long long k, long long order);
    // q^{h/2} for any integer h (possibly negative or odd).
    static Cyc q_half_pow(const Field& F, long h);

    bool is_zero() const { return a_.empty() && b_.empty(); }
    bool is_rational() const;
    // the rational value, if is_rational()
    mpq_class rational_value() const;

    const Field* field() const { return F_; }
    const Coeffs& a_part() const { return a_; }
    const Coeffs& b_part() const { return b_; }

    Cyc operator+(const Cyc& o) const;
    Cyc operator-(const Cyc& o) const;
    Cyc operator-() const;
    Cyc operator*(const Cyc& o) const;
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }
    bool operator==(const Cyc& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Cyc& o) const { return !(*this == o); }
    // deterministic total order (for canonical sorting)
    int cmp(const Cyc& o) const;

    Cyc scale(const mpq_class& r) const;
    Cyc inv() const;
    Cyc pow(long n) const;

    // smallest m with this in Q(zeta_m)[sqrtq]  (from exponent gcd; 1 if rational)
    long long effective_order() const;

    std::string str() const;

  private:
    friend struct CycBuilder;
    friend Coeffs cyclotomic_inverse(const Field& F, const Coeffs& x);
    const Field* F_ = nullptr;
    Coeffs a_, b_;

    static void add_monomial(const Field& F, Coeffs& out, long long k, const mpq_class& c);
    static Coeffs mul_parts(const Field& F, const Coeffs& x, const Coeffs& y);
    static Coeffs add_parts(const Coeffs& x, const Coeffs& y, bool negate_y);
    static void prune(Coeffs& m);
};

// Arbitrary sums of c * zeta_M^k * sqrtq^s, reduced on build.
struct CycBuilder {
    const Field* F;
    Cyc::Coeffs a, b;
    explicit CycBuilder(const Field& field) : F(&field) {}
    void add(long long zeta_exp, const mpq_class& c, bool with_sqrtq = false);
    Cyc build();
};

// Inverse of a sparse element of Q(zeta_M) given by coefficients; used by
// Cyc::inv through the effective cyclotomic subfield.
Cyc::Coeffs cyclotomic_inverse(const Field& F, const Cyc::Coeffs& x);

}  // namespace ellf
