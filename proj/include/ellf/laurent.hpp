#pragma once

#include <map>
#include <string>

#include "ellf/cyclotomic.hpp"

namespace ellf {

// Laurent polynomial in the character parameter lambda over Cyc.
class Laurent {
  public:
    using Coeffs = std::map<long, Cyc>;

    Laurent() = default;
    explicit Laurent(const Field& F) : F_(&F) {}
    Laurent(const Field& F, const Cyc& c, long n = 0);

    static Laurent one(const Field& F) { return Laurent(F, Cyc::one(F), 0); }
    static Laurent lambda(const Field& F, long n = 1) { return Laurent(F, Cyc::one(F), n); }

    const Field* field() const { return F_; }
    bool is_zero() const { return c_.empty(); }
    const Coeffs& coeffs() const { return c_; }
    void set(long n, const Cyc& v);
    Cyc coeff(long n) const;

    long min_deg() const;  // lowest exponent; fails on zero
    long max_deg() const;

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    bool operator==(const Laurent& o) const { return c_ == o.c_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    Laurent scale(const Cyc& s) const;
    Laurent shift(long n) const;  // multiply by lambda^n
    // substitute lambda -> q / lambda
    Laurent dual_substitute() const;
    Cyc eval(const Cyc& lambda0) const;

    std::string str() const;

  private:
    const Field* F_ = nullptr;
    Coeffs c_;
};

// Quotient of Laurent polynomials; canonical form: den has lowest exponent 0,
// its lowest coefficient normalized to 1 when invertible, common lambda-power
// factors cancelled.
class RatFunc {
  public:
    RatFunc() = default;
    RatFunc(Laurent num, Laurent den);
    explicit RatFunc(Laurent num);

    static RatFunc zero(const Field& F) { return RatFunc(Laurent(F)); }
    static RatFunc one(const Field& F) { return RatFunc(Laurent::one(F)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    const Field* field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const;  // denominator is a unit monomial

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc scale(const Cyc& s) const;

    // equality as rational functions, by cross-multiplication
    bool eq(const RatFunc& o) const;

    Cyc eval(const Cyc& lambda0) const;  // PoleAtPoint if den(lambda0) = 0

    std::string str() const;

  private:
    Laurent num_, den_;
    void normalize();
};

}  // namespace ellf
