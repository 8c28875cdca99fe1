#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ellf/fourier.hpp"
#include "ellf/stepfun.hpp"

namespace ellf {

// Element of the unramified coefficient ring W = Z_p[Y]/(g), truncated mod
// p^precision; coordinates in the Y-power basis.
using WElt = std::vector<mpz_class>;

// Embedding iota_p of the exact scalars into an unramified p-adic field at
// finite precision.  The context is built for an embedding conductor
// M_embed | M (ell-power level `level`); d is minimal with mu_{M*} and
// sqrt(q) inside, where M* adjoins the 4th (or 8th) roots needed to express
// sqrt(q) cyclotomically.
class PadicContext {
  public:
    PadicContext(const Field& F, long level, long precision);

    const Field& field() const { return *F_; }
    long p() const { return F_->p; }
    long level() const { return level_; }
    long long m_embed() const { return M_embed_; }
    long long m_star() const { return M_star_; }
    long degree() const { return d_; }
    long precision() const { return precision_; }
    const mpz_class& modulus() const { return pk_; }
    // residue datum: the chosen irreducible factor of Phi_{M*} mod p
    const std::vector<long>& teich_seed() const { return gbar_; }
    const WElt& teich_root() const { return tau_; }
    const WElt& sqrtq_image() const { return sqrtq_; }

    WElt w_zero() const { return WElt(static_cast<size_t>(d_)); }
    WElt w_one() const;
    WElt w_scalar(const mpq_class& r) const;  // DenominatorDivisibleByP
    WElt w_add(const WElt& a, const WElt& b) const;
    WElt w_sub(const WElt& a, const WElt& b) const;
    WElt w_mul(const WElt& a, const WElt& b) const;
    WElt w_pow(const WElt& a, const mpz_class& n) const;
    WElt w_inv(const WElt& a) const;  // unit inverse
    bool w_is_zero(const WElt& a) const;

    // tau^k with caching
    WElt tau_pow(long long k) const;

  private:
    const Field* F_;
    long level_;
    long long M_embed_, M_star_;
    long d_;
    long precision_;
    mpz_class pk_;
    std::vector<long> gbar_;      // residue factor coefficients (monic, degree d)
    std::vector<mpz_class> g_;    // lifted monic modulus
    WElt tau_, sqrtq_;
    mutable std::map<long long, WElt> tau_cache_;

    WElt reduce(std::vector<mpz_class> c) const;
};

// iota_p(x): exact mod p^precision; the monomials of x must have order
// dividing M_embed (ConductorTooSmall otherwise)
WElt embed(const PadicContext& ctx, const Cyc& x);

struct PValuation {
    bool infinite = false;
    long v = 0;
};
// valuation of the embedded value; infinite for the exact zero; throws
// PrecisionInconclusive when the image vanishes mod p^precision but x != 0
PValuation vp(const PadicContext& ctx, const Cyc& x);
PValuation vp_rational(const Field& F, const mpq_class& r);

// vp with automatic precision escalation (doubling up to max_precision)
PValuation vp_escalating(const Field& F, const Cyc& x, long level, long precision,
                         long max_precision = 640);

// |int f|_p <= sup |f|_p, checked through vp
bool check_ultrametric(const PadicContext& ctx, const StepFn& f);

// exact Riemann-Lebesgue witnesses (no embedding needed)
RlWitness check_riemann_lebesgue(const StepFn& f);

}  // namespace ellf
