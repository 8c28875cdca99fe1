#include "ellf/padic.hpp"

#include <algorithm>
#include <numeric>

namespace ellf {

namespace {

// --- dense polynomial arithmetic over F_p (p small) ---

using FpPoly = std::vector<long>;  // coefficients in [0, p)

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    fp_trim(out);
    return out;
}

FpPoly fp_rem(FpPoly f, const FpPoly& g, long p) {
    fp_trim(f);
    long glead = g.back();
    long ginv = 1;
    for (long t = 1; t < p; ++t)
        if ((t * glead) % p == 1) {
            ginv = t;
            break;
        }
    while (f.size() >= g.size() && !f.empty()) {
        long c = (f.back() * ginv) % p;
        size_t shift = f.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j) f[shift + j] = ((f[shift + j] - c * g[j]) % p + p) % p;
        fp_trim(f);
    }
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long lead = a.back();
        long inv = 1;
        for (long t = 1; t < p; ++t)
            if ((t * lead) % p == 1) {
                inv = t;
                break;
            }
        for (auto& c : a) c = (c * inv) % p;
    }
    return a;
}

FpPoly fp_powmod(FpPoly base, mpz_class n, const FpPoly& mod, long p) {
    FpPoly out{1};
    base = fp_rem(std::move(base), mod, p);
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) out = fp_rem(fp_mul(out, base, p), mod, p);
        base = fp_rem(fp_mul(base, base, p), mod, p);
        n >>= 1;
    }
    return out;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    fp_trim(a);
    return a;
}

// all monic irreducible factors (equal degree d) of a squarefree f
void equal_degree_factor(const FpPoly& f, long d, long p, Rng& rng, std::vector<FpPoly>& out) {
    long deg = static_cast<long>(f.size()) - 1;
    if (deg == d) {
        out.push_back(f);
        return;
    }
    mpz_class pd;
    mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
    while (true) {
        FpPoly r(static_cast<size_t>(deg), 0);
        for (auto& c : r) c = rng.range(0, p - 1);
        r.push_back(1);  // keep degree
        FpPoly h;
        if (p != 2) {
            mpz_class ex = (pd - 1) / 2;
            h = fp_powmod(r, ex, f, p);
            h = fp_sub(h, FpPoly{1}, p);
        } else {
            // trace map sum r^{2^i}, i < d
            FpPoly acc = fp_rem(r, f, p);
            FpPoly cur = acc;
            for (long i = 1; i < d; ++i) {
                cur = fp_rem(fp_mul(cur, cur, p), f, p);
                acc = fp_sub(acc, cur, p);  // subtraction = addition mod 2
            }
            h = acc;
        }
        FpPoly g = fp_gcd(h, f, p);
        if (g.empty() || g.size() <= 1 || g.size() == f.size()) continue;
        FpPoly q = f;
        // q = f / g exactly
        {
            FpPoly quot;
            FpPoly rem = f;
            long glead = g.back();
            long ginv = 1;
            for (long t = 1; t < p; ++t)
                if ((t * glead) % p == 1) ginv = t;
            quot.assign(f.size() - g.size() + 1, 0);
            while (rem.size() >= g.size() && !rem.empty()) {
                long c = (rem.back() * ginv) % p;
                size_t shift = rem.size() - g.size();
                quot[shift] = c;
                for (size_t j = 0; j < g.size(); ++j)
                    rem[shift + j] = ((rem[shift + j] - c * g[j]) % p + p) % p;
                fp_trim(rem);
            }
            q = quot;
        }
        equal_degree_factor(g, d, p, rng, out);
        equal_degree_factor(q, d, p, rng, out);
        return;
    }
}

long long order_mod(long p, long long m) {
    if (std::gcd<long long>(p, m) != 1) fail(Errc::BadParameter, "p divides the conductor");
    long long d = 1;
    long long x = p % m;
    while (x != 1) {
        x = (x * p) % m;
        if (++d > m) fail(Errc::BadParameter, "order computation failed");
    }
    return d;
}

long legendre(long a, long ell) {
    // a^{(ell-1)/2} mod ell
    long r = 1, b = a % ell, e = (ell - 1) / 2;
    while (e) {
        if (e & 1) r = (r * b) % ell;
        b = (b * b) % ell;
        e >>= 1;
    }
    return r == 1 ? 1 : -1;
}

}  // namespace

PadicContext::PadicContext(const Field& F, long level, long precision)
    : F_(&F), level_(level), precision_(precision) {
    if (level < 1) fail(Errc::BadParameter, "embedding level must be >= 1");
    if (precision < 1) fail(Errc::BadParameter, "precision must be >= 1");
    long long nonell = F.M;
    while (nonell % F.ell == 0) nonell /= F.ell;
    long long lp = 1;
    for (long i = 0; i < level; ++i) lp *= F.ell;
    M_embed_ = nonell * lp;
    // adjoin the roots needed to write sqrt(q) cyclotomically
    if (F.ell == 2)
        M_star_ = std::lcm<long long>(M_embed_, 8);
    else if (F.ell % 4 == 3)
        M_star_ = std::lcm<long long>(M_embed_, 4);
    else
        M_star_ = M_embed_;
    d_ = static_cast<long>(order_mod(F.p, M_star_));
    pk_ = pow_z(F.p, precision_);

    // residue datum: lexicographically least irreducible factor of Phi_{M*} mod p
    std::vector<mpz_class> phi = cyclotomic_dense(M_star_);
    FpPoly phibar(phi.size());
    for (size_t i = 0; i < phi.size(); ++i) {
        mpz_class r = phi[i] % F.p;
        if (r < 0) r += F.p;
        phibar[i] = static_cast<long>(r.get_si());
    }
    fp_trim(phibar);
    if ((static_cast<long>(phibar.size()) - 1) % d_ != 0)
        fail(Errc::BadParameter, "degree mismatch in cyclotomic factorization");
    std::vector<FpPoly> factors;
    Rng rng(0xe11f00d + static_cast<unsigned long>(M_star_));
    equal_degree_factor(phibar, d_, F.p, rng, factors);
    std::sort(factors.begin(), factors.end());
    gbar_ = factors.front();

    g_.assign(gbar_.begin(), gbar_.end());

    // Teichmueller lift of Y: Newton iteration on X^{M*} - 1 (Y mod p is an
    // exact root of the residue factor, and M* is prime to p)
    WElt x(static_cast<size_t>(d_));
    if (d_ == 1) {
        x[0] = ((-g_[0]) % F.p + F.p) % F.p;  // g = Y + c
    } else {
        x[1] = 1;
    }
    mpz_class mstar(static_cast<unsigned long>(M_star_));
    for (long it = 0; it < 64; ++it) {
        WElt xm1 = w_pow(x, mstar - 1);
        WElt fx = w_mul(xm1, x);
        fx[0] -= 1;
        mpz_fdiv_r(fx[0].get_mpz_t(), fx[0].get_mpz_t(), pk_.get_mpz_t());
        if (w_is_zero(fx)) break;
        WElt fpx = xm1;
        for (auto& c : fpx) {
            c *= static_cast<long>(M_star_);
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk_.get_mpz_t());
        }
        x = w_sub(x, w_mul(fx, w_inv(fpx)));
    }
    tau_ = reduce(std::move(x));
    // exact order check
    WElt t = w_pow(tau_, mstar);
    WElt one = w_one();
    if (!(t == one)) fail(Errc::BadParameter, "Teichmueller lift failed");

    // sqrt(q) as a cyclotomic combination of tau powers
    if (F.ell == 2) {
        WElt t8 = tau_pow(M_star_ / 8);
        sqrtq_ = w_add(t8, w_pow(t8, mpz_class(7)));
    } else {
        WElt gsum = w_zero();
        long long tl = M_star_ / F.ell;
        for (long a = 1; a < F.ell; ++a) {
            WElt term = tau_pow((tl * a) % M_star_);
            if (legendre(a, F.ell) == -1)
                gsum = w_sub(gsum, term);
            else
                gsum = w_add(gsum, term);
        }
        if (F.ell % 4 == 1) {
            sqrtq_ = gsum;
        } else {
            WElt i_inv = tau_pow(3 * (M_star_ / 4));
            sqrtq_ = w_mul(gsum, i_inv);
        }
    }
    WElt sq = w_mul(sqrtq_, sqrtq_);
    WElt qw = w_zero();
    qw[0] = F.q;
    if (!(sq == qw)) fail(Errc::BadParameter, "sqrt(q) construction failed");
}

WElt PadicContext::reduce(std::vector<mpz_class> c) const {
    // reduce modulo the monic g_ and p^precision
    size_t d = static_cast<size_t>(d_);
    for (size_t i = c.size(); i-- > d;) {
        mpz_class lead = c[i];
        if (lead == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < d; ++j) c[i - d + j] -= lead * g_[j];
    }
    c.resize(d);
    for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), pk_.get_mpz_t());
    return c;
}

WElt PadicContext::w_one() const {
    WElt out = w_zero();
    out[0] = 1;
    return out;
}

WElt PadicContext::w_scalar(const mpq_class& r) const {
    mpz_class den = r.get_den();
    if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(F_->p)))
        fail(Errc::DenominatorDivisibleByP, "denominator divisible by p");
    mpz_class dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pk_.get_mpz_t()) == 0)
        fail(Errc::DenominatorDivisibleByP, "denominator not invertible mod p^k");
    WElt out = w_zero();
    out[0] = r.get_num() * dinv;
    mpz_fdiv_r(out[0].get_mpz_t(), out[0].get_mpz_t(), pk_.get_mpz_t());
    return out;
}

WElt PadicContext::w_add(const WElt& a, const WElt& b) const {
    WElt out = a;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] += b[i];
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), pk_.get_mpz_t());
    }
    return out;
}

WElt PadicContext::w_sub(const WElt& a, const WElt& b) const {
    WElt out = a;
    for (size_t i = 0; i < out.size(); ++i) {
        out[i] -= b[i];
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), pk_.get_mpz_t());
    }
    return out;
}

WElt PadicContext::w_mul(const WElt& a, const WElt& b) const {
    std::vector<mpz_class> conv(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            conv[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(conv));
}

WElt PadicContext::w_pow(const WElt& a, const mpz_class& n) const {
    if (n < 0) return w_inv(w_pow(a, -n));
    WElt out = w_one();
    WElt base = a;
    mpz_class e = n;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) out = w_mul(out, base);
        base = w_mul(base, base);
        e >>= 1;
    }
    return out;
}

bool PadicContext::w_is_zero(const WElt& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

WElt PadicContext::w_inv(const WElt& a) const {
    // residue inverse by extended Euclid in F_p[Y]/(gbar), then Newton lifting
    long p = F_->p;
    FpPoly abar;
    for (const auto& c : a) {
        mpz_class r = c % p;
        if (r < 0) r += p;
        abar.push_back(static_cast<long>(r.get_si()));
    }
    fp_trim(abar);
    if (abar.empty()) fail(Errc::DivisionByZero, "inverse of a non-unit in W");
    FpPoly r0(gbar_), r1 = abar, s0{}, s1{1};
    while (r1.size() > 1) {
        FpPoly rem = r0, quo(r0.size(), 0);
        long lead = r1.back();
        long linv = 1;
        for (long t = 1; t < p; ++t)
            if ((t * lead) % p == 1) linv = t;
        while (rem.size() >= r1.size() && !rem.empty()) {
            long c = (rem.back() * linv) % p;
            size_t shift = rem.size() - r1.size();
            quo[shift] = c;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = ((rem[shift + j] - c * r1[j]) % p + p) % p;
            fp_trim(rem);
        }
        fp_trim(quo);
        FpPoly s2 = fp_sub(s0, fp_mul(quo, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) fail(Errc::DivisionByZero, "inverse of a non-unit in W");
    long cinv = 1;
    for (long t = 1; t < p; ++t)
        if ((t * r1[0]) % p == 1) cinv = t;
    WElt z = w_zero();
    for (size_t i = 0; i < s1.size() && i < z.size(); ++i) z[i] = (s1[i] * cinv) % p;
    // Newton: z <- z(2 - a z)
    WElt two = w_zero();
    two[0] = 2;
    for (long i = 0; i < 16; ++i) {
        WElt az = w_mul(a, z);
        z = w_mul(z, w_sub(two, az));
        if (w_is_zero(w_sub(w_mul(a, z), w_one()))) break;
    }
    if (!w_is_zero(w_sub(w_mul(a, z), w_one()))) fail(Errc::BadParameter, "W inverse failed");
    return z;
}

WElt PadicContext::tau_pow(long long k) const {
    k %= M_star_;
    if (k < 0) k += M_star_;
    auto it = tau_cache_.find(k);
    if (it != tau_cache_.end()) return it->second;
    WElt out = w_pow(tau_, mpz_class(static_cast<unsigned long>(k)));
    tau_cache_.emplace(k, out);
    return out;
}

WElt embed(const PadicContext& ctx, const Cyc& x) {
    const Field& F = ctx.field();
    WElt out = ctx.w_zero();
    auto emit = [&](const Cyc::Coeffs& part, bool with_sqrtq) {
        for (const auto& [k, c] : part) {
            long long o = (k == 0) ? 1 : F.M / gcd_ll(F.M, k);
            if (ctx.m_embed() % o != 0)
                fail(Errc::ConductorTooSmall,
                     "monomial of order " + std::to_string(o) + " exceeds embedding conductor");
            WElt term = ctx.w_zero();
            if (k == 0)
                term = ctx.w_one();
            else
                term = ctx.tau_pow((ctx.m_star() / o) * ((k / (F.M / o)) % o));
            term = ctx.w_mul(term, ctx.w_scalar(c));
            if (with_sqrtq) term = ctx.w_mul(term, ctx.sqrtq_image());
            out = ctx.w_add(out, term);
        }
    };
    emit(x.a_part(), false);
    emit(x.b_part(), true);
    return out;
}

PValuation vp(const PadicContext& ctx, const Cyc& x) {
    if (x.is_zero()) return {true, 0};
    WElt w = embed(ctx, x);
    long best = -1;
    for (const auto& c : w) {
        if (c == 0) continue;
        long v = int_valuation(c, ctx.p());
        if (best < 0 || v < best) best = v;
    }
    if (best < 0)
        fail(Errc::PrecisionInconclusive, "image vanishes to working precision");
    return {false, best};
}

PValuation vp_rational(const Field& F, const mpq_class& r) {
    bool inf = false;
    long v = rat_valuation(r, F.p, inf);
    return {inf, inf ? 0 : v};
}

PValuation vp_escalating(const Field& F, const Cyc& x, long level, long precision,
                         long max_precision) {
    long prec = precision;
    while (true) {
        PadicContext ctx(F, level, prec);
        try {
            return vp(ctx, x);
        } catch (const Error& e) {
            if (e.code() != Errc::PrecisionInconclusive || prec >= max_precision) throw;
            prec = std::min(2 * prec, max_precision);
        }
    }
}

bool check_ultrametric(const PadicContext& ctx, const StepFn& f) {
    PValuation lhs = vp(ctx, haar_integral(f));
    if (f.terms().empty()) return lhs.infinite;
    bool any = false;
    long best = 0;
    for (const auto& t : f.terms()) {
        PValuation v = vp(ctx, t.coeff);
        if (v.infinite) continue;
        if (!any || v.v < best) best = v.v;
        any = true;
    }
    if (!any) return lhs.infinite;
    // measures are p-units, so sup |f|_p = p^{-best}
    return lhs.infinite || lhs.v >= best;
}

RlWitness check_riemann_lebesgue(const StepFn& f) { return riemann_lebesgue_witness(f); }

}  // namespace ellf
