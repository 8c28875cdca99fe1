#include "ellf/zeta.hpp"

#include <algorithm>
#include <sstream>

namespace ellf {

std::string ExpInterval::str() const {
    std::ostringstream os;
    os << (lo_open ? "(" : "[");
    if (lo)
        os << "p^" << *lo;
    else
        os << "0";
    os << ", ";
    if (hi)
        os << "p^" << *hi;
    else
        os << "inf";
    os << (hi_open ? ")" : "]");
    return os.str();
}

ExpInterval schwartz_interval(const ShellFn& f) {
    const Field& F = *f.field();
    ExpInterval out;  // unbounded by default
    for (const auto& t : f.tails()) {
        long v = rat_valuation_nonzero(t.ratio, F.p);
        if (t.toward_zero) {
            // f ~ ratio^n on shrinking shells: need |ratio * lambda|_p < 1
            if (!out.hi || *out.hi > v) out.hi = v;
        } else {
            // growing shells: need |ratio / lambda|_p < 1
            if (!out.lo || *out.lo < -v) out.lo = -v;
        }
    }
    return out;
}

namespace {

// integral of the unit part of chi~ over o_K^x (0 when ramified)
Cyc unit_integral(const Character& chi) {
    const Field& F = *chi.field();
    long n = std::max(chi.level(), 1L);
    Cyc total = Cyc::zero(F);
    for (const auto& u : unit_group(F, n)->reps()) total += chi.eval_unit(u);
    return total * coset_measure(F, n);
}

void require_formal(const Character& chi) {
    if (chi.lambda_kind() == LambdaKind::Concrete)
        fail(Errc::BadParameter, "zeta integral needs a formal lambda");
}

}  // namespace

ZetaValue zeta_integral(const StepFn& f, const Character& chi) {
    const Field& F = *f.field();
    require_formal(chi);
    if (!f.support_in_units()) fail(Errc::SupportContainsZero, "f(0) != 0");
    Laurent acc(F);
    for (const auto& t : f.terms()) {
        long v = t.rep.val();
        long L = std::max(t.level, v + chi.level());
        Cyc mass = t.coeff * coset_measure(F, L);
        if (L == t.level) {
            acc = acc + chi.eval_formal(t.rep).scale(mass);
        } else {
            for (const auto& z : enumerate_digit_range(F, t.level, L))
                acc = acc + chi.eval_formal(t.rep + z).scale(mass);
        }
    }
    return {RatFunc(acc), ExpInterval{}};
}

ZetaValue zeta_shell(const ShellFn& f, const Character& chi) {
    const Field& F = *f.field();
    require_formal(chi);
    ZetaValue out = zeta_integral(f.step(), chi);
    if (!f.tails().empty()) {
        Cyc U = unit_integral(chi);
        // accumulate in the character's own parameter, substitute at the end
        RatFunc acc = RatFunc::zero(F);
        for (const auto& t : f.tails()) {
            if (U.is_zero()) break;  // ramified: every full shell integrates to 0
            if (t.toward_zero) {
                // sum_k ratio^k (mu/q)^{start+k} * U
                Laurent num(F, t.coeff * U * Cyc(F, pow_q(F.q, -t.start)), t.start);
                Laurent den = Laurent::one(F) - Laurent(F, Cyc(F, t.ratio / F.q), 1);
                acc = acc + RatFunc(num, den);
            } else {
                // sum_k ratio^k (q/mu)^{start+k} * U
                Laurent num(F, t.coeff * U * Cyc(F, pow_q(F.q, t.start)), -t.start);
                Laurent den = Laurent::one(F) - Laurent(F, Cyc(F, t.ratio * F.q), -1);
                acc = acc + RatFunc(num, den);
            }
        }
        if (chi.lambda_kind() == LambdaKind::FormalDual)
            acc = RatFunc(acc.num().dual_substitute(), acc.den().dual_substitute());
        out.value = out.value + acc;
    }
    ExpInterval dom = schwartz_interval(f);
    if (chi.lambda_kind() == LambdaKind::FormalDual) {
        ExpInterval flipped;
        if (dom.hi) flipped.lo = -*dom.hi;
        if (dom.lo) flipped.hi = -*dom.lo;
        dom = flipped;
    }
    out.domain = dom;
    return out;
}

ShellFn family_g_alpha(const Field& F, const mpq_class& alpha) {
    if (alpha == 0 || rat_valuation_nonzero(alpha, F.p) < 1)
        fail(Errc::BadParameter, "need |alpha|_p < 1");
    return ShellFn(StepFn(F), {GeoTail{true, 0, alpha, Cyc::one(F)}});
}

ShellFn family_g_beta_up(const Field& F, const mpq_class& beta) {
    if (beta == 0 || rat_valuation_nonzero(beta, F.p) < 1)
        fail(Errc::BadParameter, "need |beta|_p < 1");
    return ShellFn(StepFn(F), {GeoTail{false, 1 + F.delta, beta, Cyc::one(F)}});
}

ShellFn family_G_alpha_beta(const Field& F, const mpq_class& alpha, const mpq_class& beta) {
    mpq_class scale = mpq_class(1 - beta * F.q) / (1 - alpha / F.q);
    scale *= pow_q(F.q, -1 - F.delta);
    return family_g_alpha(F, alpha) - family_g_beta_up(F, beta).scale(Cyc(F, scale));
}

ShellFn family_G_bracket(const Field& F, const mpq_class& alpha) {
    return family_G_alpha_beta(F, alpha * F.q, alpha / F.q);
}

StepFn family_h(const Field& F, long n) {
    if (n < 0) fail(Errc::BadParameter, "h_n needs n >= 0");
    Cyc one = Cyc::one(F);
    if (n <= 1) {
        // -1/q on o^x, +1 on 1 + pi o, -1 on pi + pi^2 o
        StepFn f = StepFn::shell(F, 0, Cyc(F, mpq_class(-1, F.q)));
        f = f + StepFn::indicator(F, KElem::one(F), 1, one);
        f = f + StepFn::indicator(F, KElem::pi_pow(F, 1), 2, -one);
        return f;
    }
    StepFn f = StepFn::indicator(F, KElem::one(F), n, one);
    f = f + StepFn::indicator(F, KElem::one(F), n - 1, Cyc(F, mpq_class(-1, F.q)));
    return f;
}

StepFn family_h_hat(const Field& F, long n) {
    if (n < 0) fail(Errc::BadParameter, "h_n^ needs n >= 0");
    KElem one_k = KElem::one(F);
    auto masked_char = [&](const KElem& t, long shell_val) {
        StepFn mask = StepFn::shell(F, shell_val, Cyc::one(F));
        return char_on_coset(F, t, KElem::zero(F), shell_val, {})
            .mul(mask);
    };
    if (n <= 1) {
        // q^{-delta/2 - 1} [ zeta^{tr(y)} 1_{pi^{-delta-1} o^x}
        //                    - (1/q) zeta^{tr(pi y)} 1_{pi^{-delta-2} o^x} ]
        StepFn a = masked_char(one_k, -F.delta - 1);
        StepFn b = masked_char(KElem::pi_pow(F, 1), -F.delta - 2);
        StepFn out = a + b.scale(Cyc(F, mpq_class(-1, F.q)));
        return out.scale(Cyc::q_half_pow(F, -F.delta - 2));
    }
    StepFn out = masked_char(one_k, -F.delta - n);
    return out.scale(Cyc::q_half_pow(F, -F.delta - 2 * n));
}

Cyc gauss_sum(const Character& chi, long twist) {
    const Field& F = *chi.field();
    long n = chi.level();
    if (n < 1) fail(Errc::UnramifiedCharacter, "Gauss sum needs level >= 1");
    Cyc total = Cyc::zero(F);
    for (const auto& a : unit_group(F, n)->reps())
        total += add_char(a.shift(-F.delta - n), twist) * chi.eval_unit(a);
    return total;
}

RatFunc rho_closed(const Character& chi_tilde, long twist) {
    const Field& F = *chi_tilde.field();
    long n = chi_tilde.level();
    if (n == 0) {
        // q^{delta/2} lambda^{-delta} (1 - lambda^{-1}) / (1 - lambda / q)
        Cyc c = Cyc::q_half_pow(F, F.delta);
        Laurent num(F, c, -F.delta);
        num = num - Laurent(F, c, -F.delta - 1);
        Laurent den = Laurent::one(F) - Laurent(F, Cyc(F, mpq_class(1, F.q)), 1);
        return RatFunc(num, den);
    }
    Cyc g = gauss_sum(chi_tilde.unit_inverse(), twist);
    Cyc c = Cyc::q_half_pow(F, F.delta + 2 * n) * g.inv();
    return RatFunc(Laurent(F, c, -F.delta - n));
}

RatFunc rho_from_h(const Character& chi_tilde, long twist) {
    const Field& F = *chi_tilde.field();
    long n = chi_tilde.level();
    Character chi = chi_tilde.with_formal_lambda();
    StepFn h = family_h(F, n);
    StepFn hhat = fourier(h, FourierOpts{+1, twist});
    ZetaValue zh = zeta_integral(h, chi);
    ZetaValue zhhat = zeta_integral(hhat, chi.dual());
    if (zhhat.value.is_zero()) fail(Errc::DivisionByZeroPoly, "Z(h^, chi*) vanishes");
    return zh.value / zhhat.value;
}

bool verify_fe(const StepFn& f, const StepFn& g, const Character& chi_tilde) {
    const Field& F = *f.field();
    if (!f.support_in_units()) fail(Errc::PreconditionViolated, "f is not supported in K^x");
    if (!g.support_in_units()) fail(Errc::PreconditionViolated, "g is not supported in K^x");
    if (!haar_integral(f).is_zero())
        fail(Errc::PreconditionViolated, "f has nonzero integral (f^ not of Schwartz class 1)");
    if (!haar_integral(g).is_zero())
        fail(Errc::PreconditionViolated, "g has nonzero integral (g^ not of Schwartz class 1)");
    Character chi = chi_tilde.with_formal_lambda();
    Character dual = chi.dual();
    RatFunc zf = zeta_integral(f, chi).value;
    RatFunc zg = zeta_integral(g, chi).value;
    RatFunc zfh = zeta_integral(fourier(f), dual).value;
    RatFunc zgh = zeta_integral(fourier(g), dual).value;
    return (zf * zgh).eq(zfh * zg);
}

namespace {

Continuation continuation_common(const Field& F, const Character& chi_tilde, const RatFunc& zdual,
                                 ExpInterval annulus) {
    Continuation out;
    RatFunc rho = rho_closed(chi_tilde);
    out.value.value = rho * zdual;
    out.value.domain = annulus;
    if (chi_tilde.level() == 0) {
        out.rho_poles.push_back(Cyc(F, F.q));
        out.rho_zeros.push_back(Cyc::one(F));
    }
    return out;
}

}  // namespace

Continuation continue_zeta(const StepFn& f, const Character& chi_tilde) {
    const Field& F = *f.field();
    if (!f.support_in_units()) fail(Errc::NotSchwartz, "f is not supported in K^x");
    if (!haar_integral(f).is_zero()) fail(Errc::NotSchwartz, "f^ is not of Schwartz class 1");
    Character chi = chi_tilde.with_formal_lambda();
    RatFunc zdual = zeta_integral(fourier(f), chi.dual()).value;
    ExpInterval all;
    all.lo_open = all.hi_open = false;
    return continuation_common(F, chi_tilde, zdual, all);
}

Continuation continue_zeta(const ShellFn& f, const Character& chi_tilde) {
    const Field& F = *f.field();
    ShellFn fhat = fourier_shell(f);
    ExpInterval i1 = schwartz_interval(f);
    ExpInterval i2 = schwartz_interval(fhat);
    // symmetric annulus [c^{-1}, c]: t_c = sup of exponents t with both f and
    // fhat of class p^t and p^{-t}
    std::optional<long> tc;
    auto tighten = [&](std::optional<long> b, bool upper) {
        if (!b) return;
        long v = upper ? *b : -*b;
        if (!tc || v < *tc) tc = v;
    };
    tighten(i1.hi, true);
    tighten(i2.hi, true);
    tighten(i1.lo, false);
    tighten(i2.lo, false);
    if (tc && *tc <= 0) fail(Errc::NotSchwartz, "no Schwartz class c >= 1 for f and f^");
    Character chi = chi_tilde.with_formal_lambda();
    RatFunc zdual = zeta_shell(fhat, chi.dual()).value;
    ExpInterval annulus;
    if (tc) {
        annulus.lo = -*tc;
        annulus.hi = *tc;
    } else {
        annulus.lo_open = annulus.hi_open = false;
    }
    return continuation_common(F, chi_tilde, zdual, annulus);
}

}  // namespace ellf
