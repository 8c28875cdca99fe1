#include "ellf/fourier.hpp"

#include <algorithm>

namespace ellf {

Cyc coset_measure(const Field& F, long level) { return Cyc::q_half_pow(F, -2 * level - F.delta); }

Cyc haar_integral(const StepFn& f) {
    const Field& F = *f.field();
    Cyc out = Cyc::zero(F);
    for (const auto& t : f.terms()) out += t.coeff * coset_measure(F, t.level);
    return out;
}

Cyc haar_integral_shell(const ShellFn& f) {
    const Field& F = *f.field();
    Cyc out = haar_integral(f.step());
    mpq_class unit_mass(F.q - 1, F.q);  // measure of o^x relative to q^{-delta/2}
    for (const auto& t : f.tails()) {
        // sum_k ratio^k * measure(shell) in closed form; the geometric series
        // converges p-adically to the same rational expression
        mpq_class qs;
        mpq_class denom;
        if (t.toward_zero) {
            qs = pow_q(F.q, -t.start);
            denom = 1 - t.ratio / F.q;
        } else {
            qs = pow_q(F.q, t.start);
            denom = 1 - t.ratio * F.q;
        }
        out += t.coeff.scale(unit_mass * qs / denom) * Cyc::q_half_pow(F, -F.delta);
    }
    return out;
}

StepFn char_on_coset(const Field& F, const KElem& t, const KElem& rep, long level,
                     FourierOpts opts) {
    if (t.is_zero()) return StepFn::indicator(F, rep, level);
    long L = std::max(level, -t.val() - F.delta);
    std::vector<StepTerm> terms;
    for (const auto& z : enumerate_cosets(F, -level, L)) {
        KElem y0 = rep + z;
        KElem arg = t * y0;
        if (opts.sign < 0) arg = -arg;
        terms.push_back({y0.reduce_mod(L), L, add_char(arg, opts.twist)});
    }
    return StepFn::from_terms(F, terms);
}

StepFn fourier(const StepFn& f, FourierOpts opts) {
    const Field& F = *f.field();
    std::vector<StepTerm> out;
    for (const auto& t : f.terms()) {
        Cyc mass = t.coeff * coset_measure(F, t.level);
        StepFn piece = char_on_coset(F, t.rep, KElem::zero(F), -t.level - F.delta, opts);
        for (const auto& pt : piece.terms()) out.push_back({pt.rep, pt.level, pt.coeff * mass});
    }
    return StepFn::from_terms(F, out);
}

ShellFn fourier_shell(const ShellFn& f, FourierOpts opts) {
    const Field& F = *f.field();
    StepFn step = fourier(f.step(), opts);
    std::vector<StepTerm> extra = step.terms();
    std::vector<GeoTail> tails;
    for (const auto& t : f.tails()) {
        if (t.toward_zero) {
            // tail = coeff * dilate(g_ratio, pi^{-start}); the closed transform of
            // g_a is q^{-delta/2}/(1 - a/q) [ (1-1/q) 1_{d^{-1}} - ((1-a)/q) g^{a/q} ]
            long s = t.start;
            mpq_class qs = pow_q(F.q, -s);
            mpq_class pref = qs / (1 - t.ratio / F.q);
            Cyc factor = t.coeff.scale(pref) * Cyc::q_half_pow(F, -F.delta);
            for (const auto& st :
                 StepFn::indicator(F, KElem::zero(F), -F.delta - s,
                                   factor.scale(mpq_class(F.q - 1, F.q)))
                     .terms())
                extra.push_back(st);
            tails.push_back({false, 1 + F.delta + s, t.ratio / F.q,
                             -factor.scale(mpq_class(1 - t.ratio) / F.q)});
        } else {
            // tail = coeff * dilate(g^ratio, pi^{s}), s = start - 1 - delta; the
            // transform of g^b is q^{delta/2}/(1 - b q) [ (q-1) 1_{o_K} - q(1-b) g_{bq} ]
            long s = t.start - 1 - F.delta;
            mpq_class qs = pow_q(F.q, s);
            mpq_class pref = qs / (1 - t.ratio * F.q);
            Cyc factor = t.coeff.scale(pref) * Cyc::q_half_pow(F, F.delta);
            for (const auto& st :
                 StepFn::indicator(F, KElem::zero(F), s, factor.scale(mpq_class(F.q - 1))).terms())
                extra.push_back(st);
            tails.push_back(
                {true, s, t.ratio * F.q, -factor.scale(mpq_class(1 - t.ratio) * F.q)});
        }
    }
    return ShellFn(StepFn::from_terms(F, extra), std::move(tails));
}

PoissonResult poisson_check(const StepFn& f, const KElem& t, FourierOpts opts) {
    const Field& F = *f.field();
    PoissonResult out{Cyc::zero(F), Cyc::zero(F), false};
    // lhs: translate so g(x) = f(x + t), restrict to o_K, integrate
    StepFn g = f.translate(-t).restrict_to(KElem::zero(F), 0);
    out.lhs = haar_integral(g);
    // rhs: q^{-delta/2} * int over d^{-1} of fhat(y) zeta^{-tr(ty)} dy
    StepFn fhat = fourier(f, opts);
    FourierOpts conj = opts.inverse();
    StepFn kernel = char_on_coset(F, t, KElem::zero(F), -F.delta, conj);
    out.rhs = haar_integral(fhat.mul(kernel)) * Cyc::q_half_pow(F, -F.delta);
    out.equal = (out.lhs == out.rhs);
    return out;
}

Cyc psi(const StepFn& f, const StepFn& g, const KElem& y, FourierOpts opts) {
    if (y.is_zero()) fail(Errc::ZeroDilation, "psi requires nonzero y");
    StepFn ghat = fourier(g, opts);
    return haar_integral(f.mul(ghat.dilate(y)));
}

Cyc cartier_pair(const StepFn& f, const StepFn& g, FourierOpts opts) {
    return psi(f, g, KElem::one(*f.field()), opts);
}

RlWitness riemann_lebesgue_witness(const StepFn& f, FourierOpts opts) {
    const Field& F = *f.field();
    StepFn fhat = fourier(f, opts);
    RlWitness w{0, std::nullopt, haar_integral(f).is_zero()};
    w.support_bound = fhat.support_val_floor();
    if (w.integral_zero) {
        // canonical fhat has no coset through 0 (its value there is the zero
        // integral), so it vanishes on l^k with k = max level
        long k = 0;
        for (const auto& t : fhat.terms()) {
            if (t.rep.is_zero()) fail(Errc::PreconditionViolated, "zero-integral transform hits 0");
            k = std::max(k, t.level);
        }
        w.vanish_level = k + F.delta;  // l^m d^{-1} = l^{m - delta}
    }
    return w;
}

}  // namespace ellf
