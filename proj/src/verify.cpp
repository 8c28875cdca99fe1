#include "ellf/verify.hpp"

#include <chrono>
#include <sstream>

namespace ellf {

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    SuiteResult res;
    Clock::time_point t0 = Clock::now();
    explicit Checker(std::string name, const SessionConfig& cfg) {
        res.name = std::move(name);
        res.config = cfg.name();
    }
    void check(bool ok, const std::string& what) {
        ++res.cases;
        if (!ok) {
            ++res.failures;
            if (res.first_failure.empty()) res.first_failure = what;
        }
    }
    SuiteResult done() {
        res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    }
};

Cyc q_pow_cyc(const Field& F, long k) { return Cyc(F, pow_q(F.q, k)); }

Laurent mono(const Field& F, const Cyc& c, long n) { return Laurent(F, c, n); }

}  // namespace

std::string SessionConfig::name() const {
    std::ostringstream os;
    os << "ell=" << ell << ",e=" << e << ",p=" << p;
    return os.str();
}

Field make_field(const SessionConfig& cfg) {
    Field F = Field::make(cfg.ell, cfg.e, cfg.p, cfg.nroot, cfg.conductor);
    F.enum_cap = cfg.enum_cap;
    return F;
}

std::vector<SessionConfig> reference_configs() {
    std::vector<SessionConfig> out;
    SessionConfig a;  // Q_3
    a.ell = 3;
    a.e = 1;
    out.push_back(a);
    SessionConfig b;  // Q_3(sqrt(3)): delta = 1
    b.ell = 3;
    b.e = 2;
    out.push_back(b);
    SessionConfig c;  // Q_2(2^{1/3}): delta = 2
    c.ell = 2;
    c.e = 3;
    out.push_back(c);
    return out;
}

std::string SuiteResult::line() const {
    std::ostringstream os;
    os << (pass() ? "PASS" : "FAIL") << " " << name << " [" << config << "] " << cases - failures
       << "/" << cases;
    char buf[32];
    std::snprintf(buf, sizeof(buf), " (%.2fs)", seconds);
    os << buf;
    if (!pass()) os << "  first failure: " << first_failure;
    return os.str();
}

KElem random_kelem(const Field& F, Rng& rng, long min_pos, long max_pos) {
    KElem x(F);
    for (long j = min_pos; j < max_pos; ++j) {
        long d = rng.range(0, F.ell - 1);
        if (d != 0) x = x + KElem::pi_pow(F, j, d);
    }
    return x;
}

Cyc random_coeff(const Field& F, Rng& rng, bool padic_safe) {
    long num = 0;
    while (num == 0) num = rng.range(-3, 3);
    long dens[4] = {1, 2, 3, 5};
    long den = dens[rng.range(0, padic_safe ? 2 : 3)];
    if (den == static_cast<long>(F.p) && padic_safe) den = 1;
    if (den == F.ell) den = 1;
    Cyc c(F, mpq_class(num, den));
    if (rng.range(0, 3) == 0) {
        // mix in a small root of unity
        long t = rng.range(1, 2);
        long long order = 1;
        for (long i = 0; i < t; ++i) order *= F.ell;
        if (F.ell > 2 && rng.flip()) order *= (F.ell - 1);
        c = c * Cyc::root(F, rng.range(1, static_cast<long>(order)), order);
    }
    if (!padic_safe && rng.range(0, 5) == 0) c = c * Cyc::sqrtq(F);
    return c;
}

StepFn random_step(const Field& F, Rng& rng, bool padic_safe) {
    std::vector<StepTerm> terms;
    long nterms = rng.range(1, 3);
    for (long i = 0; i < nterms; ++i) {
        long level = rng.range(-1, 2);
        KElem rep = random_kelem(F, rng, -2, level);
        terms.push_back({rep, level, random_coeff(F, rng, padic_safe)});
    }
    return StepFn::from_terms(F, terms);
}

StepFn random_admissible(const Field& F, Rng& rng) {
    // support in K^x with zero integral
    std::vector<StepTerm> terms;
    long nterms = rng.range(1, 3);
    for (long i = 0; i < nterms; ++i) {
        long v = rng.range(-2, 1);
        long level = v + rng.range(1, 2);
        KElem rep = KElem::pi_pow(F, v, rng.range(1, F.ell - 1)) +
                    random_kelem(F, rng, v + 1, level);
        terms.push_back({rep, level, random_coeff(F, rng, false)});
    }
    StepFn f = StepFn::from_terms(F, terms);
    Cyc total = haar_integral(f);
    if (!total.is_zero()) {
        // subtract a multiple of 1_{1 + l} (inside K^x)
        Cyc corr = total * Cyc::q_half_pow(F, 2 + F.delta);
        f = f - StepFn::indicator(F, KElem::one(F), 1, corr);
    }
    return f;
}

Cyc oracle_fourier_at(const StepFn& f, const KElem& y, FourierOpts opts) {
    // direct Riemann sum: refine every coset until the kernel is constant
    const Field& F = *f.field();
    Cyc acc = Cyc::zero(F);
    for (const auto& t : f.terms()) {
        long L = t.level;
        if (!y.is_zero()) L = std::max(L, -y.val() - F.delta);
        Cyc mass = coset_measure(F, L);
        for (const auto& z : enumerate_digit_range(F, t.level, L)) {
            KElem x0 = t.rep + z;
            KElem arg = x0 * y;
            if (opts.sign < 0) arg = -arg;
            acc += t.coeff * mass * add_char(arg, opts.twist);
        }
    }
    return acc;
}

SuiteResult suite_basic(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1009 + 1);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 50;
    Checker ck("basic-transforms", cfg);

    // fourier(1_{o_K}) = q^{-delta/2} 1_{d^{-1}}
    StepFn one_o = StepFn::indicator(F, KElem::zero(F), 0);
    StepFn expected =
        StepFn::indicator(F, KElem::zero(F), -F.delta, Cyc::q_half_pow(F, -F.delta));
    ck.check(fourier(one_o) == expected, "fourier(1_o) != q^{-d/2} 1_{d^{-1}}");
    ck.check(fourier(StepFn(F)) == StepFn(F), "fourier(0) != 0");

    for (long i = 0; i < cases; ++i) {
        long N = rng.range(-1, 2);
        KElem a = random_kelem(F, rng, -2, N);
        StepFn f = StepFn::indicator(F, a, N);
        StepFn fhat = fourier(f);
        // against the closed form zeta^{tr(a y)} q^{-N - delta/2} on l^{-N} d^{-1}
        bool ok = true;
        Cyc mass = coset_measure(F, N);
        for (long s = 0; s < 6 && ok; ++s) {
            KElem y = random_kelem(F, rng, -N - F.delta - 1, 2);
            Cyc got = fhat.evaluate(y);
            Cyc want = (y.val() >= -N - F.delta || y.is_zero()) ? add_char(a * y) * mass
                                                                : Cyc::zero(F);
            if (!(got == want)) ok = false;
            if (!(got == oracle_fourier_at(f, y))) ok = false;
        }
        ck.check(ok, "basic transform mismatch at case " + std::to_string(i));
    }
    return ck.done();
}

SuiteResult suite_inversion(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1013 + 2);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 100;
    Checker ck("fourier-inversion", cfg);
    for (long i = 0; i < cases; ++i) {
        StepFn f = random_step(F, rng);
        StepFn back = fourier(fourier(f), FourierOpts{-1, 1});
        ck.check(back == f, "inversion failed at case " + std::to_string(i));
    }
    return ck.done();
}

SuiteResult suite_classic(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1019 + 3);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 50;
    Checker ck("classic-identities", cfg);
    for (long i = 0; i < cases; ++i) {
        StepFn f = random_step(F, rng);
        StepFn fhat = fourier(f);

        // i) translation: (f(. - h))^ = fhat(y) zeta^{tr(h y)}
        KElem h = random_kelem(F, rng, -2, 2);
        StepFn lhs = fourier(f.translate(h));
        StepFn rhs(F);
        for (const auto& t : fhat.terms())
            rhs = rhs + char_on_coset(F, h, t.rep, t.level).scale(t.coeff);
        ck.check(lhs == rhs, "translation law at case " + std::to_string(i));

        // ii) dilation: with g = f(lambda .), ghat(lambda z) = chi_Harr(lambda)^{-1} fhat(z)
        long m = rng.range(-2, 2);
        KElem u = KElem::one(F) + random_kelem(F, rng, 1, 3);
        KElem lam = u.shift(m);
        StepFn lhs2 = fourier(f.dilate(lam)).dilate(lam);
        StepFn rhs2 = fhat.scale(q_pow_cyc(F, m));
        ck.check(lhs2 == rhs2, "dilation law at case " + std::to_string(i));

        // iv) Poisson summation
        KElem t = random_kelem(F, rng, -2, 2);
        ck.check(poisson_check(f, t).equal, "Poisson at case " + std::to_string(i));
    }
    return ck.done();
}

SuiteResult suite_duality(const SessionConfig& cfg) {
    Field F = make_field(cfg);
    Checker ck("duality-lab", cfg);
    for (long r = 0; r <= 4; ++r) {
        for (long N = -r; N <= 4 - r; ++N) {
            double size = 1;
            for (long i = 0; i < N + r; ++i) size *= F.ell;
            if (size > 81) continue;
            ck.check(verify_perfect(F, r, N),
                     "pairing not perfect at r=" + std::to_string(r) + ",N=" + std::to_string(N));
            GrouplikeReport rep = classify_grouplikes(F, r, N);
            ck.check(rep.grouplike_count == rep.group_size,
                     "grouplike count mismatch at r=" + std::to_string(r));
            ck.check(rep.comult_check, "comultiplication check failed");
            ck.check(rep.every_hom_is_xb, "a grouplike is not an x_b");
            ck.check(verify_level_compat(F, r, N),
                     "level compatibility failed at r=" + std::to_string(r) +
                         ",N=" + std::to_string(N));
        }
    }
    // x_b x_c = x_{b+c} and the idempotent algebra, spot checks
    Rng rng(cfg.seed * 1021 + 4);
    for (long i = 0; i < 10; ++i) {
        long r = rng.range(0, 1), N = rng.range(1, 2);
        auto duals = dual_cosets(F, r, N);
        const KElem& b = duals[static_cast<size_t>(rng.range(0, static_cast<long>(duals.size()) - 1))];
        const KElem& c = duals[static_cast<size_t>(rng.range(0, static_cast<long>(duals.size()) - 1))];
        GroupAlgebraElem xb = make_xb(F, r, N, b), xc = make_xb(F, r, N, c);
        GroupAlgebraElem prod = algebra_mul(xb, xc);
        GroupAlgebraElem want = make_xb(F, r, N, b + c);
        ck.check(prod.coeff == want.coeff, "x_b x_c != x_{b+c}");
    }
    return ck.done();
}

namespace {

// frozen golden-table entry for Z(h_n, chi~ chi_lambda); lambda formal
RatFunc table_z_h(const Field& F, long n, long chi_level, const Cyc& gauss) {
    Laurent z(F);
    if (n <= 1) {
        if (chi_level == 0) {
            Cyc c = Cyc::q_half_pow(F, -F.delta - 4);
            z = mono(F, c, 0) - mono(F, c, 1);
        } else if (chi_level == 1) {
            Cyc c = Cyc::q_half_pow(F, -F.delta - 2);
            z = mono(F, c, 0) - mono(F, c.scale(mpq_class(1, F.q)), 1);
        }
    } else {
        if (chi_level == n) z = mono(F, Cyc::q_half_pow(F, -F.delta - 2 * n), 0);
    }
    return RatFunc(z);
}

// frozen golden-table entry for Z(h_n^, chi~ chi_lambda)
RatFunc table_z_hhat(const Field& F, long n, long chi_level, const Cyc& gauss) {
    Laurent z(F);
    if (n <= 1) {
        if (chi_level == 0) {
            Cyc c = Cyc(F, mpq_class(-1, F.q));
            z = mono(F, c, -F.delta - 1) - mono(F, c, -F.delta - 2);
        } else if (chi_level == 1) {
            Cyc c = gauss.scale(mpq_class(1, F.q));
            z = mono(F, c, -F.delta - 1) - mono(F, c, -F.delta - 2);
        }
    } else {
        if (chi_level == n) z = mono(F, gauss.scale(pow_q(F.q, -n)), -F.delta - n);
    }
    return RatFunc(z);
}

}  // namespace

SuiteResult suite_tables(const SessionConfig& cfg) {
    Field F = make_field(cfg);
    Checker ck("golden-tables", cfg);
    for (long n = 0; n <= 3; ++n) {
        StepFn h = family_h(F, n);
        StepFn hhat = fourier(h);
        ck.check(hhat == family_h_hat(F, n),
                 "fourier(h_" + std::to_string(n) + ") != closed form");
        for (long lev = 0; lev <= 3; ++lev) {
            for (const auto& chit : Character::all_of_level(F, lev)) {
                Cyc g = lev >= 1 ? gauss_sum(chit) : Cyc::zero(F);
                RatFunc zh = zeta_integral(h, chit).value;
                RatFunc zhh = zeta_integral(hhat, chit).value;
                bool ok1 = zh.eq(table_z_h(F, n, lev, g));
                bool ok2 = zhh.eq(table_z_hhat(F, n, lev, g));
                ck.check(ok1, "Z(h_" + std::to_string(n) + ", level " + std::to_string(lev) +
                                  ") off table");
                ck.check(ok2, "Z(h^_" + std::to_string(n) + ", level " + std::to_string(lev) +
                                  ") off table");
            }
        }
    }
    return ck.done();
}

SuiteResult suite_rho(const SessionConfig& cfg) {
    Field F = make_field(cfg);
    Checker ck("rho-coherence", cfg);
    for (long lev = 0; lev <= 2; ++lev) {
        for (const auto& chit : Character::all_of_level(F, lev)) {
            RatFunc closed = rho_closed(chit);
            RatFunc from_h = rho_from_h(chit);
            ck.check(closed.eq(from_h), "rho_from_h != rho_closed at level " + std::to_string(lev));
        }
    }
    // Appendix specialization over Q_ell (delta = 0): (1 - 1/lambda)/(1 - lambda/q)
    if (F.delta == 0) {
        Laurent num = mono(F, Cyc::one(F), 0) - mono(F, Cyc::one(F), -1);
        Laurent den = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, mpq_class(1, F.q)), 1);
        ck.check(rho_closed(Character::unramified(F)).eq(RatFunc(num, den)),
                 "unramified rho != (1 - 1/lambda)/(1 - lambda/q)");
    }
    // cross-normalization at lambda = q^{-n}:
    // (q^delta)^{(n+1)-1/2} (1 - q^n) / (1 - q^{-(n+1)})
    RatFunc rho0 = rho_closed(Character::unramified(F));
    for (long n = 0; n <= 2; ++n) {
        Cyc got = rho0.eval(q_pow_cyc(F, -n));
        Cyc expect = Cyc::q_half_pow(F, F.delta * (2 * n + 1));
        mpq_class ratio = (1 - pow_q(F.q, n)) / (1 - pow_q(F.q, -(n + 1)));
        expect = expect.scale(ratio);
        ck.check(got == expect, "rho(q^{-" + std::to_string(n) + "}) cross-normalization");
    }
    return ck.done();
}

SuiteResult suite_fe(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1031 + 5);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 50;
    Checker ck("functional-equation", cfg);
    for (long lev = 0; lev <= 2; ++lev) {
        auto chars = Character::all_of_level(F, lev);
        if (chars.empty()) continue;
        for (long i = 0; i < cases; ++i) {
            StepFn f = random_admissible(F, rng);
            StepFn g = random_admissible(F, rng);
            const Character& chit = chars[static_cast<size_t>(
                rng.range(0, static_cast<long>(chars.size()) - 1))];
            bool ok = verify_fe(f, g, chit);
            ck.check(ok, "FE failed at level " + std::to_string(lev) + " case " +
                             std::to_string(i));
        }
    }
    return ck.done();
}

SuiteResult suite_family(const SessionConfig& cfg) {
    Field F = make_field(cfg);
    Checker ck("shell-families", cfg);
    RatFunc common_ratio = RatFunc::one(F);
    bool first = true;
    for (long av : {5L, 10L, 25L}) {
        mpq_class alpha(av);
        // fourier_shell(g_alpha) against the closed form
        {
            ShellFn got = fourier_shell(family_g_alpha(F, alpha));
            mpq_class pref = mpq_class(1) / (1 - alpha / F.q);
            Cyc factor = Cyc::q_half_pow(F, -F.delta).scale(pref);
            StepFn step = StepFn::indicator(F, KElem::zero(F), -F.delta,
                                            factor.scale(mpq_class(F.q - 1, F.q)));
            std::vector<GeoTail> tails{
                {false, 1 + F.delta, alpha / F.q, -factor.scale((1 - alpha) / F.q)}};
            ck.check(got == ShellFn(step, tails), "fourier(g_alpha) closed form, alpha=" +
                                                      std::to_string(av));
        }
        // fourier_shell(g^beta) against the closed form
        {
            mpq_class beta = alpha;
            ShellFn got = fourier_shell(family_g_beta_up(F, beta));
            mpq_class pref = mpq_class(1) / (1 - beta * F.q);
            Cyc factor = Cyc::q_half_pow(F, F.delta).scale(pref);
            StepFn step =
                StepFn::indicator(F, KElem::zero(F), 0, factor.scale(mpq_class(F.q - 1)));
            std::vector<GeoTail> tails{{true, 0, beta * F.q, -factor.scale((1 - beta) * F.q)}};
            ck.check(got == ShellFn(step, tails),
                     "fourier(g^beta) closed form, beta=" + std::to_string(av));
        }
        // Z(G[alpha], chi_lambda) and the transform side
        ShellFn G = family_G_bracket(F, alpha);
        Character chi = Character::unramified(F);
        RatFunc zg = zeta_shell(G, chi).value;
        // q^{-delta/2} (1 - 1/q) [ 1/(1-alpha lambda) - lambda^{-1-delta}/(1-alpha/lambda) ]
        {
            Cyc c = Cyc::q_half_pow(F, -F.delta).scale(mpq_class(F.q - 1, F.q));
            Laurent d1 = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, alpha), 1);
            Laurent n2 = mono(F, Cyc::one(F), -1 - F.delta);
            Laurent d2 = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, alpha), -1);
            RatFunc expect = RatFunc(Laurent::one(F), d1) - RatFunc(n2, d2);
            expect = expect.scale(c);
            ck.check(zg.eq(expect), "Z(G[alpha]) closed form, alpha=" + std::to_string(av));
        }
        ShellFn Gh = fourier_shell(G);
        RatFunc zgh = zeta_shell(Gh, chi.dual()).value;
        {
            // (lambda/q)^delta (1 - 1/q) (1 - lambda/q)/(1 - 1/lambda) * [bracket]
            Cyc c = q_pow_cyc(F, -F.delta).scale(mpq_class(F.q - 1, F.q));
            Laurent pre = mono(F, c, F.delta);
            Laurent noml = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, mpq_class(1, F.q)), 1);
            Laurent denl = mono(F, Cyc::one(F), 0) - mono(F, Cyc::one(F), -1);
            Laurent d1 = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, alpha), 1);
            Laurent n2 = mono(F, Cyc::one(F), -1 - F.delta);
            Laurent d2 = mono(F, Cyc::one(F), 0) - mono(F, Cyc(F, alpha), -1);
            RatFunc bracket = RatFunc(Laurent::one(F), d1) - RatFunc(n2, d2);
            RatFunc expect = RatFunc(pre * noml, denl) * bracket;
            ck.check(zgh.eq(expect), "Z(G[alpha]^) closed form, alpha=" + std::to_string(av));
        }
        // alpha-independence of the ratio
        RatFunc ratio = zg / zgh;
        if (first) {
            common_ratio = ratio;
            first = false;
            ck.check(ratio.eq(rho_closed(Character::unramified(F))),
                     "G[alpha] ratio != unramified rho");
        } else {
            ck.check(ratio.eq(common_ratio), "ratio depends on alpha at " + std::to_string(av));
        }
        // vanishing for ramified chi~
        for (const auto& chit : Character::all_of_level(F, 1)) {
            ck.check(zeta_shell(G, chit).value.is_zero(), "Z(G[alpha], ramified) != 0");
            break;
        }
        // truncation-consistency degree bound
        for (long T : {3L, 7L}) {
            ShellFn ga = family_g_alpha(F, alpha);
            RatFunc diff = zeta_shell(ga, chi).value -
                           zeta_integral(ga.truncate(T), chi).value;
            if (diff.is_zero()) {
                ck.check(false, "truncation difference vanished unexpectedly");
            } else {
                long mindeg = diff.num().min_deg() - diff.den().min_deg();
                ck.check(mindeg >= T + 1, "truncation degree bound at T=" + std::to_string(T));
            }
        }
    }
    return ck.done();
}

SuiteResult suite_gauss(const SessionConfig& cfg) {
    Field F = make_field(cfg);
    Checker ck("gauss-sums", cfg);
    // quadratic Gauss sum over Q_3 squares to -3
    if (F.ell == 3 && F.e == 1) {
        auto quads = Character::all_of_level(F, 1);
        ck.check(quads.size() == 1, "expected exactly one level-1 character over Q_3");
        for (const auto& chi : quads) {
            Cyc g = gauss_sum(chi);
            ck.check(g * g == Cyc(F, -3), "quadratic Gauss sum squared != -3");
            Cyc z1 = Cyc::root(F, 1, 3);
            bool matches = (g == z1 - z1 * z1) || (g == z1 * z1 - z1);
            ck.check(matches, "quadratic Gauss sum is not +-(zeta - zeta^2)");
        }
    }
    // nonvanishing for every ramified character of level <= 3
    for (long lev = 1; lev <= 3; ++lev)
        for (const auto& chit : Character::all_of_level(F, lev))
            ck.check(!gauss_sum(chit).is_zero(), "vanishing Gauss sum at level " +
                                                     std::to_string(lev));
    // zeta-dependence: rho_{zeta^t} = chi(t) rho_zeta for t = 1 + ell
    long t = 1 + F.ell;
    for (long lev = 1; lev <= 2; ++lev) {
        for (const auto& chit : Character::all_of_level(F, lev)) {
            Cyc chi_t = chit.eval_unit(KElem(F, t));
            RatFunc lhs = rho_from_h(chit, t);
            RatFunc rhs = rho_from_h(chit).scale(chi_t);
            ck.check(lhs.eq(rhs), "zeta-dependence law at level " + std::to_string(lev));
            ck.check(lhs.eq(rho_closed(chit, t)), "twisted rho_closed mismatch");
        }
    }
    // unramified rho has no zeta-dependence
    ck.check(rho_from_h(Character::unramified(F), t)
                 .eq(rho_from_h(Character::unramified(F))),
             "unramified rho depends on zeta");
    return ck.done();
}

SuiteResult suite_padic(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1033 + 6);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 200;
    Checker ck("padic-layer", cfg);
    PadicContext ctx(F, cfg.embed_level, cfg.precision);

    // the session's additive character is Teichmueller-compatible
    {
        WElt img = embed(ctx, add_char(KElem::pi_pow(F, -F.e)));  // zeta^{tr(1/ell)}
        WElt expect = ctx.tau_pow(ctx.m_star() / F.ell);
        ck.check(img == expect, "embedded zeta_1 is not the Teichmueller root");
        WElt s2 = ctx.w_mul(ctx.sqrtq_image(), ctx.sqrtq_image());
        WElt qw = ctx.w_zero();
        qw[0] = F.q;
        ck.check(s2 == qw, "sqrt(q) image squared != q");
    }

    auto random_embeddable = [&](Rng& r) {
        Cyc c(F, mpq_class(r.range(-9, 9), 1 + 2 * r.range(0, 1)));
        long long o = 1;
        for (long i = 0, lim = r.range(0, 3); i < lim; ++i) o *= F.ell;
        if (F.ell > 2 && r.flip()) o *= (F.ell - 1);
        if (o > 1) c = c * Cyc::root(F, r.range(0, static_cast<long>(o - 1)), o);
        if (r.range(0, 4) == 0) c = c * Cyc::sqrtq(F);
        return c;
    };

    for (long i = 0; i < cases; ++i) {
        Cyc x = random_embeddable(rng), y = random_embeddable(rng);
        WElt ex = embed(ctx, x), ey = embed(ctx, y);
        bool ok = embed(ctx, x + y) == ctx.w_add(ex, ey) &&
                  embed(ctx, x * y) == ctx.w_mul(ex, ey);
        ck.check(ok, "embed is not a ring hom at case " + std::to_string(i));
    }

    long um_cases = cases / 2;
    for (long i = 0; i < um_cases; ++i) {
        StepFn f = random_step(F, rng, true);
        ck.check(check_ultrametric(ctx, f), "ultrametric inequality at case " + std::to_string(i));
    }
    return ck.done();
}

SuiteResult suite_rl(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1039 + 7);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 50;
    Checker ck("riemann-lebesgue", cfg);
    for (long i = 0; i < cases; ++i) {
        StepFn f = random_admissible(F, rng);
        RlWitness w = check_riemann_lebesgue(f);
        bool ok = w.integral_zero && w.vanish_level.has_value();
        if (ok && !f.is_zero()) {
            StepFn fhat = fourier(f);
            // spot-check the witnesses: vanishing near 0 and beyond the support bound
            KElem deep = KElem::pi_pow(F, *w.vanish_level - F.delta);
            KElem far = KElem::pi_pow(F, w.support_bound - 1);
            ok = fhat.evaluate(deep).is_zero() && fhat.evaluate(KElem::zero(F)).is_zero() &&
                 fhat.evaluate(far).is_zero();
        }
        ck.check(ok, "RL witness failed at case " + std::to_string(i));
        // a function with nonzero integral keeps the support bound but not the
        // vanishing level
        StepFn g = f + StepFn::indicator(F, KElem::one(F), 1);
        RlWitness wg = riemann_lebesgue_witness(g);
        ck.check(!wg.integral_zero && wg.support_bound > -kValInf,
                 "nonzero-integral witness at case " + std::to_string(i));
    }
    return ck.done();
}

SuiteResult suite_continuation(const SessionConfig& cfg, long cases) {
    Field F = make_field(cfg);
    Rng rng(cfg.seed * 1049 + 8);
    if (cases == 0) cases = cfg.cases ? cfg.cases : 20;
    Checker ck("continuation", cfg);
    Character chi0 = Character::unramified(F);
    for (long i = 0; i < cases; ++i) {
        StepFn f = random_admissible(F, rng);
        Continuation cont = continue_zeta(f, chi0);
        RatFunc direct = zeta_integral(f, chi0).value;
        for (const mpq_class lam : {mpq_class(1 + F.p), mpq_class(1, 1 + F.p)}) {
            Cyc at(F, lam);
            bool ok;
            try {
                ok = cont.value.value.eval(at) == direct.eval(at);
            } catch (const Error&) {
                ok = false;
            }
            ck.check(ok, "continuation mismatch at case " + std::to_string(i));
        }
        bool poles_ok = cont.rho_poles.size() == 1 && cont.rho_poles[0] == q_pow_cyc(F, 1) &&
                        cont.rho_zeros.size() == 1 && cont.rho_zeros[0] == Cyc::one(F);
        ck.check(poles_ok, "rho pole/zero report at case " + std::to_string(i));
    }
    // shell-side cross-check: continuation of G[alpha] equals the direct value
    ShellFn G = family_G_bracket(F, mpq_class(F.p));
    Continuation cont = continue_zeta(G, chi0);
    ck.check(cont.value.value.eq(zeta_shell(G, chi0).value),
             "continue_zeta(G[alpha]) != Z(G[alpha])");
    return ck.done();
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "basic",  "inversion", "poisson", "duality", "tables",       "rho",
        "fe",     "family",    "gauss",   "padic",   "rl",           "continuation"};
    return names;
}

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const std::vector<SessionConfig>& configs) {
    std::vector<SuiteResult> out;
    auto run_one = [&](const std::string& n, const SessionConfig& cfg) {
        if (n == "basic") out.push_back(suite_basic(cfg));
        else if (n == "inversion") out.push_back(suite_inversion(cfg));
        else if (n == "poisson") out.push_back(suite_classic(cfg));
        else if (n == "duality") out.push_back(suite_duality(cfg));
        else if (n == "tables") out.push_back(suite_tables(cfg));
        else if (n == "rho") out.push_back(suite_rho(cfg));
        else if (n == "fe") out.push_back(suite_fe(cfg));
        else if (n == "family") out.push_back(suite_family(cfg));
        else if (n == "gauss") out.push_back(suite_gauss(cfg));
        else if (n == "padic") out.push_back(suite_padic(cfg));
        else if (n == "rl") out.push_back(suite_rl(cfg));
        else if (n == "continuation") out.push_back(suite_continuation(cfg));
        else fail(Errc::BadParameter, "unknown suite: " + n);
    };
    for (const auto& cfg : configs) {
        if (name == "all") {
            for (const auto& n : suite_names()) run_one(n, cfg);
        } else {
            run_one(name, cfg);
        }
    }
    return out;
}

}  // namespace ellf
