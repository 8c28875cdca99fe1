#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellf/character.hpp"
#include "ellf/fourier.hpp"
#include "ellf/laurent.hpp"
#include "ellf/stepfun.hpp"

namespace ellf {

// Exponent interval for p-adic moduli: |lambda|_p = p^t with t between the
// bounds; nullopt = unbounded on that side.
struct ExpInterval {
    std::optional<long> lo, hi;
    bool lo_open = true, hi_open = true;

    bool contains_exp(long t) const {
        if (lo && (lo_open ? t <= *lo : t < *lo)) return false;
        if (hi && (hi_open ? t >= *hi : t > *hi)) return false;
        return true;
    }
    std::string str() const;
};

// Schwartz classes of a shell function: class c = p^t for every t strictly
// inside the interval (step-only functions supported in K^x give (0, inf)
// in modulus, i.e. all exponents).
ExpInterval schwartz_interval(const ShellFn& f);

struct ZetaValue {
    RatFunc value;
    ExpInterval domain;  // convergence annulus of the defining series
};

// Z(f, chi~ chi_lambda) as a Laurent polynomial in lambda (exact); the
// character's lambda must be formal (Formal or FormalDual).
ZetaValue zeta_integral(const StepFn& f, const Character& chi);
ZetaValue zeta_shell(const ShellFn& f, const Character& chi);

// the paper's named families
ShellFn family_g_alpha(const Field& F, const mpq_class& alpha);
ShellFn family_g_beta_up(const Field& F, const mpq_class& beta);
ShellFn family_G_alpha_beta(const Field& F, const mpq_class& alpha, const mpq_class& beta);
ShellFn family_G_bracket(const Field& F, const mpq_class& alpha);
StepFn family_h(const Field& F, long n);
StepFn family_h_hat(const Field& F, long n);  // closed-form transform of h_n

// G(chi) = sum over units mod 1 + pi^n of zeta^{tr(a / pi^{delta + n})} chi(a)
Cyc gauss_sum(const Character& chi, long twist = 1);

// closed-form rho factor for the class of chi~ (level n):
//   n = 0: q^{delta/2} lambda^{-delta} (1 - 1/lambda) / (1 - lambda/q)
//   n >= 1: q^{delta/2 + n} lambda^{-delta - n} / G(chi~^{-1})
RatFunc rho_closed(const Character& chi_tilde, long twist = 1);
// the same factor computed as Z(h_n, chi) / Z(h_n^, chi*)
RatFunc rho_from_h(const Character& chi_tilde, long twist = 1);

// Z(f,chi) Z(g^,chi*) == Z(f^,chi*) Z(g,chi); throws PreconditionViolated
// unless f, g are supported in K^x with zero integral
bool verify_fe(const StepFn& f, const StepFn& g, const Character& chi_tilde);

struct Continuation {
    ZetaValue value;             // rho(chi) * Z(f^, chi*)
    std::vector<Cyc> rho_poles;  // lambda-locations of poles of the rho factor
    std::vector<Cyc> rho_zeros;
};
Continuation continue_zeta(const StepFn& f, const Character& chi_tilde);
Continuation continue_zeta(const ShellFn& f, const Character& chi_tilde);

}  // namespace ellf
