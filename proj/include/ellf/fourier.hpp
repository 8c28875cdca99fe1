#pragma once

#include <optional>

#include "ellf/stepfun.hpp"

namespace ellf {

// sign selects zeta^{tr} (+1) vs zeta^{-tr} (-1); twist replaces the
// generative zeta by zeta^twist (twist prime to ell).
struct FourierOpts {
    int sign = +1;
    long twist = 1;
    FourierOpts inverse() const { return {-sign, twist}; }
};

// mass of the coset a + l^level: q^{-level - delta/2}
Cyc coset_measure(const Field& F, long level);

Cyc haar_integral(const StepFn& f);
Cyc haar_integral_shell(const ShellFn& f);

// y -> zeta^{sign*tr(t*y)} on the coset rep + l^level, expanded as an
// explicit step function (constant on cosets of the minimal exact level)
StepFn char_on_coset(const Field& F, const KElem& t, const KElem& rep, long level,
                     FourierOpts opts = {});

StepFn fourier(const StepFn& f, FourierOpts opts = {});
ShellFn fourier_shell(const ShellFn& f, FourierOpts opts = {});

struct PoissonResult {
    Cyc lhs, rhs;
    bool equal = false;
};
// both sides of int_{o_K} f(x+t) dx = q^{-delta/2} int_{d^{-1}} fhat(y) zeta^{-tr(ty)} dy
PoissonResult poisson_check(const StepFn& f, const KElem& t, FourierOpts opts = {});

// Psi(f,g)(y) = int f(x) ghat(xy) dx ; Cartier pairing <f,g> = Psi(f,g)(1)
Cyc psi(const StepFn& f, const StepFn& g, const KElem& y, FourierOpts opts = {});
Cyc cartier_pair(const StepFn& f, const StepFn& g, FourierOpts opts = {});

struct RlWitness {
    long support_bound;               // fhat vanishes below this valuation
    std::optional<long> vanish_level; // m with fhat = 0 on l^m d^{-1}, when integral is 0
    bool integral_zero;
};
RlWitness riemann_lebesgue_witness(const StepFn& f, FourierOpts opts = {});

}  // namespace ellf
