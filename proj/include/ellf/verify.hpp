#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ellf/character.hpp"
#include "ellf/fourier.hpp"
#include "ellf/padic.hpp"
#include "ellf/zeta.hpp"

namespace ellf {

struct SessionConfig {
    long ell = 3;
    long e = 1;
    long p = 5;
    long nroot = 10;
    long long conductor = 0;  // 0 = ell^nroot * (ell - 1)
    long precision = 40;
    long embed_level = 4;     // ell-power level of the embedding conductor
    long long enum_cap = 1000000;
    std::uint64_t seed = 7;
    long cases = 0;  // 0 = suite default

    std::string name() const;
};

Field make_field(const SessionConfig& cfg);

// the three baked-in reference configurations, all with p = 5
std::vector<SessionConfig> reference_configs();

struct SuiteResult {
    std::string name;
    std::string config;
    long cases = 0;
    long failures = 0;
    std::string first_failure;
    double seconds = 0;
    bool pass() const { return failures == 0; }
    std::string line() const;
};

// deterministic random data
KElem random_kelem(const Field& F, Rng& rng, long min_pos, long max_pos);
Cyc random_coeff(const Field& F, Rng& rng, bool padic_safe);
StepFn random_step(const Field& F, Rng& rng, bool padic_safe = false);
// support in K^x, zero Haar integral
StepFn random_admissible(const Field& F, Rng& rng);

// independent Riemann-sum oracle for the transform at a point
Cyc oracle_fourier_at(const StepFn& f, const KElem& y, FourierOpts opts = {});

// suites (cases = 0 picks the per-suite default)
SuiteResult suite_basic(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_inversion(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_classic(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_duality(const SessionConfig& cfg);
SuiteResult suite_tables(const SessionConfig& cfg);
SuiteResult suite_rho(const SessionConfig& cfg);
SuiteResult suite_fe(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_family(const SessionConfig& cfg);
SuiteResult suite_gauss(const SessionConfig& cfg);
SuiteResult suite_padic(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_rl(const SessionConfig& cfg, long cases = 0);
SuiteResult suite_continuation(const SessionConfig& cfg, long cases = 0);

// run a named suite ("all" chains every suite) across the given configs
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const std::vector<SessionConfig>& configs);
const std::vector<std::string>& suite_names();

}  // namespace ellf
