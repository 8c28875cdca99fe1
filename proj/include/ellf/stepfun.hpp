#pragma once

#include <optional>
#include <vector>

#include "ellf/kelement.hpp"

namespace ellf {

// coeff * indicator of rep + l^level
struct StepTerm {
    KElem rep;
    long level = 0;
    Cyc coeff;
};

// Schwartz-Bruhat step function: finite combination of coset indicators.
// Canonical form: cosets pairwise disjoint, maximally merged, reps reduced
// mod l^level, no zero coefficients, terms sorted.
class StepFn {
  public:
    StepFn() = default;
    explicit StepFn(const Field& F) : F_(&F) {}

    static StepFn indicator(const Field& F, const KElem& rep, long level, const Cyc& coeff);
    static StepFn indicator(const Field& F, const KElem& rep, long level);
    // indicator of the shell pi^n o^x (units sphere at valuation n)
    static StepFn shell(const Field& F, long n, const Cyc& coeff);
    static StepFn from_terms(const Field& F, std::vector<StepTerm> terms);

    const Field* field() const { return F_; }
    const std::vector<StepTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Cyc evaluate(const KElem& x) const;

    StepFn operator+(const StepFn& o) const;
    StepFn operator-(const StepFn& o) const;
    StepFn scale(const Cyc& s) const;
    StepFn mul(const StepFn& o) const;  // pointwise product
    bool operator==(const StepFn& o) const { return (*this - o).is_zero(); }
    bool operator!=(const StepFn& o) const { return !(*this == o); }

    StepFn translate(const KElem& h) const;       // x -> f(x - h)
    StepFn dilate(const KElem& lambda) const;     // x -> f(lambda x)
    StepFn restrict_to(const KElem& rep, long level) const;

    // valuation floor of the support: support inside l^m; kValInf when zero
    long support_val_floor() const;
    // true if no coset contains 0
    bool support_in_units() const;

  private:
    const Field* F_ = nullptr;
    std::vector<StepTerm> terms_;

    void insert(const KElem& rep, long level, const Cyc& coeff);
    void merge_and_sort();
    friend StepFn canonicalize(const Field& F, const std::vector<StepTerm>& raw);
};

// public entry for building from arbitrary (possibly overlapping) terms
StepFn canonicalize(const Field& F, const std::vector<StepTerm>& raw);

// Geometric tail: coeff * sum_{k >= 0} ratio^k * 1_{pi^{s(start+k)} o^x},
// s = +1 toward zero, s = -1 toward infinity.
struct GeoTail {
    bool toward_zero = true;
    long start = 0;
    mpq_class ratio;  // p-adic absolute value < 1, nonzero
    Cyc coeff;
};

// Step part plus geometric shell tails; the value of the function is the sum
// of the step value and all tail contributions (supports may overlap).
class ShellFn {
  public:
    ShellFn() = default;
    explicit ShellFn(const Field& F) : F_(&F), step_(F) {}
    ShellFn(StepFn step, std::vector<GeoTail> tails);
    explicit ShellFn(StepFn step);

    const Field* field() const { return F_; }
    const StepFn& step() const { return step_; }
    const std::vector<GeoTail>& tails() const { return tails_; }
    bool is_zero() const;

    Cyc evaluate(const KElem& x) const;

    ShellFn operator+(const ShellFn& o) const;
    ShellFn operator-(const ShellFn& o) const;
    ShellFn scale(const Cyc& s) const;
    bool operator==(const ShellFn& o) const;
    bool operator!=(const ShellFn& o) const { return !(*this == o); }

    ShellFn translate(const KElem& h) const;
    ShellFn dilate(const KElem& lambda) const;

    // first T+1 shells of every tail expanded into explicit cosets
    StepFn truncate(long T) const;

  private:
    const Field* F_ = nullptr;
    StepFn step_;
    std::vector<GeoTail> tails_;

    // common-start merge of same-(direction, ratio) tails; prefixes move into
    // the step part; zero tails drop
    void normalize();
};

}  // namespace ellf
