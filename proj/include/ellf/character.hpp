#pragma once

#include <map>
#include <memory>
#include <vector>

#include "ellf/kelement.hpp"
#include "ellf/laurent.hpp"

namespace ellf {

// (o_K / pi^n)^x with multiplication tables and a basis decomposition into
// independent cyclic generators.
class UnitGroup {
  public:
    UnitGroup(const Field& F, long n);

    const Field& field() const { return *F_; }
    long modulus_level() const { return n_; }
    const std::vector<KElem>& reps() const { return reps_; }
    // independent generators with their orders; every unit is uniquely
    // prod gens[i]^{a_i} with 0 <= a_i < orders[i]
    const std::vector<KElem>& gens() const { return gens_; }
    const std::vector<long>& orders() const { return orders_; }
    const std::vector<long>& exponents(const KElem& u) const;

    KElem mul(const KElem& a, const KElem& b) const;

  private:
    const Field* F_;
    long n_;
    std::vector<KElem> reps_;
    std::vector<KElem> gens_;
    std::vector<long> orders_;
    std::map<KElem, std::vector<long>> normal_form_;
};

std::shared_ptr<const UnitGroup> unit_group(const Field& F, long n);

enum class LambdaKind { Formal, FormalDual, Concrete };

// Multiplicative character chi = chi~ * chi_lambda of K^x: a unit-part value
// table at the (minimal) level plus the lambda parameter, which may stay
// formal.
class Character {
  public:
    // trivial unit part (unramified chi~) with formal lambda
    static Character unramified(const Field& F);
    // chi_Harr: unramified with lambda = 1/q
    static Character haar(const Field& F);
    // unit part from images of generators of (o/pi^level)^x; level minimized
    static Character make(const Field& F, long level,
                          const std::vector<std::pair<KElem, Cyc>>& generator_images);
    // all characters of minimal level exactly `level`, deterministic order
    static std::vector<Character> all_of_level(const Field& F, long level);

    const Field* field() const { return F_; }
    long level() const { return level_; }
    bool ramified() const { return level_ >= 1; }
    LambdaKind lambda_kind() const { return lk_; }
    const Cyc& lambda_value() const;  // FormalLambda error when formal

    Character with_lambda(const Cyc& lambda0) const;
    Character with_formal_lambda() const;

    // (chi * chi_Harr)^{-1}: unit part inverted, lambda -> q / lambda
    Character dual() const;
    // unit part inverted only
    Character unit_inverse() const;

    // chi~(u) for a unit u (depends only on u mod pi^level)
    Cyc eval_unit(const KElem& u) const;
    // chi(x) as a Laurent monomial in lambda (kind Formal or FormalDual)
    Laurent eval_formal(const KElem& x) const;
    // chi(x) as a scalar (kind Concrete)
    Cyc eval_concrete(const KElem& x) const;

    // exponent of the modulus: |chi(pi)|_p = p^{-vp(lambda)}; Concrete only
    long modulus_vp() const;

    const std::map<KElem, Cyc>& table() const { return table_; }

    bool operator==(const Character& o) const;

  private:
    const Field* F_ = nullptr;
    long level_ = 0;
    std::map<KElem, Cyc> table_;  // unit rep mod pi^level -> value (level >= 1)
    LambdaKind lk_ = LambdaKind::Formal;
    Cyc lambda_;

    void minimize_level();
    KElem unit_rep(const KElem& u) const;
};

}  // namespace ellf
