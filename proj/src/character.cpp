#include "ellf/character.hpp"

#include <algorithm>

namespace ellf {

namespace {

long elem_order(const UnitGroup& U, const KElem& u) {
    KElem one = KElem::one(U.field()).reduce_mod(U.modulus_level());
    KElem x = u;
    long k = 1;
    while (!(x == one)) {
        x = U.mul(x, u);
        ++k;
        if (k > 1000000) fail(Errc::SizeOverflow, "element order runaway");
    }
    return k;
}

}  // namespace

UnitGroup::UnitGroup(const Field& F, long n) : F_(&F), n_(n) {
    if (n < 1) fail(Errc::BadParameter, "unit group needs level >= 1");
    for (const auto& x : enumerate_cosets(F, 0, n))
        if (!x.is_zero() && x.val() == 0) reps_.push_back(x);
    std::sort(reps_.begin(), reps_.end());

    KElem one = KElem::one(F).reduce_mod(n);
    std::map<KElem, std::vector<long>> span;
    span.emplace(one, std::vector<long>{});

    // greedy basis: take elements by decreasing order; accept when the span
    // grows by a full direct factor
    std::vector<std::pair<long, KElem>> by_order;
    for (const auto& u : reps_) by_order.emplace_back(-elem_order(*this, u), u);
    std::sort(by_order.begin(), by_order.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) return a.first < b.first;
                  return a.second < b.second;
              });

    for (const auto& [nord, u] : by_order) {
        if (span.size() == reps_.size()) break;
        if (span.count(u)) continue;
        long ord = -nord;
        // candidate span: span * <u>
        std::map<KElem, std::vector<long>> bigger;
        bool clash = false;
        KElem pw = one;
        for (long k = 0; k < ord && !clash; ++k) {
            for (const auto& [v, exps] : span) {
                KElem w = mul(v, pw);
                std::vector<long> we = exps;
                we.push_back(k);
                if (bigger.count(w)) {
                    clash = true;
                    break;
                }
                bigger.emplace(w, std::move(we));
            }
            pw = mul(pw, u);
        }
        if (clash) continue;
        gens_.push_back(u);
        orders_.push_back(ord);
        span = std::move(bigger);
    }
    if (span.size() != reps_.size())
        fail(Errc::BadParameter, "unit group basis construction failed");
    // pad earlier exponent vectors to full length
    for (auto& [v, exps] : span) exps.resize(gens_.size(), 0);
    normal_form_ = std::move(span);
}

KElem UnitGroup::mul(const KElem& a, const KElem& b) const { return (a * b).reduce_mod(n_); }

const std::vector<long>& UnitGroup::exponents(const KElem& u) const {
    auto it = normal_form_.find(u.reduce_mod(n_));
    if (it == normal_form_.end()) fail(Errc::BadParameter, "not a unit representative");
    return it->second;
}

std::shared_ptr<const UnitGroup> unit_group(const Field& F, long n) {
    return std::make_shared<UnitGroup>(F, n);
}

Character Character::unramified(const Field& F) {
    Character c;
    c.F_ = &F;
    c.level_ = 0;
    c.lk_ = LambdaKind::Formal;
    return c;
}

Character Character::haar(const Field& F) {
    Character c = unramified(F);
    c.lk_ = LambdaKind::Concrete;
    c.lambda_ = Cyc(F, mpq_class(1, F.q));
    return c;
}

Character Character::make(const Field& F, long level,
                          const std::vector<std::pair<KElem, Cyc>>& generator_images) {
    Character c = unramified(F);
    if (level == 0) {
        if (!generator_images.empty()) fail(Errc::BadParameter, "unramified takes no images");
        return c;
    }
    auto U = unit_group(F, level);
    KElem one = KElem::one(F).reduce_mod(level);
    // closure from the given generators
    std::map<KElem, Cyc> table;
    table.emplace(one, Cyc::one(F));
    for (auto& [g, img] : generator_images) {
        KElem gr = g.reduce_mod(level);
        if (gr.is_zero() || gr.val() != 0) fail(Errc::BadParameter, "generator is not a unit");
        long ord = elem_order(*U, gr);
        if (!img.pow(ord).is_rational() || img.pow(ord).rational_value() != 1)
            fail(Errc::BadOrder, "image order does not divide the generator order");
        std::map<KElem, Cyc> next = table;
        KElem pw = one;
        Cyc val = Cyc::one(F);
        for (long k = 1; k < ord; ++k) {
            pw = U->mul(pw, gr);
            val = val * img;
            for (auto& [v, w] : table) {
                KElem prod = U->mul(v, pw);
                Cyc pval = w * val;
                auto it = next.find(prod);
                if (it == next.end())
                    next.emplace(prod, pval);
                else if (!(it->second == pval))
                    fail(Errc::NotMultiplicative, "inconsistent generator images");
            }
        }
        table = std::move(next);
    }
    if (table.size() != U->reps().size())
        fail(Errc::BadParameter, "generators do not generate the unit group");
    c.level_ = level;
    c.table_ = std::move(table);
    c.minimize_level();
    return c;
}

std::vector<Character> Character::all_of_level(const Field& F, long level) {
    std::vector<Character> out;
    if (level == 0) {
        out.push_back(unramified(F));
        return out;
    }
    auto U = unit_group(F, level);
    const auto& orders = U->orders();
    std::vector<long> pick(orders.size(), 0);
    while (true) {
        Character c = unramified(F);
        c.level_ = level;
        for (const auto& u : U->reps()) {
            const auto& exps = U->exponents(u);
            Cyc v = Cyc::one(F);
            for (size_t i = 0; i < orders.size(); ++i)
                if (exps[i] != 0 && pick[i] != 0)
                    v = v * Cyc::root(F, static_cast<long long>(exps[i]) * pick[i], orders[i]);
            c.table_.emplace(u, v);
        }
        c.minimize_level();
        if (c.level_ == level) out.push_back(c);
        size_t i = 0;
        while (i < pick.size()) {
            if (++pick[i] < orders[i]) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    return out;
}

void Character::minimize_level() {
    while (level_ >= 1) {
        bool trivial_on_layer = true;
        if (level_ == 1) {
            for (auto& [u, v] : table_)
                if (!(v == Cyc::one(*F_))) {
                    trivial_on_layer = false;
                    break;
                }
        } else {
            for (auto& [u, v] : table_) {
                if ((u - KElem::one(*F_)).val() >= level_ - 1 && !(v == Cyc::one(*F_))) {
                    trivial_on_layer = false;
                    break;
                }
            }
        }
        if (!trivial_on_layer) break;
        long down = level_ - 1;
        std::map<KElem, Cyc> smaller;
        for (auto& [u, v] : table_) {
            KElem ur = u.reduce_mod(down);
            auto it = smaller.find(ur);
            if (it == smaller.end())
                smaller.emplace(ur, v);
            else if (!(it->second == v))
                fail(Errc::NotMultiplicative, "level minimization inconsistency");
        }
        if (down == 0) smaller.clear();
        table_ = std::move(smaller);
        level_ = down;
    }
}

const Cyc& Character::lambda_value() const {
    if (lk_ != LambdaKind::Concrete) fail(Errc::FormalLambda, "lambda is formal");
    return lambda_;
}

Character Character::with_lambda(const Cyc& lambda0) const {
    if (lambda0.is_zero()) fail(Errc::ZeroArgument, "lambda must be nonzero");
    Character c = *this;
    c.lk_ = LambdaKind::Concrete;
    c.lambda_ = lambda0;
    return c;
}

Character Character::with_formal_lambda() const {
    Character c = *this;
    c.lk_ = LambdaKind::Formal;
    c.lambda_ = Cyc();
    return c;
}

Character Character::unit_inverse() const {
    Character c = *this;
    for (auto& [u, v] : c.table_) v = v.inv();
    return c;
}

Character Character::dual() const {
    Character c = unit_inverse();
    switch (lk_) {
        case LambdaKind::Formal: c.lk_ = LambdaKind::FormalDual; break;
        case LambdaKind::FormalDual: c.lk_ = LambdaKind::Formal; break;
        case LambdaKind::Concrete:
            c.lambda_ = Cyc(*F_, F_->q) * lambda_.inv();
            break;
    }
    return c;
}

KElem Character::unit_rep(const KElem& u) const { return u.reduce_mod(level_); }

Cyc Character::eval_unit(const KElem& u) const {
    if (level_ == 0) return Cyc::one(*F_);
    auto it = table_.find(unit_rep(u));
    if (it == table_.end()) fail(Errc::BadParameter, "not a unit");
    return it->second;
}

Laurent Character::eval_formal(const KElem& x) const {
    if (x.is_zero()) fail(Errc::ZeroArgument, "character at zero");
    if (lk_ == LambdaKind::Concrete) fail(Errc::BadParameter, "lambda is concrete");
    long m = x.val();
    Cyc uval = eval_unit(x.shift(-m));
    if (lk_ == LambdaKind::Formal) return Laurent(*F_, uval, m);
    // lambda* = q / lambda: lambda*^m = q^m lambda^{-m}
    return Laurent(*F_, uval.scale(pow_q(F_->q, m)), -m);
}

Cyc Character::eval_concrete(const KElem& x) const {
    if (x.is_zero()) fail(Errc::ZeroArgument, "character at zero");
    if (lk_ != LambdaKind::Concrete) fail(Errc::FormalLambda, "lambda is formal");
    long m = x.val();
    return eval_unit(x.shift(-m)) * lambda_.pow(m);
}

long Character::modulus_vp() const {
    if (lk_ != LambdaKind::Concrete) fail(Errc::FormalLambda, "modulus of formal lambda");
    if (!lambda_.is_rational()) fail(Errc::BadParameter, "modulus needs rational lambda");
    return rat_valuation_nonzero(lambda_.rational_value(), F_->p);
}

bool Character::operator==(const Character& o) const {
    return level_ == o.level_ && table_ == o.table_ && lk_ == o.lk_ && lambda_ == o.lambda_;
}

}  // namespace ellf
