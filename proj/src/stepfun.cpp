#include "ellf/stepfun.hpp"

#include <algorithm>
#include <map>

namespace ellf {

namespace {

// C1 = a + l^N, C2 = b + l^M with N >= M: C1 inside C2 iff a == b mod l^M
bool contains(const KElem& b, long M, const KElem& a, long N) {
    if (N < M) return false;
    return (a - b).val() >= M;
}

}  // namespace

StepFn StepFn::indicator(const Field& F, const KElem& rep, long level, const Cyc& coeff) {
    StepFn f(F);
    if (!coeff.is_zero()) f.terms_.push_back({rep.reduce_mod(level), level, coeff});
    return f;
}

StepFn StepFn::indicator(const Field& F, const KElem& rep, long level) {
    return indicator(F, rep, level, Cyc::one(F));
}

StepFn StepFn::shell(const Field& F, long n, const Cyc& coeff) {
    // pi^n o^x = union over nonzero leading digits d of d*pi^n + l^{n+1}
    StepFn f(F);
    if (coeff.is_zero()) return f;
    for (long d = 1; d < F.ell; ++d)
        f.terms_.push_back({KElem::pi_pow(F, n, d), n + 1, coeff});
    f.merge_and_sort();
    return f;
}

StepFn StepFn::from_terms(const Field& F, std::vector<StepTerm> terms) {
    return canonicalize(F, terms);
}

StepFn canonicalize(const Field& F, const std::vector<StepTerm>& raw) {
    StepFn f(F);
    for (const auto& t : raw) f.insert(t.rep.reduce_mod(t.level), t.level, t.coeff);
    f.merge_and_sort();
    return f;
}

void StepFn::insert(const KElem& rep, long level, const Cyc& coeff) {
    if (coeff.is_zero()) return;
    if (static_cast<long long>(terms_.size()) > F_->enum_cap)
        fail(Errc::SizeOverflow, "step function term count exceeds cap");
    for (size_t i = 0; i < terms_.size(); ++i) {
        StepTerm& t = terms_[i];
        if (t.level == level && t.rep == rep) {
            t.coeff += coeff;
            if (t.coeff.is_zero()) terms_.erase(terms_.begin() + static_cast<long>(i));
            return;
        }
        if (contains(t.rep, t.level, rep, level)) {
            // incoming strictly inside an existing coset: split the existing
            // term along the chain from t.level to level
            StepTerm old = t;
            terms_.erase(terms_.begin() + static_cast<long>(i));
            for (long k = old.level; k < level; ++k) {
                KElem base = rep.reduce_mod(k);
                long have = rep.digits().count(k) ? rep.digits().at(k) : 0;
                for (long d = 0; d < F_->ell; ++d) {
                    if (d == have) continue;
                    terms_.push_back(
                        {(base + KElem::pi_pow(*F_, k, d)).reduce_mod(k + 1), k + 1, old.coeff});
                }
            }
            Cyc merged = old.coeff + coeff;
            if (!merged.is_zero()) terms_.push_back({rep, level, merged});
            return;
        }
        if (contains(rep, level, t.rep, t.level)) {
            // incoming strictly contains an existing coset: peel off the
            // sibling complement and recurse
            t.coeff += coeff;
            bool drop = t.coeff.is_zero();
            KElem inner = t.rep;
            long inner_level = t.level;
            if (drop) terms_.erase(terms_.begin() + static_cast<long>(i));
            for (long k = level; k < inner_level; ++k) {
                KElem base = inner.reduce_mod(k);
                long have = inner.digits().count(k) ? inner.digits().at(k) : 0;
                for (long d = 0; d < F_->ell; ++d) {
                    if (d == have) continue;
                    insert((base + KElem::pi_pow(*F_, k, d)).reduce_mod(k + 1), k + 1, coeff);
                }
            }
            return;
        }
    }
    terms_.push_back({rep, level, coeff});
}

void StepFn::merge_and_sort() {
    // merge full sibling families with equal coefficients, bottom-up
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<std::pair<long, KElem>, std::vector<size_t>> groups;
        for (size_t i = 0; i < terms_.size(); ++i)
            groups[{terms_[i].level, terms_[i].rep.reduce_mod(terms_[i].level - 1)}].push_back(i);
        for (auto& [key, idx] : groups) {
            if (static_cast<long>(idx.size()) != F_->ell) continue;
            const Cyc& c0 = terms_[idx[0]].coeff;
            bool all_eq = true;
            for (size_t j = 1; j < idx.size(); ++j)
                if (!(terms_[idx[j]].coeff == c0)) {
                    all_eq = false;
                    break;
                }
            if (!all_eq) continue;
            StepTerm parent{key.second, key.first - 1, c0};
            std::vector<StepTerm> next;
            for (size_t i = 0; i < terms_.size(); ++i)
                if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(terms_[i]);
            next.push_back(parent);
            terms_ = std::move(next);
            changed = true;
            break;
        }
    }
    std::sort(terms_.begin(), terms_.end(), [](const StepTerm& x, const StepTerm& y) {
        if (x.level != y.level) return x.level < y.level;
        return x.rep < y.rep;
    });
}

Cyc StepFn::evaluate(const KElem& x) const {
    for (const auto& t : terms_)
        if ((x - t.rep).val() >= t.level) return t.coeff;
    return Cyc::zero(*F_);
}

StepFn StepFn::operator+(const StepFn& o) const {
    std::vector<StepTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return canonicalize(*F_, all);
}

StepFn StepFn::operator-(const StepFn& o) const { return *this + o.scale(Cyc(*F_, -1)); }

StepFn StepFn::scale(const Cyc& s) const {
    StepFn out(*F_);
    if (s.is_zero()) return out;
    for (const auto& t : terms_) {
        Cyc c = t.coeff * s;
        if (!c.is_zero()) out.terms_.push_back({t.rep, t.level, c});
    }
    return out;
}

StepFn StepFn::mul(const StepFn& o) const {
    std::vector<StepTerm> prods;
    for (const auto& t1 : terms_)
        for (const auto& t2 : o.terms_) {
            if (contains(t1.rep, t1.level, t2.rep, t2.level))
                prods.push_back({t2.rep, t2.level, t1.coeff * t2.coeff});
            else if (contains(t2.rep, t2.level, t1.rep, t1.level))
                prods.push_back({t1.rep, t1.level, t1.coeff * t2.coeff});
        }
    return canonicalize(*F_, prods);
}

StepFn StepFn::translate(const KElem& h) const {
    // g(x) = f(x - h): coset reps shift by +h
    StepFn out(*F_);
    for (const auto& t : terms_) out.terms_.push_back({(t.rep + h).reduce_mod(t.level), t.level, t.coeff});
    out.merge_and_sort();
    return out;
}

StepFn StepFn::dilate(const KElem& lambda) const {
    // g(x) = f(lambda x): support of g is lambda^{-1} * support of f
    if (lambda.is_zero()) fail(Errc::ZeroDilation, "dilation by zero");
    long m = lambda.val();
    KElem unit = lambda.shift(-m);
    std::vector<StepTerm> out;
    for (const auto& t : terms_) {
        long va = t.rep.is_zero() ? t.level : t.rep.val();
        long prec = std::max(t.level - va + 1, 1L);
        KElem uinv = unit.unit_inverse_mod(prec);
        KElem nrep = (t.rep * uinv).shift(-m).reduce_mod(t.level - m);
        out.push_back({nrep, t.level - m, t.coeff});
    }
    return canonicalize(*F_, out);
}

StepFn StepFn::restrict_to(const KElem& rep, long level) const {
    return mul(indicator(*F_, rep, level));
}

long StepFn::support_val_floor() const {
    long best = kValInf;
    for (const auto& t : terms_)
        best = std::min(best, t.rep.is_zero() ? t.level : std::min(t.rep.val(), t.level));
    return best;
}

bool StepFn::support_in_units() const {
    for (const auto& t : terms_)
        if (t.rep.is_zero() || t.rep.val() >= t.level) return false;
    return true;
}

ShellFn::ShellFn(StepFn step) : F_(step.field()), step_(std::move(step)) {}

ShellFn::ShellFn(StepFn step, std::vector<GeoTail> tails)
    : F_(step.field()), step_(std::move(step)), tails_(std::move(tails)) {
    for (const auto& t : tails_) {
        if (t.ratio == 0) fail(Errc::BadParameter, "tail ratio must be nonzero");
        if (rat_valuation_nonzero(t.ratio, F_->p) < 1)
            fail(Errc::BadParameter, "tail ratio must have |ratio|_p < 1");
    }
    normalize();
}

void ShellFn::normalize() {
    // group by (direction, ratio); rebase each group to its largest start,
    // dumping prefix shells into the step part
    std::map<std::pair<bool, mpq_class>, std::vector<GeoTail>> groups;
    for (auto& t : tails_) {
        if (t.coeff.is_zero()) continue;
        groups[{t.toward_zero, t.ratio}].push_back(t);
    }
    std::vector<GeoTail> merged;
    std::vector<StepTerm> extra;
    for (auto& [key, g] : groups) {
        long start = g[0].start;
        for (auto& t : g) start = std::max(start, t.start);
        Cyc total = Cyc::zero(*F_);
        for (auto& t : g) {
            // tail(start0) = prefix shells [start0, start) + ratio^{start-start0} tail(start)
            mpq_class r = 1;
            Cyc c = t.coeff;
            for (long k = t.start; k < start; ++k) {
                long n = t.toward_zero ? k : -k;
                for (const auto& st : StepFn::shell(*F_, n, c.scale(r)).terms()) extra.push_back(st);
                r *= t.ratio;
            }
            total += c.scale(r);
        }
        if (!total.is_zero()) merged.push_back({key.first, start, key.second, total});
    }
    tails_ = std::move(merged);
    if (!extra.empty()) {
        for (const auto& st : step_.terms()) extra.push_back(st);
        step_ = canonicalize(*F_, extra);
    }
}

bool ShellFn::is_zero() const { return step_.is_zero() && tails_.empty(); }

Cyc ShellFn::evaluate(const KElem& x) const {
    Cyc out = step_.evaluate(x);
    if (x.is_zero()) return out;  // tails vanish at 0 in the p-adic limit
    long v = x.val();
    for (const auto& t : tails_) {
        long k = t.toward_zero ? v - t.start : -v - t.start;
        if (k < 0) continue;
        mpq_class rk = 1;
        for (long i = 0; i < k; ++i) rk *= t.ratio;
        out += t.coeff.scale(rk);
    }
    return out;
}

ShellFn ShellFn::operator+(const ShellFn& o) const {
    std::vector<GeoTail> tails = tails_;
    tails.insert(tails.end(), o.tails_.begin(), o.tails_.end());
    return ShellFn(step_ + o.step_, std::move(tails));
}

ShellFn ShellFn::operator-(const ShellFn& o) const { return *this + o.scale(Cyc(*F_, -1)); }

ShellFn ShellFn::scale(const Cyc& s) const {
    std::vector<GeoTail> tails;
    if (!s.is_zero())
        for (const auto& t : tails_) tails.push_back({t.toward_zero, t.start, t.ratio, t.coeff * s});
    return ShellFn(step_.scale(s), std::move(tails));
}

bool ShellFn::operator==(const ShellFn& o) const {
    // distinct (direction, ratio) geometric tails are linearly independent as
    // functions, and no finite step part can cancel an infinite tail
    ShellFn d = *this - o;
    return d.tails_.empty() && d.step_.is_zero();
}

ShellFn ShellFn::translate(const KElem& h) const {
    if (!h.is_zero() && !tails_.empty())
        fail(Errc::BadParameter, "translated shell tails leave the representable class");
    return ShellFn(step_.translate(h), tails_);
}

ShellFn ShellFn::dilate(const KElem& lambda) const {
    if (lambda.is_zero()) fail(Errc::ZeroDilation, "dilation by zero");
    long m = lambda.val();
    std::vector<GeoTail> tails;
    for (const auto& t : tails_) {
        // g(x) = F(lambda x): shell at valuation n pulls back to n - m
        long start = t.toward_zero ? t.start - m : t.start + m;
        tails.push_back({t.toward_zero, start, t.ratio, t.coeff});
    }
    return ShellFn(step_.dilate(lambda), std::move(tails));
}

StepFn ShellFn::truncate(long T) const {
    std::vector<StepTerm> out = step_.terms();
    for (const auto& t : tails_) {
        mpq_class r = 1;
        for (long k = 0; k <= T; ++k) {
            long n = t.toward_zero ? t.start + k : -(t.start + k);
            for (const auto& st : StepFn::shell(*F_, n, t.coeff.scale(r)).terms()) out.push_back(st);
            r *= t.ratio;
        }
    }
    return canonicalize(*F_, out);
}

}  // namespace ellf
