#include "ellf/laurent.hpp"

#include <sstream>

namespace ellf {

Laurent::Laurent(const Field& F, const Cyc& c, long n) : F_(&F) {
    if (!c.is_zero()) c_.emplace(n, c);
}

void Laurent::set(long n, const Cyc& v) {
    if (v.is_zero())
        c_.erase(n);
    else
        c_[n] = v;
}

Cyc Laurent::coeff(long n) const {
    auto it = c_.find(n);
    if (it == c_.end()) return F_ ? Cyc::zero(*F_) : Cyc();
    return it->second;
}

long Laurent::min_deg() const {
    if (c_.empty()) fail(Errc::BadParameter, "degree of zero polynomial");
    return c_.begin()->first;
}

long Laurent::max_deg() const {
    if (c_.empty()) fail(Errc::BadParameter, "degree of zero polynomial");
    return c_.rbegin()->first;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent out;
    out.F_ = F_ ? F_ : o.F_;
    out.c_ = c_;
    for (auto& [n, v] : o.c_) {
        auto it = out.c_.find(n);
        if (it == out.c_.end())
            out.c_.emplace(n, v);
        else {
            it->second += v;
            if (it->second.is_zero()) out.c_.erase(it);
        }
    }
    return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator-() const {
    Laurent out = *this;
    for (auto& [n, v] : out.c_) v = -v;
    return out;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent out;
    out.F_ = F_ ? F_ : o.F_;
    for (auto& [n1, v1] : c_)
        for (auto& [n2, v2] : o.c_) {
            Cyc prod = v1 * v2;
            if (prod.is_zero()) continue;
            auto it = out.c_.find(n1 + n2);
            if (it == out.c_.end())
                out.c_.emplace(n1 + n2, prod);
            else {
                it->second += prod;
                if (it->second.is_zero()) out.c_.erase(it);
            }
        }
    return out;
}

Laurent Laurent::scale(const Cyc& s) const {
    Laurent out;
    out.F_ = F_;
    if (s.is_zero()) return out;
    for (auto& [n, v] : c_) {
        Cyc prod = v * s;
        if (!prod.is_zero()) out.c_.emplace(n, prod);
    }
    return out;
}

Laurent Laurent::shift(long n) const {
    Laurent out;
    out.F_ = F_;
    for (auto& [m, v] : c_) out.c_.emplace(m + n, v);
    return out;
}

Laurent Laurent::dual_substitute() const {
    // c * lambda^n -> c * q^n * lambda^{-n}
    Laurent out;
    out.F_ = F_;
    for (auto& [n, v] : c_) {
        mpq_class qn;
        if (n >= 0)
            qn = mpq_class(pow_z(F_->q, n));
        else
            qn = mpq_class(1, pow_z(F_->q, -n));
        out.c_.emplace(-n, v.scale(qn));
    }
    return out;
}

Cyc Laurent::eval(const Cyc& lambda0) const {
    if (!F_) fail(Errc::BadParameter, "eval of fieldless polynomial");
    Cyc out = Cyc::zero(*F_);
    for (auto& [n, v] : c_) out += v * lambda0.pow(n);
    return out;
}

std::string Laurent::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [n, v] : c_) {
        if (!first) os << " + ";
        first = false;
        std::string cs = v.str();
        bool needs_parens = cs.find(' ') != std::string::npos;
        if (n == 0) {
            os << (needs_parens ? "(" + cs + ")" : cs);
            continue;
        }
        if (cs == "1")
            ;
        else if (needs_parens)
            os << "(" << cs << ")*";
        else
            os << cs << "*";
        os << "L";
        if (n != 1) os << "^" << n;
    }
    return os.str();
}

RatFunc::RatFunc(Laurent num) : num_(std::move(num)) {
    den_ = Laurent::one(*num_.field());
    normalize();
}

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(Errc::DivisionByZeroPoly, "zero denominator");
    normalize();
}

void RatFunc::normalize() {
    const Field& F = *den_.field();
    if (num_.is_zero()) {
        den_ = Laurent::one(F);
        return;
    }
    // cancel common monomial lambda^k and shift den to lowest exponent 0
    long k = den_.min_deg();
    den_ = den_.shift(-k);
    num_ = num_.shift(-k);
    // normalize the lowest coefficient of den to 1 when invertible
    Cyc c = den_.coeff(0);
    try {
        Cyc ci = c.inv();
        den_ = den_.scale(ci);
        num_ = num_.scale(ci);
    } catch (const Error&) {
        // zero-divisor leading coefficient: leave unscaled
    }
}

bool RatFunc::is_laurent() const {
    return den_.coeffs().size() == 1 && den_.coeff(den_.min_deg()) == Cyc::one(*den_.field());
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.num_.is_zero()) fail(Errc::DivisionByZeroPoly, "division by zero rational function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::scale(const Cyc& s) const { return RatFunc(num_.scale(s), den_); }

bool RatFunc::eq(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }

Cyc RatFunc::eval(const Cyc& lambda0) const {
    const Field& F = *den_.field();
    if (lambda0.is_zero()) fail(Errc::ZeroArgument, "lambda must be nonzero");
    Cyc d = den_.eval(lambda0);
    if (d.is_zero()) fail(Errc::PoleAtPoint, "denominator vanishes at the point");
    Cyc n = num_.is_zero() ? Cyc::zero(F) : num_.eval(lambda0);
    return n * d.inv();
}

std::string RatFunc::str() const {
    if (num_.is_zero()) return "0";
    if (is_laurent() && den_.min_deg() == 0) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace ellf
