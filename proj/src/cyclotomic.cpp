#include "ellf/cyclotomic.hpp"

#include <algorithm>
#include <sstream>

namespace ellf {

namespace {

// Dense polynomial helpers over Q for the extended-Euclid inverse in a
// cyclotomic subfield.
using PolyQ = std::vector<mpq_class>;

void trim(PolyQ& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyQ poly_mul(const PolyQ& f, const PolyQ& g) {
    if (f.empty() || g.empty()) return {};
    PolyQ out(f.size() + g.size() - 1);
    for (size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (size_t j = 0; j < g.size(); ++j) out[i + j] += f[i] * g[j];
    }
    trim(out);
    return out;
}

PolyQ poly_sub(const PolyQ& f, const PolyQ& g) {
    PolyQ out = f;
    if (out.size() < g.size()) out.resize(g.size());
    for (size_t i = 0; i < g.size(); ++i) out[i] -= g[i];
    trim(out);
    return out;
}

// f mod g, g nonzero
PolyQ poly_rem(PolyQ f, const PolyQ& g) {
    trim(f);
    while (f.size() >= g.size() && !f.empty()) {
        mpq_class c = f.back() / g.back();
        size_t shift = f.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j) f[shift + j] -= c * g[j];
        trim(f);
    }
    return f;
}

}  // namespace

void Cyc::prune(Coeffs& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0)
            it = m.erase(it);
        else
            ++it;
    }
}

void Cyc::add_monomial(const Field& F, Coeffs& out, long long k, const mpq_class& c) {
    if (c == 0) return;
    k %= F.M;
    if (k < 0) k += F.M;
    if (k < F.phiM) {
        auto it = out.find(k);
        if (it == out.end())
            out.emplace(k, c);
        else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
        return;
    }
    // X^k = X^{k - phiM} * X^{phiM} = X^{k - phiM} * (-tail)
    for (auto& [j, t] : F.phi_tail()) {
        mpq_class cc = c;
        cc *= -t;
        add_monomial(F, out, k - F.phiM + j, cc);
    }
}

Cyc::Coeffs Cyc::add_parts(const Coeffs& x, const Coeffs& y, bool negate_y) {
    Coeffs out = x;
    for (auto& [k, c] : y) {
        auto it = out.find(k);
        if (it == out.end()) {
            out.emplace(k, negate_y ? mpq_class(-c) : c);
        } else {
            if (negate_y)
                it->second -= c;
            else
                it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

Cyc::Coeffs Cyc::mul_parts(const Field& F, const Coeffs& x, const Coeffs& y) {
    Coeffs out;
    for (auto& [k1, c1] : x)
        for (auto& [k2, c2] : y) add_monomial(F, out, k1 + k2, c1 * c2);
    return out;
}

Cyc::Cyc(const Field& F, const mpq_class& r) : F_(&F) {
    if (r != 0) a_.emplace(0, r);
}

Cyc Cyc::sqrtq(const Field& F) {
    Cyc out;
    out.F_ = &F;
    out.b_.emplace(0, 1);
    return out;
}

Cyc Cyc::root(const Field& F, long long k, long long order) {
    if (order <= 0 || F.M % order != 0) fail(Errc::BadOrder, "order does not divide conductor");
    long long exp = k % order;
    if (exp < 0) exp += order;
    Cyc out;
    out.F_ = &F;
    add_monomial(F, out.a_, exp * (F.M / order), 1);
    return out;
}

Cyc Cyc::q_half_pow(const Field& F, long h) {
    bool odd = (h % 2) != 0;
    long ipart = odd ? (h - 1) / 2 : h / 2;  // floor for odd h
    mpq_class r(1);
    if (ipart >= 0)
        r = mpq_class(pow_z(F.q, ipart));
    else
        r = mpq_class(1, pow_z(F.q, -ipart));
    if (!odd) return Cyc(F, r);
    Cyc out;
    out.F_ = &F;
    out.b_.emplace(0, r);
    return out;
}

bool Cyc::is_rational() const {
    if (!b_.empty()) return false;
    if (a_.empty()) return true;
    return a_.size() == 1 && a_.begin()->first == 0;
}

mpq_class Cyc::rational_value() const {
    if (!is_rational()) fail(Errc::BadParameter, "not a rational scalar");
    if (a_.empty()) return 0;
    return a_.begin()->second;
}

Cyc Cyc::operator+(const Cyc& o) const {
    Cyc out;
    out.F_ = F_ ? F_ : o.F_;
    out.a_ = add_parts(a_, o.a_, false);
    out.b_ = add_parts(b_, o.b_, false);
    return out;
}

Cyc Cyc::operator-(const Cyc& o) const {
    Cyc out;
    out.F_ = F_ ? F_ : o.F_;
    out.a_ = add_parts(a_, o.a_, true);
    out.b_ = add_parts(b_, o.b_, true);
    return out;
}

Cyc Cyc::operator-() const {
    Cyc out = *this;
    for (auto& [k, c] : out.a_) c = -c;
    for (auto& [k, c] : out.b_) c = -c;
    return out;
}

Cyc Cyc::operator*(const Cyc& o) const {
    const Field* F = F_ ? F_ : o.F_;
    Cyc out;
    out.F_ = F;
    if (is_zero() || o.is_zero()) return out;
    // (a1 + b1 s)(a2 + b2 s) = (a1 a2 + q b1 b2) + (a1 b2 + b1 a2) s
    Coeffs aa = mul_parts(*F, a_, o.a_);
    Coeffs bb = mul_parts(*F, b_, o.b_);
    for (auto& [k, c] : bb) c *= F->q;
    out.a_ = add_parts(aa, bb, false);
    Coeffs ab = mul_parts(*F, a_, o.b_);
    Coeffs ba = mul_parts(*F, b_, o.a_);
    out.b_ = add_parts(ab, ba, false);
    return out;
}

int Cyc::cmp(const Cyc& o) const {
    auto cmp_part = [](const Coeffs& x, const Coeffs& y) -> int {
        auto ix = x.begin();
        auto iy = y.begin();
        for (; ix != x.end() && iy != y.end(); ++ix, ++iy) {
            if (ix->first != iy->first) return ix->first < iy->first ? -1 : 1;
            int c = ::cmp(ix->second, iy->second);
            if (c != 0) return c;
        }
        if (ix != x.end()) return 1;
        if (iy != y.end()) return -1;
        return 0;
    };
    int c = cmp_part(a_, o.a_);
    if (c != 0) return c;
    return cmp_part(b_, o.b_);
}

Cyc Cyc::scale(const mpq_class& r) const {
    Cyc out;
    out.F_ = F_;
    if (r == 0) return out;
    out.a_ = a_;
    out.b_ = b_;
    for (auto& [k, c] : out.a_) c *= r;
    for (auto& [k, c] : out.b_) c *= r;
    return out;
}

long long Cyc::effective_order() const {
    if (!F_) return 1;
    long long g = 0;
    for (auto& [k, c] : a_)
        if (k != 0) g = gcd_ll(g, k);
    for (auto& [k, c] : b_)
        if (k != 0) g = gcd_ll(g, k);
    if (g == 0) return 1;
    g = gcd_ll(g, F_->M);
    return F_->M / g;
}

Cyc::Coeffs cyclotomic_inverse(const Field& F, const Cyc::Coeffs& x) {
    if (x.empty()) fail(Errc::DivisionByZero, "inverse of zero");
    // rational shortcut
    if (x.size() == 1 && x.begin()->first == 0) {
        Cyc::Coeffs out;
        out.emplace(0, mpq_class(1) / x.begin()->second);
        return out;
    }
    long long g = 0;
    for (auto& [k, c] : x)
        if (k != 0) g = gcd_ll(g, k);
    g = gcd_ll(g, F.M);
    long long Mp = F.M / g;  // x lies in Q(zeta_Mp), zeta_Mp = zeta_M^g
    long long phiMp = euler_phi(Mp);
    if (phiMp > 4096) fail(Errc::SizeOverflow, "inversion degree too large");

    std::vector<mpz_class> phi_z = cyclotomic_dense(Mp);
    PolyQ modulus(phi_z.size());
    for (size_t i = 0; i < phi_z.size(); ++i) modulus[i] = mpq_class(phi_z[i]);

    PolyQ f(static_cast<size_t>(Mp));
    for (auto& [k, c] : x) f[static_cast<size_t>(k / g)] += c;
    f = poly_rem(std::move(f), modulus);
    if (f.empty()) fail(Errc::DivisionByZero, "inverse of zero");

    // extended Euclid: find u with u*f = gcd (a nonzero constant) mod Phi_Mp
    PolyQ r0 = modulus, r1 = f;
    PolyQ s0 = {}, s1 = {mpq_class(1)};
    while (!r1.empty() && r1.size() > 1) {
        // r0 = q*r1 + r2
        PolyQ r2 = r0;
        PolyQ quo;
        trim(r2);
        while (r2.size() >= r1.size() && !r2.empty()) {
            mpq_class c = r2.back() / r1.back();
            size_t shift = r2.size() - r1.size();
            if (quo.size() < shift + 1) quo.resize(shift + 1);
            quo[shift] += c;
            for (size_t j = 0; j < r1.size(); ++j) r2[shift + j] -= c * r1[j];
            trim(r2);
        }
        PolyQ s2 = poly_sub(s0, poly_mul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) fail(Errc::ZeroDivisorInverse, "element shares a factor with the modulus");
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    PolyQ invp = s1;
    for (auto& c : invp) c /= r1[0];
    invp = poly_rem(std::move(invp), modulus);

    // map back: Y^j -> zeta_M^{g*j}, reduce canonically
    Cyc::Coeffs out;
    for (size_t j = 0; j < invp.size(); ++j) {
        if (invp[j] == 0) continue;
        Cyc::add_monomial(F, out, g * static_cast<long long>(j), invp[j]);
    }
    return out;
}

Cyc Cyc::inv() const {
    if (!F_) fail(Errc::DivisionByZero, "inverse of zero");
    if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
    const Field& F = *F_;
    if (b_.empty() && a_.size() == 1) {
        // monomial c * zeta^k: inverse is zeta^{-k} / c
        auto [k, c] = *a_.begin();
        Cyc out;
        out.F_ = F_;
        add_monomial(F, out.a_, -k, mpq_class(1) / c);
        return out;
    }
    if (b_.empty()) {
        Cyc out;
        out.F_ = F_;
        out.a_ = cyclotomic_inverse(F, a_);
        return out;
    }
    // 1/(a + b s) = (a - b s) / (a^2 - q b^2)
    Coeffs a2 = mul_parts(F, a_, a_);
    Coeffs b2 = mul_parts(F, b_, b_);
    for (auto& [k, c] : b2) c *= F.q;
    Coeffs norm = add_parts(a2, b2, true);
    if (norm.empty()) fail(Errc::ZeroDivisorInverse, "norm a^2 - q b^2 vanishes");
    Coeffs ninv;
    try {
        ninv = cyclotomic_inverse(F, norm);
    } catch (const Error& err) {
        if (err.code() == Errc::ZeroDivisorInverse)
            fail(Errc::ZeroDivisorInverse, "norm a^2 - q b^2 is a zero divisor");
        throw;
    }
    Cyc out;
    out.F_ = F_;
    out.a_ = mul_parts(F, a_, ninv);
    out.b_ = mul_parts(F, b_, ninv);
    for (auto& [k, c] : out.b_) c = -c;
    prune(out.a_);
    prune(out.b_);
    return out;
}

Cyc Cyc::pow(long n) const {
    if (!F_) fail(Errc::BadParameter, "pow of fieldless scalar");
    if (n == 0) return Cyc::one(*F_);
    Cyc base = *this;
    if (n < 0) {
        base = base.inv();
        n = -n;
    }
    Cyc out = Cyc::one(*F_);
    while (n > 0) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

std::string Cyc::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Coeffs& part, bool sq) {
        for (auto& [k, c] : part) {
            std::string term;
            if (c != 1 || (k == 0 && !sq)) term += c.get_str();
            if (k != 0) {
                if (!term.empty()) term += "*";
                term += "zeta^" + std::to_string(k);
            }
            if (sq) {
                if (!term.empty()) term += "*";
                term += "sqrtq";
            }
            if (!first) os << " + ";
            os << term;
            first = false;
        }
    };
    emit(a_, false);
    emit(b_, true);
    return os.str();
}

void CycBuilder::add(long long zeta_exp, const mpq_class& c, bool with_sqrtq) {
    Cyc::add_monomial(*F, with_sqrtq ? b : a, zeta_exp, c);
}

Cyc CycBuilder::build() {
    Cyc out;
    out.F_ = F;
    out.a_ = std::move(a);
    out.b_ = std::move(b);
    Cyc::prune(out.a_);
    Cyc::prune(out.b_);
    a.clear();
    b.clear();
    return out;
}

}  // namespace ellf
