#include "ellf/kelement.hpp"

#include <algorithm>
#include <sstream>

namespace ellf {

KElem::KElem(const Field& F, const mpq_class& x0) : F_(&F), co_(static_cast<size_t>(F.e)) {
    co_[0] = x0;
    check_denominators();
}

void KElem::check_denominators() const {
    for (auto& c : co_)
        if (!denominator_is_ppow(c, F_->ell))
            fail(Errc::BadParameter, "coordinate denominator not a power of ell");
}

KElem KElem::pi_pow(const Field& F, long j, const mpq_class& c) {
    KElem out(F);
    long e = F.e;
    long i = ((j % e) + e) % e;
    long k = (j - i) / e;  // pi^j = pi^i * ell^k
    mpq_class v = c;
    if (k >= 0)
        v *= mpq_class(pow_z(F.ell, k));
    else
        v /= mpq_class(pow_z(F.ell, -k));
    out.co_[static_cast<size_t>(i)] = v;
    out.check_denominators();
    return out;
}

KElem KElem::from_digits(const Field& F, const std::vector<std::pair<long, long>>& digits) {
    KElem out(F);
    for (auto& [j, c] : digits) out = out + pi_pow(F, j, c);
    return out;
}

bool KElem::is_zero() const {
    if (!F_) return true;
    for (auto& c : co_)
        if (c != 0) return false;
    return true;
}

KElem KElem::operator+(const KElem& o) const {
    KElem out(*F_);
    for (size_t i = 0; i < co_.size(); ++i) out.co_[i] = co_[i] + o.co_[i];
    return out;
}

KElem KElem::operator-(const KElem& o) const {
    KElem out(*F_);
    for (size_t i = 0; i < co_.size(); ++i) out.co_[i] = co_[i] - o.co_[i];
    return out;
}

KElem KElem::operator-() const {
    KElem out(*F_);
    for (size_t i = 0; i < co_.size(); ++i) out.co_[i] = -co_[i];
    return out;
}

KElem KElem::operator*(const KElem& o) const {
    KElem out(*F_);
    long e = F_->e;
    for (long i = 0; i < e; ++i) {
        if (co_[static_cast<size_t>(i)] == 0) continue;
        for (long j = 0; j < e; ++j) {
            if (o.co_[static_cast<size_t>(j)] == 0) continue;
            long s = i + j;
            mpq_class v = co_[static_cast<size_t>(i)] * o.co_[static_cast<size_t>(j)];
            if (s >= e) {
                s -= e;
                v *= F_->ell;
            }
            out.co_[static_cast<size_t>(s)] += v;
        }
    }
    return out;
}

bool KElem::operator<(const KElem& o) const {
    for (size_t i = 0; i < co_.size(); ++i) {
        int c = cmp(co_[i], o.co_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

long KElem::val() const {
    long best = kValInf;
    for (long i = 0; i < static_cast<long>(co_.size()); ++i) {
        const mpq_class& c = co_[static_cast<size_t>(i)];
        if (c == 0) continue;
        long v = rat_valuation_nonzero(c, F_->ell);
        best = std::min(best, F_->e * v + i);
    }
    return best;
}

mpq_class KElem::trace() const {
    // tr(pi^i) = 0 for 0 < i < e and tr(1) = e, so tr(x) = e * x_0.
    mpq_class out = co_[0];
    out *= F_->e;
    return out;
}

KElem KElem::shift(long m) const { return *this * pi_pow(*F_, m); }

KElem KElem::reduce_mod(long N) const {
    KElem out(*F_);
    long e = F_->e;
    for (long i = 0; i < e; ++i) {
        // keep ell-digits of coordinate i at pi-positions e*v + i < N
        long k;
        long num = N - i;
        k = (num >= 0) ? (num + e - 1) / e : -((-num) / e);  // ceil((N-i)/e)
        out.co_[static_cast<size_t>(i)] = rat_mod_ppow(co_[static_cast<size_t>(i)], F_->ell, k);
    }
    return out;
}

KElem KElem::unit_inverse_mod(long s) const {
    if (val() != 0) fail(Errc::BadParameter, "unit inverse of a non-unit");
    if (s < 1) s = 1;
    // Newton iteration z <- z(2 - xz), starting from the residue inverse.
    mpq_class c0 = rat_mod_ppow(co_[0], F_->ell, 1);
    long r0 = static_cast<long>(c0.get_num().get_si());
    long inv0 = 1;
    for (long t = 1; t < F_->ell; ++t)
        if ((t * r0) % F_->ell == 1) {
            inv0 = t;
            break;
        }
    KElem z(*F_, inv0);
    long prec = 1;
    KElem two(*F_, 2);
    while (prec < s) {
        prec *= 2;
        z = (z * (two - *this * z)).reduce_mod(prec);
    }
    return z.reduce_mod(s);
}

std::map<long, long> KElem::digits() const {
    std::map<long, long> out;
    for (long i = 0; i < static_cast<long>(co_.size()); ++i) {
        mpq_class c = co_[static_cast<size_t>(i)];
        if (c == 0) continue;
        int sign = c < 0 ? -1 : 1;
        if (sign < 0) c = -c;
        long t = int_valuation(c.get_den(), F_->ell);
        mpz_class a = c.get_num();
        long pos = -t;
        while (a != 0) {
            long d = static_cast<long>(mpz_fdiv_ui(a.get_mpz_t(), static_cast<unsigned long>(F_->ell)));
            if (d != 0) out[F_->e * pos + i] = sign * d;
            mpz_fdiv_q_ui(a.get_mpz_t(), a.get_mpz_t(), static_cast<unsigned long>(F_->ell));
            ++pos;
        }
    }
    return out;
}

std::string KElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [j, c] : digits()) {
        if (!first) os << " + ";
        first = false;
        if (j == 0)
            os << c;
        else if (c == 1)
            os << "pi^" << j;
        else
            os << c << "*pi^" << j;
    }
    return os.str();
}

Cyc add_char(const KElem& x, long twist) {
    const Field& F = *x.field();
    mpq_class t = x.trace();
    if (t == 0) return Cyc::one(F);
    long tv = int_valuation(t.get_den(), F.ell);
    if (pow_z(F.ell, tv) != t.get_den()) {
        // denominator has a prime-to-ell part: cannot happen for elements of K
        fail(Errc::BadParameter, "trace denominator not an ell-power");
    }
    if (tv == 0) return Cyc::one(F);
    if (tv > F.nroot) fail(Errc::ConductorTooSmall, "needs zeta of order ell^" + std::to_string(tv));
    // tr(x) = u / ell^tv with gcd(u, ell) = 1; zeta^{tr} = zeta_tv^u
    mpz_class u = t.get_num();
    mpz_class om = pow_z(F.ell, tv);
    long long order = om.get_si();
    mpz_class ured = u * twist;
    mpz_fdiv_r(ured.get_mpz_t(), ured.get_mpz_t(), om.get_mpz_t());
    return Cyc::root(F, ured.get_si(), order);
}

std::vector<KElem> enumerate_digit_range(const Field& F, long lo, long hi) {
    if (hi < lo) fail(Errc::BadParameter, "empty digit range");
    long positions = hi - lo;
    double size_est = 1;
    for (long i = 0; i < positions; ++i) {
        size_est *= F.ell;
        if (size_est > static_cast<double>(F.enum_cap))
            fail(Errc::SizeOverflow, "coset enumeration exceeds cap");
    }
    std::vector<KElem> out;
    std::vector<long> digit(static_cast<size_t>(positions), 0);
    while (true) {
        KElem x(F);
        for (long i = 0; i < positions; ++i)
            if (digit[static_cast<size_t>(i)] != 0)
                x = x + KElem::pi_pow(F, lo + i, digit[static_cast<size_t>(i)]);
        out.push_back(x);
        long i = 0;
        while (i < positions) {
            if (++digit[static_cast<size_t>(i)] < F.ell) break;
            digit[static_cast<size_t>(i)] = 0;
            ++i;
        }
        if (i == positions) break;
    }
    return out;
}

std::vector<KElem> enumerate_cosets(const Field& F, long r, long N) {
    if (N + r < 0) fail(Errc::BadParameter, "empty quotient: N + r < 0");
    return enumerate_digit_range(F, -r, N);
}

}  // namespace ellf
