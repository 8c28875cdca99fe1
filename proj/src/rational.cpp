#include "ellf/rational.hpp"

namespace ellf {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::ConductorTooSmall: return "ConductorTooSmall";
        case Errc::SizeOverflow: return "SizeOverflow";
        case Errc::ZeroDivisorInverse: return "ZeroDivisorInverse";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::PoleAtPoint: return "PoleAtPoint";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::BadOrder: return "BadOrder";
        case Errc::NotMultiplicative: return "NotMultiplicative";
        case Errc::ZeroArgument: return "ZeroArgument";
        case Errc::FormalLambda: return "FormalLambda";
        case Errc::ZeroDilation: return "ZeroDilation";
        case Errc::SupportContainsZero: return "SupportContainsZero";
        case Errc::UnramifiedCharacter: return "UnramifiedCharacter";
        case Errc::BadParameter: return "BadParameter";
        case Errc::PreconditionViolated: return "PreconditionViolated";
        case Errc::NotSchwartz: return "NotSchwartz";
        case Errc::DenominatorDivisibleByP: return "DenominatorDivisibleByP";
        case Errc::PrecisionInconclusive: return "PrecisionInconclusive";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

long int_valuation(const mpz_class& n, long p) {
    if (n == 0) fail(Errc::BadParameter, "valuation of zero integer");
    mpz_class m = abs(n);
    long v = 0;
    mpz_class q, r;
    while (true) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(p));
        if (r != 0) break;
        m = q;
        ++v;
    }
    return v;
}

long rat_valuation(const mpq_class& r, long p, bool& inf) {
    if (r == 0) {
        inf = true;
        return 0;
    }
    inf = false;
    return int_valuation(r.get_num(), p) - int_valuation(r.get_den(), p);
}

long rat_valuation_nonzero(const mpq_class& r, long p) {
    bool inf = false;
    long v = rat_valuation(r, p, inf);
    if (inf) fail(Errc::BadParameter, "valuation of zero");
    return v;
}

mpz_class pow_z(long p, long k) {
    if (k < 0) fail(Errc::BadParameter, "negative power");
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return out;
}

mpq_class pow_q(long p, long k) {
    if (k >= 0) return mpq_class(pow_z(p, k));
    return mpq_class(1, pow_z(p, -k));
}

bool denominator_is_ppow(const mpq_class& y, long p) {
    mpz_class d = y.get_den();
    while (d != 1) {
        if (!mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) return false;
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(p));
    }
    return true;
}

mpq_class rat_mod_ppow(const mpq_class& y, long p, long k) {
    if (y == 0) return 0;
    long t = int_valuation(y.get_den(), p);
    // y = a / p^t with gcd(a, p) = 1 or t = 0.
    if (pow_z(p, t) != y.get_den())
        fail(Errc::BadParameter, "denominator is not a power of the prime");
    long m = k + t;
    if (m <= 0) return 0;
    mpz_class mod = pow_z(p, m);
    mpz_class a = y.get_num();
    mpz_class c;
    mpz_fdiv_r(c.get_mpz_t(), a.get_mpz_t(), mod.get_mpz_t());
    mpq_class out(c, y.get_den());
    out.canonicalize();
    return out;
}

mpq_class parse_rational(const std::string& s) {
    mpq_class r;
    if (r.set_str(s, 10) != 0) fail(Errc::ParseError, "bad rational: " + s);
    r.canonicalize();
    if (r.get_den() == 0) fail(Errc::ParseError, "zero denominator: " + s);
    return r;
}

std::string rational_str(const mpq_class& r) { return r.get_str(); }

}  // namespace ellf
