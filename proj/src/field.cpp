#include "ellf/field.hpp"

#include <algorithm>
#include <numeric>

namespace ellf {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::vector<std::pair<long long, int>> factorize(long long n) {
    std::vector<std::pair<long long, int>> out;
    for (long long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int k = 0;
            while (n % d == 0) {
                n /= d;
                ++k;
            }
            out.emplace_back(d, k);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

long long euler_phi(long long n) {
    long long out = 1;
    for (auto [pr, k] : factorize(n)) {
        long long pk = 1;
        for (int i = 0; i + 1 < k; ++i) pk *= pr;
        out *= pk * (pr - 1);
    }
    return out;
}

long long radical(long long n) {
    long long out = 1;
    for (auto [pr, k] : factorize(n)) out *= pr;
    (void)0;
    return out;
}

std::vector<mpz_class> cyclotomic_dense(long long n) {
    if (n <= 0) fail(Errc::BadParameter, "cyclotomic of nonpositive order");
    // Phi_n = (X^n - 1) / prod_{d | n, d < n} Phi_d, by increasing d.
    std::map<long long, std::vector<mpz_class>> memo;
    for (long long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<mpz_class> num(static_cast<size_t>(d) + 1);
        num[0] = -1;
        num[static_cast<size_t>(d)] = 1;
        for (auto& [dd, phi_dd] : memo) {
            if (d % dd != 0) continue;
            // exact long division num /= phi_dd
            std::vector<mpz_class> quot(num.size() - phi_dd.size() + 1);
            for (long i = static_cast<long>(quot.size()) - 1; i >= 0; --i) {
                mpz_class c = num[static_cast<size_t>(i) + phi_dd.size() - 1];
                quot[static_cast<size_t>(i)] = c;
                if (c == 0) continue;
                for (size_t j = 0; j < phi_dd.size(); ++j)
                    num[static_cast<size_t>(i) + j] -= c * phi_dd[j];
            }
            num = std::move(quot);
        }
        memo[d] = std::move(num);
    }
    return memo[n];
}

std::vector<std::pair<long long, long>> cyclotomic_sparse(long long n) {
    long long rad = radical(n);
    long long step = n / rad;
    std::vector<mpz_class> base = cyclotomic_dense(rad);
    std::vector<std::pair<long long, long>> out;
    for (size_t i = 0; i < base.size(); ++i) {
        if (base[i] == 0) continue;
        out.emplace_back(static_cast<long long>(i) * step, static_cast<long>(base[i].get_si()));
    }
    return out;
}

Field Field::make(long ell, long e, long p, long nroot, long long M) {
    Field F;
    if (!is_prime(ell)) fail(Errc::BadParameter, "ell must be prime");
    if (!is_prime(p)) fail(Errc::BadParameter, "p must be prime");
    if (p == ell) fail(Errc::BadParameter, "p must differ from ell");
    if (e < 1) fail(Errc::BadParameter, "ramification degree must be positive");
    if (std::gcd(e, ell) != 1) fail(Errc::BadParameter, "tameness requires gcd(e, ell) = 1");
    if (nroot < 1) fail(Errc::BadParameter, "nroot must be at least 1");
    F.ell = ell;
    F.e = e;
    F.q = ell;
    F.delta = e - 1;
    F.p = p;
    F.nroot = nroot;
    if (M == 0) {
        M = ell - 1;
        for (long i = 0; i < nroot; ++i) {
            if (M > (1LL << 62) / ell) fail(Errc::SizeOverflow, "conductor too large");
            M *= ell;
        }
    }
    long long lpow = 1;
    for (long i = 0; i < nroot; ++i) lpow *= ell;
    if (M % lpow != 0) fail(Errc::BadParameter, "ell^nroot must divide M");
    if (ell > 2 && M % (ell - 1) != 0) fail(Errc::BadParameter, "(ell-1) must divide M");
    F.M = M;
    F.phiM = euler_phi(M);

    auto sparse = cyclotomic_sparse(M);
    // store the tail: X^phiM = -sum of lower terms
    for (auto& [k, c] : sparse) {
        if (k == F.phiM) continue;
        F.phi_tail_.emplace_back(k, c);
    }
    return F;
}

}  // namespace ellf
