#include "ellf/duality.hpp"

#include <algorithm>

namespace ellf {

namespace {

// additive reduction into l^{-r} o / l^N
KElem group_red(const Field& F, const KElem& x, long N) { return x.reduce_mod(N); }

}  // namespace

std::vector<KElem> dual_cosets(const Field& F, long r, long N) {
    // l^{-N} d^{-1} / l^{r} d^{-1}: digits at positions -N - delta .. r - delta - 1
    return enumerate_digit_range(F, -N - F.delta, r - F.delta);
}

GroupAlgebraElem identity_elem(const Field& F, long r, long N) {
    GroupAlgebraElem x{r, N, {}};
    for (const auto& a : enumerate_cosets(F, r, N)) x.coeff.emplace(a, Cyc::one(F));
    return x;
}

GroupAlgebraElem make_xb(const Field& F, long r, long N, const KElem& b) {
    GroupAlgebraElem x{r, N, {}};
    for (const auto& a : enumerate_cosets(F, r, N)) x.coeff.emplace(a, add_char(a * b));
    return x;
}

GroupAlgebraElem algebra_mul(const GroupAlgebraElem& x, const GroupAlgebraElem& y) {
    GroupAlgebraElem out{x.r, x.N, {}};
    for (const auto& [a, cx] : x.coeff) {
        auto it = y.coeff.find(a);
        if (it == y.coeff.end()) continue;
        Cyc prod = cx * it->second;
        if (!prod.is_zero()) out.coeff.emplace(a, prod);
    }
    return out;
}

Cyc comult_coeff(const Field& F, const GroupAlgebraElem& x, const KElem& u, const KElem& v) {
    KElem sum = group_red(F, u + v, x.N);
    auto it = x.coeff.find(sum);
    if (it == x.coeff.end()) return Cyc::zero(F);
    return it->second;
}

bool comult_is_grouplike(const Field& F, const GroupAlgebraElem& x) {
    auto G = enumerate_cosets(F, x.r, x.N);
    for (const auto& u : G)
        for (const auto& v : G) {
            Cyc lhs = comult_coeff(F, x, u, v);
            Cyc xu = x.coeff.count(u) ? x.coeff.at(u) : Cyc::zero(F);
            Cyc xv = x.coeff.count(v) ? x.coeff.at(v) : Cyc::zero(F);
            if (!(lhs == xu * xv)) return false;
        }
    return true;
}

std::vector<std::vector<Cyc>> pairing_matrix(const Field& F, long r, long N) {
    auto G = enumerate_cosets(F, r, N);
    auto Gv = dual_cosets(F, r, N);
    std::vector<std::vector<Cyc>> P;
    P.reserve(G.size());
    for (const auto& a : G) {
        std::vector<Cyc> row;
        row.reserve(Gv.size());
        for (const auto& b : Gv) row.push_back(add_char(a * b));
        P.push_back(std::move(row));
    }
    return P;
}

bool verify_perfect(const Field& F, long r, long N) {
    auto P = pairing_matrix(F, r, N);
    size_t rows = P.size();
    size_t cols = rows ? P[0].size() : 0;
    if (rows != cols) return false;
    // columns pairwise distinct
    for (size_t j = 0; j < cols; ++j)
        for (size_t k = j + 1; k < cols; ++k) {
            bool same = true;
            for (size_t i = 0; i < rows; ++i)
                if (!(P[i][j] == P[i][k])) {
                    same = false;
                    break;
                }
            if (same) return false;
        }
    // rows pairwise distinct
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = i + 1; k < rows; ++k)
            if (P[i] == P[k]) return false;
    return true;
}

bool verify_level_compat(const Field& F, long r, long N) {
    // direction 1: G_{r,N} inside G_{r+1,N}; dual projection
    for (const auto& a : enumerate_cosets(F, r, N))
        for (const auto& b : dual_cosets(F, r + 1, N)) {
            KElem bred = b.reduce_mod(r - F.delta);
            if (!(add_char(a * b) == add_char(a * bred))) return false;
        }
    // direction 2: projection G_{r,N+1} -> G_{r,N}; dual inclusion
    for (const auto& a : enumerate_cosets(F, r, N + 1))
        for (const auto& b : dual_cosets(F, r, N)) {
            KElem ared = a.reduce_mod(N);
            if (!(add_char(a * b) == add_char(ared * b))) return false;
        }
    return true;
}

GrouplikeReport classify_grouplikes(const Field& F, long r, long N, long cap) {
    GrouplikeReport rep;
    auto G = enumerate_cosets(F, r, N);
    rep.group_size = static_cast<long>(G.size());
    if (rep.group_size > cap) fail(Errc::SizeOverflow, "group order exceeds classification cap");

    // additive generators: lowest pi-position in each residue class mod e
    // within [-r, N); generator pi^{j0} has order ell^{ceil((N - j0) / e)}
    std::vector<std::pair<long, long>> gens;  // (position, order exponent)
    for (long i = 0; i < F.e; ++i) {
        long j0 = kValInf;
        for (long j = -r; j < N; ++j)
            if (((j % F.e) + F.e) % F.e == i) {
                j0 = j;
                break;
            }
        if (j0 == kValInf) continue;
        long k = (N - j0 + F.e - 1) / F.e;
        gens.emplace_back(j0, k);
    }

    auto Gv = dual_cosets(F, r, N);
    std::vector<GroupAlgebraElem> xbs;
    xbs.reserve(Gv.size());
    for (const auto& b : Gv) xbs.push_back(make_xb(F, r, N, b));

    // enumerate all homomorphisms z: G -> roots of unity
    std::vector<long> pick(gens.size(), 0);
    long homs = 0;
    bool all_comult = true, all_matched = true;
    while (true) {
        GroupAlgebraElem z{r, N, {}};
        for (const auto& a : G) {
            auto digits = a.digits();
            Cyc v = Cyc::one(F);
            for (size_t gi = 0; gi < gens.size(); ++gi) {
                auto [j0, k] = gens[gi];
                long long ordg = pow_z(F.ell, k).get_si();
                // coefficient of generator j0 in a: sum over positions j = j0 + e*t
                long long mult = 0;
                long long sc = 1;
                for (long j = j0; j < N; j += F.e) {
                    auto it = digits.find(j);
                    if (it != digits.end()) mult += it->second * sc;
                    sc *= F.ell;
                }
                if (pick[gi] != 0 && mult != 0)
                    v = v * Cyc::root(F, (mult % ordg) * pick[gi], ordg);
            }
            z.coeff.emplace(a, v);
        }
        ++homs;
        if (!comult_is_grouplike(F, z)) all_comult = false;
        long matches = 0;
        for (const auto& xb : xbs)
            if (xb.coeff == z.coeff) ++matches;
        if (matches != 1) all_matched = false;

        size_t i = 0;
        while (i < pick.size()) {
            long long ordg = pow_z(F.ell, gens[i].second).get_si();
            if (++pick[i] < ordg) break;
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
    rep.grouplike_count = homs;
    rep.comult_check = all_comult;
    rep.every_hom_is_xb = all_matched;
    return rep;
}

}  // namespace ellf
