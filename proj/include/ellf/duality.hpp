#pragma once

#include <map>
#include <vector>

#include "ellf/kelement.hpp"

namespace ellf {

// Element of the group algebra of G = l^{-r} o_K / l^N over the scalar ring,
// written on the idempotent basis delta_a.
struct GroupAlgebraElem {
    long r = 0, N = 0;
    std::map<KElem, Cyc> coeff;  // canonical reps -> coefficient
};

// representatives of the dual group l^{-N} d^{-1} / l^{r} d^{-1}
std::vector<KElem> dual_cosets(const Field& F, long r, long N);

// identity sum_a delta_a
GroupAlgebraElem identity_elem(const Field& F, long r, long N);
// x_b = sum_a zeta^{tr(ab)} delta_a, b in l^{-N} d^{-1} reduced mod l^r d^{-1}
GroupAlgebraElem make_xb(const Field& F, long r, long N, const KElem& b);

// pointwise algebra product (delta_a are orthogonal idempotents)
GroupAlgebraElem algebra_mul(const GroupAlgebraElem& x, const GroupAlgebraElem& y);

// comultiplication coefficients c(u, v) = coeff(u + v)
Cyc comult_coeff(const Field& F, const GroupAlgebraElem& x, const KElem& u, const KElem& v);
// s(x) == x (x) x as tables, checked on all pairs
bool comult_is_grouplike(const Field& F, const GroupAlgebraElem& x);

// P[a][b] = zeta^{tr(ab)} over G x G^vee
std::vector<std::vector<Cyc>> pairing_matrix(const Field& F, long r, long N);
// kernel triviality on both sides: columns distinct, rows distinct
bool verify_perfect(const Field& F, long r, long N);

// pairing values computed through level (r+1, N) and (r, N+1) agree with the
// level-(r, N) values under the natural projection/inclusion maps
bool verify_level_compat(const Field& F, long r, long N);

struct GrouplikeReport {
    long group_size = 0;
    long grouplike_count = 0;
    bool every_hom_is_xb = false;  // each multiplicative z equals x_b for exactly one b
    bool comult_check = false;     // s(z) = z (x) z for every constructed z
};
// exhaustive classification of grouplike elements for |G| within the cap
GrouplikeReport classify_grouplikes(const Field& F, long r, long N, long cap = 81);

}  // namespace ellf
