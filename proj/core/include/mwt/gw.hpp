#ifndef MWT_GW_HPP
#define MWT_GW_HPP

#include <string>
#include <utility>
#include <vector>

#include "mwt/field.hpp"

namespace mwt {

/* Element of GW(F_q), q odd: integer combination of rank-1 diagonal forms.
   Terms are kept as written; equality goes through the complete invariant
   pair (rank, disc). */
struct GwFq {
    Field F = nullptr;
    std::vector<std::pair<FieldElement, long>> terms;  // (unit, coefficient)
};

struct GwInvFq {
    long rank = 0;
    bool disc_square = true;  // plain product discriminant
    bool operator==(const GwInvFq& o) const {
        return rank == o.rank && disc_square == o.disc_square;
    }
};

/* W(F_q) class: (rank mod 2, disc adjusted so the hyperbolic form maps to 0). */
struct WittFq {
    bool dim_odd = false;
    bool disc_square = true;
    bool is_zero() const { return !dim_odd && disc_square; }
    bool operator==(const WittFq& o) const {
        return dim_odd == o.dim_odd && disc_square == o.disc_square;
    }
    bool operator!=(const WittFq& o) const { return !(*this == o); }
};

GwFq gw_zero(Field F);
GwFq gw_one(Field F);                                     // <1>
GwFq gw_unit(const FieldElement& a);                      // <a>, a != 0
GwFq gw_diag(Field F, const std::vector<FieldElement>& units);
GwFq gw_diag_ints(Field F, const std::vector<i64>& units);
GwFq gw_add(const GwFq& a, const GwFq& b);
GwFq gw_sub(const GwFq& a, const GwFq& b);
GwFq gw_neg(const GwFq& a);
GwFq gw_scale(const GwFq& a, long n);
GwFq gw_mul(const GwFq& a, const GwFq& b);
GwFq gw_hyperbolic(Field F);        // <1> + <-1>
GwFq n_epsilon(Field F, long n);    // sum_{i=1..n} <-1>^{i-1}

GwInvFq gw_invariants(const GwFq& a);
bool gw_equal(const GwFq& a, const GwFq& b);
bool gw_is_zero(const GwFq& a);

WittFq witt_project(const GwFq& a);
WittFq witt_add(Field F, const WittFq& a, const WittFq& b);
WittFq witt_neg(Field F, const WittFq& a);
WittFq witt_scale(Field F, const WittFq& a, long n);
WittFq witt_zero();
/* additive order in W(F_q); always 1, 2 or 4 */
int witt_additive_order(Field F, const WittFq& a);

/* symmetric Gaussian elimination with pivot repair; rejects degenerate input */
std::vector<FieldElement> diagonalize_gram(Field F,
                                           const std::vector<std::vector<FieldElement>>& M);

/* least n <= bound with a^n = 0; requires rank(a) = 0 */
int nilpotent_exponent(const GwFq& a, int bound = 8);

/* restriction along a field embedding */
GwFq gw_res(const GwFq& a, Field big);

std::string gw_to_string(const GwFq& a);

}  // namespace mwt

#endif
