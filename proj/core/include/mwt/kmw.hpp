#ifndef MWT_KMW_HPP
#define MWT_KMW_HPP

#include <string>
#include <vector>

#include "mwt/gw.hpp"
#include "mwt/ratfunc.hpp"

namespace mwt {

/* Milnor-Witt K-theory elements as formal sums of symbols
       coeff * eta^m [u_1, ..., u_k],   degree = k - m.
   Two entry types: field units (constant field level) and rational functions
   (over F_q(t)). Elements are homogeneous; the degree is tracked explicitly so
   the zero element knows its degree. */

template <class E>
struct KmwTerm {
    long coeff = 1;
    int eta = 0;
    std::vector<E> entries;
};

struct KmwFq {
    Field F = nullptr;
    int degree = 0;
    std::vector<KmwTerm<FieldElement>> terms;
    bool syntactically_zero() const { return terms.empty(); }
};

struct KmwFt {
    Field F = nullptr;  // constant field of F(t)
    int degree = 0;
    std::vector<KmwTerm<RatFunc>> terms;
    bool syntactically_zero() const { return terms.empty(); }
};

KmwFq kmw_zero(Field F, int degree);
KmwFq kmw_symbol(Field F, int eta, const std::vector<FieldElement>& entries);
KmwFq kmw_const(Field F, long n);  // n * 1 in degree 0
KmwFq kmw_add(const KmwFq& a, const KmwFq& b);
KmwFq kmw_sub(const KmwFq& a, const KmwFq& b);
KmwFq kmw_neg(const KmwFq& a);
KmwFq kmw_scale(const KmwFq& a, long n);
KmwFq kmw_mul(const KmwFq& a, const KmwFq& b);
KmwFq eta_mul(const KmwFq& a, int m = 1);
/* multiplication by the form <u> = 1 + eta [u] */
KmwFq kmw_mul_unit_form(const FieldElement& u, const KmwFq& a);
/* the element epsilon = -<-1> (degree 0) */
KmwFq kmw_epsilon(Field F);

KmwFt kmw_zero_ft(Field F, int degree);
KmwFt kmw_symbol_ft(Field F, int eta, const std::vector<RatFunc>& entries);
KmwFt kmw_add_ft(const KmwFt& a, const KmwFt& b);
KmwFt kmw_sub_ft(const KmwFt& a, const KmwFt& b);
KmwFt kmw_neg_ft(const KmwFt& a);
KmwFt kmw_scale_ft(const KmwFt& a, long n);
KmwFt kmw_mul_ft(const KmwFt& a, const KmwFt& b);

/* restrictions */
KmwFt kmw_res_to_ft(const KmwFq& a);                       // constants into F(t)
KmwFq kmw_res(const KmwFq& a, Field big);                  // canonical embedding
KmwFq kmw_res_via(const KmwFq& a, Field big,
                  const std::vector<FieldElement>& basis_images);  // explicit embedding of entries
KmwFt kmw_res_constants_ft(const KmwFt& a, Field big);     // F(t) -> F'(t)
KmwFt kmw_substitute(const KmwFt& a, const RatFunc& image_of_t);

/* --- normal form over a finite field ------------------------------------- */

/* Complete invariants of K^MW_n(F_q):
     n >= 2 : the group vanishes
     n  = 1 : unit in F_q^x (Milnor part) plus the Witt class of the element
     n  = 0 : GW(F_q) invariants (rank, disc)
     n  < 0 : W(F_q) class */
struct KmwInvFq {
    int degree = 0;
    bool trivial_group = false;  // degree >= 2
    FieldElement milnor_unit;    // degree 1
    GwInvFq gw;                  // degree 0
    WittFq witt;                 // degrees <= 1
    bool operator==(const KmwInvFq& o) const;
};

KmwInvFq normalize_fq(const KmwFq& a);
bool kmw_equal_fq(const KmwFq& a, const KmwFq& b);
bool kmw_is_zero_fq(const KmwFq& a);
/* exact GW value of a degree-0 element (expands symbols; for small elements) */
GwFq kmw_to_gw(const KmwFq& a);
/* GW invariants of a degree-0 element without expanding */
GwInvFq kmw_gw_invariants(const KmwFq& a);
bool kmw_matches_gw(const KmwFq& a, const GwFq& g);

std::string kmw_to_string(const KmwFq& a);
std::string kmw_to_string(const KmwFt& a);
std::string kmw_inv_to_string(const KmwInvFq& inv);

}  // namespace mwt

#endif
