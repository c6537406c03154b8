#ifndef MWT_RATFUNC_HPP
#define MWT_RATFUNC_HPP

#include <string>

#include "mwt/poly.hpp"

namespace mwt {

/* Nonzero rational function over F_q(t), normalized as unit * num/den with
   num, den monic and coprime. */
struct RatFunc {
    Field F = nullptr;
    FieldElement unit;
    Poly num, den;  // monic, coprime

    bool is_constant() const { return num.deg() == 0 && den.deg() == 0; }
    bool operator==(const RatFunc& o) const;
};

RatFunc rf_normalize(Field F, const FieldElement& unit, Poly num, Poly den);
RatFunc rf_from_poly(const Poly& f);                    // f != 0
RatFunc rf_from_quotient(const Poly& num, const Poly& den);
RatFunc rf_const(const FieldElement& a);                // a != 0
RatFunc rf_t(Field F);
RatFunc rf_mul(const RatFunc& a, const RatFunc& b);
RatFunc rf_div(const RatFunc& a, const RatFunc& b);
RatFunc rf_inv(const RatFunc& a);
/* additive combination; may be zero, signalled by returned flag */
bool rf_try_add(const RatFunc& a, const RatFunc& b, RatFunc& out);
/* substitute t -> g (g a rational function, possibly over another field) */
RatFunc rf_substitute(const RatFunc& a, const RatFunc& g);
/* coefficient-wise restriction to an extension of the constant field */
RatFunc rf_map_constants(const RatFunc& a, Field big);

/* order of vanishing at the monic irreducible pi */
int rf_valuation(const RatFunc& a, const Poly& pi);
int rf_valuation_at_infinity(const RatFunc& a);  // deg den - deg num

std::string rf_to_string(const RatFunc& a);

}  // namespace mwt

#endif
