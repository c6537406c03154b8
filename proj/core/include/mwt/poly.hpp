#ifndef MWT_POLY_HPP
#define MWT_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "mwt/field.hpp"

namespace mwt {

/* Dense univariate polynomial over a finite field, coefficients low-to-high.
   Zero polynomial has empty coefficient list. */
struct Poly {
    Field F = nullptr;
    std::vector<FieldElement> c;

    int deg() const { return (int)c.size() - 1; }  // -1 for zero
    bool is_zero() const { return c.empty(); }
    bool is_monic() const;
    FieldElement lead() const;
    FieldElement constant() const;  // coefficient of t^0 (zero if empty)
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly poly_zero(Field F);
Poly poly_one(Field F);
Poly poly_t(Field F);                                  // the monomial t
Poly poly_from_coeffs(Field F, std::vector<i64> c);    // prime-subfield coeffs
Poly poly_from_elems(Field F, std::vector<FieldElement> c);
Poly poly_const(const FieldElement& a);
Poly poly_trim(Poly f);

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const FieldElement& s);
Poly poly_pow(const Poly& a, u64 e);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b);  // monic
Poly poly_derivative(const Poly& a);
Poly poly_monic(const Poly& a);
Poly poly_powmod(const Poly& a, u64 e, const Poly& m);
FieldElement poly_eval(const Poly& a, const FieldElement& x);
Poly poly_compose(const Poly& a, const Poly& inner);

/* total order: degree, then coefficient indices low-to-high */
bool poly_less(const Poly& a, const Poly& b);

std::string poly_to_string(const Poly& f, const std::string& var = "t");

}  // namespace mwt

#endif
