#ifndef MWT_PARSE_HPP
#define MWT_PARSE_HPP

#include <string>

#include "mwt/field.hpp"
#include "mwt/poly.hpp"
#include "mwt/ratfunc.hpp"

namespace mwt {

/* Element literal: integer, or bracketed coefficient vector "[c0,c1,...]". */
FieldElement parse_element(Field F, const std::string& s);

/* Polynomial in t with +,-,*,^, parentheses; coefficients are element
   literals: "t^2+t+2", "t^2+[1,1]*t+[2,0]", "2*t^3-2*t". */
Poly parse_poly(Field F, const std::string& s);

/* Quotient of polynomial expressions: "(t^2+1)/(t*(t+1))" or a polynomial. */
RatFunc parse_ratfunc(Field F, const std::string& s);

}  // namespace mwt

#endif
