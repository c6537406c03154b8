#ifndef MWT_POINT_HPP
#define MWT_POINT_HPP

#include <string>

#include "mwt/extension.hpp"
#include "mwt/poly.hpp"

namespace mwt {

/* Closed point of the affine (or projective) line over F_q: a monic
   irreducible polynomial, or the point at infinity. */
struct ClosedPoint {
    Field F = nullptr;
    bool at_infinity = false;
    Poly pi;  // monic irreducible; unused at infinity

    int degree() const { return at_infinity ? 1 : pi.deg(); }
    bool operator==(const ClosedPoint& o) const;
};

ClosedPoint point_finite(const Poly& pi_monic_irreducible);
ClosedPoint point_infinity(Field F);
ClosedPoint point_rational(Field F, const FieldElement& a);  // t - a

Field residue_field(const ClosedPoint& x);
/* least root of pi in the residue field; the fixed identification used by
   residue maps and point transfers */
FieldElement canonical_point_root(const ClosedPoint& x);

std::string point_to_string(const ClosedPoint& x);

}  // namespace mwt

#endif
