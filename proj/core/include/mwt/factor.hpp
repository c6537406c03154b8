#ifndef MWT_FACTOR_HPP
#define MWT_FACTOR_HPP

#include <utility>
#include <vector>

#include "mwt/poly.hpp"

namespace mwt {

bool poly_is_irreducible(const Poly& f);

struct Factorization {
    FieldElement lead;                          // leading unit
    std::vector<std::pair<Poly, int>> factors;  // monic irreducible, sorted, distinct
};

/* Complete factorization over F_q (squarefree + distinct-degree + equal-degree
   splitting). Output order: degree, then coefficient order. Rejects zero. */
Factorization factor_poly(const Poly& f);

/* distinct roots in the coefficient field, sorted by element index */
std::vector<FieldElement> poly_roots(const Poly& f);

/* least monic irreducible of degree k over F (by base-p scan order) */
Poly least_irreducible(Field F, int k);

}  // namespace mwt

#endif
