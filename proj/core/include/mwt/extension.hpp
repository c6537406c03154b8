#ifndef MWT_EXTENSION_HPP
#define MWT_EXTENSION_HPP

#include <memory>
#include <utility>
#include <vector>

#include "mwt/factor.hpp"
#include "mwt/poly.hpp"

namespace mwt {

/* Canonical embedding F_{p^m} -> F_{p^n} (m | n): the base modulus is sent to
   its least root in the top field. Memoized; all call sites share the choice. */
FieldElement embedding_root(Field small, Field big);
FieldElement embed_field(Field small, Field big, const FieldElement& a);
/* map coefficients of a polynomial over `small` into `big` */
Poly poly_map(const Poly& f, Field big);

/* A monogenic step E c E(x) = top, with explicit generator and minimal
   polynomial. Carries the linear-algebra needed to write elements of top as
   polynomials in the generator with base coefficients. */
class Extension {
  public:
    Field base;
    Field top;
    int d;             // [top : base]
    FieldElement gen;  // in top, min_poly(gen) = 0
    Poly min_poly;     // monic irreducible over base, degree d

    FieldElement embed(const FieldElement& a_base) const;
    /* coordinates of a in the basis gen^0..gen^{d-1} over base */
    std::vector<FieldElement> relative_coords(const FieldElement& a_top) const;
    /* evaluate a degree < d polynomial over base at the generator */
    FieldElement eval_at_gen(const Poly& f_over_base) const;

    std::pair<FieldElement, FieldElement> norm_and_trace(const FieldElement& a_top) const;
    FieldElement norm(const FieldElement& a_top) const;
    FieldElement trace(const FieldElement& a_top) const;
    Poly min_poly_of(const FieldElement& a_top) const;  // over base, monic irreducible

    FieldElement min_poly_derivative_at_gen() const;  // f'(gen), nonzero

    Extension(Field base_, Field top_, FieldElement gen_, Poly min_poly_);

  private:
    std::vector<i64> coord_matrix_inv_;  // k_top x k_top over F_p, row-major
    void build_coord_solver();
};

/* top = canonical field of degree [base]*d; generator = class of t in top.  */
Extension make_extension(Field base, int d, i64 bound = kDefaultFieldBound);
/* top = canonical field; generator = least root of f in top. */
Extension extension_from_min_poly(Field base, const Poly& f, i64 bound = kDefaultFieldBound);
/* generator given explicitly as an element of top (must generate top over base) */
Extension extension_with_generator(Field base, Field top, const FieldElement& gen);

/* F_{q^d} (x) F_{q^r} over F_q  ~  gcd(d,r) copies of F_{q^lcm(d,r)};
   returns [(component degree, count)] */
std::vector<std::pair<int, int>> tensor_split(int d, int r);

}  // namespace mwt

#endif
