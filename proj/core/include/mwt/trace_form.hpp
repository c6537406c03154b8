#ifndef MWT_TRACE_FORM_HPP
#define MWT_TRACE_FORM_HPP

#include <vector>

#include "mwt/extension.hpp"
#include "mwt/gw.hpp"
#include "mwt/gw_q.hpp"

namespace mwt {

/* Scharlau transfer along the field trace: for e = sum c_i <b_i> over top,
   returns the class of (u,v) -> Tr(b_i u v) computed on the power basis of the
   generator and diagonalized. The Gram matrix is nondegenerate (separable). */
GwFq trace_form_transfer(const Extension& ext, const GwFq& e_top);

/* Q[x]/(f), f monic irreducible with rational coefficients; just enough
   arithmetic for trace forms of small number fields. */
class NumberFieldQ {
  public:
    explicit NumberFieldQ(std::vector<Rat> monic_min_poly);
    int degree() const { return d_; }

    using Elem = std::vector<Rat>;  // length d, power-basis coordinates
    Elem one() const;
    Elem gen() const;
    Elem mul(const Elem& a, const Elem& b) const;
    Rat trace(const Elem& a) const;
    Rat norm_of_gen() const;  // (-1)^d f(0)
    Elem min_poly_derivative_at_gen() const;

  private:
    std::vector<Rat> f_;  // length d+1
    int d_;
};

GwQ trace_form_transfer_q(const NumberFieldQ& K,
                          const std::vector<std::pair<NumberFieldQ::Elem, long>>& e_top);

}  // namespace mwt

#endif
