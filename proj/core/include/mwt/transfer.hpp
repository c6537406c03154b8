#ifndef MWT_TRANSFER_HPP
#define MWT_TRANSFER_HPP

#include <string>
#include <vector>

#include "mwt/extension.hpp"
#include "mwt/kmw.hpp"
#include "mwt/residue.hpp"

namespace mwt {

/* GEO: the canonical transfer pinned by the residue characterization
        (sum over points of Tr after residue, plus residue at infinity, is 0).
   BT : the raw Bass-Tate normalization in the generator's power basis; equals
        GEO twisted by the unit -f(0) x, and is generator-dependent. */
enum class TransferMode { Bt, Geo };

TransferMode parse_mode(const std::string& s);  // "bt" | "geo"

struct DecompTerm {
    KmwFq alpha;                   // coefficient over the base field
    int eta = 0;
    std::vector<Poly> entry_polys;  // monic irreducible over base, deg strictly
                                    // increasing, deg <= d-1
};

/* Write beta as sum alpha_j eta^{m_j} [p_1(x), ..., p_n(x)]; the result
   re-normalizes to beta (checked by kmw_equal_fq in the tests). For prime
   [top:base] the entries are all linear. */
std::vector<DecompTerm> bt_decompose(const Extension& ext, const KmwFq& beta);
KmwFq recompose(const Extension& ext, const std::vector<DecompTerm>& dec);

/* transfer along a monogenic step; base and the whole recursion stay inside
   finite fields */
KmwFq transfer(const Extension& ext, const KmwFq& beta, TransferMode mode);

/* the transfer attached to a closed point of A^1 (canonical-root
   identification of the residue field); used by the verification suites */
KmwFq transfer_point(const ClosedPoint& x, const KmwFq& beta_over_kappa);

/* unit u with bt(beta) = geo(<u> beta): the square class of -f(0) gen */
FieldElement bt_twist_unit(const Extension& ext);

struct Tower {
    Field base = nullptr;
    std::vector<Extension> steps;  // steps[i].base == (i ? steps[i-1].top : base)
    Field top() const { return steps.empty() ? base : steps.back().top; }
    int total_degree() const;
};

Tower make_tower(Field base, const std::vector<Poly>& step_min_polys);
/* "GF(3) -> t^2+1 -> t^2+t+[2,0]" */
Tower parse_tower(const std::string& spec);
std::string tower_to_string(const Tower& t);

KmwFq transfer_tower(const Tower& tw, const KmwFq& beta, TransferMode mode);

/* square class (in the common top field) of the ratio of the stepwise
   min-poly-derivative trivializations of two towers */
FieldElement transition_unit(const Tower& a, const Tower& b);

}  // namespace mwt

#endif
