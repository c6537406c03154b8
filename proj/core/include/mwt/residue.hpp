#ifndef MWT_RESIDUE_HPP
#define MWT_RESIDUE_HPP

#include <vector>

#include "mwt/kmw.hpp"
#include "mwt/point.hpp"

namespace mwt {

/* Uniformizer used at infinity. Residues at finite points always use the monic
   irreducible itself. The -1/t choice is the one under which the transfer
   attached to a rational point is the identity; the calibration tests pin it
   and test_residue demonstrates that 1/t fails. */
enum class InfinityUniformizer { MinusInverseT, InverseT };

struct ResidueContext {
    InfinityUniformizer inf = InfinityUniformizer::MinusInverseT;
};

/* residue at x with the canonical identification of the residue field */
KmwFq residue(const ClosedPoint& x, const KmwFt& g,
              const ResidueContext& ctx = {});
/* residue with an explicit root of pi in kappa (generator-matched transfers) */
KmwFq residue_via_root(const ClosedPoint& x, const KmwFt& g, Field kappa,
                       const FieldElement& root, const ResidueContext& ctx = {});

/* specialization s_x(g) = d_x([pi] g) at a degree-1 point; requires g
   unramified at x, otherwise throws value_error naming the point */
KmwFq specialize(const ClosedPoint& x, const KmwFt& g,
                 const ResidueContext& ctx = {});

/* distinct finite points where entries of g have nonzero valuation */
std::vector<ClosedPoint> support(const KmwFt& g);

/* zero test / equality over F_q(t): residues vanish on the union support and
   one unramified specialization vanishes (constant-field extension of odd
   degree when all rational points are ramified) */
bool kmw_is_zero_ft(const KmwFt& g, const ResidueContext& ctx = {});
bool kmw_equal_ft(const KmwFt& a, const KmwFt& b, const ResidueContext& ctx = {});

}  // namespace mwt

#endif
