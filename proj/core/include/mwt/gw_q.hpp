#ifndef MWT_GW_Q_HPP
#define MWT_GW_Q_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mwt/qclass.hpp"

namespace mwt {

/* Element of GW(Q) as an integer combination of <a> with a a square-class
   representative. Equality is decided by rank, signature, discriminant and
   Hasse symbols at the relevant places (Hasse-Minkowski + Witt cancellation). */
struct GwQ {
    std::vector<std::pair<QClass, long>> terms;
};

struct GwInvQ {
    long rank = 0;
    long signature = 0;
    QClass disc;
    std::map<i64, int> hasse;  // place (2 or odd prime) -> +-1, at the support
};

GwQ gwq_zero();
GwQ gwq_unit(const QClass& a);
GwQ gwq_diag(const std::vector<Rat>& units);
GwQ gwq_add(const GwQ& a, const GwQ& b);
GwQ gwq_sub(const GwQ& a, const GwQ& b);
GwQ gwq_neg(const GwQ& a);
GwQ gwq_mul(const GwQ& a, const GwQ& b);
GwQ nq_epsilon(long n);

/* rank/signature/disc are additive invariants of the formal sum; hasse is
   reported for the positive part of the element written as P - N */
GwInvQ gwq_invariants(const GwQ& a);
bool gwq_equal(const GwQ& a, const GwQ& b);
bool gwq_is_zero(const GwQ& a);

std::vector<Rat> diagonalize_gram_q(const std::vector<std::vector<Rat>>& M);

std::string gwq_to_string(const GwQ& a);

}  // namespace mwt

#endif
