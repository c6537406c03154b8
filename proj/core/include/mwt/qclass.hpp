#ifndef MWT_QCLASS_HPP
#define MWT_QCLASS_HPP

#include <boost/rational.hpp>
#include <string>
#include <vector>

#include "mwt/fp.hpp"

namespace mwt {

using Rat = boost::rational<long long>;

/* Square class of a nonzero rational: sign and squarefree kernel. */
struct QClass {
    int sign = 1;  // +1 or -1
    i64 sf = 1;    // positive squarefree

    bool is_one() const { return sign == 1 && sf == 1; }
    bool operator==(const QClass& o) const { return sign == o.sign && sf == o.sf; }
    bool operator!=(const QClass& o) const { return !(*this == o); }
    bool operator<(const QClass& o) const {
        return sign != o.sign ? sign > o.sign : sf < o.sf;
    }
    i64 rep() const { return sign * sf; }  // canonical integer representative
};

QClass qclass_of(const Rat& a);    // throws on zero
QClass qclass_of_int(i64 a);
QClass qclass_mul(const QClass& a, const QClass& b);

/* prime factors of the squarefree kernel */
std::vector<i64> qclass_primes(const QClass& a);

/* Hilbert symbol (a,b)_v over Q_v; place = 2, an odd prime, or 0 for the real
   place. Values +1 / -1. */
int hilbert_symbol(const QClass& a, const QClass& b, i64 place);

std::string qclass_to_string(const QClass& a);

}  // namespace mwt

#endif
