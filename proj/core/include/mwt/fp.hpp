#ifndef MWT_FP_HPP
#define MWT_FP_HPP

#include <cstdint>

namespace mwt {

using i64 = long long;
using u64 = unsigned long long;

/* a*b mod m for m < 2^31; operands already reduced */
inline i64 mul_mod(i64 a, i64 b, i64 m) { return (a * b) % m; }

inline i64 add_mod(i64 a, i64 b, i64 m) {
    i64 s = a + b;
    return s >= m ? s - m : s;
}

inline i64 sub_mod(i64 a, i64 b, i64 m) {
    i64 s = a - b;
    return s < 0 ? s + m : s;
}

inline i64 pow_mod(i64 a, u64 e, i64 m) {
    i64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, a, m);
        a = mul_mod(a, a, m);
        e >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 p);
bool is_prime(i64 n);

/* deterministic uniform integer in [0, n); avoids std::uniform_int_distribution,
   whose output is implementation-defined */
template <class Rng>
u64 rand_below(Rng& rng, u64 n) {
    if (n <= 1) return 0;
    u64 lim = ~u64(0) - (~u64(0) % n);
    u64 x;
    do {
        x = rng();
    } while (x >= lim);
    return x % n;
}

}  // namespace mwt

#endif
