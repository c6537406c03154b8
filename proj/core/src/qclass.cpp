#include "mwt/qclass.hpp"

#include <cstdlib>

#include "mwt/errors.hpp"

namespace mwt {

static i64 squarefree_kernel(i64 n) {
    i64 out = 1;
    for (i64 d = 2; d * d <= n; ++d) {
        int e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        if (e & 1) out *= d;
    }
    return out * n;  // leftover n is prime or 1
}

QClass qclass_of_int(i64 a) {
    if (a == 0) throw value_error("square class of zero");
    QClass c;
    c.sign = a < 0 ? -1 : 1;
    c.sf = squarefree_kernel(a < 0 ? -a : a);
    return c;
}

QClass qclass_of(const Rat& a) {
    if (a.numerator() == 0) throw value_error("square class of zero");
    // a ~ num*den modulo squares
    return qclass_of_int(a.numerator() * a.denominator());
}

QClass qclass_mul(const QClass& a, const QClass& b) {
    return qclass_of_int(a.rep() * b.rep());
}

std::vector<i64> qclass_primes(const QClass& a) {
    std::vector<i64> ps;
    i64 n = a.sf;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

static int legendre(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw value_error("legendre symbol of multiple of p");
    return pow_mod(a, (u64)((p - 1) / 2), p) == 1 ? 1 : -1;
}

int hilbert_symbol(const QClass& a, const QClass& b, i64 place) {
    i64 x = a.rep(), y = b.rep();
    if (place == 0) {  // real place
        return (x < 0 && y < 0) ? -1 : 1;
    }
    if (place == 2) {
        // x = 2^alpha u, y = 2^beta v with u, v odd
        int alpha = 0, beta = 0;
        while (x % 2 == 0) x /= 2, ++alpha;
        while (y % 2 == 0) y /= 2, ++beta;
        auto eps = [](i64 u) { return (((u - 1) / 2) % 2 + 2) % 2; };
        auto omega = [](i64 u) { return (((u * u - 1) / 8) % 2 + 2) % 2; };
        i64 e = eps(x) * eps(y) + alpha * omega(y) + beta * omega(x);
        return (e % 2 == 0) ? 1 : -1;
    }
    // odd prime
    int alpha = 0, beta = 0;
    while (x % place == 0) x /= place, ++alpha;
    while (y % place == 0) y /= place, ++beta;
    int s = 1;
    if ((alpha & 1) && (beta & 1) && ((place - 1) / 2) % 2 == 1) s = -s;
    if (beta & 1) s *= legendre(x, place);
    if (alpha & 1) s *= legendre(y, place);
    return s;
}

std::string qclass_to_string(const QClass& a) { return std::to_string(a.rep()); }

}  // namespace mwt
