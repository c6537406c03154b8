#include "mwt/factor.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "mwt/errors.hpp"

namespace mwt {

bool poly_is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    int n = f.deg();
    Field F = f.F;
    Poly fm = poly_monic(f);
    // Rabin: t^{q^n} = t mod f, and t^{q^{n/r}} - t coprime to f for primes r | n
    Poly x = poly_t(F);
    auto frob_iter = [&](const Poly& g, int times) {
        Poly r = g;
        for (int i = 0; i < times; ++i) r = poly_powmod(r, (u64)F->q, fm);
        return r;
    };
    Poly xn = frob_iter(x, n);
    if (!poly_sub(xn, poly_mod(x, fm)).is_zero()) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r || !is_prime(r)) continue;
        Poly xm = frob_iter(x, n / r);
        Poly g = poly_gcd(fm, poly_sub(xm, x));
        if (g.deg() != 0) return false;
    }
    return true;
}

/* p-th root of a in F_{p^k}: a^(q/p) */
static FieldElement pth_root(const FieldElement& a) {
    return a.F->pow(a, (u64)(a.F->q / a.F->p));
}

/* squarefree part handling f' = 0 (f a p-th power) */
static void squarefree_decompose(const Poly& f, std::map<int, Poly>& out, int mult) {
    if (f.deg() < 1) return;
    Poly d = poly_derivative(f);
    if (d.is_zero()) {
        // f = g(t^p) with g coefficients the p-th roots
        Field F = f.F;
        std::vector<FieldElement> gc;
        for (int i = 0; i <= f.deg(); i += (int)F->p) gc.push_back(pth_root(f.c[(size_t)i]));
        squarefree_decompose(poly_trim({F, gc}), out, mult * (int)F->p);
        return;
    }
    Poly g = poly_gcd(f, d);
    Poly w = poly_divmod(f, g).first;  // product of factors with multiplicity not divisible by p
    int i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, g);
        Poly fac = poly_divmod(w, y).first;  // product of factors of multiplicity exactly i
        if (fac.deg() > 0) {
            auto it = out.find(i * mult);
            if (it == out.end())
                out[i * mult] = fac;
            else
                it->second = poly_mul(it->second, fac);
        }
        w = y;
        g = poly_divmod(g, y).first;
        ++i;
    }
    if (g.deg() > 0) squarefree_decompose(g, out, mult);  // leftover p-th powers
}

/* split a squarefree product of degree-d irreducibles (Cantor-Zassenhaus) */
static void equal_degree_split(const Poly& f, int d, std::vector<Poly>& out,
                               std::mt19937_64& rng) {
    if (f.deg() == d) {
        out.push_back(poly_monic(f));
        return;
    }
    Field F = f.F;
    u64 e = 1;
    for (int i = 0; i < d; ++i) e *= (u64)F->q;
    e = (e - 1) / 2;
    for (;;) {
        std::vector<FieldElement> rc;
        for (int i = 0; i < f.deg(); ++i)
            rc.push_back(F->from_index((i64)rand_below(rng, (u64)F->q)));
        Poly r = poly_trim({F, rc});
        if (r.deg() < 1) continue;
        Poly g = poly_gcd(f, r);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(poly_divmod(f, g).first, d, out, rng);
            return;
        }
        Poly h = poly_sub(poly_powmod(r, e, f), poly_one(F));
        g = poly_gcd(f, h);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            equal_degree_split(g, d, out, rng);
            equal_degree_split(poly_divmod(f, g).first, d, out, rng);
            return;
        }
    }
}

Factorization factor_poly(const Poly& f) {
    if (f.is_zero()) throw value_error("factorization of the zero polynomial");
    Field F = f.F;
    Factorization out;
    out.lead = f.lead();
    if (f.deg() == 0) return out;
    Poly fm = poly_monic(f);

    std::map<int, Poly> sqfree;
    squarefree_decompose(fm, sqfree, 1);

    // internal randomness only; output is sorted, so results are deterministic
    std::mt19937_64 rng(0x5eedf00dULL);
    std::map<std::string, std::pair<Poly, int>> acc;  // keyed for dedup/merge
    for (auto& [mult, part] : sqfree) {
        // distinct-degree on each squarefree part
        Poly rest = part;
        Poly x = poly_t(F);
        Poly xq = x;
        for (int d = 1; rest.deg() >= d; ++d) {
            xq = poly_powmod(xq, (u64)F->q, rest);
            Poly g = poly_gcd(rest, poly_sub(xq, x));
            if (g.deg() > 0) {
                std::vector<Poly> irr;
                equal_degree_split(g, d, irr, rng);
                for (auto& h : irr) {
                    std::string key = poly_to_string(h);
                    auto it = acc.find(key);
                    if (it == acc.end())
                        acc[key] = {h, mult};
                    else
                        it->second.second += mult;
                }
                rest = poly_divmod(rest, g).first;
                xq = poly_mod(xq, rest.deg() > 0 ? rest : poly_one(F));
            }
            if (rest.deg() < 1) break;
        }
        if (rest.deg() >= 1) {
            std::string key = poly_to_string(rest);
            auto it = acc.find(key);
            if (it == acc.end())
                acc[key] = {rest, mult};
            else
                it->second.second += mult;
        }
    }
    for (auto& [key, pm] : acc) out.factors.push_back(pm);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

std::vector<FieldElement> poly_roots(const Poly& f) {
    std::vector<FieldElement> roots;
    if (f.is_zero()) throw value_error("roots of the zero polynomial");
    auto fac = factor_poly(f);
    for (auto& [g, m] : fac.factors)
        if (g.deg() == 1) roots.push_back(-g.c[0]);  // t + c -> root -c
    std::sort(roots.begin(), roots.end(), [&](const FieldElement& a, const FieldElement& b) {
        return f.F->index_of(a) < f.F->index_of(b);
    });
    return roots;
}

Poly least_irreducible(Field F, int k) {
    if (k == 1) return poly_t(F);
    i64 total = 1;
    for (int i = 0; i < k; ++i) total *= F->q;
    for (i64 n = 0; n < total; ++n) {
        std::vector<FieldElement> c;
        i64 m = n;
        for (int i = 0; i < k; ++i) {
            c.push_back(F->from_index(m % F->q));
            m /= F->q;
        }
        c.push_back(F->one());
        Poly f = poly_trim({F, c});
        if (poly_is_irreducible(f)) return f;
    }
    throw error("no irreducible of requested degree (impossible)");
}

}  // namespace mwt
