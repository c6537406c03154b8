#include "mwt/ratfunc.hpp"

#include "mwt/errors.hpp"
#include "mwt/extension.hpp"

namespace mwt {

bool RatFunc::operator==(const RatFunc& o) const {
    return F == o.F && unit == o.unit && num == o.num && den == o.den;
}

RatFunc rf_normalize(Field F, const FieldElement& unit, Poly num, Poly den) {
    if (num.is_zero() || den.is_zero() || unit.is_zero())
        throw value_error("rational function entries must be nonzero");
    FieldElement u = unit;
    u = u * num.lead();
    u = u * F->inv(den.lead());
    num = poly_monic(num);
    den = poly_monic(den);
    Poly g = poly_gcd(num, den);
    if (g.deg() > 0) {
        num = poly_divmod(num, g).first;
        den = poly_divmod(den, g).first;
    }
    return {F, u, num, den};
}

RatFunc rf_from_poly(const Poly& f) {
    return rf_normalize(f.F, f.F->one(), f, poly_one(f.F));
}

RatFunc rf_from_quotient(const Poly& num, const Poly& den) {
    return rf_normalize(num.F, num.F->one(), num, den);
}

RatFunc rf_const(const FieldElement& a) {
    return rf_normalize(a.F, a, poly_one(a.F), poly_one(a.F));
}

RatFunc rf_t(Field F) { return rf_from_poly(poly_t(F)); }

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    if (a.F != b.F) throw value_error("rational functions over different fields");
    return rf_normalize(a.F, a.unit * b.unit, poly_mul(a.num, b.num), poly_mul(a.den, b.den));
}

RatFunc rf_inv(const RatFunc& a) {
    return rf_normalize(a.F, a.F->inv(a.unit), a.den, a.num);
}

RatFunc rf_div(const RatFunc& a, const RatFunc& b) { return rf_mul(a, rf_inv(b)); }

bool rf_try_add(const RatFunc& a, const RatFunc& b, RatFunc& out) {
    if (a.F != b.F) throw value_error("rational functions over different fields");
    Poly na = poly_scale(poly_mul(a.num, b.den), a.unit);
    Poly nb = poly_scale(poly_mul(b.num, a.den), b.unit);
    Poly n = poly_add(na, nb);
    if (n.is_zero()) return false;
    out = rf_normalize(a.F, a.F->one(), n, poly_mul(a.den, b.den));
    return true;
}

RatFunc rf_substitute(const RatFunc& a, const RatFunc& g) {
    // compose: replace t by g = g.unit * g.num/g.den; clear denominators
    Field F = g.F;
    auto lift = [&](const Poly& f) {
        // f(g) as numerator over den^deg f
        Poly num = poly_zero(F), gn = poly_scale(g.num, g.unit);
        Poly denpow = poly_one(F);
        std::vector<Poly> gd_pows{poly_one(F)};
        for (int i = 1; i <= f.deg(); ++i)
            gd_pows.push_back(poly_mul(gd_pows.back(), g.den));
        Poly gn_pow = poly_one(F);
        for (int i = 0; i <= f.deg(); ++i) {
            FieldElement c = embed_field(f.F, F, f.c[(size_t)i]);
            num = poly_add(num, poly_scale(poly_mul(gn_pow, gd_pows[(size_t)(f.deg() - i)]), c));
            gn_pow = poly_mul(gn_pow, gn);
        }
        (void)denpow;
        return num;
    };
    Poly num = lift(a.num);
    Poly den = lift(a.den);
    if (num.is_zero()) throw value_error("substitution made an entry vanish");
    // a = unit num/den; f(g): unit * lift(num)/den^{deg num} / (lift(den)/den^{deg den})
    int shift = a.num.deg() - a.den.deg();
    Poly dpow = poly_one(F);
    for (int i = 0; i < (shift > 0 ? shift : -shift); ++i) dpow = poly_mul(dpow, g.den);
    FieldElement u = embed_field(a.F, F, a.unit);
    if (shift > 0)
        return rf_normalize(F, u, num, poly_mul(den, dpow));
    return rf_normalize(F, u, poly_mul(num, dpow), den);
}

RatFunc rf_map_constants(const RatFunc& a, Field big) {
    return rf_normalize(big, embed_field(a.F, big, a.unit), poly_map(a.num, big),
                        poly_map(a.den, big));
}

int rf_valuation(const RatFunc& a, const Poly& pi) {
    auto count = [&](Poly f) {
        int v = 0;
        for (;;) {
            auto [q, r] = poly_divmod(f, pi);
            if (!r.is_zero()) return v;
            f = q;
            ++v;
        }
    };
    return count(a.num) - count(a.den);
}

int rf_valuation_at_infinity(const RatFunc& a) { return a.den.deg() - a.num.deg(); }

std::string rf_to_string(const RatFunc& a) {
    std::string s;
    bool unit_one = (a.unit == a.F->one());
    std::string np = poly_to_string(a.num);
    if (!unit_one) {
        s += a.F->to_string(a.unit);
        if (a.num.deg() > 0) s += "*(" + np + ")";
        else if (!(a.num == poly_one(a.F))) s += "*" + np;
    } else {
        s += np;
    }
    if (a.den.deg() > 0 || !(a.den == poly_one(a.F))) s = "(" + s + ")/(" + poly_to_string(a.den) + ")";
    return s;
}

}  // namespace mwt
