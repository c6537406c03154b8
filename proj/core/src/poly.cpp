#include "mwt/poly.hpp"

#include <algorithm>

#include "mwt/errors.hpp"

namespace mwt {

bool Poly::is_monic() const { return !is_zero() && c.back() == F->one(); }

FieldElement Poly::lead() const {
    if (is_zero()) throw value_error("leading coefficient of zero polynomial");
    return c.back();
}

FieldElement Poly::constant() const { return c.empty() ? F->zero() : c.front(); }

bool Poly::operator==(const Poly& o) const { return F == o.F && c == o.c; }

Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
    return f;
}

Poly poly_zero(Field F) { return {F, {}}; }

Poly poly_one(Field F) { return {F, {F->one()}}; }

Poly poly_t(Field F) { return {F, {F->zero(), F->one()}}; }

Poly poly_from_coeffs(Field F, std::vector<i64> cs) {
    std::vector<FieldElement> c;
    c.reserve(cs.size());
    for (i64 x : cs) c.push_back(F->from_int(x));
    return poly_trim({F, std::move(c)});
}

Poly poly_from_elems(Field F, std::vector<FieldElement> c) {
    for (auto& e : c)
        if (e.F != F) throw value_error("polynomial coefficient from a different field");
    return poly_trim({F, std::move(c)});
}

Poly poly_const(const FieldElement& a) {
    if (a.is_zero()) return poly_zero(a.F);
    return {a.F, {a}};
}

static void check_field(const Poly& a, const Poly& b) {
    if (a.F != b.F) throw value_error("polynomials over different fields");
}

Poly poly_add(const Poly& a, const Poly& b) {
    check_field(a, b);
    std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), a.F->zero());
    for (size_t i = 0; i < c.size(); ++i) {
        FieldElement x = i < a.c.size() ? a.c[i] : a.F->zero();
        FieldElement y = i < b.c.size() ? b.c[i] : a.F->zero();
        c[i] = x + y;
    }
    return poly_trim({a.F, std::move(c)});
}

Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

Poly poly_mul(const Poly& a, const Poly& b) {
    check_field(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(a.F);
    std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, a.F->zero());
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = c[i + j] + a.c[i] * b.c[j];
    }
    return poly_trim({a.F, std::move(c)});
}

Poly poly_scale(const Poly& a, const FieldElement& s) {
    Poly r = a;
    for (auto& x : r.c) x = x * s;
    return poly_trim(r);
}

Poly poly_pow(const Poly& a, u64 e) {
    Poly r = poly_one(a.F), b = a;
    while (e) {
        if (e & 1) r = poly_mul(r, b);
        b = poly_mul(b, b);
        e >>= 1;
    }
    return r;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    check_field(a, b);
    if (b.is_zero()) throw value_error("polynomial division by zero");
    Poly rem = a;
    if (a.deg() < b.deg()) return {poly_zero(a.F), rem};
    std::vector<FieldElement> quot((size_t)(a.deg() - b.deg() + 1), a.F->zero());
    FieldElement lead_inv = a.F->inv(b.lead());
    for (int d = rem.deg(); d >= b.deg(); --d) {
        if ((int)rem.c.size() - 1 < d || rem.c[d].is_zero()) continue;
        FieldElement f = rem.c[d] * lead_inv;
        quot[(size_t)(d - b.deg())] = f;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[(size_t)(d - b.deg() + i)] = rem.c[(size_t)(d - b.deg() + i)] - f * b.c[(size_t)i];
    }
    return {poly_trim({a.F, std::move(quot)}), poly_trim(rem)};
}

Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

Poly poly_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, a.F->inv(a.lead()));
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return poly_monic(a);
}

Poly poly_derivative(const Poly& a) {
    if (a.deg() <= 0) return poly_zero(a.F);
    std::vector<FieldElement> c;
    for (int i = 1; i <= a.deg(); ++i) c.push_back(a.F->from_int(i) * a.c[(size_t)i]);
    return poly_trim({a.F, std::move(c)});
}

Poly poly_powmod(const Poly& a, u64 e, const Poly& m) {
    Poly r = poly_mod(poly_one(a.F), m), b = poly_mod(a, m);
    while (e) {
        if (e & 1) r = poly_mod(poly_mul(r, b), m);
        b = poly_mod(poly_mul(b, b), m);
        e >>= 1;
    }
    return r;
}

FieldElement poly_eval(const Poly& a, const FieldElement& x) {
    FieldElement r = x.F->zero();
    for (int i = a.deg(); i >= 0; --i) r = r * x + a.c[(size_t)i];
    return r;
}

Poly poly_compose(const Poly& a, const Poly& inner) {
    Poly r = poly_zero(inner.F);
    for (int i = a.deg(); i >= 0; --i)
        r = poly_add(poly_mul(r, inner), poly_const(a.c[(size_t)i]));
    return r;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = 0; i <= a.deg(); ++i) {
        i64 x = a.F->index_of(a.c[(size_t)i]);
        i64 y = b.F->index_of(b.c[(size_t)i]);
        if (x != y) return x < y;
    }
    return false;
}

std::string poly_to_string(const Poly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.deg(); i >= 0; --i) {
        const FieldElement& a = f.c[(size_t)i];
        if (a.is_zero()) continue;
        if (!s.empty()) s += "+";
        std::string coeff = f.F->to_string(a);
        bool is_one = (a == f.F->one());
        if (i == 0) {
            s += coeff;
        } else {
            if (!is_one) s += coeff + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace mwt
