#include "mwt/kmw.hpp"

#include <algorithm>

#include "mwt/errors.hpp"
#include "mwt/extension.hpp"

namespace mwt {

/* ---- constructors ---- */

KmwFq kmw_zero(Field F, int degree) { return {F, degree, {}}; }

KmwFq kmw_symbol(Field F, int eta, const std::vector<FieldElement>& entries) {
    if (eta < 0) throw value_error("negative eta power");
    for (auto& e : entries) {
        if (e.F != F) throw value_error("symbol entry from a different field");
        if (e.is_zero()) throw value_error("zero entry in a symbol");
    }
    KmwFq r{F, (int)entries.size() - eta, {{1, eta, entries}}};
    return r;
}

KmwFq kmw_const(Field F, long n) {
    KmwFq r{F, 0, {}};
    if (n) r.terms.push_back({n, 0, {}});
    return r;
}

static void check_same(const KmwFq& a, const KmwFq& b) {
    if (a.F != b.F) throw value_error("MW elements over different fields");
}

KmwFq kmw_add(const KmwFq& a, const KmwFq& b) {
    check_same(a, b);
    if (a.degree != b.degree) throw value_error("adding inhomogeneous MW elements");
    KmwFq r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

KmwFq kmw_neg(const KmwFq& a) {
    KmwFq r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

KmwFq kmw_sub(const KmwFq& a, const KmwFq& b) { return kmw_add(a, kmw_neg(b)); }

KmwFq kmw_scale(const KmwFq& a, long n) {
    KmwFq r = a;
    for (auto& t : r.terms) t.coeff *= n;
    return r;
}

KmwFq kmw_mul(const KmwFq& a, const KmwFq& b) {
    check_same(a, b);
    KmwFq r{a.F, a.degree + b.degree, {}};
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            KmwTerm<FieldElement> t;
            t.coeff = ta.coeff * tb.coeff;
            t.eta = ta.eta + tb.eta;
            t.entries = ta.entries;
            t.entries.insert(t.entries.end(), tb.entries.begin(), tb.entries.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

KmwFq eta_mul(const KmwFq& a, int m) {
    KmwFq r = a;
    r.degree -= m;
    for (auto& t : r.terms) t.eta += m;
    return r;
}

KmwFq kmw_mul_unit_form(const FieldElement& u, const KmwFq& a) {
    // <u> b = b + eta [u] b
    KmwFq r = a;
    for (auto& t : a.terms) {
        KmwTerm<FieldElement> s = t;
        s.eta += 1;
        s.entries.insert(s.entries.begin(), u);
        r.terms.push_back(std::move(s));
    }
    return r;
}

KmwFq kmw_epsilon(Field F) {
    // -<-1> = -1 - eta [-1]
    KmwFq r{F, 0, {}};
    r.terms.push_back({-1, 0, {}});
    r.terms.push_back({-1, 1, {F->from_int(-1)}});
    return r;
}

/* ---- F(t) level ---- */

KmwFt kmw_zero_ft(Field F, int degree) { return {F, degree, {}}; }

KmwFt kmw_symbol_ft(Field F, int eta, const std::vector<RatFunc>& entries) {
    if (eta < 0) throw value_error("negative eta power");
    for (auto& e : entries)
        if (e.F != F) throw value_error("symbol entry over a different constant field");
    return {F, (int)entries.size() - eta, {{1, eta, entries}}};
}

KmwFt kmw_add_ft(const KmwFt& a, const KmwFt& b) {
    if (a.F != b.F || a.degree != b.degree)
        throw value_error("adding incompatible MW elements over F(t)");
    KmwFt r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

KmwFt kmw_neg_ft(const KmwFt& a) {
    KmwFt r = a;
    for (auto& t : r.terms) t.coeff = -t.coeff;
    return r;
}

KmwFt kmw_sub_ft(const KmwFt& a, const KmwFt& b) { return kmw_add_ft(a, kmw_neg_ft(b)); }

KmwFt kmw_scale_ft(const KmwFt& a, long n) {
    KmwFt r = a;
    for (auto& t : r.terms) t.coeff *= n;
    return r;
}

KmwFt kmw_mul_ft(const KmwFt& a, const KmwFt& b) {
    if (a.F != b.F) throw value_error("MW elements over different constant fields");
    KmwFt r{a.F, a.degree + b.degree, {}};
    for (auto& ta : a.terms)
        for (auto& tb : b.terms) {
            KmwTerm<RatFunc> t;
            t.coeff = ta.coeff * tb.coeff;
            t.eta = ta.eta + tb.eta;
            t.entries = ta.entries;
            t.entries.insert(t.entries.end(), tb.entries.begin(), tb.entries.end());
            r.terms.push_back(std::move(t));
        }
    return r;
}

/* ---- restrictions ---- */

KmwFt kmw_res_to_ft(const KmwFq& a) {
    KmwFt r{a.F, a.degree, {}};
    for (auto& t : a.terms) {
        KmwTerm<RatFunc> s;
        s.coeff = t.coeff;
        s.eta = t.eta;
        for (auto& e : t.entries) s.entries.push_back(rf_const(e));
        r.terms.push_back(std::move(s));
    }
    return r;
}

KmwFq kmw_res(const KmwFq& a, Field big) {
    KmwFq r{big, a.degree, {}};
    for (auto& t : a.terms) {
        KmwTerm<FieldElement> s{t.coeff, t.eta, {}};
        for (auto& e : t.entries) s.entries.push_back(embed_field(a.F, big, e));
        r.terms.push_back(std::move(s));
    }
    return r;
}

KmwFq kmw_res_via(const KmwFq& a, Field big, const std::vector<FieldElement>& basis_images) {
    // entries mapped by the F_p-linear ring map sending the modulus basis of a.F
    // to basis_images (images of 1, g, g^2, ...)
    KmwFq r{big, a.degree, {}};
    for (auto& t : a.terms) {
        KmwTerm<FieldElement> s{t.coeff, t.eta, {}};
        for (auto& e : t.entries) {
            FieldElement img = big->zero();
            for (int i = 0; i < a.F->k; ++i)
                img = img + big->from_int(e.c[(size_t)i]) * basis_images[(size_t)i];
            if (img.is_zero()) throw error("embedding sent a unit to zero");
            s.entries.push_back(img);
        }
        r.terms.push_back(std::move(s));
    }
    return r;
}

KmwFt kmw_res_constants_ft(const KmwFt& a, Field big) {
    KmwFt r{big, a.degree, {}};
    for (auto& t : a.terms) {
        KmwTerm<RatFunc> s{t.coeff, t.eta, {}};
        for (auto& e : t.entries) s.entries.push_back(rf_map_constants(e, big));
        r.terms.push_back(std::move(s));
    }
    return r;
}

KmwFt kmw_substitute(const KmwFt& a, const RatFunc& image_of_t) {
    KmwFt r{image_of_t.F, a.degree, {}};
    for (auto& t : a.terms) {
        KmwTerm<RatFunc> s{t.coeff, t.eta, {}};
        for (auto& e : t.entries) s.entries.push_back(rf_substitute(e, image_of_t));
        r.terms.push_back(std::move(s));
    }
    return r;
}

/* ---- normal form over F_q ---- */

GwFq kmw_to_gw(const KmwFq& a) {
    if (a.degree != 0) throw value_error("kmw_to_gw needs a degree-0 element");
    GwFq g = gw_zero(a.F);
    FieldElement one = a.F->one();
    for (auto& t : a.terms) {
        if ((int)t.entries.size() != t.eta)
            throw error("degree-0 term with mismatched entry count");
        // coeff * prod_i (<u_i> - 1)
        GwFq prod{a.F, {{one, t.coeff}}};
        for (auto& u : t.entries) {
            GwFq factor{a.F, {{u, 1}, {one, -1}}};
            prod = gw_mul(prod, factor);
        }
        g = gw_add(g, prod);
    }
    return g;
}

/* Invariants of sum_t c_t prod_i (<u_i> - 1) without expanding: a product of
   k >= 1 factors has rank 0; its discriminant is u_1 for k = 1 and trivial for
   k >= 2 (each unit acquires an even exponent in the expansion). */
static GwInvFq value_invariants(const KmwFq& a) {
    GwInvFq inv;
    bool nonsq = false;
    for (auto& t : a.terms) {
        size_t k = t.entries.size();
        if (k == 0) {
            inv.rank += t.coeff;
        } else if (k == 1) {
            if ((t.coeff & 1) && !a.F->is_square(t.entries[0])) nonsq = !nonsq;
        }
    }
    inv.disc_square = !nonsq;
    return inv;
}

static WittFq witt_of_invariants(Field F, const GwInvFq& gw) {
    WittFq w;
    w.dim_odd = ((gw.rank % 2) + 2) % 2 == 1;
    long half = gw.rank >= 0 ? gw.rank / 2 : -((-gw.rank + 1) / 2);
    bool flip = (((half % 2) + 2) % 2 == 1) && F->q % 4 == 3;
    w.disc_square = gw.disc_square ^ flip;
    return w;
}

KmwInvFq normalize_fq(const KmwFq& a) {
    KmwInvFq inv;
    inv.degree = a.degree;
    Field F = a.F;
    if (a.degree >= 2) {
        inv.trivial_group = true;
        return inv;
    }
    GwInvFq val = value_invariants(a);
    inv.witt = witt_of_invariants(F, val);
    if (a.degree == 0) {
        inv.gw = val;
    } else if (a.degree == 1) {
        // Milnor part: product over eta-free terms of (product of entries)^coeff
        FieldElement m = F->one();
        for (auto& t : a.terms) {
            if (t.eta != 0) continue;
            FieldElement prod = F->one();
            for (auto& u : t.entries) prod = prod * u;
            long c = t.coeff;
            FieldElement f = c >= 0 ? prod : F->inv(prod);
            m = m * F->pow(f, (u64)(c >= 0 ? c : -c));
        }
        inv.milnor_unit = m;
    }
    return inv;
}

bool KmwInvFq::operator==(const KmwInvFq& o) const {
    if (degree != o.degree) return false;
    if (degree >= 2) return true;
    if (degree == 1)
        return milnor_unit == o.milnor_unit && witt == o.witt;
    if (degree == 0) return gw == o.gw;
    return witt == o.witt;
}

GwInvFq kmw_gw_invariants(const KmwFq& a) {
    if (a.degree != 0) throw value_error("kmw_gw_invariants needs a degree-0 element");
    return value_invariants(a);
}

bool kmw_matches_gw(const KmwFq& a, const GwFq& g) {
    if (a.F != g.F) throw value_error("comparing over different fields");
    return kmw_gw_invariants(a) == gw_invariants(g);
}

bool kmw_equal_fq(const KmwFq& a, const KmwFq& b) {
    check_same(a, b);
    if (a.degree != b.degree) throw value_error("comparing MW elements of different degrees");
    return normalize_fq(a) == normalize_fq(b);
}

bool kmw_is_zero_fq(const KmwFq& a) { return normalize_fq(a) == normalize_fq(kmw_zero(a.F, a.degree)); }

/* ---- printing ---- */

template <class E, class Fmt>
static std::string terms_to_string(const std::vector<KmwTerm<E>>& terms, Fmt fmt) {
    if (terms.empty()) return "0";
    std::string s;
    for (auto& t : terms) {
        if (t.coeff == 0) continue;
        if (!s.empty() || t.coeff < 0) s += t.coeff < 0 ? "-" : "+";
        long ab = t.coeff < 0 ? -t.coeff : t.coeff;
        bool needs_star = false;
        if (ab != 1 || (t.eta == 0 && t.entries.empty())) {
            s += std::to_string(ab);
            needs_star = true;
        }
        if (t.eta > 0) {
            if (needs_star) s += "*";
            s += "eta";
            if (t.eta > 1) s += "^" + std::to_string(t.eta);
            needs_star = true;
        }
        if (!t.entries.empty()) {
            if (needs_star) s += "*";
            s += "[";
            for (size_t i = 0; i < t.entries.size(); ++i) {
                if (i) s += ",";
                s += fmt(t.entries[i]);
            }
            s += "]";
        }
    }
    return s.empty() ? "0" : s;
}

std::string kmw_to_string(const KmwFq& a) {
    return terms_to_string(a.terms, [&](const FieldElement& e) { return a.F->to_string(e); });
}

std::string kmw_to_string(const KmwFt& a) {
    return terms_to_string(a.terms, [](const RatFunc& e) { return rf_to_string(e); });
}

std::string kmw_inv_to_string(const KmwInvFq& inv) {
    std::string s = "deg " + std::to_string(inv.degree) + ": ";
    if (inv.degree >= 2) return s + "0 (group vanishes)";
    auto wstr = [&](const WittFq& w) {
        return std::string("(parity ") + (w.dim_odd ? "1" : "0") + ", disc " +
               (w.disc_square ? "sq" : "ns") + ")";
    };
    if (inv.degree == 1)
        return s + "milnor " + inv.milnor_unit.F->to_string(inv.milnor_unit) + ", witt " +
               wstr(inv.witt);
    if (inv.degree == 0)
        return s + "rank " + std::to_string(inv.gw.rank) + ", disc " +
               (inv.gw.disc_square ? "sq" : "ns");
    return s + "witt " + wstr(inv.witt);
}

}  // namespace mwt
