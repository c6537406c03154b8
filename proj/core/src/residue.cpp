#include "mwt/residue.hpp"

#include <algorithm>
#include <map>

#include "mwt/errors.hpp"
#include "mwt/factor.hpp"

namespace mwt {

/* Terms with an entry [1] vanish (the class of 1 is zero), identical symbols
   merge. Keeps the symbolic blow-up of residue computations in check. */
static KmwFq kmw_compact(const KmwFq& a) {
    std::map<std::string, KmwTerm<FieldElement>> acc;
    for (auto& t : a.terms) {
        if (t.coeff == 0) continue;
        bool dead = false;
        for (auto& e : t.entries)
            if (e == a.F->one()) {
                dead = true;
                break;
            }
        if (dead) continue;
        std::string key = std::to_string(t.eta);
        for (auto& e : t.entries) key += "|" + std::to_string(a.F->index_of(e));
        auto it = acc.find(key);
        if (it == acc.end()) {
            acc[key] = t;
        } else {
            it->second.coeff += t.coeff;
        }
    }
    KmwFq r{a.F, a.degree, {}};
    for (auto& [k, t] : acc)
        if (t.coeff != 0) r.terms.push_back(t);
    return r;
}

/* ---- the theta model ----------------------------------------------------
   Elements of the localized MW ring split as a + xi b with xi the class of
   the chosen uniformizer and a, b over the residue field. The product rule
   follows from graded epsilon-commutativity (eps = -<-1>) together with
   xi^2 = xi [-1], and the residue is the xi-component. */

namespace {

struct Theta {
    KmwFq a, b;  // deg(b) = deg(a) - 1
};

struct PointCtx {
    Field Fbase = nullptr;
    bool at_inf = false;
    RatFunc pi;         // uniformizer as a rational function
    Field kappa = nullptr;
    FieldElement root;  // image of t-bar in kappa (finite points)

    int val(const RatFunc& f) const {
        if (at_inf) return rf_valuation_at_infinity(f);
        return rf_valuation(f, pi.num);
    }
    FieldElement res_unit(const RatFunc& f) const {
        if (at_inf) return embed_field(Fbase, kappa, f.unit);
        FieldElement n = poly_eval(poly_map(f.num, kappa), root);
        FieldElement d = poly_eval(poly_map(f.den, kappa), root);
        return embed_field(Fbase, kappa, f.unit) * n * kappa->inv(d);
    }
};

Theta theta_zero(Field kappa, int degree) {
    return {kmw_zero(kappa, degree), kmw_zero(kappa, degree - 1)};
}

Theta theta_add(const Theta& x, const Theta& y) {
    return {kmw_add(x.a, y.a), kmw_add(x.b, y.b)};
}

Theta theta_neg(const Theta& x) { return {kmw_neg(x.a), kmw_neg(x.b)}; }

KmwFq eps_pow_mul(Field kappa, int deg_parity_of, const KmwFq& z) {
    if (((deg_parity_of % 2) + 2) % 2 == 0) return z;
    return kmw_compact(kmw_mul(kmw_epsilon(kappa), z));
}

Theta theta_mul(Field kappa, const Theta& x, const Theta& y) {
    KmwFq a = kmw_compact(kmw_mul(x.a, y.a));
    KmwFq t1 = eps_pow_mul(kappa, x.a.degree, kmw_compact(kmw_mul(x.a, y.b)));
    KmwFq t2 = kmw_compact(kmw_mul(x.b, y.a));
    KmwFq minus_one = kmw_symbol(kappa, 0, {kappa->from_int(-1)});
    KmwFq t3 = eps_pow_mul(kappa, x.b.degree,
                           kmw_compact(kmw_mul(minus_one, kmw_compact(kmw_mul(x.b, y.b)))));
    return {a, kmw_compact(kmw_add(kmw_add(t1, t2), t3))};
}

Theta theta_eta(Field kappa, const Theta& x, int m) {
    // multiply on the left by eta^m: pair (eta^m, 0) via the product rule
    Theta e{eta_mul(kmw_const(kappa, 1), m), kmw_zero(kappa, -m - 1)};
    return theta_mul(kappa, e, x);
}

Theta theta_for_pi(const PointCtx& ctx) {
    return {kmw_zero(ctx.kappa, 1), kmw_const(ctx.kappa, 1)};
}

Theta theta_entry(const PointCtx& ctx, const RatFunc& f) {
    int v = ctx.val(f);
    if (v == 0) {
        FieldElement r = ctx.res_unit(f);
        KmwFq a = (r == ctx.kappa->one()) ? kmw_zero(ctx.kappa, 1)
                                          : kmw_symbol(ctx.kappa, 0, {r});
        return {a, kmw_zero(ctx.kappa, 0)};
    }
    if (v > 0) {
        RatFunc rest = rf_mul(f, rf_inv(ctx.pi));
        Theta P = theta_for_pi(ctx);
        Theta R = theta_entry(ctx, rest);
        return theta_add(theta_add(P, R), theta_eta(ctx.kappa, theta_mul(ctx.kappa, P, R), 1));
    }
    // v < 0: [g^{-1}] = -<g>[g] = -[g] - eta [g][g]
    Theta G = theta_entry(ctx, rf_inv(f));
    return theta_neg(theta_add(G, theta_eta(ctx.kappa, theta_mul(ctx.kappa, G, G), 1)));
}

Theta theta_term(const PointCtx& ctx, const KmwTerm<RatFunc>& t) {
    Theta acc{eta_mul(kmw_const(ctx.kappa, t.coeff), t.eta), kmw_zero(ctx.kappa, -t.eta - 1)};
    for (auto& f : t.entries) acc = theta_mul(ctx.kappa, acc, theta_entry(ctx, f));
    return acc;
}

PointCtx make_ctx(const ClosedPoint& x, Field kappa, const FieldElement& root,
                  const ResidueContext& rc) {
    PointCtx ctx;
    ctx.Fbase = x.F;
    ctx.at_inf = x.at_infinity;
    ctx.kappa = kappa;
    if (x.at_infinity) {
        FieldElement u = rc.inf == InfinityUniformizer::MinusInverseT ? x.F->from_int(-1)
                                                                      : x.F->one();
        ctx.pi = rf_normalize(x.F, u, poly_one(x.F), poly_t(x.F));
    } else {
        ctx.pi = rf_from_poly(x.pi);
        ctx.root = root;
    }
    return ctx;
}

}  // namespace

KmwFq residue_via_root(const ClosedPoint& x, const KmwFt& g, Field kappa,
                       const FieldElement& root, const ResidueContext& rc) {
    if (g.F != x.F) throw value_error("point and element over different constant fields");
    PointCtx ctx = make_ctx(x, kappa, root, rc);
    KmwFq out = kmw_zero(kappa, g.degree - 1);
    for (auto& t : g.terms) {
        bool ramified = false;
        for (auto& f : t.entries)
            if (ctx.val(f) != 0) {
                ramified = true;
                break;
            }
        if (!ramified) continue;  // residue of a unit symbol vanishes
        out = kmw_add(out, theta_term(ctx, t).b);
    }
    return kmw_compact(out);
}

KmwFq residue(const ClosedPoint& x, const KmwFt& g, const ResidueContext& rc) {
    Field kappa = residue_field(x);
    FieldElement root = x.at_infinity ? FieldElement{} : canonical_point_root(x);
    return residue_via_root(x, g, kappa, root, rc);
}

KmwFq specialize(const ClosedPoint& x, const KmwFt& g, const ResidueContext& rc) {
    if (!x.at_infinity && x.degree() != 1)
        throw value_error("specialization is defined at rational points");
    KmwFq ram = residue(x, g, rc);
    if (!kmw_is_zero_fq(ram))
        throw value_error("element is ramified at " + point_to_string(x));
    ResidueContext rc2 = rc;
    PointCtx ctx = make_ctx(x, residue_field(x),
                            x.at_infinity ? FieldElement{} : canonical_point_root(x), rc2);
    KmwFt pig = kmw_mul_ft(kmw_symbol_ft(g.F, 0, {ctx.pi}), g);
    return residue(x, pig, rc);
}

std::vector<ClosedPoint> support(const KmwFt& g) {
    std::map<std::string, Poly> polys;
    for (auto& t : g.terms)
        for (auto& f : t.entries) {
            for (const Poly* part : {&f.num, &f.den}) {
                if (part->deg() < 1) continue;
                auto fac = factor_poly(*part);
                for (auto& [irr, mult] : fac.factors) polys.emplace(poly_to_string(irr), irr);
            }
        }
    std::vector<Poly> sorted;
    for (auto& [k, p] : polys) sorted.push_back(p);
    std::sort(sorted.begin(), sorted.end(), poly_less);
    std::vector<ClosedPoint> out;
    for (auto& p : sorted) out.push_back(point_finite(p));
    return out;
}

bool kmw_is_zero_ft(const KmwFt& g, const ResidueContext& rc) {
    if (g.terms.empty()) return true;
    for (auto& x : support(g))
        if (!kmw_is_zero_fq(residue(x, g, rc))) return false;
    // all residues vanish, so g is constant; test one unramified rational point
    auto try_field = [&](const KmwFt& h) -> int {  // -1: no point, 0: nonzero, 1: zero
        auto sup = support(h);
        Field F = h.F;
        for (i64 idx = 0; idx < F->q; ++idx) {
            FieldElement a = F->from_index(idx);
            Poly lin = poly_trim({F, {-a, F->one()}});
            bool in_support = false;
            for (auto& x : sup)
                if (x.pi == lin) {
                    in_support = true;
                    break;
                }
            if (in_support) continue;
            return kmw_is_zero_fq(specialize(point_finite(lin), h, rc)) ? 1 : 0;
        }
        return -1;
    };
    int r = try_field(g);
    if (r >= 0) return r == 1;
    // every rational point is ramified: pass to an odd-degree constant-field
    // extension, where restriction is injective
    for (int ext : {3, 5}) {
        Field big = make_field(g.F->p, g.F->k * ext);
        int rr = try_field(kmw_res_constants_ft(g, big));
        if (rr >= 0) return rr == 1;
    }
    throw error("no unramified rational point found in odd extensions");
}

bool kmw_equal_ft(const KmwFt& a, const KmwFt& b, const ResidueContext& rc) {
    if (a.F != b.F || a.degree != b.degree)
        throw value_error("comparing incompatible MW elements over F(t)");
    return kmw_is_zero_ft(kmw_sub_ft(a, b), rc);
}

}  // namespace mwt
