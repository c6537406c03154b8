#include "mwt/gw.hpp"

#include <algorithm>

#include "mwt/errors.hpp"
#include "mwt/extension.hpp"

namespace mwt {

GwFq gw_zero(Field F) { return {F, {}}; }

GwFq gw_one(Field F) { return {F, {{F->one(), 1}}}; }

GwFq gw_unit(const FieldElement& a) {
    if (a.is_zero()) throw value_error("<0> is not a unit form");
    return {a.F, {{a, 1}}};
}

GwFq gw_diag(Field F, const std::vector<FieldElement>& units) {
    GwFq r{F, {}};
    for (auto& u : units) {
        if (u.F != F) throw value_error("diagonal entry from a different field");
        if (u.is_zero()) throw value_error("zero entry in a diagonal form");
        r.terms.push_back({u, 1});
    }
    return r;
}

GwFq gw_diag_ints(Field F, const std::vector<i64>& units) {
    std::vector<FieldElement> es;
    es.reserve(units.size());
    for (i64 u : units) es.push_back(F->from_int(u));
    return gw_diag(F, es);
}

static void check_field(const GwFq& a, const GwFq& b) {
    if (a.F != b.F) throw value_error("GW elements over different fields");
}

GwFq gw_add(const GwFq& a, const GwFq& b) {
    check_field(a, b);
    GwFq r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

GwFq gw_neg(const GwFq& a) {
    GwFq r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

GwFq gw_sub(const GwFq& a, const GwFq& b) { return gw_add(a, gw_neg(b)); }

GwFq gw_scale(const GwFq& a, long n) {
    GwFq r = a;
    for (auto& t : r.terms) t.second *= n;
    return r;
}

GwFq gw_mul(const GwFq& a, const GwFq& b) {
    check_field(a, b);
    GwFq r{a.F, {}};
    for (auto& [u, cu] : a.terms)
        for (auto& [v, cv] : b.terms) r.terms.push_back({u * v, cu * cv});
    return r;
}

GwFq gw_hyperbolic(Field F) { return gw_diag_ints(F, {1, -1}); }

GwFq n_epsilon(Field F, long n) {
    if (n < 0) throw value_error("n_epsilon needs a natural number");
    GwFq r{F, {}};
    FieldElement one = F->one(), mone = F->from_int(-1);
    for (long i = 1; i <= n; ++i) r.terms.push_back({(i % 2 == 1) ? one : mone, 1});
    return r;
}

GwInvFq gw_invariants(const GwFq& a) {
    GwInvFq inv;
    bool nonsq = false;
    for (auto& [u, c] : a.terms) {
        if (u.is_zero()) throw value_error("zero entry in a GW element");
        inv.rank += c;
        if ((c & 1) && !a.F->is_square(u)) nonsq = !nonsq;
    }
    inv.disc_square = !nonsq;
    return inv;
}

bool gw_equal(const GwFq& a, const GwFq& b) {
    check_field(a, b);
    return gw_invariants(a) == gw_invariants(b);
}

bool gw_is_zero(const GwFq& a) { return gw_invariants(a) == GwInvFq{}; }

static bool minus_one_nonsquare(Field F) { return F->q % 4 == 3; }

WittFq witt_project(const GwFq& a) {
    GwInvFq inv = gw_invariants(a);
    WittFq w;
    w.dim_odd = ((inv.rank % 2) + 2) % 2 == 1;
    long half = inv.rank >= 0 ? inv.rank / 2 : -((-inv.rank + 1) / 2);  // floor(rank/2)
    bool flip = (((half % 2) + 2) % 2 == 1) && minus_one_nonsquare(a.F);
    w.disc_square = inv.disc_square ^ flip;
    return w;
}

WittFq witt_zero() { return {}; }

WittFq witt_add(Field F, const WittFq& a, const WittFq& b) {
    WittFq r;
    r.dim_odd = a.dim_odd ^ b.dim_odd;
    bool nonsq = (!a.disc_square) ^ (!b.disc_square);
    if (a.dim_odd && b.dim_odd && minus_one_nonsquare(F)) nonsq = !nonsq;
    r.disc_square = !nonsq;
    return r;
}

WittFq witt_neg(Field F, const WittFq& a) {
    WittFq r = a;
    if (a.dim_odd && minus_one_nonsquare(F)) r.disc_square = !r.disc_square;
    return r;
}

WittFq witt_scale(Field F, const WittFq& a, long n) {
    WittFq r = witt_zero();
    WittFq step = n >= 0 ? a : witt_neg(F, a);
    long cnt = n >= 0 ? n : -n;
    for (long i = 0; i < cnt % 4; ++i) r = witt_add(F, r, step);  // |W| divides 4
    return r;
}

int witt_additive_order(Field F, const WittFq& a) {
    WittFq s = witt_zero();
    for (int n = 1; n <= 4; ++n) {
        s = witt_add(F, s, a);
        if (s.is_zero()) return n;
    }
    throw error("Witt class order exceeds 4 (impossible)");
}

std::vector<FieldElement> diagonalize_gram(Field F,
                                           const std::vector<std::vector<FieldElement>>& M0) {
    size_t n = M0.size();
    for (auto& row : M0)
        if (row.size() != n) throw value_error("Gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (!(M0[i][j] == M0[j][i])) throw value_error("Gram matrix must be symmetric");
    auto M = M0;
    std::vector<FieldElement> diag;
    auto sym_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        for (size_t r = 0; r < n; ++r) std::swap(M[r][i], M[r][j]);
    };
    for (size_t s = 0; s < n; ++s) {
        if (M[s][s].is_zero()) {
            size_t dpiv = n;
            for (size_t i = s; i < n; ++i)
                if (!M[i][i].is_zero()) {
                    dpiv = i;
                    break;
                }
            if (dpiv < n) {
                sym_swap(s, dpiv);
            } else {
                // whole remaining diagonal vanishes: find an off-diagonal pivot
                size_t pi = n, pj = n;
                for (size_t i = s; i < n && pi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (!M[i][j].is_zero()) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi == n) throw value_error("degenerate Gram matrix");
                sym_swap(s, pi);
                sym_swap(s + 1, pj);
                // basis change e_s += e_{s+1}; M[s][s] becomes 2 M[s][s+1] != 0
                for (size_t r = 0; r < n; ++r) M[s][r] = M[s][r] + M[s + 1][r];
                for (size_t r = 0; r < n; ++r) M[r][s] = M[r][s] + M[r][s + 1];
            }
        }
        if (M[s][s].is_zero()) throw value_error("degenerate Gram matrix");
        FieldElement pinv = F->inv(M[s][s]);
        diag.push_back(M[s][s]);
        for (size_t i = s + 1; i < n; ++i) {
            if (M[i][s].is_zero()) continue;
            FieldElement f = M[i][s] * pinv;
            for (size_t r = s; r < n; ++r) M[i][r] = M[i][r] - f * M[s][r];
            for (size_t r = s; r < n; ++r) M[r][i] = M[r][i] - f * M[r][s];
        }
    }
    return diag;
}

int nilpotent_exponent(const GwFq& a, int bound) {
    if (gw_invariants(a).rank != 0) throw value_error("nilpotent_exponent needs a rank-0 element");
    GwFq pw = a;
    for (int n = 1; n <= bound; ++n) {
        if (gw_is_zero(pw)) return n;
        pw = gw_mul(pw, a);
    }
    throw error("no vanishing power up to the configured bound");
}

GwFq gw_res(const GwFq& a, Field big) {
    GwFq r{big, {}};
    for (auto& [u, c] : a.terms) r.terms.push_back({embed_field(a.F, big, u), c});
    return r;
}

std::string gw_to_string(const GwFq& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (auto& [u, c] : a.terms) {
        if (c == 0) continue;
        if (!s.empty() || c < 0) s += (c < 0 ? "-" : "+");
        long ab = c < 0 ? -c : c;
        if (ab != 1) s += std::to_string(ab) + "*";
        s += "<" + a.F->to_string(u) + ">";
    }
    return s.empty() ? "0" : s;
}

}  // namespace mwt
