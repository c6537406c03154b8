#include "mwt/transfer.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mwt/errors.hpp"
#include "mwt/parse.hpp"

namespace mwt {

TransferMode parse_mode(const std::string& s) {
    if (s == "bt") return TransferMode::Bt;
    if (s == "geo") return TransferMode::Geo;
    throw value_error("unknown transfer mode '" + s + "' (use bt or geo)");
}

/* candidate entry polynomials: monic irreducibles over the base, degree
   ascending, linear ones first in index order */
static std::vector<Poly> candidate_entries(const Extension& ext, int max_deg) {
    std::vector<Poly> out;
    Field E = ext.base;
    for (int deg = 1; deg <= max_deg; ++deg) {
        i64 total = 1;
        for (int i = 0; i < deg; ++i) total *= E->q;
        for (i64 n = 0; n < total; ++n) {
            std::vector<FieldElement> c;
            i64 m = n;
            for (int i = 0; i < deg; ++i) {
                c.push_back(E->from_index(m % E->q));
                m /= E->q;
            }
            c.push_back(E->one());
            Poly f = poly_trim({E, c});
            if (poly_is_irreducible(f)) out.push_back(f);
        }
    }
    return out;
}

/* solve sum c_j a_j = target (mod m) greedily by folding extended gcds */
static bool solve_dlog(const std::vector<i64>& a, i64 target, i64 m, std::vector<i64>& c) {
    c.assign(a.size(), 0);
    // maintain g = gcd(m, a_0..a_j) together with coefficients producing it
    i64 g = m;
    std::vector<i64> combo(a.size(), 0);
    for (size_t j = 0; j < a.size(); ++j) {
        i64 aj = ((a[j] % m) + m) % m;
        if (aj == 0) continue;
        // ext gcd of (g, aj)
        i64 old_r = g, r = aj, old_s = 0, s = 1;
        while (r) {
            i64 qd = old_r / r;
            std::swap(old_r -= qd * r, r);
            std::swap(old_s -= qd * s, s);
        }
        // old_r = gcd(g, aj), old_s its Bezout coefficient at aj; scale the
        // previous combo by u with u*g + old_s*aj = old_r (all arithmetic mod m)
        i64 u = (old_r - old_s * aj) / g;
        for (auto& x : combo) x = ((x * (u % m)) % m + m) % m;
        combo[j] = ((old_s % m) + m) % m;
        g = old_r;
        if (target % g == 0) {
            i64 scale = (target / g) % m;
            for (size_t i = 0; i < a.size(); ++i) c[i] = ((combo[i] * scale) % m + m) % m;
            return true;
        }
    }
    if (target % g == 0) {
        i64 scale = (target / g) % m;
        for (size_t i = 0; i < a.size(); ++i) c[i] = ((combo[i] * scale) % m + m) % m;
        return true;
    }
    return false;
}

std::vector<DecompTerm> bt_decompose(const Extension& ext, const KmwFq& beta) {
    if (beta.F != ext.top) throw value_error("decomposition input not over the top field");
    Field E = ext.base;
    Field F = ext.top;
    int n = beta.degree;
    std::vector<DecompTerm> out;
    KmwInvFq inv = normalize_fq(beta);

    if (n >= 2) {
        // the group vanishes
        return out;
    }

    int max_entry_deg = std::max(1, ext.d - 1);
    bool prime_d = is_prime(ext.d);
    auto cands = candidate_entries(ext, 1);  // linear entries, extended on demand

    if (n == 1) {
        FieldElement M = inv.milnor_unit;
        if (M == F->one()) return out;  // K^MW_1(F_q) = F_q^x, so beta = 0
        i64 m = F->q - 1;
        i64 target = F->dlog(M);
        // base-field units enter through the module coefficient of the empty
        // symbol, so the primitive element of E is always available
        FieldElement e0 = E->primitive_element();
        std::vector<i64> coeffs;
        for (int cap = 1;; ++cap) {
            std::vector<i64> logs{F->dlog(ext.embed(e0))};
            for (auto& l : cands) logs.push_back(F->dlog(ext.eval_at_gen(l)));
            if (solve_dlog(logs, target, m, coeffs)) break;
            if (prime_d || cap >= max_entry_deg)
                throw error("entry polynomials fail to generate the unit group (unexpected)");
            cands = candidate_entries(ext, cap + 1);
        }
        if (coeffs[0]) {
            DecompTerm t;
            t.alpha = kmw_scale(kmw_symbol(E, 0, {e0}), (long)coeffs[0]);
            t.eta = 0;
            out.push_back(std::move(t));
        }
        for (size_t j = 0; j < cands.size(); ++j)
            if (coeffs[j + 1]) {
                DecompTerm t;
                t.alpha = kmw_const(E, (long)coeffs[j + 1]);
                t.eta = 0;
                t.entry_polys = {cands[j]};
                out.push_back(std::move(t));
            }
        return out;
    }

    // find an entry with nonsquare evaluation
    auto nonsquare_entry = [&]() -> Poly {
        for (int cap = 1; cap <= max_entry_deg; ++cap) {
            if (cap > 1) cands = candidate_entries(ext, cap);
            for (auto& l : cands)
                if (!F->is_square(ext.eval_at_gen(l))) return l;
        }
        throw error("no entry with nonsquare value");
    };

    if (n == 0) {
        if (inv.gw.rank != 0) {
            DecompTerm t;
            t.alpha = kmw_const(E, inv.gw.rank);
            t.eta = 0;
            out.push_back(std::move(t));
        }
        if (!inv.gw.disc_square) {
            // eta [l] = <l(x)> - 1 fixes the discriminant without changing rank
            DecompTerm t;
            t.alpha = kmw_const(E, 1);
            t.eta = 1;
            t.entry_polys = {nonsquare_entry()};
            out.push_back(std::move(t));
        }
        return out;
    }

    // n < 0: solve in W(F_q) over the generators eta^{|n|} 1 and eta^{|n|+1}[l]
    if (kmw_is_zero_fq(beta)) return out;
    Poly ls = nonsquare_entry();
    for (long c1 = 0; c1 < 4; ++c1)
        for (long c2 = 0; c2 < 2; ++c2) {
            if (!c1 && !c2) continue;
            std::vector<DecompTerm> trial;
            if (c1) {
                DecompTerm t;
                t.alpha = kmw_const(E, c1);
                t.eta = -n;
                trial.push_back(std::move(t));
            }
            if (c2) {
                DecompTerm t;
                t.alpha = kmw_const(E, c2);
                t.eta = -n + 1;
                t.entry_polys = {ls};
                trial.push_back(std::move(t));
            }
            if (kmw_equal_fq(recompose(ext, trial), beta)) return trial;
        }
    throw error("Witt-part decomposition failed (unexpected)");
}

KmwFq recompose(const Extension& ext, const std::vector<DecompTerm>& dec) {
    Field F = ext.top;
    KmwFq acc = kmw_zero(F, 0);
    bool first = true;
    for (auto& t : dec) {
        std::vector<FieldElement> evals;
        for (auto& p : t.entry_polys) evals.push_back(ext.eval_at_gen(p));
        KmwFq sym = kmw_symbol(F, t.eta, evals);
        KmwFq term = kmw_mul(kmw_res(t.alpha, F), sym);
        if (first) {
            acc = term;
            first = false;
        } else {
            acc = kmw_add(acc, term);
        }
    }
    return acc;
}

FieldElement bt_twist_unit(const Extension& ext) {
    if (ext.d == 1) return ext.top->one();
    // -f(0) x, the unit relating the power-basis normalization to the
    // canonical one
    FieldElement f0 = ext.embed(ext.min_poly.constant());
    return -(f0 * ext.gen);
}

/* ---- the transfer recursion ---- */

namespace {

using Memo = std::map<std::string, KmwFq>;

KmwFq transfer_canonical(const Extension& ext, const KmwFq& beta, Memo& memo, int depth);

KmwFq transfer_at_point(const ClosedPoint& x, const KmwFq& r, Memo& memo, int depth) {
    if (depth > 64) throw error("transfer recursion exceeded its budget");
    if (x.degree() == 1) return r;  // residue field is the base itself
    Field kappa = residue_field(x);
    Extension ext(x.F, kappa, canonical_point_root(x), x.pi);
    return transfer_canonical(ext, r, memo, depth);
}

KmwFq transfer_canonical(const Extension& ext, const KmwFq& beta, Memo& memo, int depth) {
    if (depth > 64) throw error("transfer recursion exceeded its budget");
    Field E = ext.base;
    if (ext.d == 1) return beta;
    std::string key = poly_to_string(ext.min_poly) + "@" + E->name() + "|" + kmw_to_string(beta);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto dec = bt_decompose(ext, beta);
    KmwFt lift = kmw_zero_ft(E, beta.degree + 1);
    KmwFt fsym = kmw_symbol_ft(E, 0, {rf_from_poly(ext.min_poly)});
    for (auto& t : dec) {
        std::vector<RatFunc> entries;
        for (auto& p : t.entry_polys) entries.push_back(rf_from_poly(p));
        KmwFt term = kmw_mul_ft(fsym, kmw_mul_ft(kmw_res_to_ft(t.alpha),
                                                  kmw_symbol_ft(E, t.eta, entries)));
        lift = kmw_add_ft(lift, term);
    }

    KmwFq result = kmw_neg(residue(point_infinity(E), lift));

    // parasitic finite points: the entry polynomials (all of degree < d)
    std::map<std::string, Poly> parasitic;
    for (auto& t : dec)
        for (auto& p : t.entry_polys) parasitic.emplace(poly_to_string(p), p);
    for (auto& [k, p] : parasitic) {
        ClosedPoint x = point_finite(p);
        KmwFq r = residue(x, lift);
        if (kmw_is_zero_fq(r)) continue;
        result = kmw_sub(result, transfer_at_point(x, r, memo, depth + 1));
    }
    memo[key] = result;
    return result;
}

}  // namespace

KmwFq transfer(const Extension& ext, const KmwFq& beta, TransferMode mode) {
    if (beta.F != ext.top) throw value_error("transfer input not over the top field");
    KmwFq b = beta;
    if (mode == TransferMode::Bt && ext.d > 1)
        b = kmw_mul_unit_form(bt_twist_unit(ext), b);
    Memo memo;
    return transfer_canonical(ext, b, memo, 0);
}

KmwFq transfer_point(const ClosedPoint& x, const KmwFq& beta_over_kappa) {
    if (beta_over_kappa.F != residue_field(x))
        throw value_error("transfer_point input not over the residue field");
    Memo memo;
    return transfer_at_point(x, beta_over_kappa, memo, 0);
}

/* ---- towers ---- */

int Tower::total_degree() const {
    int d = 1;
    for (auto& s : steps) d *= s.d;
    return d;
}

Tower make_tower(Field base, const std::vector<Poly>& step_min_polys) {
    Tower tw;
    tw.base = base;
    Field cur = base;
    for (auto& f : step_min_polys) {
        if (f.F != cur) throw value_error("tower step polynomial over the wrong field");
        Extension e = extension_from_min_poly(cur, f);
        cur = e.top;
        tw.steps.push_back(std::move(e));
    }
    return tw;
}

Tower parse_tower(const std::string& spec) {
    std::vector<std::string> parts;
    size_t pos = 0;
    for (;;) {
        size_t arrow = spec.find("->", pos);
        if (arrow == std::string::npos) {
            parts.push_back(spec.substr(pos));
            break;
        }
        parts.push_back(spec.substr(pos, arrow - pos));
        pos = arrow + 2;
    }
    auto strip = [](std::string s) {
        size_t b = s.find_first_not_of(" \t");
        size_t e = s.find_last_not_of(" \t");
        return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    if (parts.empty()) throw parse_error("empty tower spec", 0);
    Field base = parse_field(strip(parts[0]));
    Field cur = base;
    std::vector<Poly> polys;
    for (size_t i = 1; i < parts.size(); ++i) {
        Poly f = parse_poly(cur, strip(parts[i]));
        polys.push_back(f);
        cur = make_field(cur->p, cur->k * f.deg());
    }
    Tower tw;
    tw.base = base;
    cur = base;
    for (auto& f : polys) {
        Extension e = extension_from_min_poly(cur, f);
        cur = e.top;
        tw.steps.push_back(std::move(e));
    }
    return tw;
}

std::string tower_to_string(const Tower& t) {
    std::string s = t.base->name();
    for (auto& e : t.steps) s += " -> " + poly_to_string(e.min_poly);
    return s;
}

KmwFq transfer_tower(const Tower& tw, const KmwFq& beta, TransferMode mode) {
    if (tw.steps.empty()) return beta;
    if (beta.F != tw.top()) throw value_error("tower transfer input not over the top field");
    KmwFq cur = beta;
    for (auto it = tw.steps.rbegin(); it != tw.steps.rend(); ++it)
        cur = transfer(*it, cur, mode);
    return cur;
}

FieldElement transition_unit(const Tower& a, const Tower& b) {
    if (a.base != b.base || a.top() != b.top())
        throw value_error("towers must share base and top fields");
    Field top = a.top();
    auto product = [&](const Tower& t) {
        FieldElement u = top->one();
        for (auto& e : t.steps)
            u = u * embed_field(e.top, top, e.min_poly_derivative_at_gen());
        return u;
    };
    FieldElement u = product(a) * top->inv(product(b));
    return top->is_square(u) ? top->one() : top->least_nonsquare();
}

}  // namespace mwt
