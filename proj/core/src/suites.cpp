#include "mwt/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "mwt/errors.hpp"
#include "mwt/gw_q.hpp"
#include "mwt/trace_form.hpp"

namespace mwt {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Runner {
    Report rep;
    std::mt19937_64 rng;
    Clock::time_point t0 = Clock::now();

    explicit Runner(const std::string& name, u64 seed) : rng(seed) {
        rep.suite = name;
        rep.seed = seed;
    }
    void ok() { ++rep.cases_run; }
    void check(bool cond, const std::string& repr, const std::string& expected,
               const std::string& got) {
        ++rep.cases_run;
        if (!cond) rep.failures.push_back({repr, expected, got});
    }
    Report finish(json params) {
        rep.params = std::move(params);
        rep.pass = rep.failures.empty();
        std::sort(rep.failures.begin(), rep.failures.end(),
                  [](const Failure& a, const Failure& b) { return a.case_repr < b.case_repr; });
        rep.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        return rep;
    }
};

Field field_q(i64 q) {
    for (i64 p = 3; p <= q; p += 2) {
        if (!is_prime(p)) continue;
        i64 x = q;
        int k = 0;
        while (x % p == 0) {
            x /= p;
            ++k;
        }
        if (x == 1) return make_field(p, k);
    }
    throw value_error("q = " + std::to_string(q) + " is not an odd prime power");
}

FieldElement rand_unit(std::mt19937_64& rng, Field F) {
    return F->from_index(1 + (i64)rand_below(rng, (u64)(F->q - 1)));
}

/* degree-first generation: eta <= 2 extra powers, entry count <= 3 */
KmwFq rand_kmw(std::mt19937_64& rng, Field F, int n) {
    int eta_min = n >= 0 ? 0 : -n;
    KmwFq out = kmw_zero(F, n);
    int nterms = 1 + (int)rand_below(rng, 2);
    for (int t = 0; t < nterms; ++t) {
        int eta = eta_min + (int)rand_below(rng, 3);
        int k = n + eta;
        if (k > 3) {
            eta = eta_min;
            k = n + eta;
        }
        if (k < 0) continue;
        std::vector<FieldElement> entries;
        for (int i = 0; i < k; ++i) entries.push_back(rand_unit(rng, F));
        long coeff = (long)rand_below(rng, 5) - 2;
        if (!coeff) coeff = 1;
        KmwFq term = kmw_scale(kmw_symbol(F, eta, entries), coeff);
        out = kmw_add(out, term);
    }
    return out;
}

RatFunc rand_ratfunc(std::mt19937_64& rng, Field F, int max_deg) {
    for (;;) {
        int nd = 1 + (int)rand_below(rng, (u64)max_deg);
        std::vector<FieldElement> nc;
        for (int i = 0; i < nd; ++i) nc.push_back(F->from_index((i64)rand_below(rng, (u64)F->q)));
        nc.push_back(F->one());
        Poly num = poly_trim({F, nc});
        Poly den = poly_one(F);
        if (rand_below(rng, 3) == 0) {
            FieldElement a = F->from_index((i64)rand_below(rng, (u64)F->q));
            den = poly_trim({F, {a, F->one()}});
        }
        if (num.is_zero()) continue;
        Poly g = poly_gcd(num, den);
        if (g.deg() > 0) continue;
        FieldElement u = rand_unit(rng, F);
        return rf_normalize(F, u, num, den);
    }
}

KmwFt rand_kmw_ft(std::mt19937_64& rng, Field F, int n, int max_deg = 2) {
    int eta_min = n >= 0 ? 0 : -n;
    KmwFt out = kmw_zero_ft(F, n);
    int nterms = 1 + (int)rand_below(rng, 2);
    for (int t = 0; t < nterms; ++t) {
        int eta = eta_min + (int)rand_below(rng, 2);
        int k = n + eta;
        if (k > 3 || k < 0) {
            eta = eta_min;
            k = n + eta;
        }
        std::vector<RatFunc> entries;
        for (int i = 0; i < k; ++i) entries.push_back(rand_ratfunc(rng, F, max_deg));
        long coeff = (long)rand_below(rng, 5) - 2;
        if (!coeff) coeff = 1;
        out = kmw_add_ft(out, kmw_scale_ft(kmw_symbol_ft(F, eta, entries), coeff));
    }
    return out;
}

/* an exact zero of degree n over F(t): a multiplicativity relation instance */
KmwFt zero_noise(std::mt19937_64& rng, Field F, int n) {
    RatFunc A = rand_ratfunc(rng, F, 2), B = rand_ratfunc(rng, F, 2);
    KmwFt z = kmw_sub_ft(kmw_symbol_ft(F, 0, {rf_mul(A, B)}),
                         kmw_add_ft(kmw_add_ft(kmw_symbol_ft(F, 0, {A}),
                                               kmw_symbol_ft(F, 0, {B})),
                                    kmw_symbol_ft(F, 1, {A, B})));
    if (n == 1) return z;
    if (n == 0) {
        KmwFt e = kmw_zero_ft(F, -1);
        e.terms.push_back({1, 1, {}});
        return kmw_mul_ft(e, z);
    }
    if (n == 2) return kmw_mul_ft(z, kmw_symbol_ft(F, 0, {rand_ratfunc(rng, F, 1)}));
    throw error("zero_noise: unsupported degree");
}

std::string inv_str(const KmwFq& a) { return kmw_inv_to_string(normalize_fq(a)); }

std::vector<i64> qs_or(const SuiteParams& p, std::vector<i64> dflt) {
    return p.qs.empty() ? dflt : p.qs;
}

long samples_or(const SuiteParams& p, long dflt) { return p.samples > 0 ? p.samples : dflt; }

json params_json(const SuiteParams& p, const std::vector<i64>& qs, long samples,
                 std::initializer_list<std::pair<std::string, json>> extra = {}) {
    (void)p;
    json j;
    j["qs"] = qs;
    j["samples"] = samples;
    for (auto& [k, v] : extra) j[k] = v;
    return j;
}

/* ---- individual suites ---- */

Report run_homotopy_ses(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 100);
    Runner r("homotopy-ses", p.seed);
    for (i64 q : qs) {
        Field F = field_q(q);
        for (long i = 0; i < samples; ++i) {
            int n = (int)(i % 2);
            KmwFq alpha = rand_kmw(r.rng, F, n);
            KmwFt gamma = kmw_add_ft(kmw_res_to_ft(alpha), zero_noise(r.rng, F, n));
            std::string repr = "q=" + std::to_string(q) + " alpha=" + kmw_to_string(alpha);
            // residues of gamma all vanish
            bool resid_ok = true;
            for (auto& x : support(gamma))
                if (!kmw_is_zero_fq(residue(x, gamma))) resid_ok = false;
            if (!resid_ok) {
                r.check(false, repr, "all residues zero", "nonzero residue");
                continue;
            }
            // retraction at an unramified rational point; if every rational
            // point is ramified, restrict constants along an odd extension
            auto attempt = [&](Field Fc, const KmwFt& g, const KmwFq& al) -> int {
                auto sup = support(g);
                for (i64 idx = 0; idx < Fc->q; ++idx) {
                    Poly lin = poly_trim({Fc, {-Fc->from_index(idx), Fc->one()}});
                    bool bad = false;
                    for (auto& x : sup)
                        if (x.pi == lin) bad = true;
                    if (bad) continue;
                    KmwFq s = specialize(point_finite(lin), g);
                    if (!kmw_equal_fq(s, al)) return 1;
                    if (!kmw_equal_ft(g, kmw_res_to_ft(s))) return 2;
                    return 0;
                }
                return -1;
            };
            int verdict = attempt(F, gamma, alpha);
            for (int ext : {3, 5}) {
                if (verdict != -1) break;
                Field Fc = make_field(F->p, F->k * ext);
                verdict = attempt(Fc, kmw_res_constants_ft(gamma, Fc), kmw_res(alpha, Fc));
            }
            r.check(verdict == 0, repr, "specialize(res(a))=a and image witness",
                    verdict == 1   ? "retraction failed"
                    : verdict == 2 ? "witness failed"
                                   : "no unramified rational point");
        }
    }
    return r.finish(params_json(p, qs, samples));
}

Report run_characterization(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5, 7});
    long samples = samples_or(p, 40);
    std::vector<int> degs = p.degree_n == INT_MIN ? std::vector<int>{1, 2}
                                                  : std::vector<int>{p.degree_n};
    Runner r("characterization", p.seed);
    for (i64 q : qs) {
        Field F = field_q(q);
        for (int n : degs) {
            for (long i = 0; i < samples; ++i) {
                KmwFt gamma = rand_kmw_ft(r.rng, F, n);
                KmwFq total = residue(point_infinity(F), gamma);
                for (auto& x : support(gamma)) {
                    KmwFq res_x = residue(x, gamma);
                    if (kmw_is_zero_fq(res_x)) continue;
                    total = kmw_add(total, transfer_point(x, res_x));
                }
                r.check(kmw_is_zero_fq(total),
                        "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                            " gamma=" + kmw_to_string(gamma),
                        "0", inv_str(total));
            }
        }
    }
    return r.finish(params_json(p, qs, samples, {{"n", degs}}));
}

bool decomposition_well_formed(const Extension& ext, const std::vector<DecompTerm>& dec,
                               bool require_linear) {
    for (auto& t : dec) {
        int prev = 0;
        for (auto& pl : t.entry_polys) {
            if (pl.deg() <= prev) return false;       // strictly increasing
            if (pl.deg() > ext.d - 1) return false;   // bounded by d-1
            if (!pl.is_monic()) return false;
            if (require_linear && pl.deg() != 1) return false;
            prev = pl.deg();
        }
    }
    return true;
}

Report run_generation(const SuiteParams& p, bool prime_only) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 50);
    int max_d = p.max_degree > 0 ? p.max_degree : 4;
    Runner r(prime_only ? "prime-generation" : "generation", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        for (int d = 2; d <= max_d; ++d) {
            if (prime_only && !is_prime(d)) continue;
            Extension ext = make_extension(E, d);
            for (long i = 0; i < samples; ++i) {
                int n = (int)(i % 3) - 1;  // degrees -1, 0, 1
                KmwFq beta = rand_kmw(r.rng, ext.top, n);
                auto dec = bt_decompose(ext, beta);
                bool form = decomposition_well_formed(ext, dec, prime_only && is_prime(d));
                bool round = dec.empty() ? kmw_is_zero_fq(beta)
                                         : kmw_equal_fq(recompose(ext, dec), beta);
                r.check(form && round,
                        "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                            " beta=" + kmw_to_string(beta),
                        "well-formed decomposition equal to input",
                        form ? "recomposition differs" : "malformed output");
            }
        }
    }
    return r.finish(params_json(p, qs, samples, {{"max_degree", max_d}}));
}

Report run_projection(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 30);
    Runner r("projection", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        for (int d : {2, 3}) {
            Extension ext = make_extension(E, d);
            for (long i = 0; i < samples; ++i) {
                int na = (int)(i % 2), nb = (int)((i / 2) % 2);
                KmwFq alpha = rand_kmw(r.rng, E, na);
                KmwFq beta = rand_kmw(r.rng, ext.top, nb);
                KmwFq lhs = transfer(ext, kmw_mul(kmw_res(alpha, ext.top), beta), p.mode);
                KmwFq rhs = kmw_mul(alpha, transfer(ext, beta, p.mode));
                r.check(kmw_equal_fq(lhs, rhs),
                        "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                            " alpha=" + kmw_to_string(alpha) + " beta=" + kmw_to_string(beta),
                        inv_str(rhs), inv_str(lhs));
            }
        }
    }
    return r.finish(params_json(p, qs, samples,
                                {{"mode", p.mode == TransferMode::Geo ? "geo" : "bt"}}));
}

Report run_lam_formulas(const SuiteParams& p) {
    Runner r("lam-formulas", p.seed);
    // odd degrees: geo(1) = n_eps
    for (i64 q : qs_or(p, {3, 5})) {
        Field E = field_q(q);
        for (int d : {3, 5}) {
            Extension ext = make_extension(E, d);
            KmwFq got = transfer(ext, kmw_const(ext.top, 1), TransferMode::Geo);
            r.check(kmw_matches_gw(got, n_epsilon(E, d)),
                    "geo(1) q=" + std::to_string(q) + " d=" + std::to_string(d),
                    gw_to_string(n_epsilon(E, d)), inv_str(got));
        }
        // even degree 2, several generators: bt(1) = 1 + <-N(gen)>
        Extension e2 = make_extension(E, 2);
        for (i64 shift = 0; shift < 3; ++shift) {
            FieldElement g = e2.top->gen() + embed_field(E, e2.top, E->from_index(shift));
            Extension ex = extension_with_generator(E, e2.top, g);
            KmwFq got = transfer(ex, kmw_const(ex.top, 1), TransferMode::Bt);
            GwFq want = gw_add(gw_one(E), gw_unit(-ex.norm(g)));
            r.check(kmw_matches_gw(got, want),
                    "bt(1) q=" + std::to_string(q) + " gen shift " + std::to_string(shift),
                    gw_to_string(want), inv_str(got));
        }
    }
    {
        Field F7 = make_field(7, 1);
        Extension e2 = make_extension(F7, 2);
        KmwFq got = transfer(e2, kmw_const(e2.top, 1), TransferMode::Bt);
        GwFq want = gw_add(gw_one(F7), gw_unit(-e2.norm(e2.gen)));
        r.check(kmw_matches_gw(got, want), "bt(1) q=7 d=2", gw_to_string(want), inv_str(got));
    }
    // rational number fields, at the quadratic-form oracle level
    {
        NumberFieldQ cbrt2({Rat(-2), Rat(0), Rat(0), Rat(1)});  // x^3 - 2
        GwQ geo = trace_form_transfer_q(cbrt2, {{cbrt2.min_poly_derivative_at_gen(), 1}});
        r.check(gwq_equal(geo, nq_epsilon(3)), "Q(2^(1/3)) geo-oracle(1)", "3_eps",
                gwq_to_string(geo));
        NumberFieldQ sqrt2({Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
        GwQ bt2 = trace_form_transfer_q(sqrt2, {{sqrt2.one(), 1}});
        GwQ want2 = gwq_add(gwq_unit(qclass_of_int(1)), gwq_unit(qclass_of_int(2)));
        r.check(gwq_equal(bt2, want2), "Q(sqrt2) trace-oracle(1)", "<1>+<2>", gwq_to_string(bt2));
        NumberFieldQ gauss({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
        GwQ bti = trace_form_transfer_q(gauss, {{gauss.one(), 1}});
        GwQ wanti = gwq_add(gwq_unit(qclass_of_int(1)), gwq_unit(qclass_of_int(-1)));
        r.check(gwq_equal(bti, wanti), "Q(i) trace-oracle(1)", "<1>+<-1>", gwq_to_string(bti));
    }
    return r.finish(params_json(p, qs_or(p, {3, 5}), 0));
}

Report run_nilpotence(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5, 7, 9, 27});
    Runner r("nilpotence", p.seed);
    for (i64 q : qs) {
        Field F = field_q(q);
        for (i64 idx = 1; idx < F->q; ++idx) {
            FieldElement t = F->from_index(idx);
            GwFq alpha = gw_sub(gw_unit(t), gw_one(F));
            std::string repr = "q=" + std::to_string(q) + " t=" + F->to_string(t);
            GwFq cube = gw_mul(alpha, gw_mul(alpha, alpha));
            bool ok = gw_is_zero(cube);
            int e = nilpotent_exponent(alpha);
            ok = ok && e <= 3;
            // alpha^n = (-2)^{n-1} alpha for n <= 5
            GwFq pw = alpha;
            long scal = 1;
            for (int n = 1; n <= 5 && ok; ++n) {
                if (!gw_equal(pw, gw_scale(alpha, scal))) ok = false;
                pw = gw_mul(pw, alpha);
                scal *= -2;
            }
            r.check(ok, repr, "alpha^3=0, exponent<=3, alpha^n=(-2)^(n-1) alpha", "violated");
        }
    }
    return r.finish(params_json(p, qs, 0));
}

Report run_coprime_kill(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    Runner r("coprime-kill", p.seed);
    std::vector<int> degs = p.degree_n == INT_MIN ? std::vector<int>{-1, 1}
                                                  : std::vector<int>{p.degree_n};
    for (i64 q : qs) {
        Field F = field_q(q);
        Field F2 = make_field(F->p, F->k * 2);
        Field F3 = make_field(F->p, F->k * 3);
        for (int n : degs) {
            std::vector<KmwFq> all;
            if (n == 1) {
                for (i64 idx = 1; idx < F->q; ++idx)
                    all.push_back(kmw_symbol(F, 0, {F->from_index(idx)}));
            } else if (n == -1) {
                FieldElement s = F->least_nonsquare();
                for (long c1 = 0; c1 < 4; ++c1)
                    for (long c2 = 0; c2 < 2; ++c2) {
                        KmwFq e = kmw_zero(F, -1);
                        if (c1) {
                            KmwFq t = kmw_zero(F, -1);
                            t.terms.push_back({c1, 1, {}});
                            e = kmw_add(e, t);
                        }
                        if (c2) e = kmw_add(e, kmw_symbol(F, 2, {s}));
                        all.push_back(e);
                    }
            } else {
                throw value_error("coprime-kill runs in degrees -1 and 1");
            }
            for (auto& delta : all) {
                bool killed = kmw_is_zero_fq(kmw_res(delta, F2)) &&
                              kmw_is_zero_fq(kmw_res(delta, F3));
                bool zero = kmw_is_zero_fq(delta);
                r.check(killed == zero,
                        "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                            " delta=" + kmw_to_string(delta),
                        "restrictions vanish iff element vanishes",
                        std::string(killed ? "killed" : "survives") + "/" +
                            (zero ? "zero" : "nonzero"));
            }
        }
    }
    return r.finish(params_json(p, qs, 0, {{"n", degs}}));
}

Report run_r3a(const SuiteParams& p) {
    long samples = samples_or(p, 100);
    Runner r("r3a", p.seed);
    Field F = field_q(qs_or(p, {3})[0]);
    // E = F(t) inside F(s) via t = s^2: ramification index 2 at the origin
    RatFunc s_sq = rf_from_poly(poly_from_coeffs(F, {0, 0, 1}));
    KmwFq two_eps = kmw_add(kmw_const(F, 2), kmw_symbol(F, 1, {F->from_int(-1)}));
    ClosedPoint origin = point_finite(poly_t(F));
    for (long i = 0; i < samples; ++i) {
        int n = 1 + (int)(i % 2);
        KmwFt alpha = rand_kmw_ft(r.rng, F, n);
        KmwFq lhs = residue(origin, kmw_substitute(alpha, s_sq));
        KmwFq rhs = kmw_mul(two_eps, residue(origin, alpha));
        r.check(kmw_equal_fq(lhs, rhs), "n=" + std::to_string(n) + " alpha=" + kmw_to_string(alpha),
                inv_str(rhs), inv_str(lhs));
    }
    return r.finish(params_json(p, qs_or(p, {3}), samples));
}

/* images of the modulus basis of src under the F_q-algebra hom sending
   src_gen (a root of pi over F_q) to dst_root */
std::vector<FieldElement> hom_basis_images(Field base, Field src, const FieldElement& src_gen,
                                           const Poly& pi, Field dst,
                                           const FieldElement& dst_root) {
    Extension coords(base, src, src_gen, pi);
    auto tbar = coords.relative_coords(src->gen());
    FieldElement img = dst->zero();
    FieldElement rpow = dst->one();
    for (auto& c : tbar) {
        img = img + embed_field(base, dst, c) * rpow;
        rpow = rpow * dst_root;
    }
    std::vector<FieldElement> basis;
    FieldElement acc = dst->one();
    for (int i = 0; i < src->k; ++i) {
        basis.push_back(acc);
        acc = acc * img;
    }
    return basis;
}

FieldElement apply_hom(const FieldElement& a, Field dst,
                       const std::vector<FieldElement>& basis) {
    FieldElement out = dst->zero();
    for (size_t i = 0; i < basis.size(); ++i)
        out = out + dst->from_int(a.c[i]) * basis[i];
    return out;
}

Report run_r1c_weak(const SuiteParams& p) {
    auto qs = qs_or(p, {3});
    long samples = samples_or(p, 20);
    Runner r("r1c-weak", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        for (int rr : {2, 3}) {
            Field L = make_field(E->p, E->k * rr);
            for (int dx : {2, 3}) {
                Poly pi = least_irreducible(E, dx);
                ClosedPoint x = point_finite(pi);
                Field kx = residue_field(x);
                FieldElement rx = canonical_point_root(x);
                auto fac = factor_poly(poly_map(pi, L));
                for (long i = 0; i < samples; ++i) {
                    int n = (int)(i % 2);
                    KmwFq beta = rand_kmw(r.rng, kx, n);
                    KmwFq lhs = kmw_res(transfer_point(x, beta), L);
                    KmwFq rhs = kmw_zero(L, n);
                    FieldElement dpi_x = poly_eval(poly_map(poly_derivative(pi), kx), rx);
                    for (auto& [pj, mult] : fac.factors) {
                        ClosedPoint y{L, false, pj};
                        Field ky = residue_field(y);
                        FieldElement ry = canonical_point_root(y);
                        auto basis = hom_basis_images(E, kx, rx, pi, ky, ry);
                        KmwFq b_up = kmw_res_via(beta, ky, basis);
                        // transition unit between the uniformizer trivializations
                        FieldElement dpi_y = poly_eval(poly_map(poly_derivative(pj), ky), ry);
                        FieldElement u = apply_hom(dpi_x, ky, basis) * ky->inv(dpi_y);
                        rhs = kmw_add(rhs, transfer_point(y, kmw_mul_unit_form(u, b_up)));
                    }
                    r.check(kmw_equal_fq(lhs, rhs),
                            "q=" + std::to_string(q) + " r=" + std::to_string(rr) +
                                " pi=" + poly_to_string(pi) + " beta=" + kmw_to_string(beta),
                            inv_str(lhs), inv_str(rhs));
                }
            }
        }
    }
    return r.finish(params_json(p, qs, samples));
}

Report run_r1c_strong(const SuiteParams& p) {
    auto qs = qs_or(p, {3});
    long samples = samples_or(p, 30);
    Runner r("r1c-strong", p.seed);
    const std::pair<int, int> combos[] = {{2, 2}, {2, 3}, {3, 3}, {4, 2}};
    for (i64 q : qs) {
        Field E = field_q(q);
        for (auto [d, rr] : combos) {
            Extension extF = make_extension(E, d);
            Field L = make_field(E->p, E->k * rr);
            Field M = make_field(E->p, E->k * std::lcm(d, rr));
            auto fac = factor_poly(poly_map(extF.min_poly, L));
            // sanity: gcd(d,r) components of degree d/gcd each
            if ((int)fac.factors.size() != std::gcd(d, rr))
                throw error("unexpected component count in r1c-strong");
            for (long i = 0; i < samples; ++i) {
                int n = (int)(i % 2);
                KmwFq beta = rand_kmw(r.rng, extF.top, n);
                KmwFq lhs = kmw_res(transfer(extF, beta, TransferMode::Geo), L);
                KmwFq rhs = kmw_zero(L, n);
                FieldElement df_x = extF.min_poly_derivative_at_gen();
                for (auto& [phi, mult] : fac.factors) {
                    auto roots = poly_roots(poly_map(phi, M));
                    FieldElement rho = roots.front();
                    auto basis = hom_basis_images(E, extF.top, extF.gen, extF.min_poly, M, rho);
                    // twist-compatible restriction: the derivative trivializations
                    // of the two sides differ by this unit square class
                    FieldElement dphi = poly_eval(poly_map(poly_derivative(phi), M), rho);
                    FieldElement u = apply_hom(df_x, M, basis) * M->inv(dphi);
                    KmwFq b_up = kmw_mul_unit_form(u, kmw_res_via(beta, M, basis));
                    if (phi.deg() == 1) {
                        rhs = kmw_add(rhs, b_up);
                    } else {
                        Extension comp(L, M, rho, phi);
                        rhs = kmw_add(rhs, transfer(comp, b_up, TransferMode::Geo));
                    }
                }
                r.check(kmw_equal_fq(lhs, rhs),
                        "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                            " r=" + std::to_string(rr) + " beta=" + kmw_to_string(beta),
                        inv_str(lhs), inv_str(rhs));
            }
        }
    }
    return r.finish(params_json(p, qs, samples));
}

Report run_prime_degree_independence(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 30);
    Runner r("prime-degree-independence", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        for (int d : {2, 3}) {
            Field top = make_field(E->p, E->k * d);
            std::vector<Extension> exts;
            exts.push_back(extension_with_generator(E, top, top->gen()));
            exts.push_back(extension_with_generator(E, top, top->gen() + top->one()));
            exts.push_back(
                extension_with_generator(E, top, top->gen() * embed_field(E, top, E->from_int(2))));
            for (long i = 0; i < samples; ++i) {
                int n = (int)(i % 2);
                KmwFq beta = rand_kmw(r.rng, top, n);
                KmwFq ref = transfer(exts[0], beta, TransferMode::Geo);
                bool ok = true;
                for (size_t j = 1; j < exts.size() && ok; ++j)
                    ok = kmw_equal_fq(ref, transfer(exts[j], beta, TransferMode::Geo));
                r.check(ok,
                        "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                            " beta=" + kmw_to_string(beta),
                        "all generators give the same geo transfer", "mismatch");
            }
        }
    }
    return r.finish(params_json(p, qs, samples));
}

Report run_composite_square(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 20);
    Runner r("composite-square", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        const std::pair<int, int> cases[] = {{2, 3}, {3, 2}};
        for (auto [l, m] : cases) {
            Field L = make_field(E->p, E->k * l);
            Field Ea = make_field(E->p, E->k * m);
            Field La = make_field(E->p, E->k * l * m);
            // the composite element a = image of gen(Ea) inside La
            FieldElement a_in_La = embedding_root(Ea, La);
            Extension tr_a_L = extension_with_generator(L, La, a_in_La);
            Extension tr_La_Ea = make_extension(Ea, l);
            Extension tr_a_E = extension_with_generator(E, Ea, Ea->gen());
            Extension tr_L_E = make_extension(E, l);
            for (long i = 0; i < samples; ++i) {
                int n = (int)(i % 2);
                KmwFq beta = rand_kmw(r.rng, La, n);
                KmwFq path1 = transfer(tr_L_E, transfer(tr_a_L, beta, TransferMode::Geo),
                                       TransferMode::Geo);
                KmwFq path2 = transfer(tr_a_E, transfer(tr_La_Ea, beta, TransferMode::Geo),
                                       TransferMode::Geo);
                r.check(kmw_equal_fq(path1, path2),
                        "q=" + std::to_string(q) + " (l,m)=(" + std::to_string(l) + "," +
                            std::to_string(m) + ") beta=" + kmw_to_string(beta),
                        inv_str(path1), inv_str(path2));
            }
        }
    }
    return r.finish(params_json(p, qs, samples));
}

std::vector<std::vector<Tower>> tower_families(Field E, const std::vector<int>& degrees) {
    std::vector<std::vector<Tower>> fams;
    auto nth_irreducible = [&](Field F, int deg, int skip) {
        int seen = 0;
        i64 total = 1;
        for (int i = 0; i < deg; ++i) total *= F->q;
        for (i64 nn = 0; nn < total; ++nn) {
            std::vector<FieldElement> c;
            i64 mm = nn;
            for (int i = 0; i < deg; ++i) {
                c.push_back(F->from_index(mm % F->q));
                mm /= F->q;
            }
            c.push_back(F->one());
            Poly f = poly_trim({F, c});
            if (poly_is_irreducible(f)) {
                if (seen == skip) return f;
                ++seen;
            }
        }
        throw error("not enough irreducibles");
    };
    for (int d : degrees) {
        std::vector<Tower> fam;
        fam.push_back(make_tower(E, {nth_irreducible(E, d, 0)}));
        fam.push_back(make_tower(E, {nth_irreducible(E, d, 1)}));
        if (d == 4) {
            Field mid = make_field(E->p, E->k * 2);
            fam.push_back(make_tower(E, {nth_irreducible(E, 2, 0), nth_irreducible(mid, 2, 0)}));
            fam.push_back(make_tower(E, {nth_irreducible(E, 2, 1), nth_irreducible(mid, 2, 1)}));
        }
        if (d == 6) {
            Field f2 = make_field(E->p, E->k * 2);
            Field f3 = make_field(E->p, E->k * 3);
            fam.push_back(make_tower(E, {nth_irreducible(E, 2, 0), nth_irreducible(f2, 3, 0)}));
            fam.push_back(make_tower(E, {nth_irreducible(E, 3, 0), nth_irreducible(f3, 2, 0)}));
        }
        fams.push_back(std::move(fam));
    }
    return fams;
}

Report run_kato_morel(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 50);
    std::vector<int> degrees;
    int max_d = p.max_degree > 0 ? p.max_degree : 6;
    for (int d : {2, 3, 4, 6})
        if (d <= max_d) degrees.push_back(d);
    Runner r("kato-morel", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        auto fams = tower_families(E, degrees);
        for (size_t fi = 0; fi < fams.size(); ++fi) {
            auto& fam = fams[fi];
            Field top = fam[0].top();
            for (long i = 0; i < samples; ++i) {
                int n = (int)(i % 2);
                KmwFq beta = rand_kmw(r.rng, top, n);
                KmwFq ref = transfer_tower(fam[0], beta, TransferMode::Geo);
                bool ok = true;
                std::string culprit;
                for (size_t j = 1; j < fam.size(); ++j) {
                    if (!kmw_equal_fq(ref, transfer_tower(fam[j], beta, TransferMode::Geo))) {
                        ok = false;
                        culprit = tower_to_string(fam[j]);
                        break;
                    }
                }
                r.check(ok,
                        "q=" + std::to_string(q) + " deg=" + std::to_string(degrees[fi]) +
                            " beta=" + kmw_to_string(beta),
                        "all towers agree", "tower " + culprit + " differs");
            }
        }
    }
    return r.finish(params_json(p, qs, samples, {{"degrees", degrees}}));
}

Report run_degree0_oracle(const SuiteParams& p) {
    auto qs = qs_or(p, {3, 5});
    long samples = samples_or(p, 20);
    Runner r("degree0-oracle", p.seed);
    for (i64 q : qs) {
        Field E = field_q(q);
        for (int d = 2; d <= 4; ++d) {
            Extension ext = make_extension(E, d);
            FieldElement fp = ext.min_poly_derivative_at_gen();
            for (long i = 0; i < samples; ++i) {
                KmwFq beta = rand_kmw(r.rng, ext.top, 0);
                KmwFq geo = transfer(ext, beta, TransferMode::Geo);
                GwFq twisted = gw_mul(gw_unit(fp), kmw_to_gw(beta));
                GwFq oracle = trace_form_transfer(ext, twisted);
                r.check(kmw_matches_gw(geo, oracle),
                        "q=" + std::to_string(q) + " d=" + std::to_string(d) +
                            " beta=" + kmw_to_string(beta),
                        gw_to_string(oracle), inv_str(geo));
            }
        }
    }
    return r.finish(params_json(p, qs, samples));
}

}  // namespace

nlohmann::ordered_json report_json(const Report& r, bool with_elapsed) {
    json j;
    j["suite"] = r.suite;
    j["params"] = r.params;
    j["seed"] = r.seed;
    j["cases_run"] = r.cases_run;
    json fails = json::array();
    for (auto& f : r.failures)
        fails.push_back(json{{"case", f.case_repr}, {"expected", f.expected}, {"got", f.got}});
    j["failures"] = fails;
    if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    j["pass"] = r.pass;
    return j;
}

const std::vector<SuiteInfo>& suite_registry() {
    static const std::vector<SuiteInfo> reg = {
        {"homotopy-ses",
         "specialization retracts restriction, and residue-free elements come from the base",
         run_homotopy_ses},
        {"characterization",
         "sum over finite points of transfer after residue, plus the residue at infinity, is zero",
         run_characterization},
        {"generation", "decompositions in increasing-degree symbol form re-normalize to the input",
         [](const SuiteParams& p) { return run_generation(p, false); }},
        {"prime-generation",
         "for prime-degree extensions the decomposition uses linear entries only",
         [](const SuiteParams& p) { return run_generation(p, true); }},
        {"projection", "transfer of res(a)*b equals a*transfer(b)", run_projection},
        {"lam-formulas",
         "transfer of 1: n_eps in geo mode for odd degree; (n-1)_eps + <-N(x)> in bt mode for "
         "degree 2; rational number fields at the oracle level",
         run_lam_formulas},
        {"nilpotence", "rank-0 elements <t>-1 satisfy a^3 = 0 and a^n = (-2)^(n-1) a",
         run_nilpotence},
        {"coprime-kill",
         "an element restricting to zero in coprime-degree extensions is zero (exhaustive)",
         run_coprime_kill},
        {"r3a", "base change along t = s^2 multiplies the residue by 2_eps", run_r3a},
        {"r1c-weak", "restriction of a point transfer equals the sum of transfers above the point",
         run_r1c_weak},
        {"r1c-strong",
         "restriction commutes with transfers through the component decomposition of F (x) L",
         run_r1c_strong},
        {"prime-degree-independence",
         "prime-degree geo transfers do not depend on the chosen generator",
         run_prime_degree_independence},
        {"composite-square", "transfers around a compositum square commute in geo mode",
         run_composite_square},
        {"kato-morel", "geo-mode tower transfers do not depend on the generating system",
         run_kato_morel},
        {"degree0-oracle",
         "degree-0 geo transfers match the trace-form oracle twisted by the derivative",
         run_degree0_oracle},
    };
    return reg;
}

bool suite_exists(const std::string& name) {
    for (auto& s : suite_registry())
        if (s.name == name) return true;
    return false;
}

Report run_suite(const std::string& name, const SuiteParams& p) {
    for (auto& s : suite_registry())
        if (s.name == name) return s.run(p);
    throw value_error("unknown suite '" + name + "'");
}

}  // namespace mwt
