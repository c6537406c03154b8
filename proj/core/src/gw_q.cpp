#include "mwt/gw_q.hpp"

#include <algorithm>
#include <set>

#include "mwt/errors.hpp"

namespace mwt {

GwQ gwq_zero() { return {}; }

GwQ gwq_unit(const QClass& a) { return {{{a, 1}}}; }

GwQ gwq_diag(const std::vector<Rat>& units) {
    GwQ r;
    for (auto& u : units) r.terms.push_back({qclass_of(u), 1});
    return r;
}

GwQ gwq_add(const GwQ& a, const GwQ& b) {
    GwQ r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

GwQ gwq_neg(const GwQ& a) {
    GwQ r = a;
    for (auto& t : r.terms) t.second = -t.second;
    return r;
}

GwQ gwq_sub(const GwQ& a, const GwQ& b) { return gwq_add(a, gwq_neg(b)); }

GwQ gwq_mul(const GwQ& a, const GwQ& b) {
    GwQ r;
    for (auto& [u, cu] : a.terms)
        for (auto& [v, cv] : b.terms) r.terms.push_back({qclass_mul(u, v), cu * cv});
    return r;
}

GwQ nq_epsilon(long n) {
    if (n < 0) throw value_error("n_epsilon needs a natural number");
    GwQ r;
    for (long i = 1; i <= n; ++i)
        r.terms.push_back({qclass_of_int(i % 2 == 1 ? 1 : -1), 1});
    return r;
}

/* Hasse invariant of an honest diagonal form at a place */
static int hasse_at(const std::vector<QClass>& diag, i64 place) {
    int h = 1;
    for (size_t i = 0; i < diag.size(); ++i)
        for (size_t j = i + 1; j < diag.size(); ++j)
            h *= hilbert_symbol(diag[i], diag[j], place);
    return h;
}

/* places that can carry a nontrivial symbol for forms with these entries */
static std::set<i64> support_places(const std::vector<QClass>& P, const std::vector<QClass>& N) {
    std::set<i64> s{2};
    for (auto& c : P)
        for (i64 p : qclass_primes(c)) s.insert(p);
    for (auto& c : N)
        for (i64 p : qclass_primes(c)) s.insert(p);
    return s;
}

GwInvQ gwq_invariants(const GwQ& a) {
    GwInvQ inv;
    inv.disc = QClass{};
    std::vector<QClass> P;
    for (auto& [u, c] : a.terms) {
        inv.rank += c;
        inv.signature += (u.sign > 0 ? c : -c);
        if (c & 1) inv.disc = qclass_mul(inv.disc, u);
        long reps = c > 0 ? c : 0;
        for (long i = 0; i < reps; ++i) P.push_back(u);
    }
    for (i64 pl : support_places(P, {})) inv.hasse[pl] = hasse_at(P, pl);
    return inv;
}

bool gwq_is_zero(const GwQ& a) { return gwq_equal(a, gwq_zero()); }

bool gwq_equal(const GwQ& a, const GwQ& b) {
    // compare d = a - b with 0: split into positive and negative honest forms
    GwQ d = gwq_sub(a, b);
    std::vector<QClass> P, N;
    long rank = 0, sig = 0;
    for (auto& [u, c] : d.terms) {
        rank += c;
        sig += (u.sign > 0 ? c : -c);
        for (long i = 0; i < (c > 0 ? c : -c); ++i) (c > 0 ? P : N).push_back(u);
    }
    if (rank != 0 || sig != 0) return false;
    if (P.empty() && N.empty()) return true;
    // P and N have equal rank and signature; isometric iff disc and all local
    // Hasse symbols agree (the real place is covered by the signature)
    QClass dP, dN;
    for (auto& u : P) dP = qclass_mul(dP, u);
    for (auto& u : N) dN = qclass_mul(dN, u);
    if (!(dP == dN)) return false;
    for (i64 pl : support_places(P, N))
        if (hasse_at(P, pl) != hasse_at(N, pl)) return false;
    return true;
}

std::vector<Rat> diagonalize_gram_q(const std::vector<std::vector<Rat>>& M0) {
    size_t n = M0.size();
    for (auto& row : M0)
        if (row.size() != n) throw value_error("Gram matrix must be square");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (M0[i][j] != M0[j][i]) throw value_error("Gram matrix must be symmetric");
    auto M = M0;
    std::vector<Rat> diag;
    auto sym_swap = [&](size_t i, size_t j) {
        if (i == j) return;
        std::swap(M[i], M[j]);
        for (size_t r = 0; r < n; ++r) std::swap(M[r][i], M[r][j]);
    };
    for (size_t s = 0; s < n; ++s) {
        if (M[s][s] == Rat(0)) {
            size_t dpiv = n;
            for (size_t i = s; i < n; ++i)
                if (M[i][i] != Rat(0)) {
                    dpiv = i;
                    break;
                }
            if (dpiv < n) {
                sym_swap(s, dpiv);
            } else {
                size_t pi = n, pj = n;
                for (size_t i = s; i < n && pi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (M[i][j] != Rat(0)) {
                            pi = i;
                            pj = j;
                            break;
                        }
                if (pi == n) throw value_error("degenerate Gram matrix");
                sym_swap(s, pi);
                sym_swap(s + 1, pj);
                for (size_t r = 0; r < n; ++r) M[s][r] += M[s + 1][r];
                for (size_t r = 0; r < n; ++r) M[r][s] += M[r][s + 1];
            }
        }
        if (M[s][s] == Rat(0)) throw value_error("degenerate Gram matrix");
        diag.push_back(M[s][s]);
        for (size_t i = s + 1; i < n; ++i) {
            if (M[i][s] == Rat(0)) continue;
            Rat f = M[i][s] / M[s][s];
            for (size_t r = s; r < n; ++r) M[i][r] -= f * M[s][r];
            for (size_t r = s; r < n; ++r) M[r][i] -= f * M[r][s];
        }
    }
    return diag;
}

std::string gwq_to_string(const GwQ& a) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (auto& [u, c] : a.terms) {
        if (c == 0) continue;
        if (!s.empty() || c < 0) s += (c < 0 ? "-" : "+");
        long ab = c < 0 ? -c : c;
        if (ab != 1) s += std::to_string(ab) + "*";
        s += "<" + qclass_to_string(u) + ">";
    }
    return s.empty() ? "0" : s;
}

}  // namespace mwt
