#include "mwt/extension.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "mwt/errors.hpp"

namespace mwt {

/* ---- canonical embeddings, memoized ---- */

static std::mutex emb_mutex;

FieldElement embedding_root(Field small, Field big) {
    if (small == big) return big->gen();
    if (small->p != big->p || big->k % small->k != 0)
        throw value_error("no embedding " + small->name() + " -> " + big->name());
    static std::map<std::pair<Field, Field>, FieldElement> cache;
    std::lock_guard<std::mutex> lock(emb_mutex);
    auto it = cache.find({small, big});
    if (it != cache.end()) return it->second;
    // least root of the small modulus inside big
    Poly mod_big = poly_from_coeffs(big, small->modulus);
    auto roots = poly_roots(mod_big);
    if (roots.empty()) throw error("embedding root not found (impossible)");
    cache[{small, big}] = roots.front();
    return roots.front();
}

FieldElement embed_field(Field small, Field big, const FieldElement& a) {
    if (a.F != small) throw value_error("embed_field: element not in source field");
    if (small == big) return a;
    FieldElement r = embedding_root(small, big);
    FieldElement out = big->zero();
    for (int i = small->k - 1; i >= 0; --i)
        out = out * r + big->from_int(a.c[(size_t)i]);
    return out;
}

Poly poly_map(const Poly& f, Field big) {
    std::vector<FieldElement> c;
    c.reserve(f.c.size());
    for (auto& a : f.c) c.push_back(embed_field(f.F, big, a));
    return poly_trim({big, std::move(c)});
}

/* ---- Extension ---- */

Extension::Extension(Field base_, Field top_, FieldElement gen_, Poly min_poly_)
    : base(base_), top(top_), d(min_poly_.deg()), gen(std::move(gen_)),
      min_poly(std::move(min_poly_)) {
    if (min_poly.F != base) throw value_error("min poly not over the base field");
    if (!min_poly.is_monic()) throw value_error("min poly must be monic");
    if (top->k != base->k * d || top->p != base->p)
        throw value_error("field degrees inconsistent with the minimal polynomial");
    // check f(gen) = 0
    FieldElement v = top->zero();
    for (int i = d; i >= 0; --i)
        v = v * gen + embed_field(base, top, min_poly.c[(size_t)i]);
    if (!v.is_zero()) throw value_error("generator is not a root of the minimal polynomial");
    build_coord_solver();
}

void Extension::build_coord_solver() {
    // F_p-matrix sending (b_0..b_{d-1}) in base^d to sum emb(b_j) gen^j in top
    int n = top->k;
    i64 p = top->p;
    std::vector<i64> M((size_t)n * n, 0);  // column-major by input coordinate
    FieldElement gpow = top->one();
    int col = 0;
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < base->k; ++i) {
            FieldElement basis_elt = base->zero();
            basis_elt.c[(size_t)i] = 1;
            FieldElement img = embed(basis_elt) * gpow;
            for (int r = 0; r < n; ++r) M[(size_t)r * n + col] = img.c[(size_t)r];
            ++col;
        }
        gpow = gpow * gen;
    }
    // invert M mod p (Gauss-Jordan)
    std::vector<i64> A = M, I((size_t)n * n, 0);
    for (int i = 0; i < n; ++i) I[(size_t)i * n + i] = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (A[(size_t)r * n + c]) {
                piv = r;
                break;
            }
        if (piv < 0) throw error("generator does not generate the top field over the base");
        if (piv != c)
            for (int j = 0; j < n; ++j) {
                std::swap(A[(size_t)piv * n + j], A[(size_t)c * n + j]);
                std::swap(I[(size_t)piv * n + j], I[(size_t)c * n + j]);
            }
        i64 inv = inv_mod(A[(size_t)c * n + c], p);
        for (int j = 0; j < n; ++j) {
            A[(size_t)c * n + j] = mul_mod(A[(size_t)c * n + j], inv, p);
            I[(size_t)c * n + j] = mul_mod(I[(size_t)c * n + j], inv, p);
        }
        for (int r = 0; r < n; ++r) {
            if (r == c || !A[(size_t)r * n + c]) continue;
            i64 f = A[(size_t)r * n + c];
            for (int j = 0; j < n; ++j) {
                A[(size_t)r * n + j] = sub_mod(A[(size_t)r * n + j], mul_mod(f, A[(size_t)c * n + j], p), p);
                I[(size_t)r * n + j] = sub_mod(I[(size_t)r * n + j], mul_mod(f, I[(size_t)c * n + j], p), p);
            }
        }
    }
    coord_matrix_inv_ = std::move(I);
}

FieldElement Extension::embed(const FieldElement& a_base) const {
    return embed_field(base, top, a_base);
}

std::vector<FieldElement> Extension::relative_coords(const FieldElement& a_top) const {
    if (a_top.F != top) throw value_error("relative_coords: element not in the top field");
    int n = top->k;
    i64 p = top->p;
    std::vector<i64> y((size_t)n, 0);
    for (int r = 0; r < n; ++r) {
        i64 s = 0;
        for (int c = 0; c < n; ++c)
            s = (s + coord_matrix_inv_[(size_t)r * n + c] * a_top.c[(size_t)c]) % p;
        y[(size_t)r] = s;
    }
    std::vector<FieldElement> coords;
    coords.reserve((size_t)d);
    for (int j = 0; j < d; ++j) {
        std::vector<i64> c(y.begin() + (size_t)j * base->k, y.begin() + (size_t)(j + 1) * base->k);
        coords.push_back(base->from_coeffs(std::move(c)));
    }
    return coords;
}

FieldElement Extension::eval_at_gen(const Poly& f_over_base) const {
    if (f_over_base.F != base) throw value_error("eval_at_gen: wrong coefficient field");
    FieldElement v = top->zero();
    for (int i = f_over_base.deg(); i >= 0; --i)
        v = v * gen + embed(f_over_base.c[(size_t)i]);
    return v;
}

std::pair<FieldElement, FieldElement> Extension::norm_and_trace(const FieldElement& a_top) const {
    if (a_top.F != top) throw value_error("norm_and_trace: element not in the top field");
    FieldElement n = top->one(), t = top->zero(), conj = a_top;
    for (int i = 0; i < d; ++i) {
        n = n * conj;
        t = t + conj;
        conj = top->pow(conj, (u64)base->q);
    }
    auto nc = relative_coords(n);
    auto tc = relative_coords(t);
    for (int j = 1; j < d; ++j)
        if (!nc[(size_t)j].is_zero() || !tc[(size_t)j].is_zero())
            throw error("norm/trace did not land in the base field");
    return {nc[0], tc[0]};
}

FieldElement Extension::norm(const FieldElement& a_top) const { return norm_and_trace(a_top).first; }
FieldElement Extension::trace(const FieldElement& a_top) const { return norm_and_trace(a_top).second; }

Poly Extension::min_poly_of(const FieldElement& a_top) const {
    if (a_top.F != top) throw value_error("min_poly_of: element not in the top field");
    std::vector<FieldElement> orbit{a_top};
    FieldElement conj = top->pow(a_top, (u64)base->q);
    while (!(conj == a_top)) {
        orbit.push_back(conj);
        conj = top->pow(conj, (u64)base->q);
    }
    Poly f{top, {top->one()}};
    for (auto& r : orbit) f = poly_mul(f, poly_trim({top, {-r, top->one()}}));
    // map coefficients down to base
    std::vector<FieldElement> cs;
    for (auto& c : f.c) {
        auto rc = relative_coords(c);
        for (int j = 1; j < d; ++j)
            if (!rc[(size_t)j].is_zero()) throw error("min poly coefficients not in base");
        cs.push_back(rc[0]);
    }
    return poly_trim({base, std::move(cs)});
}

FieldElement Extension::min_poly_derivative_at_gen() const {
    return eval_at_gen(poly_derivative(min_poly));
}

Extension make_extension(Field base, int d, i64 bound) {
    Field top = make_field(base->p, base->k * d, bound);
    // class of t generates top over F_p, hence over base
    return extension_with_generator(base, top, top->gen());
}

Extension extension_from_min_poly(Field base, const Poly& f, i64 bound) {
    if (f.F != base) throw value_error("minimal polynomial not over the base field");
    if (!f.is_monic()) throw value_error("minimal polynomial must be monic");
    if (!poly_is_irreducible(f)) throw value_error("minimal polynomial must be irreducible");
    Field top = make_field(base->p, base->k * f.deg(), bound);
    Poly f_top = poly_map(f, top);
    auto roots = poly_roots(f_top);
    if (roots.empty()) throw error("no root of the minimal polynomial in the top field");
    return Extension(base, top, roots.front(), f);
}

Extension extension_with_generator(Field base, Field top, const FieldElement& gen) {
    // need the min poly before we can build the Extension; compute the orbit here
    if (gen.F != top) throw value_error("generator not in the top field");
    std::vector<FieldElement> orbit{gen};
    FieldElement conj = top->pow(gen, (u64)base->q);
    while (!(conj == gen)) {
        orbit.push_back(conj);
        conj = top->pow(conj, (u64)base->q);
    }
    int d = top->k / base->k;
    if ((int)orbit.size() != d)
        throw value_error("element does not generate the top field over the base");
    Poly f{top, {top->one()}};
    for (auto& r : orbit) f = poly_mul(f, poly_trim({top, {-r, top->one()}}));
    std::vector<FieldElement> cs;
    for (auto& c : f.c) {
        bool found = false;
        for (i64 idx = 0; idx < base->q; ++idx) {
            FieldElement b = base->from_index(idx);
            if (embed_field(base, top, b) == c) {
                cs.push_back(b);
                found = true;
                break;
            }
        }
        if (!found) throw error("min poly coefficient not in embedded base");
    }
    return Extension(base, top, gen, poly_trim({base, std::move(cs)}));
}

std::vector<std::pair<int, int>> tensor_split(int d, int r) {
    if (d < 1 || r < 1) throw value_error("tensor_split needs positive degrees");
    int g = std::gcd(d, r);
    int l = d / g * r;
    return {{l, g}};
}

}  // namespace mwt
