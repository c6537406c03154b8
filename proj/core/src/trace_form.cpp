#include "mwt/trace_form.hpp"

#include "mwt/errors.hpp"

namespace mwt {

GwFq trace_form_transfer(const Extension& ext, const GwFq& e_top) {
    if (e_top.F != ext.top) throw value_error("trace form input not over the top field");
    GwFq out{ext.base, {}};
    int d = ext.d;
    for (auto& [b, coeff] : e_top.terms) {
        if (b.is_zero()) throw value_error("zero entry in a diagonal form");
        // Gram of (u,v) -> Tr(b u v) on the power basis of the generator
        std::vector<FieldElement> gpow;
        FieldElement x = ext.top->one();
        for (int i = 0; i < 2 * d - 1; ++i) {
            gpow.push_back(x);
            x = x * ext.gen;
        }
        std::vector<std::vector<FieldElement>> M((size_t)d);
        for (int i = 0; i < d; ++i) {
            M[(size_t)i].resize((size_t)d);
            for (int j = 0; j < d; ++j)
                M[(size_t)i][(size_t)j] = ext.trace(b * gpow[(size_t)(i + j)]);
        }
        auto diag = diagonalize_gram(ext.base, M);
        for (auto& u : diag) out.terms.push_back({u, coeff});
    }
    return out;
}

/* ---- Q[x]/(f) ---- */

NumberFieldQ::NumberFieldQ(std::vector<Rat> monic_min_poly) : f_(std::move(monic_min_poly)) {
    d_ = (int)f_.size() - 1;
    if (d_ < 1 || f_.back() != Rat(1))
        throw value_error("number field needs a monic minimal polynomial");
}

NumberFieldQ::Elem NumberFieldQ::one() const {
    Elem e((size_t)d_, Rat(0));
    e[0] = Rat(1);
    return e;
}

NumberFieldQ::Elem NumberFieldQ::gen() const {
    Elem e((size_t)d_, Rat(0));
    if (d_ == 1)
        e[0] = -f_[0];
    else
        e[1] = Rat(1);
    return e;
}

NumberFieldQ::Elem NumberFieldQ::mul(const Elem& a, const Elem& b) const {
    std::vector<Rat> prod((size_t)(2 * d_ - 1), Rat(0));
    for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) prod[(size_t)(i + j)] += a[(size_t)i] * b[(size_t)j];
    for (int deg = 2 * d_ - 2; deg >= d_; --deg) {
        Rat lead = prod[(size_t)deg];
        if (lead == Rat(0)) continue;
        prod[(size_t)deg] = Rat(0);
        for (int i = 0; i < d_; ++i) prod[(size_t)(deg - d_ + i)] -= lead * f_[(size_t)i];
    }
    prod.resize((size_t)d_);
    return prod;
}

Rat NumberFieldQ::trace(const Elem& a) const {
    // trace of the multiplication-by-a matrix on the power basis
    Rat t(0);
    Elem col = a;  // a * x^j, column j
    for (int j = 0; j < d_; ++j) {
        t += col[(size_t)j];
        if (j + 1 < d_) {
            // multiply by x
            Elem next((size_t)d_, Rat(0));
            Rat lead = col[(size_t)(d_ - 1)];
            for (int i = d_ - 1; i >= 1; --i) next[(size_t)i] = col[(size_t)(i - 1)];
            next[0] = Rat(0);
            for (int i = 0; i < d_; ++i) next[(size_t)i] -= lead * f_[(size_t)i];
            col = next;
        }
    }
    return t;
}

Rat NumberFieldQ::norm_of_gen() const {
    Rat n = f_[0];
    if (d_ % 2) n = -n;
    return n;
}

NumberFieldQ::Elem NumberFieldQ::min_poly_derivative_at_gen() const {
    Elem v((size_t)d_, Rat(0));
    Elem x = gen(), pw = one();
    for (int i = 1; i <= d_; ++i) {
        // term i * f_i * x^{i-1}
        for (int j = 0; j < d_; ++j) v[(size_t)j] += Rat(i) * f_[(size_t)i] * pw[(size_t)j];
        pw = mul(pw, x);
    }
    return v;
}

GwQ trace_form_transfer_q(const NumberFieldQ& K,
                          const std::vector<std::pair<NumberFieldQ::Elem, long>>& e_top) {
    GwQ out;
    int d = K.degree();
    for (auto& [b, coeff] : e_top) {
        std::vector<NumberFieldQ::Elem> gpow;
        NumberFieldQ::Elem x = K.one();
        for (int i = 0; i < 2 * d - 1; ++i) {
            gpow.push_back(x);
            x = K.mul(x, K.gen());
        }
        std::vector<std::vector<Rat>> M((size_t)d, std::vector<Rat>((size_t)d, Rat(0)));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                M[(size_t)i][(size_t)j] = K.trace(K.mul(b, gpow[(size_t)(i + j)]));
        auto diag = diagonalize_gram_q(M);
        for (auto& u : diag) out.terms.push_back({qclass_of(u), coeff});
    }
    return out;
}

}  // namespace mwt
