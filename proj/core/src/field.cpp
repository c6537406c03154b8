#include "mwt/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mwt/errors.hpp"
#include "mwt/factor.hpp"

namespace mwt {

i64 inv_mod(i64 a, i64 p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw value_error("division by zero mod " + std::to_string(p));
    i64 t = 0, newt = 1, r = p, newr = a;
    while (newr) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    return t < 0 ? t + p : t;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool FieldElement::is_zero() const {
    return std::all_of(c.begin(), c.end(), [](i64 x) { return x == 0; });
}

FiniteField::FiniteField(i64 p_, int k_, std::vector<i64> mod_)
    : p(p_), k(k_), q(1), modulus(std::move(mod_)) {
    for (int i = 0; i < k; ++i) q *= p;
}

FieldElement FiniteField::zero() const { return {this, std::vector<i64>(k, 0)}; }

FieldElement FiniteField::one() const { return from_int(1); }

FieldElement FiniteField::from_int(i64 n) const {
    std::vector<i64> c(k, 0);
    c[0] = ((n % p) + p) % p;
    return {this, std::move(c)};
}

FieldElement FiniteField::from_coeffs(std::vector<i64> c) const {
    if ((int)c.size() > k) throw value_error("coefficient vector longer than field degree");
    c.resize(k, 0);
    for (auto& x : c) x = ((x % p) + p) % p;
    return {this, std::move(c)};
}

FieldElement FiniteField::gen() const {
    if (k == 1) return from_int(0);  // class of t = root of modulus t
    std::vector<i64> c(k, 0);
    c[1] = 1;
    return {this, std::move(c)};
}

static void check_owner(const FiniteField* F, const FieldElement& a) {
    if (a.F != F) throw value_error("element belongs to a different field");
}

FieldElement FiniteField::add(const FieldElement& a, const FieldElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    std::vector<i64> c(k);
    for (int i = 0; i < k; ++i) c[i] = add_mod(a.c[i], b.c[i], p);
    return {this, std::move(c)};
}

FieldElement FiniteField::sub(const FieldElement& a, const FieldElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    std::vector<i64> c(k);
    for (int i = 0; i < k; ++i) c[i] = sub_mod(a.c[i], b.c[i], p);
    return {this, std::move(c)};
}

FieldElement FiniteField::neg(const FieldElement& a) const {
    check_owner(this, a);
    std::vector<i64> c(k);
    for (int i = 0; i < k; ++i) c[i] = a.c[i] ? p - a.c[i] : 0;
    return {this, std::move(c)};
}

FieldElement FiniteField::mul(const FieldElement& a, const FieldElement& b) const {
    check_owner(this, a);
    check_owner(this, b);
    if (k == 1) return {this, {mul_mod(a.c[0], b.c[0], p)}};
    std::vector<i64> prod(2 * k - 1, 0);
    for (int i = 0; i < k; ++i) {
        if (!a.c[i]) continue;
        for (int j = 0; j < k; ++j)
            prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p;
    }
    // reduce mod modulus (monic)
    for (int d = 2 * k - 2; d >= k; --d) {
        i64 lead = prod[d];
        if (!lead) continue;
        prod[d] = 0;
        for (int i = 0; i < k; ++i)
            prod[d - k + i] = sub_mod(prod[d - k + i], mul_mod(lead, modulus[i], p), p);
    }
    prod.resize(k);
    return {this, std::move(prod)};
}

FieldElement FiniteField::pow(const FieldElement& a, u64 e) const {
    FieldElement r = one(), b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElement FiniteField::inv(const FieldElement& a) const {
    check_owner(this, a);
    if (a.is_zero()) throw value_error("inverse of zero in " + name());
    return pow(a, (u64)(q - 2));
}

FieldElement FiniteField::div(const FieldElement& a, const FieldElement& b) const {
    return mul(a, inv(b));
}

i64 FiniteField::index_of(const FieldElement& a) const {
    check_owner(this, a);
    i64 idx = 0;
    for (int i = k - 1; i >= 0; --i) idx = idx * p + a.c[i];
    return idx;
}

FieldElement FiniteField::from_index(i64 idx) const {
    std::vector<i64> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = idx % p;
        idx /= p;
    }
    return {this, std::move(c)};
}

bool FiniteField::is_square(const FieldElement& a) const {
    check_owner(this, a);
    if (a.is_zero()) throw value_error("square class of zero");
    return pow(a, (u64)((q - 1) / 2)) == one();
}

FieldElement FiniteField::least_nonsquare() const {
    for (i64 i = 1; i < q; ++i) {
        FieldElement a = from_index(i);
        if (!is_square(a)) return a;
    }
    throw error("no nonsquare found (impossible for odd q)");
}

static std::mutex dlog_mutex;

void FiniteField::build_dlog() const {
    std::lock_guard<std::mutex> lock(dlog_mutex);
    if (!dlog_table_.empty()) return;
    // least primitive element by index
    std::vector<i64> divisors;
    i64 m = q - 1;
    for (i64 d = 1; d * d <= m; ++d)
        if (m % d == 0) {
            divisors.push_back(d);
            divisors.push_back(m / d);
        }
    for (i64 i = 1; i < q; ++i) {
        FieldElement g = from_index(i);
        bool prim = true;
        for (i64 d : divisors)
            if (d != m && pow(g, (u64)d) == one()) {
                prim = false;
                break;
            }
        if (prim) {
            primitive_idx_ = i;
            break;
        }
    }
    std::vector<i64> table((size_t)q, -1);
    FieldElement g = from_index(primitive_idx_);
    FieldElement x = one();
    for (i64 e = 0; e < q - 1; ++e) {
        table[(size_t)index_of(x)] = e;
        x = mul(x, g);
    }
    dlog_table_ = std::move(table);
}

FieldElement FiniteField::primitive_element() const {
    if (dlog_table_.empty()) build_dlog();
    return from_index(primitive_idx_);
}

i64 FiniteField::dlog(const FieldElement& a) const {
    check_owner(this, a);
    if (a.is_zero()) throw value_error("dlog of zero");
    if (dlog_table_.empty()) build_dlog();
    return dlog_table_[(size_t)index_of(a)];
}

std::string FiniteField::to_string(const FieldElement& a) const {
    check_owner(this, a);
    if (k == 1) return std::to_string(a.c[0]);
    std::string s = "[";
    for (int i = 0; i < k; ++i) {
        if (i) s += ",";
        s += std::to_string(a.c[i]);
    }
    return s + "]";
}

std::string FiniteField::name() const {
    if (k == 1) return "GF(" + std::to_string(p) + ")";
    return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) { return a.F->add(a, b); }
FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a.F->sub(a, b); }
FieldElement operator*(const FieldElement& a, const FieldElement& b) { return a.F->mul(a, b); }
FieldElement operator-(const FieldElement& a) { return a.F->neg(a); }

/* ---- registry ---- */

static std::map<std::pair<i64, int>, std::unique_ptr<FiniteField>>& field_registry() {
    static std::map<std::pair<i64, int>, std::unique_ptr<FiniteField>> reg;
    return reg;
}

static std::mutex registry_mutex;

Field make_field(i64 p, int k, i64 bound) {
    if (p == 2) throw unsupported_error("characteristic 2 is unsupported");
    if (!is_prime(p)) throw value_error(std::to_string(p) + " is not prime");
    if (k < 1) throw value_error("extension degree must be >= 1");
    i64 q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > bound) throw unsupported_error("field size exceeds the configured bound");
    }
    std::lock_guard<std::mutex> lock(registry_mutex);
    auto& reg = field_registry();
    auto it = reg.find({p, k});
    if (it != reg.end()) return it->second.get();

    // Least monic irreducible of degree k: scan non-leading coefficients as a
    // base-p integer. Needs F_p arithmetic, so build a provisional prime field.
    std::vector<i64> mod;
    if (k == 1) {
        mod = {0, 1};  // t
    } else {
        FiniteField fp(p, 1, {0, 1});
        i64 total = 1;
        for (int i = 0; i < k; ++i) total *= p;
        for (i64 n = 0;; ++n) {
            if (n >= total) throw error("no irreducible found (impossible)");
            std::vector<FieldElement> c;
            i64 m = n;
            for (int i = 0; i < k; ++i) {
                c.push_back(fp.from_int(m % p));
                m /= p;
            }
            c.push_back(fp.one());
            Poly f{&fp, c};
            if (poly_is_irreducible(f)) {
                mod.resize(k + 1);
                for (int i = 0; i <= k; ++i) mod[i] = f.c[i].c[0];
                break;
            }
        }
    }
    auto F = std::make_unique<FiniteField>(p, k, std::move(mod));
    Field out = F.get();
    reg[{p, k}] = std::move(F);
    return out;
}

Field parse_field(const std::string& spec) {
    if (spec.size() < 5 || spec.substr(0, 3) != "GF(" || spec.back() != ')')
        throw parse_error("expected GF(p) or GF(p^k)", 0);
    std::string inner = spec.substr(3, spec.size() - 4);
    auto caret = inner.find('^');
    i64 p;
    int k = 1;
    try {
        if (caret == std::string::npos) {
            p = std::stoll(inner);
            // allow GF(q) with q a prime power
            if (!is_prime(p)) {
                for (i64 b = 2; b * b <= p; ++b) {
                    if (!is_prime(b)) continue;
                    i64 x = p;
                    int e = 0;
                    while (x % b == 0) x /= b, ++e;
                    if (x == 1) {
                        p = b;
                        k = e;
                        break;
                    }
                }
            }
        } else {
            p = std::stoll(inner.substr(0, caret));
            k = std::stoi(inner.substr(caret + 1));
        }
    } catch (const std::exception&) {
        throw parse_error("bad field literal " + spec, 0);
    }
    return make_field(p, k);
}

bool square_class_is_square(const FieldElement& a) { return a.F->is_square(a); }

}  // namespace mwt
