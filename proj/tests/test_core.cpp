#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "mwt/errors.hpp"
#include "mwt/extension.hpp"
#include "mwt/factor.hpp"
#include "mwt/field.hpp"
#include "mwt/parse.hpp"
#include "mwt/poly.hpp"

using namespace mwt;

namespace {

/* independent irreducibility oracle for degree <= 3: no roots (plus, for
   quadratics/cubics over F_p, rootlessness is equivalent to irreducibility) */
bool rootless(Field F, const Poly& f) {
    for (i64 i = 0; i < F->q; ++i)
        if (poly_eval(f, F->from_index(i)).is_zero()) return false;
    return true;
}

u64 rb(std::mt19937_64& rng, u64 n) { return rand_below(rng, n); }

}  // namespace

TEST_CASE("make_field picks the least monic irreducible modulus") {
    Field F3 = make_field(3, 1);
    CHECK(F3->q == 3);
    CHECK(F3->modulus == std::vector<i64>{0, 1});  // t

    Field F9 = make_field(3, 2);
    CHECK(F9->q == 9);
    // oracle: scan monic quadratics t^2 + c1 t + c0 in base-3 order of (c0,c1)
    std::vector<i64> expected;
    for (i64 n = 0; n < 9 && expected.empty(); ++n) {
        Poly f = poly_from_coeffs(F3, {n % 3, n / 3, 1});
        if (rootless(F3, f)) expected = {n % 3, n / 3, 1};
    }
    CHECK(F9->modulus == expected);
    CHECK(F9->modulus == std::vector<i64>{1, 0, 1});  // t^2 + 1

    CHECK_THROWS_AS(make_field(2, 3), unsupported_error);
    CHECK_THROWS_AS(make_field(9, 1), value_error);
    CHECK_THROWS_AS(make_field(3, 20), unsupported_error);  // beyond the bound
    CHECK(make_field(3, 2) == F9);  // interned
}

TEST_CASE("field element arithmetic") {
    Field F9 = make_field(3, 2);
    FieldElement x = F9->gen();
    CHECK((x * x) == F9->from_int(-1));  // modulus t^2+1
    FieldElement a = F9->from_coeffs({1, 2});
    CHECK((a * F9->inv(a)) == F9->one());
    CHECK(F9->index_of(F9->from_index(7)) == 7);
    CHECK_THROWS_AS(F9->inv(F9->zero()), value_error);
    // primitive element generates
    FieldElement g = F9->primitive_element();
    FieldElement p = g;
    int order = 1;
    while (!(p == F9->one())) {
        p = p * g;
        ++order;
    }
    CHECK(order == 8);
    CHECK(F9->dlog(g * g * g) == 3);
}

TEST_CASE("factor: stated examples") {
    Field F3 = make_field(3, 1);
    auto f1 = factor_poly(poly_from_coeffs(F3, {-1, 0, 1}));  // t^2-1
    REQUIRE(f1.factors.size() == 2);
    CHECK(poly_to_string(f1.factors[0].first) == "t+1");
    CHECK(poly_to_string(f1.factors[1].first) == "t+2");
    CHECK(f1.lead == F3->one());

    auto f2 = factor_poly(poly_from_coeffs(F3, {1, 0, 1}));  // t^2+1
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].second == 1);
    CHECK(f2.factors[0].first.deg() == 2);
    CHECK(rootless(F3, f2.factors[0].first));  // -1 is a nonsquare mod 3

    auto f3 = factor_poly(poly_from_coeffs(F3, {0, -2, 0, 2}));  // 2t^3-2t
    REQUIRE(f3.factors.size() == 3);
    CHECK(f3.lead == F3->from_int(2));
    for (auto& [g, m] : f3.factors) CHECK(g.deg() == 1);

    CHECK_THROWS_AS(factor_poly(poly_zero(F3)), value_error);
}

TEST_CASE("factor is multiplicative on random products") {
    std::mt19937_64 rng(11);
    for (i64 q : {3, 5, 9}) {
        Field F = q == 9 ? make_field(3, 2) : make_field(q, 1);
        for (int it = 0; it < 40; ++it) {
            auto rand_poly = [&](int dmax) {
                std::vector<FieldElement> c;
                int d = 1 + (int)rb(rng, (u64)dmax);
                for (int i = 0; i < d; ++i) c.push_back(F->from_index((i64)rb(rng, (u64)F->q)));
                c.push_back(F->from_index(1 + (i64)rb(rng, (u64)(F->q - 1))));
                return poly_trim({F, c});
            };
            Poly f = rand_poly(3), g = rand_poly(3);
            auto ff = factor_poly(f), fg = factor_poly(g), fp = factor_poly(poly_mul(f, g));
            std::map<std::string, int> merged;
            for (auto& [h, m] : ff.factors) merged[poly_to_string(h)] += m;
            for (auto& [h, m] : fg.factors) merged[poly_to_string(h)] += m;
            std::map<std::string, int> prod;
            for (auto& [h, m] : fp.factors) prod[poly_to_string(h)] += m;
            CHECK(merged == prod);
            CHECK(fp.lead == ff.lead * fg.lead);
        }
    }
}

TEST_CASE("square classes") {
    Field F5 = make_field(5, 1);
    CHECK(square_class_is_square(F5->from_int(4)));  // 2^2
    // oracle: squares mod 5 are {1,4}
    std::set<i64> squares;
    for (i64 a = 1; a < 5; ++a) squares.insert((a * a) % 5);
    CHECK(squares == std::set<i64>{1, 4});
    CHECK(!square_class_is_square(F5->from_int(2)));
    Field F3 = make_field(3, 1);
    CHECK(!square_class_is_square(F3->from_int(2)));  // 2 = -1
    CHECK_THROWS_AS(square_class_is_square(F5->zero()), value_error);
    // the square-class group is Z/2: class(ab) = class(a) xor class(b)
    Field F9 = make_field(3, 2);
    for (i64 i = 1; i < 9; ++i)
        for (i64 j = 1; j < 9; ++j) {
            FieldElement a = F9->from_index(i), b = F9->from_index(j);
            CHECK(square_class_is_square(a * b) ==
                  (square_class_is_square(a) == square_class_is_square(b)));
        }
}

TEST_CASE("norm and trace: stated examples") {
    Field F3 = make_field(3, 1);
    Extension ext = make_extension(F3, 2);  // F9 = F3(x), x^2+1 = 0
    FieldElement x = ext.top->gen();
    auto [n, t] = ext.norm_and_trace(x);
    // oracle: N = x * x^3 = -x^2 = 1
    FieldElement n_oracle = x * ext.top->pow(x, 3);
    CHECK(ext.embed(n) == n_oracle);
    CHECK(n == F3->one());
    CHECK(t == F3->zero());

    auto [n2, t2] = ext.norm_and_trace(x + ext.top->one());
    CHECK(n2 == F3->from_int(2));  // constant term of t^2+t+2
    CHECK(t2 == F3->from_int(2));
    CHECK(poly_to_string(ext.min_poly_of(x + ext.top->one())) == "t^2+t+2");

    // degree-1 extension: norm = trace = identity
    Extension triv = extension_with_generator(F3, F3, F3->from_int(2));
    auto [n3, t3] = triv.norm_and_trace(F3->from_int(2));
    CHECK(n3 == F3->from_int(2));
    CHECK(t3 == F3->from_int(2));
}

TEST_CASE("norm multiplicative, trace additive on seeded pairs") {
    std::mt19937_64 rng(2024);
    for (i64 q : {3, 5, 7, 9, 25, 27}) {
        Field base = nullptr;
        int d = 2;
        if (q == 9) base = make_field(3, 1);
        else if (q == 25) base = make_field(5, 1);
        else if (q == 27) { base = make_field(3, 1); d = 3; }
        else { base = make_field(q, 1); }
        Extension ext = q < 9 ? make_extension(base, 2) : make_extension(base, d);
        for (int it = 0; it < 200; ++it) {
            FieldElement a = ext.top->from_index((i64)rb(rng, (u64)ext.top->q));
            FieldElement b = ext.top->from_index((i64)rb(rng, (u64)ext.top->q));
            auto [na, ta] = ext.norm_and_trace(a);
            auto [nb, tb] = ext.norm_and_trace(b);
            CHECK(ext.norm_and_trace(a * b).first == na * nb);
            CHECK(ext.norm_and_trace(a + b).second == ta + tb);
        }
        // norm of the generator vs the constant term
        FieldElement f0 = ext.min_poly.constant();
        FieldElement sign = base->from_int(ext.d % 2 == 0 ? 1 : -1);
        CHECK(ext.norm(ext.gen) == sign * f0);
    }
}

TEST_CASE("min poly of base elements and orbit degrees") {
    Field F3 = make_field(3, 1);
    Extension ext = make_extension(F3, 2);
    CHECK(poly_to_string(ext.min_poly) == "t^2+1");
    for (i64 a = 0; a < 3; ++a) {
        Poly mp = ext.min_poly_of(ext.embed(F3->from_int(a)));
        CHECK(mp.deg() == 1);  // t - a
        CHECK(poly_eval(mp, F3->from_int(a)).is_zero());
    }
    Extension e6 = make_extension(F3, 6);
    for (i64 idx : {5, 17, 100}) {
        Poly mp = e6.min_poly_of(e6.top->from_index(idx));
        CHECK(6 % mp.deg() == 0);
        CHECK(poly_is_irreducible(mp));
    }
}

TEST_CASE("tensor splitting") {
    auto s = tensor_split(2, 3);
    REQUIRE(s.size() == 1);
    CHECK(s[0] == std::pair<int, int>{6, 1});
    CHECK(tensor_split(2, 2)[0] == std::pair<int, int>{2, 2});
    CHECK(tensor_split(1, 7)[0] == std::pair<int, int>{7, 1});
    // oracle for q = 3: count the components of F_{3^d} (x) F_{3^r} by
    // factoring the degree-d modulus over F_{3^r}
    Field F3 = make_field(3, 1);
    for (int d = 1; d <= 4; ++d)
        for (int r = 1; r <= 3; ++r) {
            Field Fd = make_field(3, d);
            Field Fr = make_field(3, r);
            Poly mod_d = poly_from_coeffs(F3, Fd->modulus);
            auto fac = factor_poly(poly_map(mod_d, Fr));
            auto [deg, cnt] = tensor_split(d, r)[0];
            CHECK((int)fac.factors.size() == cnt);
            for (auto& [h, m] : fac.factors) {
                CHECK(m == 1);  // separable
                CHECK(h.deg() * r == deg);  // component degree over the base
            }
            // dimension count
            CHECK(deg * cnt == d * r);
        }
}

TEST_CASE("relative coordinates round-trip") {
    Field F5 = make_field(5, 1);
    Extension ext = make_extension(F5, 3);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        FieldElement a = ext.top->from_index((i64)rb(rng, (u64)ext.top->q));
        auto c = ext.relative_coords(a);
        REQUIRE((int)c.size() == 3);
        FieldElement back = ext.top->zero(), gp = ext.top->one();
        for (auto& ci : c) {
            back = back + ext.embed(ci) * gp;
            gp = gp * ext.gen;
        }
        CHECK(back == a);
    }
}

TEST_CASE("field and polynomial parsing") {
    CHECK(parse_field("GF(3)") == make_field(3, 1));
    CHECK(parse_field("GF(3^2)") == make_field(3, 2));
    CHECK(parse_field("GF(9)") == make_field(3, 2));
    CHECK_THROWS(parse_field("GF(6)"));
    Field F3 = make_field(3, 1);
    CHECK(poly_to_string(parse_poly(F3, "t^2+t+2")) == "t^2+t+2");
    CHECK(poly_to_string(parse_poly(F3, "2*t^3-2*t")) == "2*t^3+t");
    Field F9 = make_field(3, 2);
    Poly p = parse_poly(F9, "t^2+[1,1]*t+[2,0]");
    CHECK(p.deg() == 2);
    CHECK(p.c[1] == F9->from_coeffs({1, 1}));
    CHECK_THROWS_AS(parse_poly(F3, "t^2+)"), parse_error);
}
