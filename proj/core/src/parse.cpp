#include "mwt/parse.hpp"

#include <cctype>

#include "mwt/errors.hpp"

namespace mwt {

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    i64 integer() {
        skip();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw parse_error("expected integer", start);
        return std::stoll(s.substr(start, i - start));
    }
};

/* rational-function expression evaluator over F(t) */
struct RfExpr {
    Field F;
    Cursor cur;

    RatFunc parse() {
        RatFunc v = expr();
        cur.skip();
        if (cur.i != cur.s.size()) throw parse_error("trailing input", cur.i);
        return v;
    }

    RatFunc expr() {
        bool neg = false;
        cur.skip();
        if (cur.peek() == '-') {
            cur.eat('-');
            neg = true;
        }
        RatFunc acc = term();
        if (neg) acc = rf_mul(rf_const(F->from_int(-1)), acc);
        for (;;) {
            char c = cur.peek();
            if (c == '+' || c == '-') {
                cur.eat(c);
                RatFunc t = term();
                if (c == '-') t = rf_mul(rf_const(F->from_int(-1)), t);
                RatFunc sum;
                if (!rf_try_add(acc, t, sum))
                    throw value_error("expression evaluates to zero");
                acc = sum;
            } else {
                return acc;
            }
        }
    }

    RatFunc term() {
        RatFunc acc = factor();
        for (;;) {
            char c = cur.peek();
            if (c == '*') {
                cur.eat('*');
                acc = rf_mul(acc, factor());
            } else if (c == '/') {
                cur.eat('/');
                acc = rf_div(acc, factor());
            } else {
                return acc;
            }
        }
    }

    RatFunc factor() {
        RatFunc base = atom();
        if (cur.peek() == '^') {
            cur.eat('^');
            i64 e = cur.integer();
            RatFunc r = rf_const(F->one());
            RatFunc b = e < 0 ? rf_inv(base) : base;
            for (i64 k = 0; k < (e < 0 ? -e : e); ++k) r = rf_mul(r, b);
            return r;
        }
        return base;
    }

    RatFunc atom() {
        char c = cur.peek();
        if (c == '(') {
            cur.eat('(');
            RatFunc v = expr();
            if (!cur.eat(')')) throw parse_error("expected ')'", cur.i);
            return v;
        }
        if (c == 't') {
            cur.eat('t');
            return rf_t(F);
        }
        if (c == '[') {
            return rf_const(element(F));
        }
        if (c == '-' || std::isdigit((unsigned char)c)) {
            i64 n = cur.integer();
            FieldElement e = F->from_int(n);
            if (e.is_zero()) throw value_error("zero is not a unit in this context");
            return rf_const(e);
        }
        throw parse_error("unexpected character in expression", cur.i);
    }

    FieldElement element(Field owner) {
        if (!cur.eat('[')) throw parse_error("expected '['", cur.i);
        std::vector<i64> cs;
        cs.push_back(cur.integer());
        while (cur.eat(',')) cs.push_back(cur.integer());
        if (!cur.eat(']')) throw parse_error("expected ']'", cur.i);
        return owner->from_coeffs(cs);
    }
};

}  // namespace

FieldElement parse_element(Field F, const std::string& s) {
    Cursor cur{s, 0};
    cur.skip();
    if (cur.peek() == '[') {
        RfExpr p{F, cur};
        FieldElement e = p.element(F);
        p.cur.skip();
        if (p.cur.i != s.size()) throw parse_error("trailing input", p.cur.i);
        return e;
    }
    i64 n = cur.integer();
    cur.skip();
    if (cur.i != s.size()) throw parse_error("trailing input", cur.i);
    return F->from_int(n);
}

RatFunc parse_ratfunc(Field F, const std::string& s) {
    RfExpr p{F, Cursor{s, 0}};
    return p.parse();
}

Poly parse_poly(Field F, const std::string& s) {
    RatFunc r = parse_ratfunc(F, s);
    if (r.den.deg() != 0) throw value_error("expected a polynomial, got a denominator");
    return poly_scale(r.num, r.unit);
}

}  // namespace mwt
