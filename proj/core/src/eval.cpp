#include "mwt/eval.hpp"

#include <cctype>

#include "mwt/errors.hpp"
#include "mwt/gw.hpp"
#include "mwt/kmw.hpp"
#include "mwt/parse.hpp"
#include "mwt/residue.hpp"
#include "mwt/transfer.hpp"

namespace mwt {

namespace {

using json = nlohmann::ordered_json;

/* Grammar (whitespace-insensitive):
     expr     := call | mwlit
     call     := NAME '(' args ')'
     names    : n_eps, gw, sym, residue, specialize, transfer, tower_transfer,
                normalize, transition_unit
   MW literals are evaluated relative to an "over" clause:
     "[t,2] over GF(3)(t)", "eta^1*[2,2] over GF(5)".
   GW diagonals: "gw<1,2> over GF(5)" or gw(GF(5), <1,2>). */

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n");
    size_t e = s.find_last_not_of(" \t\n");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

/* split on top-level commas (respecting (), [], <>; "->" is not a bracket) */
std::vector<std::string> split_args(const std::string& s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    char prev = '\0';
    for (char c : s) {
        if (c == '(' || c == '[' || c == '<') ++depth;
        if (c == ')' || c == ']' || (c == '>' && prev != '-')) --depth;
        if (c == ',' && depth == 0) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur += c;
        }
        prev = c;
    }
    if (!strip(cur).empty()) out.push_back(strip(cur));
    return out;
}

struct FieldSpec {
    Field F = nullptr;
    bool function_field = false;  // GF(q)(t)
};

FieldSpec parse_field_spec(const std::string& s0) {
    std::string s = strip(s0);
    FieldSpec fs;
    if (s.size() > 3 && s.substr(s.size() - 3) == "(t)") {
        fs.function_field = true;
        s = strip(s.substr(0, s.size() - 3));
    }
    fs.F = parse_field(s);
    return fs;
}

struct MwValue {
    bool over_ft = false;
    KmwFq fq;
    KmwFt ft;
    Field F = nullptr;
};

long parse_long(const std::string& s) {
    try {
        size_t used = 0;
        long v = std::stol(strip(s), &used);
        if (used != strip(s).size()) throw value_error("bad integer '" + s + "'");
        return v;
    } catch (const std::exception&) {
        throw value_error("bad integer '" + s + "'");
    }
}

/* "c*eta^m*[e1,...]" summands separated by +/- at top level */
MwValue parse_mw(const std::string& body, const FieldSpec& fs) {
    MwValue v;
    v.F = fs.F;
    v.over_ft = fs.function_field;
    struct Piece {
        int sign;
        std::string text;
    };
    std::vector<Piece> pieces;
    int depth = 0, sign = 1;
    std::string cur;
    for (char c : body) {
        if (c == '(' || c == '[' || c == '<') ++depth;
        if (c == ')' || c == ']' || c == '>') --depth;
        if ((c == '+' || c == '-') && depth == 0 && !strip(cur).empty()) {
            pieces.push_back({sign, strip(cur)});
            cur.clear();
            sign = c == '-' ? -1 : 1;
        } else if ((c == '+' || c == '-') && depth == 0) {
            if (c == '-') sign = -sign;
        } else {
            cur += c;
        }
    }
    if (!strip(cur).empty()) pieces.push_back({sign, strip(cur)});
    if (pieces.empty()) throw value_error("empty symbol expression");

    bool first = true;
    for (auto& piece : pieces) {
        long coeff = piece.sign;
        int eta = 0;
        std::vector<std::string> entry_strs;
        // tokens split on top-level '*'
        std::vector<std::string> toks;
        {
            std::string t;
            int d2 = 0;
            for (char c : piece.text) {
                if (c == '(' || c == '[' || c == '<') ++d2;
                if (c == ')' || c == ']' || c == '>') --d2;
                if (c == '*' && d2 == 0) {
                    toks.push_back(strip(t));
                    t.clear();
                } else {
                    t += c;
                }
            }
            if (!strip(t).empty()) toks.push_back(strip(t));
        }
        bool saw_entries = false;
        for (auto& tk : toks) {
            if (tk.empty()) continue;
            if (tk[0] == '[') {
                if (tk.back() != ']') throw value_error("unterminated entry list");
                saw_entries = true;
                for (auto& e : split_args(tk.substr(1, tk.size() - 2))) entry_strs.push_back(e);
            } else if (tk.rfind("eta", 0) == 0) {
                std::string rest = strip(tk.substr(3));
                if (rest.empty())
                    eta += 1;
                else if (rest[0] == '^')
                    eta += (int)parse_long(rest.substr(1));
                else
                    throw value_error("bad eta token '" + tk + "'");
            } else {
                coeff *= parse_long(tk);
            }
        }
        if (!saw_entries && eta == 0) {
            // pure integer summand: degree-0 constant
        }
        if (fs.function_field) {
            std::vector<RatFunc> entries;
            for (auto& e : entry_strs) entries.push_back(parse_ratfunc(fs.F, e));
            KmwFt term = kmw_scale_ft(kmw_symbol_ft(fs.F, eta, entries), coeff);
            v.ft = first ? term : kmw_add_ft(v.ft, term);
        } else {
            std::vector<FieldElement> entries;
            for (auto& e : entry_strs) {
                // entries over GF(q): element literal or small expression
                RatFunc r = parse_ratfunc(fs.F, e);
                if (r.num.deg() != 0 || r.den.deg() != 0)
                    throw value_error("entry '" + e + "' is not a constant");
                entries.push_back(r.unit);
            }
            KmwFq term = kmw_scale(kmw_symbol(fs.F, eta, entries), coeff);
            v.fq = first ? term : kmw_add(v.fq, term);
        }
        first = false;
    }
    return v;
}

/* "<body> over <fieldspec>" */
MwValue parse_mw_over(const std::string& s) {
    size_t pos = s.rfind(" over ");
    if (pos == std::string::npos) throw value_error("expected '<element> over <field>'");
    FieldSpec fs = parse_field_spec(s.substr(pos + 6));
    return parse_mw(strip(s.substr(0, pos)), fs);
}

json field_elem_json(const FieldElement& e) { return e.F->to_string(e); }

json gw_json(const GwFq& g) {
    auto inv = gw_invariants(g);
    json j;
    j["kind"] = "gw";
    j["field"] = g.F->name();
    j["value"] = gw_to_string(g);
    j["rank"] = inv.rank;
    j["disc"] = inv.disc_square ? "square" : "nonsquare";
    return j;
}

json kmw_json(const KmwFq& a) {
    json j;
    j["kind"] = "mw";
    j["field"] = a.F->name();
    j["degree"] = a.degree;
    j["value"] = kmw_to_string(a);
    auto inv = normalize_fq(a);
    json ji;
    if (inv.degree >= 2) {
        ji["trivial"] = true;
    } else if (inv.degree == 1) {
        ji["milnor"] = field_elem_json(inv.milnor_unit);
        ji["witt_parity"] = inv.witt.dim_odd ? 1 : 0;
        ji["witt_disc"] = inv.witt.disc_square ? "square" : "nonsquare";
    } else if (inv.degree == 0) {
        ji["rank"] = inv.gw.rank;
        ji["disc"] = inv.gw.disc_square ? "square" : "nonsquare";
    } else {
        ji["witt_parity"] = inv.witt.dim_odd ? 1 : 0;
        ji["witt_disc"] = inv.witt.disc_square ? "square" : "nonsquare";
    }
    j["invariants"] = ji;
    j["is_zero"] = kmw_is_zero_fq(a);
    return j;
}

json kmw_ft_json(const KmwFt& a) {
    json j;
    j["kind"] = "mw";
    j["field"] = a.F->name() + "(t)";
    j["degree"] = a.degree;
    j["value"] = kmw_to_string(a);
    return j;
}

ClosedPoint parse_point(Field F, const std::string& s) {
    std::string t = strip(s);
    if (t == "inf" || t == "infinity") return point_infinity(F);
    Poly pi = parse_poly(F, t);
    return point_finite(poly_monic(pi));
}

/* "GF(9)/GF(3) by t^2+1"  or  "GF(3) -> t^2+1 -> ..." */
bool looks_like_tower(const std::string& s) { return s.find("->") != std::string::npos; }

Extension parse_ext_spec(const std::string& s0) {
    std::string s = strip(s0);
    size_t by = s.find(" by ");
    if (by == std::string::npos) throw value_error("expected '<top>/<base> by <min poly>'");
    std::string fields = strip(s.substr(0, by));
    size_t slash = fields.find('/');
    if (slash == std::string::npos) throw value_error("expected '<top>/<base>'");
    Field top = parse_field(strip(fields.substr(0, slash)));
    Field base = parse_field(strip(fields.substr(slash + 1)));
    Poly f = parse_poly(base, strip(s.substr(by + 4)));
    Extension e = extension_from_min_poly(base, f);
    if (e.top != top) throw value_error("minimal polynomial does not cut out the named top field");
    return e;
}

json eval_call(const std::string& name, const std::string& argstr) {
    auto args = split_args(argstr);
    if (name == "n_eps") {
        if (args.size() != 2) throw value_error("n_eps(field, n)");
        Field F = parse_field(args[0]);
        GwFq g = n_epsilon(F, parse_long(args[1]));
        return gw_json(g);
    }
    if (name == "gw") {
        // gw(GF(5), <a,b,...>)
        if (args.size() != 2) throw value_error("gw(field, <a1,a2,...>)");
        Field F = parse_field(args[0]);
        std::string d = strip(args[1]);
        if (d.size() < 2 || d.front() != '<' || d.back() != '>')
            throw value_error("expected <a1,a2,...>");
        std::vector<FieldElement> units;
        for (auto& u : split_args(d.substr(1, d.size() - 2)))
            units.push_back(parse_element(F, u));
        return gw_json(gw_diag(F, units));
    }
    if (name == "residue" || name == "specialize") {
        if (args.size() != 2) throw value_error(name + "(point, element over GF(q)(t))");
        MwValue v = parse_mw_over(args[1]);
        if (!v.over_ft) throw value_error(name + " needs an element over GF(q)(t)");
        ClosedPoint x = parse_point(v.F, args[0]);
        KmwFq out = name == "residue" ? residue(x, v.ft) : specialize(x, v.ft);
        return kmw_json(out);
    }
    if (name == "normalize") {
        if (args.size() != 1) throw value_error("normalize(element over GF(q))");
        MwValue v = parse_mw_over(args[0]);
        if (v.over_ft) return kmw_ft_json(v.ft);
        return kmw_json(v.fq);
    }
    if (name == "transfer") {
        if (args.size() != 3) throw value_error("transfer(mode, ext-or-tower, element)");
        TransferMode mode = parse_mode(strip(args[0]));
        if (looks_like_tower(args[1])) {
            Tower tw = parse_tower(args[1]);
            MwValue v = parse_mw(strip(args[2]), {tw.top(), false});
            return kmw_json(transfer_tower(tw, v.fq, mode));
        }
        Extension ext = parse_ext_spec(args[1]);
        std::string body = strip(args[2]);
        // allow gw<...> sugar for degree-0 diagonal forms
        if (body.rfind("gw<", 0) == 0 && body.back() == '>') {
            std::vector<FieldElement> units;
            for (auto& u : split_args(body.substr(3, body.size() - 4)))
                units.push_back(parse_element(ext.top, u));
            KmwFq beta = kmw_zero(ext.top, 0);
            for (auto& u : units) beta = kmw_add(beta, kmw_mul_unit_form(u, kmw_const(ext.top, 1)));
            return kmw_json(transfer(ext, beta, mode));
        }
        MwValue v = parse_mw(body, {ext.top, false});
        return kmw_json(transfer(ext, v.fq, mode));
    }
    if (name == "transition_unit") {
        if (args.size() != 2) throw value_error("transition_unit(tower, tower)");
        Tower a = parse_tower(args[0]);
        Tower b = parse_tower(args[1]);
        FieldElement u = transition_unit(a, b);
        json j;
        j["kind"] = "unit";
        j["field"] = a.top()->name();
        j["value"] = u.F->to_string(u);
        j["square"] = u.F->is_square(u);
        return j;
    }
    throw value_error("unknown function '" + name + "'");
}

}  // namespace

nlohmann::ordered_json eval_expr(const std::string& expr0) {
    std::string expr = strip(expr0);
    if (expr.empty()) throw parse_error("empty expression", 0);
    // call form?
    size_t paren = expr.find('(');
    if (paren != std::string::npos && expr.back() == ')') {
        std::string name = strip(expr.substr(0, paren));
        bool ident = !name.empty();
        for (char c : name)
            if (!(std::isalnum((unsigned char)c) || c == '_')) ident = false;
        if (ident && name != "GF")
            return eval_call(name, expr.substr(paren + 1, expr.size() - paren - 2));
    }
    // bare element-with-field form
    MwValue v = parse_mw_over(expr);
    if (v.over_ft) return kmw_ft_json(v.ft);
    return kmw_json(v.fq);
}

}  // namespace mwt
