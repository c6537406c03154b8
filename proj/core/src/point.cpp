#include "mwt/point.hpp"

#include <map>
#include <mutex>

#include "mwt/errors.hpp"

namespace mwt {

bool ClosedPoint::operator==(const ClosedPoint& o) const {
    return F == o.F && at_infinity == o.at_infinity && (at_infinity || pi == o.pi);
}

ClosedPoint point_finite(const Poly& pi) {
    if (!pi.is_monic() || pi.deg() < 1) throw value_error("a finite point needs a monic polynomial");
    if (!poly_is_irreducible(pi)) throw value_error("a finite point needs an irreducible polynomial");
    return {pi.F, false, pi};
}

ClosedPoint point_infinity(Field F) { return {F, true, poly_zero(F)}; }

ClosedPoint point_rational(Field F, const FieldElement& a) {
    return point_finite(poly_trim({F, {-a, F->one()}}));
}

Field residue_field(const ClosedPoint& x) {
    if (x.at_infinity) return x.F;
    return make_field(x.F->p, x.F->k * x.pi.deg());
}

FieldElement canonical_point_root(const ClosedPoint& x) {
    if (x.at_infinity) throw value_error("the point at infinity has no finite root");
    static std::map<std::pair<Field, std::string>, FieldElement> cache;
    static std::mutex m;
    std::string key = poly_to_string(x.pi);
    {
        std::lock_guard<std::mutex> lock(m);
        auto it = cache.find({x.F, key});
        if (it != cache.end()) return it->second;
    }
    Field kappa = residue_field(x);
    auto roots = poly_roots(poly_map(x.pi, kappa));
    if (roots.empty()) throw error("point polynomial has no root in its residue field");
    std::lock_guard<std::mutex> lock(m);
    cache[{x.F, key}] = roots.front();
    return roots.front();
}

std::string point_to_string(const ClosedPoint& x) {
    if (x.at_infinity) return "inf";
    return poly_to_string(x.pi);
}

}  // namespace mwt
