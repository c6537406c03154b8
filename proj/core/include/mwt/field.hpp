#ifndef MWT_FIELD_HPP
#define MWT_FIELD_HPP

#include <memory>
#include <string>
#include <vector>

#include "mwt/fp.hpp"

namespace mwt {

class FiniteField;

/* Interned descriptor handle: make_field returns the unique instance per (p,k),
   so pointer equality is field equality. */
using Field = const FiniteField*;

/* Element of F_{p^k}, stored as length-k coefficient vector in the modulus basis,
   coefficients in [0,p). Immutable by convention after construction. */
struct FieldElement {
    Field F = nullptr;
    std::vector<i64> c;

    bool is_zero() const;
    bool operator==(const FieldElement& o) const { return F == o.F && c == o.c; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
};

class FiniteField {
  public:
    i64 p;
    int k;
    i64 q;                     // p^k
    std::vector<i64> modulus;  // monic irreducible over F_p, length k+1, low-to-high

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(i64 n) const;  // image of the integer n
    FieldElement from_coeffs(std::vector<i64> c) const;
    FieldElement gen() const;  // class of t (equals from_int for k = 1)

    FieldElement add(const FieldElement& a, const FieldElement& b) const;
    FieldElement sub(const FieldElement& a, const FieldElement& b) const;
    FieldElement neg(const FieldElement& a) const;
    FieldElement mul(const FieldElement& a, const FieldElement& b) const;
    FieldElement inv(const FieldElement& a) const;
    FieldElement div(const FieldElement& a, const FieldElement& b) const;
    FieldElement pow(const FieldElement& a, u64 e) const;

    /* enumeration order: index = sum c_i p^i; used everywhere a canonical
       choice of element is needed */
    i64 index_of(const FieldElement& a) const;
    FieldElement from_index(i64 idx) const;

    bool is_square(const FieldElement& a) const;  // a != 0
    FieldElement least_nonsquare() const;
    FieldElement primitive_element() const;       // least generator of F^x
    i64 dlog(const FieldElement& a) const;        // base primitive_element()

    std::string to_string(const FieldElement& a) const;
    std::string name() const;  // "GF(p)" or "GF(p^k)"

    FiniteField(i64 p_, int k_, std::vector<i64> mod_);
    FiniteField(const FiniteField&) = delete;

  private:
    mutable std::vector<i64> dlog_table_;  // built lazily (index -> exponent)
    mutable i64 primitive_idx_ = -1;
    void build_dlog() const;
};

FieldElement operator+(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a, const FieldElement& b);
FieldElement operator*(const FieldElement& a, const FieldElement& b);
FieldElement operator-(const FieldElement& a);

constexpr i64 kDefaultFieldBound = 1000000;

/* Deterministic descriptor: modulus is the least monic irreducible of degree k
   (non-leading coefficients read as a base-p number). Rejects p = 2. */
Field make_field(i64 p, int k, i64 bound = kDefaultFieldBound);

/* Parse "GF(p)" / "GF(p^k)". */
Field parse_field(const std::string& spec);

bool square_class_is_square(const FieldElement& a);  // throws on zero

}  // namespace mwt

#endif
