#ifndef TILECOH_INTPOLY_HPP
#define TILECOH_INTPOLY_HPP

#include <initializer_list>
#include <vector>

#include "tilecoh/numbers.hpp"

namespace tilecoh {

// Univariate polynomial over Z, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<Int> coeffs);

    static IntPoly constant(Int c);
    static IntPoly x();              // the monomial x
    static IntPoly monomial(int k);  // x^k

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const Int& coeff(int i) const;  // 0 outside the stored range
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly shifted(int k) const;  // multiply by x^k

    Int content() const;  // gcd of coefficients, 0 for the zero polynomial
    // Content and leading sign divided out; zero stays zero.
    IntPoly primitive_part() const;
    IntPoly derivative() const;

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    // Horner with outward rounding: a rational interval containing p([lo,hi]).
    RatInterval eval(const RatInterval& iv) const;

    // Exact quotient; throws if *this is not divisible by d in Z[x].
    IntPoly exact_div(const IntPoly& d) const;
    bool divides(const IntPoly& f) const;  // *this | f over Q (deg-aware)

    std::string str() const;  // human-readable, e.g. "x^2 - 4*x - 1"

private:
    void trim();
    std::vector<Int> c_;
};

// gcd over Q, returned primitive with positive leading coefficient.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Division over Q: f = q*g + r with deg r < deg g.
struct RatPolyDiv {
    std::vector<Rat> quot, rem;
};
RatPolyDiv rat_divmod(const std::vector<Rat>& f, const std::vector<Rat>& g);

std::vector<Rat> to_rat_coeffs(const IntPoly& p);
// Clears denominators and strips integer content (sign of leading kept positive).
IntPoly from_rat_coeffs_primitive(const std::vector<Rat>& c);

} // namespace tilecoh

#endif
