#ifndef TILECOH_MATPOLY_HPP
#define TILECOH_MATPOLY_HPP

#include "tilecoh/intmatrix.hpp"
#include "tilecoh/intpoly.hpp"

namespace tilecoh {

// Monic characteristic polynomial det(xI - M), fraction-free elimination
// over Z[x].
IntPoly charpoly(const IntMatrix& m);

// Lowest-degree monic integer polynomial annihilating M; divides charpoly(M).
IntPoly minpoly_matrix(const IntMatrix& m);

// Substitute M into p (p(M) as an integer matrix).
IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m);
RatMatrix eval_poly_at(const IntPoly& p, const RatMatrix& m);

// Companion matrix with ones on the subdiagonal and -q_i in the last column;
// charpoly equals q. Requires q monic.
IntMatrix companion_matrix(const IntPoly& q);

// Sylvester resultant (with sign), by fraction-free elimination.
Int resultant(const IntPoly& q, const IntPoly& r);

struct BezoutWitness {
    Int d;         // reduced resultant, positive
    IntPoly q_mul; // Q with deg Q < deg r
    IntPoly r_mul; // R with deg R < deg q
};

// Smallest positive integer D = Q*q + R*r with integer polynomial
// multipliers of bounded degree, via the Hermite normal form of the stacked
// coefficient lattice. Requires gcd(q, r) = 1 over Q.
BezoutWitness reduced_resultant(const IntPoly& q, const IntPoly& r);

// Column-style Hermite normal form (nonnegative pivots, entries left of a
// pivot reduced into [0, pivot)). Zero columns are dropped to the right.
IntMatrix hnf(const IntMatrix& m);

struct HnfTransform {
    IntMatrix h; // m * u = h
    IntMatrix u; // unimodular
};
HnfTransform hnf_with_transform(const IntMatrix& m);

// Basis of {x in Z^n : m x = 0}, one column per basis vector; saturated.
// Empty (cols() == 0 sentinel via optional) is represented by a 0-column
// check: returns nullopt when the kernel is trivial.
std::optional<IntMatrix> int_kernel(const IntMatrix& m);

// Basis of the column space of M^dim over Q (rank has stabilized there).
// Columns are primitive integer vectors given as rationals.
RatMatrix eventual_image(const IntMatrix& m);

struct InvariantRestriction {
    IntMatrix basis;      // columns: basis of the saturated invariant lattice
    IntMatrix action;     // A with  m * basis = basis * A
    int rank = 0;
};

// Restriction of m to the saturated lattice of its eventual image. The
// restricted action is integral and invertible over Q.
InvariantRestriction eventual_restriction(const IntMatrix& m);

} // namespace tilecoh

#endif
