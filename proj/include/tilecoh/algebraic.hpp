#ifndef TILECOH_ALGEBRAIC_HPP
#define TILECOH_ALGEBRAIC_HPP

#include <memory>
#include <vector>

#include "tilecoh/intmatrix.hpp"
#include "tilecoh/intpoly.hpp"

namespace tilecoh {

// A number field Q(lambda) presented by the minimal polynomial of lambda
// together with an isolating interval for the designated real root.
// Immutable; shared by every element of the field.
class FieldContext {
public:
    // minpoly must be irreducible over Q, primitive, positive leading
    // coefficient; the interval must isolate exactly one real root.
    FieldContext(IntPoly minpoly, RatInterval root_interval);

    // The rational field (degree 1, lambda = value).
    static std::shared_ptr<const FieldContext> rationals();
    // Field of the designated real root of an irreducible polynomial.
    static std::shared_ptr<const FieldContext> make(IntPoly minpoly, RatInterval iv);

    const IntPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    const RatInterval& root_interval() const { return root_interval_; }

    // A copy of the isolating interval refined to width <= w.
    RatInterval refined_interval(const Rat& w) const;

private:
    IntPoly minpoly_;
    RatInterval root_interval_;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

// An element of Q(lambda) in the power basis 1, lambda, ..., lambda^{deg-1}.
class AlgebraicNumber {
public:
    AlgebraicNumber() = default;  // unusable until assigned
    AlgebraicNumber(FieldPtr field, RatVector coords);
    static AlgebraicNumber from_rational(const FieldPtr& field, Rat value);
    static AlgebraicNumber zero(const FieldPtr& field);
    static AlgebraicNumber one(const FieldPtr& field);
    static AlgebraicNumber generator(const FieldPtr& field);  // lambda itself

    const FieldPtr& field() const { return field_; }
    const RatVector& coords() const { return coords_; }
    bool is_zero() const;
    bool is_rational() const;  // coords beyond degree 0 all vanish
    Rat rational_value() const;

    AlgebraicNumber operator+(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-(const AlgebraicNumber& o) const;
    AlgebraicNumber operator-() const;
    AlgebraicNumber operator*(const AlgebraicNumber& o) const;
    AlgebraicNumber operator*(const Rat& s) const;
    AlgebraicNumber inverse() const;
    AlgebraicNumber operator/(const AlgebraicNumber& o) const;
    bool operator==(const AlgebraicNumber& o) const;
    bool operator!=(const AlgebraicNumber& o) const { return !(*this == o); }

    // Sign in the real embedding fixed by the field's root interval,
    // decided exactly by interval refinement.
    int sgn() const;
    int compare(const AlgebraicNumber& o) const;  // -1, 0, 1
    bool operator<(const AlgebraicNumber& o) const { return compare(o) < 0; }
    bool operator>(const AlgebraicNumber& o) const { return compare(o) > 0; }
    bool operator<=(const AlgebraicNumber& o) const { return compare(o) <= 0; }
    bool operator>=(const AlgebraicNumber& o) const { return compare(o) >= 0; }

    // Enclosing rational interval of width <= w.
    RatInterval enclosure(const Rat& w) const;
    double approx() const;

    // Apply an integer polynomial to this element (u(alpha)).
    static AlgebraicNumber eval_poly(const IntPoly& u, const AlgebraicNumber& alpha);

private:
    void check_same_field(const AlgebraicNumber& o) const;
    FieldPtr field_;
    RatVector coords_;
};

// Solve m v = lambda v exactly over Q(lambda) for the (assumed simple)
// eigenvalue lambda; returns a kernel basis vector. Throws if the eigenspace
// is not one-dimensional.
std::vector<AlgebraicNumber> eigenvector_for(const IntMatrix& m,
                                             const AlgebraicNumber& lambda);

} // namespace tilecoh

#endif
