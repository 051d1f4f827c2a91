#ifndef TILECOH_POLYROOTS_HPP
#define TILECOH_POLYROOTS_HPP

#include <utility>
#include <vector>

#include "tilecoh/intpoly.hpp"

namespace tilecoh {

// Yun's algorithm: p = prod factors[i].first ^ factors[i].second with each
// factor squarefree and primitive. Sign/content of p is dropped.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// Full factorization into irreducibles over Q (Kronecker interpolation on each
// squarefree part). Factors primitive with positive leading coefficient.
// Throws if any squarefree part left to Kronecker has degree > degree_cap.
std::vector<std::pair<IntPoly, int>> factor_irreducible(const IntPoly& p,
                                                        int degree_cap = 12);

// Sturm chain of a squarefree polynomial.
class SturmChain {
public:
    explicit SturmChain(const IntPoly& p);
    // Sign variations at x (standard Sturm count convention).
    int variations(const Rat& x) const;
    int variations_at_plus_inf() const;
    int variations_at_minus_inf() const;
    // Number of real roots in (a, b].
    int count_roots(const Rat& a, const Rat& b) const;

private:
    std::vector<IntPoly> chain_;
};

// Disjoint isolating intervals for the real roots of a squarefree p, sorted
// increasing. Throws on non-squarefree input. Each interval (lo, hi] contains
// exactly one root; rational roots land exactly on hi.
std::vector<RatInterval> isolate_real_roots(const IntPoly& p);

// Shrink an isolating interval of p until its width is <= target.
RatInterval refine_root(const IntPoly& p, RatInterval iv, const Rat& target_width);

// Polynomial whose roots are all ordered pairwise products z_i * z_j of the
// roots of g (the "composed square"). Requires g(0) != 0.
IntPoly pair_product_poly(const IntPoly& g);

// Largest real root of squarefree part, refined to the given width; nullopt if
// p has no real roots.
std::optional<RatInterval> largest_real_root(const IntPoly& p, const Rat& width);

// Determinant of a square matrix with IntPoly entries (fraction-free
// Bareiss elimination; division exact in Z[x]).
IntPoly poly_det(std::vector<std::vector<IntPoly>> m);

} // namespace tilecoh

#endif
