#ifndef TILECOH_COHOMOLOGY_HPP
#define TILECOH_COHOMOLOGY_HPP

#include <optional>
#include <vector>

#include "tilecoh/intmatrix.hpp"
#include "tilecoh/intpoly.hpp"
#include "tilecoh/language.hpp"
#include "tilecoh/matpoly.hpp"
#include "tilecoh/substitution.hpp"

namespace tilecoh {

// One-dimensional cell complex with one edge per collared letter and
// vertices obtained by gluing endpoints of legally adjacent letters.
struct APGraph {
    int vertices = 0;
    std::vector<int> tail, head;  // per edge: left / right endpoint vertex
    std::vector<bool> in_tree;    // spanning-tree edges
    std::vector<int> nontree;     // basis edges of H^1, increasing
    std::vector<int> bfs_vertices;  // discovery order, root first
    std::vector<int> parent_edge;   // tree edge reaching each vertex; -1 at root

    int h1_dim() const { return static_cast<int>(nontree.size()); }
    // Class coordinates of an edge cochain in the non-tree-edge basis
    // (subtract the vertex coboundary that kills all tree edges).
    RatVector reduce(const RatVector& g) const;
};

// Build the graph for a block system; throws if disconnected.
APGraph build_ap_graph(const BlockSystem& bs);

// Matrix of the substitution pullback on H^1 in the non-tree-edge basis.
IntMatrix h1_action(const BlockSystem& bs, const APGraph& g);

struct CohomologyPresentation {
    BlockSystem bs;
    APGraph graph;
    IntMatrix a0;     // action on H^1 of the graph
    int k = 0;        // rank of the eventual image
    IntMatrix basis;  // integer basis of the eventual-image lattice (dim x k)
    IntMatrix a;      // restricted action, k x k, invertible over Q
    IntPoly p;        // minimal polynomial of a
    IntPoly q;        // minimal polynomial of the stretching factor
    IntPoly r;        // p / q
    std::optional<BezoutWitness> witness;  // empty iff gcd(q, r) != 1
    PerronData perron;

    // Coordinates in the eventual-image basis of the H^1 class represented by
    // an order-n vector of per-edge counts, normalized back to order 0.
    RatVector class_of_counts(const std::vector<Int>& counts, int n) const;

private:
    friend CohomologyPresentation make_presentation(const Substitution&, int);
    IntMatrix a0_stable_;  // a0^(dim), pushes any class into the eventual image
};

CohomologyPresentation make_presentation(const Substitution& s, int collar_radius);

// Rank of the first rational cohomology of the tiling space.
int cohomology_rank(const Substitution& s);

struct PatchClass {
    Word patch;
    RatVector coords;  // length k
};

// Class of the patch indicator cochain; requires bs.radius >= |P|.
PatchClass patch_class(const Word& patch, const CohomologyPresentation& pres);

} // namespace tilecoh

#endif
