#include "tilecoh/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace tilecoh {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

} // namespace

RatVector APGraph::reduce(const RatVector& g) const {
    if (static_cast<int>(g.size()) != static_cast<int>(tail.size()))
        throw error("reduce: cochain size mismatch");
    // Vertex potential h with g - delta(h) vanishing on every tree edge.
    RatVector h(vertices, Rat(0));
    for (int v : bfs_vertices) {
        int e = parent_edge[v];
        if (e < 0) continue;
        if (head[e] == v && tail[e] != v)
            h[v] = h[tail[e]] + g[e];
        else
            h[v] = h[head[e]] - g[e];
    }
    RatVector out;
    out.reserve(nontree.size());
    for (int e : nontree) out.push_back(g[e] - (h[head[e]] - h[tail[e]]));
    return out;
}

APGraph build_ap_graph(const BlockSystem& bs) {
    const int ne = static_cast<int>(bs.letters.size());
    const int m = bs.radius;
    // Endpoint slots: edge i owns slots 2i (left) and 2i+1 (right).
    UnionFind uf(2 * ne);
    for (const auto& u : factors(bs.base, 2 * m + 2)) {
        CollaredLetter c, d;
        c.left.assign(u.begin(), u.begin() + m);
        c.center = u[m];
        c.right.assign(u.begin() + m + 1, u.begin() + 2 * m + 1);
        d.left.assign(u.begin() + 1, u.begin() + m + 1);
        d.center = u[m + 1];
        d.right.assign(u.begin() + m + 2, u.end());
        int i = bs.index_of(c), j = bs.index_of(d);
        if (i < 0 || j < 0)
            throw error("build_ap_graph: adjacency window not in collared alphabet");
        uf.unite(2 * i + 1, 2 * j);
    }
    // Number vertex classes by their smallest slot.
    std::vector<int> vertex_id(2 * ne, -1);
    APGraph g;
    for (int slot = 0; slot < 2 * ne; ++slot) {
        int root = uf.find(slot);
        if (vertex_id[root] < 0) vertex_id[root] = g.vertices++;
        vertex_id[slot] = vertex_id[root];
    }
    g.tail.resize(ne);
    g.head.resize(ne);
    for (int i = 0; i < ne; ++i) {
        g.tail[i] = vertex_id[2 * i];
        g.head[i] = vertex_id[2 * i + 1];
    }
    // Breadth-first spanning tree from vertex 0 (the class of the least slot).
    std::vector<std::vector<std::pair<int, int>>> adj(g.vertices);  // (other, edge)
    for (int i = 0; i < ne; ++i) {
        adj[g.tail[i]].push_back({g.head[i], i});
        adj[g.head[i]].push_back({g.tail[i], i});
    }
    g.in_tree.assign(ne, false);
    g.parent_edge.assign(g.vertices, -1);
    std::vector<bool> seen(g.vertices, false);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = true;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        g.bfs_vertices.push_back(v);
        for (const auto& [w, e] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            g.parent_edge[w] = e;
            g.in_tree[e] = true;
            bfs.push(w);
        }
    }
    if (static_cast<int>(g.bfs_vertices.size()) != g.vertices)
        throw error("build_ap_graph: graph is disconnected");
    for (int i = 0; i < ne; ++i)
        if (!g.in_tree[i]) g.nontree.push_back(i);
    return g;
}

IntMatrix h1_action(const BlockSystem& bs, const APGraph& g) {
    const int ne = static_cast<int>(bs.letters.size());
    // The induced image of each edge must be a path in the graph.
    for (int e = 0; e < ne; ++e) {
        const auto& path = bs.induced_rules[e];
        for (size_t t = 0; t + 1 < path.size(); ++t)
            if (g.head[path[t]] != g.tail[path[t + 1]])
                throw error("h1_action: induced image is not an edge path");
    }
    const int dim = g.h1_dim();
    IntMatrix a0(std::max(dim, 1), std::max(dim, 1));
    for (int jc = 0; jc < dim; ++jc) {
        int ej = g.nontree[jc];
        // Pullback of the dual cochain of e_j: its value on edge e is the
        // number of times e_j appears in the induced image of e.
        RatVector pulled(ne, Rat(0));
        for (int e = 0; e < ne; ++e) pulled[e] = Rat(bs.mc.at(ej, e));
        RatVector coords = g.reduce(pulled);
        for (int ic = 0; ic < dim; ++ic) {
            if (denominator(coords[ic]) != 1)
                throw error("h1_action: non-integer action entry");
            a0.at(ic, jc) = numerator(coords[ic]);
        }
    }
    return a0;
}

CohomologyPresentation make_presentation(const Substitution& s, int collar_radius) {
    CohomologyPresentation pres;
    pres.perron = perron_data(s);
    pres.bs = collar(s, collar_radius);
    pres.graph = build_ap_graph(pres.bs);
    pres.a0 = h1_action(pres.bs, pres.graph);

    InvariantRestriction res = eventual_restriction(pres.a0);
    pres.k = res.rank;
    pres.basis = res.basis;
    pres.a = res.action;
    if (pres.k == 0) throw error("make_presentation: trivial eventual image");

    pres.p = minpoly_matrix(pres.a);
    pres.q = pres.perron.q;
    if (!pres.q.divides(pres.p))
        throw error("make_presentation: stretching-factor polynomial does not "
                    "divide the minimal polynomial of the restricted action");
    pres.r = pres.p.exact_div(pres.q);
    if (pres.r.is_zero()) pres.r = IntPoly::constant(1);
    if (poly_gcd(pres.q, pres.r).degree() == 0)
        pres.witness = reduced_resultant(pres.q, pres.r);

    pres.a0_stable_ = pres.a0.pow(pres.a0.rows());
    return pres;
}

int cohomology_rank(const Substitution& s) {
    return make_presentation(s, 1).k;
}

RatVector CohomologyPresentation::class_of_counts(const std::vector<Int>& counts,
                                                  int n) const {
    const int dim = graph.h1_dim();
    RatVector g(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) g[i] = Rat(counts[i]);
    RatVector x = graph.reduce(g);
    // Push into the eventual image, then solve for basis coordinates.
    const int t = a0.rows();
    RatVector pushed(dim, Rat(0));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) pushed[i] += Rat(a0_stable_.at(i, j)) * x[j];
    // Gram solve: (B^T B) z = B^T pushed.
    RatMatrix gram(k, k);
    RatVector rhs(k, Rat(0));
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Rat acc(0);
            for (int l = 0; l < dim; ++l)
                acc += Rat(basis.at(l, i)) * Rat(basis.at(l, j));
            gram.at(i, j) = acc;
        }
        for (int l = 0; l < dim; ++l) rhs[i] += Rat(basis.at(l, i)) * pushed[l];
    }
    auto z = gram.solve(rhs);
    if (!z) throw error("class_of_counts: basis Gram system singular");
    // Consistency: B z must reproduce the pushed vector exactly.
    for (int l = 0; l < dim; ++l) {
        Rat acc(0);
        for (int i = 0; i < k; ++i) acc += Rat(basis.at(l, i)) * (*z)[i];
        if (acc != pushed[l])
            throw error("class_of_counts: class not in the eventual image");
    }
    // Normalize back to order 0: divide by A^(n + t).
    IntMatrix apow = a.pow(n + t);
    RatMatrix am(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) am.at(i, j) = Rat(apow.at(i, j));
    auto y = am.solve(*z);
    if (!y) throw error("class_of_counts: restricted action not invertible");
    return *y;
}

PatchClass patch_class(const Word& patch, const CohomologyPresentation& pres) {
    if (pres.bs.radius < static_cast<int>(patch.size()))
        throw error("patch_class: collar radius below |patch|");
    int n0 = min_order_for_length(pres.bs.base, static_cast<int>(patch.size()));
    auto counts = anchored_count_vector(patch, pres.bs, n0);
    return {patch, pres.class_of_counts(counts.values, n0)};
}

} // namespace tilecoh
