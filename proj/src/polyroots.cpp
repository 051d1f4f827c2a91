#include "tilecoh/polyroots.hpp"

#include <algorithm>
#include <map>

namespace tilecoh {

namespace {

using RatP = std::vector<Rat>;

int rdeg(const RatP& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
    return d;
}

bool rzero(const RatP& p) { return rdeg(p) < 0; }

RatP rderiv(const RatP& p) {
    if (p.size() <= 1) return {};
    RatP r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Rat(Int(i));
    return r;
}

RatP rsub(const RatP& a, const RatP& b) {
    RatP r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return r;
}

RatP rquot(const RatP& a, const RatP& b) { return rat_divmod(a, b).quot; }

RatP rgcd_monic(RatP f, RatP g) {
    while (!rzero(g)) {
        RatP r = rat_divmod(f, g).rem;
        f = std::move(g);
        g = std::move(r);
    }
    int d = rdeg(f);
    Rat lead = f[static_cast<size_t>(d)];
    RatP out(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) out[static_cast<size_t>(i)] = f[static_cast<size_t>(i)] / lead;
    return out;
}

// Clear denominators and content but keep the sign of the leading coefficient.
IntPoly primitive_keep_sign(const RatP& c) {
    IntPoly p = from_rat_coeffs_primitive(c);
    int d = rdeg(c);
    if (d >= 0 && c[static_cast<size_t>(d)] < 0) return -p;
    return p;
}

} // namespace

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p) {
    if (p.is_zero()) throw error("squarefree_decomposition: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    RatP f = to_rat_coeffs(p.primitive_part());
    RatP fp = rderiv(f);
    RatP g = rgcd_monic(f, fp);
    if (rdeg(g) == 0) {
        out.emplace_back(p.primitive_part(), 1);
        return out;
    }
    // Yun
    RatP a = rquot(f, g);
    RatP c = rsub(rquot(fp, g), rderiv(a));
    int mult = 1;
    while (rdeg(a) > 0) {
        RatP d = rgcd_monic(a, rzero(c) ? a : c);
        if (rzero(c)) d = a;
        if (rdeg(d) > 0) out.emplace_back(from_rat_coeffs_primitive(d), mult);
        a = rquot(a, d);
        c = rsub(rquot(c, d), rderiv(a));
        ++mult;
    }
    return out;
}

namespace {

// All divisors of |v| (positive), by trial division. Loud failure when the
// leftover cofactor is too large to certify.
std::vector<Int> divisors(const Int& v) {
    Int n = abs_int(v);
    std::map<Int, int> primes;
    for (Int p = 2; p * p <= n && p <= 1000000; ++p) {
        while (n % p == 0) {
            ++primes[p];
            n /= p;
        }
    }
    if (n > 1) {
        if (n > Int("1000000000000"))
            throw error("Kronecker factorization: interpolation value too large to factor");
        ++primes[n];
    }
    std::vector<Int> divs{1};
    for (const auto& [p, e] : primes) {
        size_t cur = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Lagrange interpolation through (xs[i], ys[i]).
RatP interpolate(const std::vector<Int>& xs, const std::vector<Rat>& ys) {
    size_t n = xs.size();
    RatP acc(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        RatP basis{Rat(1)};
        Rat denom = 1;
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            // basis *= (x - xs[j])
            RatP nb(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                nb[k + 1] += basis[k];
                nb[k] -= basis[k] * Rat(xs[j]);
            }
            basis = std::move(nb);
            denom *= Rat(xs[i] - xs[j]);
        }
        Rat scale = ys[i] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * scale;
    }
    return acc;
}

std::optional<IntPoly> to_int_poly(const RatP& c) {
    std::vector<Int> ic(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (boost::multiprecision::denominator(c[i]) != 1) return std::nullopt;
        ic[i] = boost::multiprecision::numerator(c[i]);
    }
    return IntPoly{std::move(ic)};
}

// Factor a primitive squarefree polynomial, appending irreducible primitive
// positive-leading factors to out.
void kronecker(IntPoly f, int degree_cap, std::vector<IntPoly>& out) {
    f = f.primitive_part();
    if (f.degree() <= 0) return;
    if (f.degree() == 1) {
        out.push_back(f);
        return;
    }
    // x | f
    if (f.coeff(0) == 0) {
        out.push_back(IntPoly::x());
        kronecker(f.exact_div(IntPoly::x()), degree_cap, out);
        return;
    }
    // rational roots r/s, s | leading, r | constant
    for (const Int& s : divisors(f.leading()))
        for (const Int& r : divisors(f.coeff(0)))
            for (int sgn : {1, -1}) {
                if (gcd_int(r, s) != 1) continue;
                Rat t(sgn * r, s);
                if (f.eval(t) == 0) {
                    IntPoly lin{-sgn * r, s};
                    lin = lin.primitive_part();
                    out.push_back(lin);
                    RatP q = rquot(to_rat_coeffs(f), to_rat_coeffs(lin));
                    kronecker(from_rat_coeffs_primitive(q), degree_cap, out);
                    return;
                }
            }
    if (f.degree() > degree_cap)
        throw error("Kronecker factorization: degree cap exceeded (" +
                    std::to_string(f.degree()) + " > " + std::to_string(degree_cap) + ")");
    for (int d = 2; d <= f.degree() / 2; ++d) {
        std::vector<Int> xs;
        for (int i = 0; static_cast<int>(xs.size()) <= d; ++i) {
            Int pt = (i % 2 == 0) ? Int(i / 2) : Int(-(i / 2 + 1));
            xs.push_back(pt);
        }
        std::vector<std::vector<Int>> divs(xs.size());
        std::vector<Int> vals(xs.size());
        for (size_t i = 0; i < xs.size(); ++i) {
            vals[i] = f.eval(xs[i]);
            divs[i] = divisors(vals[i]);
        }
        std::vector<size_t> idx(xs.size(), 0);
        std::vector<int> sgns(xs.size(), 1);
        // odometer over all signed divisor tuples
        while (true) {
            std::vector<Rat> ys(xs.size());
            for (size_t i = 0; i < xs.size(); ++i) ys[i] = Rat(sgns[i] * divs[i][idx[i]]);
            RatP cand = interpolate(xs, ys);
            if (rdeg(cand) >= 1) {
                if (auto g = to_int_poly(cand)) {
                    if (g->leading() > 0 && g->divides(f)) {
                        IntPoly gp = g->primitive_part();
                        RatP q = rquot(to_rat_coeffs(f), to_rat_coeffs(gp));
                        kronecker(gp, degree_cap, out);
                        kronecker(from_rat_coeffs_primitive(q), degree_cap, out);
                        return;
                    }
                }
            }
            // advance
            size_t i = 0;
            for (; i < xs.size(); ++i) {
                if (sgns[i] == 1) {
                    sgns[i] = -1;
                    break;
                }
                sgns[i] = 1;
                if (++idx[i] < divs[i].size()) break;
                idx[i] = 0;
            }
            if (i == xs.size()) break;
        }
    }
    out.push_back(f);  // irreducible
}

} // namespace

std::vector<std::pair<IntPoly, int>> factor_irreducible(const IntPoly& p, int degree_cap) {
    if (p.is_zero()) throw error("factor_irreducible: zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    for (const auto& [sf, mult] : squarefree_decomposition(p)) {
        std::vector<IntPoly> irr;
        kronecker(sf, degree_cap, irr);
        std::sort(irr.begin(), irr.end(), [](const IntPoly& a, const IntPoly& b) {
            if (a.degree() != b.degree()) return a.degree() < b.degree();
            return a.coeffs() < b.coeffs();
        });
        for (size_t i = 0; i < irr.size();) {
            size_t j = i;
            while (j < irr.size() && irr[j] == irr[i]) ++j;
            out.emplace_back(irr[i], mult * static_cast<int>(j - i));
            i = j;
        }
    }
    return out;
}

SturmChain::SturmChain(const IntPoly& p) {
    IntPoly f = p.primitive_part();
    if (f.degree() < 1) {
        chain_ = {f};
        return;
    }
    chain_.push_back(f);
    chain_.push_back(f.derivative().primitive_part());
    while (chain_.back().degree() > 0) {
        RatP rem = rat_divmod(to_rat_coeffs(chain_[chain_.size() - 2]),
                              to_rat_coeffs(chain_.back()))
                       .rem;
        bool zero = true;
        for (const auto& c : rem)
            if (c != 0) zero = false;
        if (zero) throw error("SturmChain: polynomial is not squarefree");
        for (auto& c : rem) c = -c;
        chain_.push_back(primitive_keep_sign(rem));
    }
}

namespace {
int count_changes(const std::vector<int>& signs) {
    int last = 0, n = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}
} // namespace

int SturmChain::variations(const Rat& x) const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(sign(p.eval(x)));
    return count_changes(signs);
}

int SturmChain::variations_at_plus_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) signs.push_back(sign(p.leading()));
    return count_changes(signs);
}

int SturmChain::variations_at_minus_inf() const {
    std::vector<int> signs;
    for (const auto& p : chain_) {
        int s = sign(p.leading());
        if (p.degree() % 2 == 1) s = -s;
        signs.push_back(s);
    }
    return count_changes(signs);
}

int SturmChain::count_roots(const Rat& a, const Rat& b) const {
    return variations(a) - variations(b);
}

std::vector<RatInterval> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw error("isolate_real_roots: zero polynomial");
    if (p.degree() == 0) return {};
    SturmChain chain(p);  // throws on non-squarefree input
    // Cauchy bound
    Rat bound = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rat r = Rat(abs_int(p.coeff(i)), abs_int(p.leading()));
        if (r > bound) bound = r;
    }
    bound += 1;
    std::vector<RatInterval> out;
    std::vector<RatInterval> stack{{-bound, bound}};
    while (!stack.empty()) {
        RatInterval iv = stack.back();
        stack.pop_back();
        int n = chain.count_roots(iv.lo, iv.hi);
        if (n == 0) continue;
        if (n == 1) {
            out.push_back(iv);
            continue;
        }
        Rat mid = iv.mid();
        stack.push_back({iv.lo, mid});
        stack.push_back({mid, iv.hi});
    }
    std::sort(out.begin(), out.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return out;
}

RatInterval refine_root(const IntPoly& p, RatInterval iv, const Rat& target_width) {
    SturmChain chain(p);
    while (iv.width() > target_width) {
        Rat mid = iv.mid();
        if (chain.count_roots(iv.lo, mid) == 1)
            iv.hi = mid;
        else
            iv.lo = mid;
    }
    return iv;
}

IntPoly poly_det(std::vector<std::vector<IntPoly>> m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw error("poly_det: non-square matrix");
    if (n == 0) return IntPoly::constant(1);
    int sgn = 1;
    IntPoly prev = IntPoly::constant(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t p = k + 1;
            while (p < n && m[p][k].is_zero()) ++p;
            if (p == n) return IntPoly{};
            std::swap(m[k], m[p]);
            sgn = -sgn;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
        prev = m[k][k];
    }
    IntPoly det = m[n - 1][n - 1];
    return sgn < 0 ? -det : det;
}

IntPoly pair_product_poly(const IntPoly& g) {
    if (g.is_zero() || g.coeff(0) == 0)
        throw error("pair_product_poly: needs nonzero constant coefficient");
    int d = g.degree();
    if (d == 0) return IntPoly::constant(1);
    // Sylvester matrix in x of f(x) = g(x) and h(x) = x^d g(y/x); entries
    // are polynomials in y.
    std::vector<IntPoly> fc(static_cast<size_t>(d) + 1), hc(static_cast<size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        fc[static_cast<size_t>(j)] = IntPoly::constant(g.coeff(j));
        hc[static_cast<size_t>(j)] = IntPoly::monomial(d - j) * g.coeff(d - j);
    }
    size_t n = 2 * static_cast<size_t>(d);
    std::vector<std::vector<IntPoly>> syl(n, std::vector<IntPoly>(n, IntPoly{}));
    for (int row = 0; row < d; ++row)
        for (int j = 0; j <= d; ++j) syl[static_cast<size_t>(row)][static_cast<size_t>(row + d - j)] = fc[static_cast<size_t>(j)];
    for (int row = 0; row < d; ++row)
        for (int j = 0; j <= d; ++j) syl[static_cast<size_t>(d + row)][static_cast<size_t>(row + d - j)] = hc[static_cast<size_t>(j)];
    return poly_det(std::move(syl)).primitive_part();
}

std::optional<RatInterval> largest_real_root(const IntPoly& p, const Rat& width) {
    IntPoly sf = p.primitive_part();
    {
        auto parts = squarefree_decomposition(sf);
        IntPoly prod = IntPoly::constant(1);
        for (const auto& [f, mult] : parts) prod = prod * f;
        sf = prod;
    }
    auto roots = isolate_real_roots(sf);
    if (roots.empty()) return std::nullopt;
    return refine_root(sf, roots.back(), width);
}

} // namespace tilecoh
