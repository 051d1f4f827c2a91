#include "tilecoh/matpoly.hpp"

#include "tilecoh/polyroots.hpp"

namespace tilecoh {

IntPoly charpoly(const IntMatrix& m) {
    if (!m.is_square()) throw error("charpoly: non-square matrix");
    int n = m.rows();
    std::vector<std::vector<IntPoly>> xm(static_cast<size_t>(n),
                                         std::vector<IntPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            IntPoly e = IntPoly::constant(-m.at(i, j));
            if (i == j) e = e + IntPoly::x();
            xm[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(e);
        }
    return poly_det(std::move(xm));
}

IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m) {
    if (!m.is_square()) throw error("eval_poly_at: non-square matrix");
    IntMatrix acc(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += p.coeff(i);
    }
    return acc;
}

RatMatrix eval_poly_at(const IntPoly& p, const RatMatrix& m) {
    RatMatrix acc(m.rows(), m.cols());
    for (int i = p.degree(); i >= 0; --i) {
        acc = acc * m;
        for (int d = 0; d < m.rows(); ++d) acc.at(d, d) += Rat(p.coeff(i));
    }
    return acc;
}

IntPoly minpoly_matrix(const IntMatrix& m) {
    IntPoly cp = charpoly(m);
    auto factors = factor_irreducible(cp);
    // minimal exponent per irreducible factor
    std::vector<int> exp(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) exp[i] = factors[i].second;
    for (size_t i = 0; i < factors.size(); ++i) {
        for (int t = 0; t < factors[i].second; ++t) {
            IntPoly cand = IntPoly::constant(1);
            for (size_t j = 0; j < factors.size(); ++j) {
                int e = (j == i) ? t : exp[j];
                for (int k = 0; k < e; ++k) cand = cand * factors[j].first;
            }
            if (eval_poly_at(cand, m).is_zero()) {
                exp[i] = t;
                break;
            }
        }
    }
    IntPoly mp = IntPoly::constant(1);
    for (size_t i = 0; i < factors.size(); ++i)
        for (int k = 0; k < exp[i]; ++k) mp = mp * factors[i].first;
    return mp;
}

IntMatrix companion_matrix(const IntPoly& q) {
    if (!q.is_monic()) throw error("companion_matrix: polynomial must be monic");
    int d = q.degree();
    IntMatrix c(d, d);
    for (int i = 0; i + 1 < d; ++i) c.at(i + 1, i) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = -q.coeff(i);
    return c;
}

Int resultant(const IntPoly& q, const IntPoly& r) {
    if (q.is_zero() || r.is_zero()) throw error("resultant: zero polynomial input");
    int dq = q.degree(), dr = r.degree();
    if (dq == 0) return boost::multiprecision::pow(q.coeff(0), static_cast<unsigned>(dr));
    if (dr == 0) return boost::multiprecision::pow(r.coeff(0), static_cast<unsigned>(dq));
    size_t n = static_cast<size_t>(dq + dr);
    std::vector<std::vector<IntPoly>> syl(n, std::vector<IntPoly>(n, IntPoly{}));
    for (int row = 0; row < dr; ++row)
        for (int j = 0; j <= dq; ++j)
            syl[static_cast<size_t>(row)][static_cast<size_t>(row + dq - j)] =
                IntPoly::constant(q.coeff(j));
    for (int row = 0; row < dq; ++row)
        for (int j = 0; j <= dr; ++j)
            syl[static_cast<size_t>(dr + row)][static_cast<size_t>(row + dr - j)] =
                IntPoly::constant(r.coeff(j));
    IntPoly det = poly_det(std::move(syl));
    return det.coeff(0);
}

IntMatrix hnf(const IntMatrix& m) { return hnf_with_transform(m).h; }

HnfTransform hnf_with_transform(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.cols());
    auto col_sub = [&](int dst, int src, const Int& q) {
        for (int i = 0; i < h.rows(); ++i) h.at(i, dst) -= q * h.at(i, src);
        for (int i = 0; i < u.rows(); ++i) u.at(i, dst) -= q * u.at(i, src);
    };
    auto col_swap = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < h.rows(); ++i) std::swap(h.at(i, a), h.at(i, b));
        for (int i = 0; i < u.rows(); ++i) std::swap(u.at(i, a), u.at(i, b));
    };
    auto col_neg = [&](int a) {
        for (int i = 0; i < h.rows(); ++i) h.at(i, a) = -h.at(i, a);
        for (int i = 0; i < u.rows(); ++i) u.at(i, a) = -u.at(i, a);
    };
    int c = 0;
    for (int r = 0; r < h.rows() && c < h.cols(); ++r) {
        // gcd-eliminate row r across columns >= c until one nonzero remains
        while (true) {
            int jmin = -1;
            for (int j = c; j < h.cols(); ++j) {
                if (h.at(r, j) == 0) continue;
                if (jmin < 0 || abs_int(h.at(r, j)) < abs_int(h.at(r, jmin))) jmin = j;
            }
            if (jmin < 0) break;
            bool others = false;
            for (int j = c; j < h.cols(); ++j) {
                if (j == jmin || h.at(r, j) == 0) continue;
                others = true;
                Int q = h.at(r, j) / h.at(r, jmin);
                col_sub(j, jmin, q);
            }
            if (!others) {
                col_swap(c, jmin);
                if (h.at(r, c) < 0) col_neg(c);
                for (int j = 0; j < c; ++j) {
                    Int q = floor_div(h.at(r, j), h.at(r, c));
                    if (q != 0) col_sub(j, c, q);
                }
                ++c;
                break;
            }
        }
    }
    return {std::move(h), std::move(u)};
}

std::optional<IntMatrix> int_kernel(const IntMatrix& m) {
    auto ht = hnf_with_transform(m);
    int first_zero = m.cols();
    for (int j = m.cols() - 1; j >= 0; --j) {
        bool zero = true;
        for (int i = 0; i < m.rows(); ++i)
            if (ht.h.at(i, j) != 0) zero = false;
        if (!zero) break;
        first_zero = j;
    }
    if (first_zero == m.cols()) return std::nullopt;
    IntMatrix k(m.cols(), m.cols() - first_zero);
    for (int i = 0; i < m.cols(); ++i)
        for (int j = first_zero; j < m.cols(); ++j) k.at(i, j - first_zero) = ht.u.at(i, j);
    return k;
}

BezoutWitness reduced_resultant(const IntPoly& q, const IntPoly& r) {
    if (q.is_zero() || r.is_zero()) throw error("reduced_resultant: zero polynomial input");
    if (poly_gcd(q, r).degree() != 0)
        throw error("reduced_resultant: polynomials are not coprime");
    int dq = q.degree(), dr = r.degree();
    int n = dq + dr;
    if (n == 0) throw error("reduced_resultant: both inputs constant");
    // Columns: x^i q (i < dr) then x^j r (j < dq). Rows: coefficient of
    // degree n-1 first, constant coefficient last, so the final HNF pivot
    // column is the minimal positive constant.
    IntMatrix lat(n, n);
    for (int i = 0; i < dr; ++i)
        for (int t = 0; t <= dq; ++t) lat.at(n - 1 - (t + i), i) = q.coeff(t);
    for (int j = 0; j < dq; ++j)
        for (int t = 0; t <= dr; ++t) lat.at(n - 1 - (t + j), dr + j) = r.coeff(t);
    auto ht = hnf_with_transform(lat);
    // full rank expected for coprime inputs
    for (int i = 0; i < n; ++i)
        if (ht.h.at(i, i) == 0)
            throw error("reduced_resultant: lattice not full rank (inputs share a factor)");
    int last = n - 1;
    for (int i = 0; i < n - 1; ++i)
        if (ht.h.at(i, last) != 0)
            throw error("reduced_resultant: internal HNF shape error");
    BezoutWitness w;
    w.d = ht.h.at(n - 1, last);
    std::vector<Int> qc(static_cast<size_t>(std::max(dr, 1)), 0);
    std::vector<Int> rc(static_cast<size_t>(std::max(dq, 1)), 0);
    for (int i = 0; i < dr; ++i) qc[static_cast<size_t>(i)] = ht.u.at(i, last);
    for (int j = 0; j < dq; ++j) rc[static_cast<size_t>(j)] = ht.u.at(dr + j, last);
    w.q_mul = IntPoly{std::move(qc)};
    w.r_mul = IntPoly{std::move(rc)};
    if (w.q_mul * q + w.r_mul * r != IntPoly::constant(w.d))
        throw error("reduced_resultant: witness check failed");
    return w;
}

namespace {

// Integer matrix whose rows span the rational left-kernel of s.
std::optional<IntMatrix> left_kernel_rows(const IntMatrix& s) {
    RatMatrix st = RatMatrix::from_int(s.transpose());
    RatMatrix ns = st.null_space();
    if (ns.is_zero()) return std::nullopt;
    IntMatrix rows(ns.cols(), ns.rows());
    for (int j = 0; j < ns.cols(); ++j) {
        Int den = 1;
        for (int i = 0; i < ns.rows(); ++i) {
            Int d = boost::multiprecision::denominator(ns.at(i, j));
            den = den / gcd_int(den, d) * d;
        }
        for (int i = 0; i < ns.rows(); ++i) {
            Rat v = ns.at(i, j) * Rat(den);
            rows.at(j, i) = boost::multiprecision::numerator(v);
        }
    }
    return rows;
}

} // namespace

InvariantRestriction eventual_restriction(const IntMatrix& m) {
    if (!m.is_square()) throw error("eventual_restriction: non-square matrix");
    int n = m.rows();
    IntMatrix s = m.pow(n);
    InvariantRestriction out;
    auto lk = left_kernel_rows(s);
    if (!lk) {
        out.basis = IntMatrix::identity(n);
        out.action = m;
        out.rank = n;
        return out;
    }
    if (lk->rows() == n) {
        out.rank = 0;  // eventual image is zero-dimensional
        return out;
    }
    auto basis = int_kernel(*lk);
    if (!basis) throw error("eventual_restriction: internal kernel inconsistency");
    out.basis = *basis;
    out.rank = out.basis.cols();
    // solve basis * A = m * basis, column by column, exactly
    RatMatrix b = RatMatrix::from_int(out.basis);
    RatMatrix bt = b.transpose();
    RatMatrix gram = bt * b;
    IntMatrix mb = m * out.basis;
    out.action = IntMatrix(out.rank, out.rank);
    for (int j = 0; j < out.rank; ++j) {
        RatVector rhs(static_cast<size_t>(out.rank));
        for (int i = 0; i < out.rank; ++i) {
            Rat acc = 0;
            for (int t = 0; t < n; ++t) acc += bt.at(i, t) * Rat(mb.at(t, j));
            rhs[static_cast<size_t>(i)] = acc;
        }
        auto a = gram.solve(rhs);
        if (!a) throw error("eventual_restriction: basis not independent");
        // verify and store (must be integral: the lattice is saturated)
        for (int i = 0; i < out.rank; ++i) {
            if (boost::multiprecision::denominator((*a)[static_cast<size_t>(i)]) != 1)
                throw error("eventual_restriction: non-integral restricted action");
            out.action.at(i, j) = boost::multiprecision::numerator((*a)[static_cast<size_t>(i)]);
        }
        for (int t = 0; t < n; ++t) {
            Int acc = 0;
            for (int i = 0; i < out.rank; ++i) acc += out.basis.at(t, i) * out.action.at(i, j);
            if (acc != mb.at(t, j))
                throw error("eventual_restriction: action reconstruction failed");
        }
    }
    return out;
}

RatMatrix eventual_image(const IntMatrix& m) {
    auto res = eventual_restriction(m);
    if (res.rank == 0) return RatMatrix{};  // zero-dimensional sentinel
    return RatMatrix::from_int(res.basis);
}

} // namespace tilecoh
