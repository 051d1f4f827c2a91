#include "tilecoh/frequency.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "tilecoh/matpoly.hpp"

namespace tilecoh {

std::vector<AlgebraicNumber> collared_frequencies(const BlockSystem& bs,
                                                  const PerronData& pd) {
    std::vector<AlgebraicNumber> v = eigenvector_for(bs.mc, pd.lambda);
    int sg = 0;
    for (const auto& e : v)
        if ((sg = e.sgn()) != 0) break;
    if (sg < 0)
        for (auto& e : v) e = -e;
    AlgebraicNumber total = AlgebraicNumber::zero(pd.field);
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i].sgn() <= 0)
            throw error("collared_frequencies: PF eigenvector not positive");
        total = total + v[i] * pd.lengths[bs.letters[i].center];
    }
    for (auto& e : v) e = e / total;
    return v;
}

AlgebraicNumber patch_frequency(const Word& patch, const BlockSystem& bs,
                                const std::vector<AlgebraicNumber>& freqs) {
    if (patch.empty()) throw error("patch_frequency: empty patch");
    if (bs.radius < static_cast<int>(patch.size()))
        throw error("patch_frequency: collar radius below |patch|");
    AlgebraicNumber f = AlgebraicNumber::zero(freqs.at(0).field());
    for (size_t i = 0; i < bs.letters.size(); ++i) {
        const auto& c = bs.letters[i];
        // Occurrence of the patch starting at the center tile.
        if (c.center != patch[0]) continue;
        bool hit = true;
        for (size_t t = 1; t < patch.size() && hit; ++t)
            hit = c.right[t - 1] == patch[t];
        if (hit) f = f + freqs[i];
    }
    return f;
}

FrequencyForm frequency_decompose(const AlgebraicNumber& f,
                                  const AlgebraicNumber& l, const Int& d,
                                  const IntPoly& q, int n_max) {
    if (q.coeff(0) == 0) throw error("frequency_decompose: q(0) = 0");
    FrequencyForm out;
    out.l = l;
    out.d = d;
    out.qprime_at_lambda =
        AlgebraicNumber::eval_poly(q.derivative(),
                                   AlgebraicNumber::generator(f.field()));
    AlgebraicNumber g =
        f * l * AlgebraicNumber::from_rational(f.field(), Rat(d)) *
        out.qprime_at_lambda;
    Rat q0 = Rat(abs_int(q.coeff(0)));
    for (int n = 0; n <= n_max; ++n) {
        bool integral = true;
        for (const auto& coord : g.coords())
            integral = integral && denominator(coord) == 1;
        if (integral) {
            std::vector<Int> coeffs;
            for (const auto& coord : g.coords()) coeffs.push_back(numerator(coord));
            out.u = IntPoly(std::move(coeffs));
            out.n = n;
            return out;
        }
        g = g * q0;
    }
    std::string dens;
    for (const auto& coord : g.coords())
        dens += (dens.empty() ? "" : ", ") + denominator(coord).str();
    throw error("frequency_decompose: no n <= " + std::to_string(n_max) +
                " clears the denominators (" + dens + ")");
}

AlgebraicNumber trace_of(const std::vector<std::pair<Rat, Word>>& combo,
                         const BlockSystem& bs,
                         const std::vector<AlgebraicNumber>& freqs) {
    AlgebraicNumber total = AlgebraicNumber::zero(freqs.at(0).field());
    for (const auto& [coeff, patch] : combo)
        total = total + patch_frequency(patch, bs, freqs) * coeff;
    return total;
}

std::vector<bool> zspan_check(const std::vector<AlgebraicNumber>& targets,
                              const std::vector<AlgebraicNumber>& basis) {
    if (basis.empty()) throw error("zspan_check: empty basis");
    const int deg = basis[0].field()->degree() == 0 ? 1 : basis[0].field()->degree();
    const int nb = static_cast<int>(basis.size());
    // Clear denominators with one common multiple so that Z-span membership
    // becomes an integer lattice problem.
    Int lcm = 1;
    auto fold = [&](const AlgebraicNumber& a) {
        for (const auto& c : a.coords())
            lcm = lcm / gcd_int(lcm, denominator(c)) * denominator(c);
    };
    for (const auto& b : basis) fold(b);
    for (const auto& t : targets) fold(t);
    auto scaled = [&](const AlgebraicNumber& a) {
        std::vector<Int> v(deg, 0);
        for (int i = 0; i < static_cast<int>(a.coords().size()); ++i) {
            Rat c = a.coords()[i] * Rat(lcm);
            v[i] = numerator(c);
        }
        return v;
    };
    IntMatrix b(deg, nb);
    for (int j = 0; j < nb; ++j) {
        auto col = scaled(basis[j]);
        for (int i = 0; i < deg; ++i) b.at(i, j) = col[i];
    }
    IntMatrix h = hnf(b);
    // First nonzero row of each column (columns in echelon order).
    std::vector<int> pivot_row(h.cols(), -1);
    for (int j = 0; j < h.cols(); ++j)
        for (int i = 0; i < h.rows(); ++i)
            if (h.at(i, j) != 0) {
                pivot_row[j] = i;
                break;
            }
    std::vector<bool> out;
    for (const auto& t : targets) {
        auto residual = scaled(t);
        bool ok = true;
        for (int j = 0; j < h.cols() && ok; ++j) {
            if (pivot_row[j] < 0) continue;
            int r = pivot_row[j];
            if (residual[r] % h.at(r, j) != 0) {
                ok = false;
                break;
            }
            Int y = residual[r] / h.at(r, j);
            for (int i = 0; i < deg; ++i) residual[i] -= y * h.at(i, j);
        }
        for (int i = 0; i < deg && ok; ++i) ok = residual[i] == 0;
        out.push_back(ok);
    }
    return out;
}

ConvergenceReport convergence_experiment(const Word& patch, const Substitution& s,
                                         const PerronData& pd,
                                         const AlgebraicNumber& f,
                                         const std::vector<double>& sizes,
                                         std::uint64_t seed,
                                         int windows_per_size) {
    if (sizes.size() < 8)
        throw error("convergence_experiment: need at least 8 window scales");
    ConvergenceReport rep;
    rep.patch = patch;
    rep.seed = seed;
    rep.sizes = sizes;
    std::sort(rep.sizes.begin(), rep.sizes.end());

    // Theoretical exponent from the second eigenvalue modulus.
    double lambda = pd.lambda.approx();
    const auto& iv = pd.lambda2_modulus_interval;
    double l2 = (to_double(iv.lo) + to_double(iv.hi)) / 2;
    rep.theoretical_gamma =
        l2 <= 1e-12 ? 1.0
                    : std::min(1.0, 1.0 - std::log(l2) / std::log(lambda));

    // Ambient word: at least 10x the largest scale, measured in letters.
    double vmax = rep.sizes.back();
    double min_len = pd.lengths[0].approx();
    for (const auto& l : pd.lengths) min_len = std::min(min_len, l.approx());
    long long need =
        static_cast<long long>(std::ceil(10.0 * vmax / std::min(min_len, 1.0)));
    Word w{0};
    while (static_cast<long long>(w.size()) < need)
        w = iterate_word(s, w, 1, 8 * need + 1024);

    const size_t n = w.size();
    std::vector<double> cumlen(n + 1, 0.0);
    std::vector<double> len_of(s.size());
    for (int l = 0; l < s.size(); ++l) len_of[l] = pd.lengths[l].approx();
    for (size_t i = 0; i < n; ++i) cumlen[i + 1] = cumlen[i] + len_of[w[i]];
    std::vector<long long> pref(n + 1, 0);
    for (size_t i = 0; i < n; ++i) {
        bool hit = i + patch.size() <= n &&
                   std::equal(patch.begin(), patch.end(), w.begin() + i);
        pref[i + 1] = pref[i] + (hit ? 1 : 0);
    }

    double f_approx = f.approx();
    std::mt19937_64 rng(seed);
    rep.envelope_constant = 0;
    for (double v : rep.sizes) {
        double sup = 0;
        for (int t = 0; t < windows_per_size; ++t) {
            // Random tile-aligned window of natural length >= v (minimal such).
            std::uniform_int_distribution<size_t> startd(
                0, n - 1 - static_cast<size_t>(std::ceil(v / min_len)) - 2);
            size_t i = startd(rng);
            auto it = std::lower_bound(cumlen.begin() + i, cumlen.end(),
                                       cumlen[i] + v);
            size_t j = static_cast<size_t>(it - cumlen.begin());
            if (j <= i || j > n) continue;
            double volume = cumlen[j] - cumlen[i];
            long long count = 0;
            if (j - i >= patch.size())
                count = pref[j - patch.size() + 1] - pref[i];
            double dev = std::abs(double(count) / volume - f_approx);
            sup = std::max(sup, dev);
            rep.envelope_constant = std::max(
                rep.envelope_constant, dev * std::pow(volume, rep.theoretical_gamma));
        }
        rep.deviations.push_back(sup);
    }

    // Least-squares fit of log(dev) against log(V); deviations of exactly
    // zero are floored to keep the fit finite.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int m = static_cast<int>(rep.sizes.size());
    for (int i = 0; i < m; ++i) {
        double x = std::log(rep.sizes[i]);
        double y = std::log(std::max(rep.deviations[i], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    rep.fitted_exponent = -slope;
    return rep;
}

} // namespace tilecoh
