#include "tilecoh/regularity.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace tilecoh {

namespace {

AlgebraicNumber natural_length(const Word& w, const PerronData& pd) {
    AlgebraicNumber total = AlgebraicNumber::zero(pd.field);
    for (int l : w) total = total + pd.lengths[l];
    return total;
}

} // namespace

ReturnWordReport return_words(const Substitution& s, int letter, int max_len,
                              const PerronData& pd) {
    ReturnWordReport rep;
    rep.letter = letter;
    for (int n = 1; n <= max_len; ++n) {
        for (const auto& u : factors(s, n + 1)) {
            if (u.front() != letter || u.back() != letter) continue;
            rep.words.push_back(Word(u.begin(), u.end() - 1));
        }
    }
    std::sort(rep.words.begin(), rep.words.end(),
              [](const Word& a, const Word& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    rep.words.erase(std::unique(rep.words.begin(), rep.words.end()),
                    rep.words.end());
    for (const auto& w : rep.words)
        rep.return_lengths.push_back(natural_length(w, pd));
    rep.l_default = default_return_length(s, pd);
    return rep;
}

AlgebraicNumber default_return_length(const Substitution& s, const PerronData& pd) {
    // The shortest return word of each letter appears among short factors;
    // grow the scan until every letter has one.
    std::vector<std::optional<AlgebraicNumber>> best(s.size());
    for (int n = 1; n <= 1024; ++n) {
        for (const auto& u : factors(s, n + 1)) {
            if (u.front() != u.back()) continue;
            int l = u.front();
            AlgebraicNumber len = natural_length(Word(u.begin(), u.end() - 1), pd);
            if (!best[l] || len < *best[l]) best[l] = len;
        }
        bool done = true;
        for (const auto& b : best) done = done && b.has_value();
        if (done) break;
    }
    std::optional<AlgebraicNumber> out;
    for (const auto& b : best) {
        if (!b) throw error("default_return_length: letter with no return word");
        if (!out || *b < *out) out = *b;
    }
    return *out;
}

namespace {

ControlPatchSet finalize_controls(const CohomologyPresentation& pres,
                                  std::vector<Word> patches,
                                  std::vector<RatVector> cols) {
    int k = pres.k;
    ControlPatchSet set;
    set.patches = std::move(patches);
    set.classes = RatMatrix(k, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) set.classes.at(i, j) = cols[j][i];
    if (!set.classes.inverse())
        throw error("control classes are not linearly independent");
    return set;
}

int stacked_rank(const std::vector<RatVector>& cols, int k) {
    RatMatrix m(k, std::max<int>(1, static_cast<int>(cols.size())));
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < k; ++i) m.at(i, static_cast<int>(j)) = cols[j][i];
    return cols.empty() ? 0 : m.rank();
}

} // namespace

ControlPatchSet find_control_patches(const CohomologyPresentation& pres,
                                     int max_len) {
    max_len = std::min(max_len, pres.bs.radius);
    std::vector<Word> kept;
    std::vector<RatVector> cols;
    for (int len = 1; len <= max_len && static_cast<int>(kept.size()) < pres.k;
         ++len) {
        for (const auto& p : factors(pres.bs.base, len)) {  // std::set: lex order
            RatVector cls = patch_class(p, pres).coords;
            cols.push_back(cls);
            if (stacked_rank(cols, pres.k) == static_cast<int>(kept.size()) + 1) {
                kept.push_back(p);
            } else {
                cols.pop_back();
            }
            if (static_cast<int>(kept.size()) == pres.k) break;
        }
    }
    if (static_cast<int>(kept.size()) < pres.k)
        throw error("control-patch search exhausted length " +
                    std::to_string(max_len) + " at rank " +
                    std::to_string(kept.size()) + " of " + std::to_string(pres.k));
    return finalize_controls(pres, std::move(kept), std::move(cols));
}

ControlPatchSet make_control_set(const CohomologyPresentation& pres,
                                 const std::vector<Word>& patches) {
    if (static_cast<int>(patches.size()) != pres.k)
        throw error("make_control_set: need exactly k patches");
    std::vector<RatVector> cols;
    for (const auto& p : patches) cols.push_back(patch_class(p, pres).coords);
    return finalize_controls(pres, patches, std::move(cols));
}

RatVector solve_coefficients(const Word& patch, const ControlPatchSet& controls,
                             const CohomologyPresentation& pres) {
    RatVector target = patch_class(patch, pres).coords;
    auto c = controls.classes.solve(target);
    if (!c) throw error("solve_coefficients: control classes not a basis");
    return *c;
}

namespace {

// Ambient word with prefix-sum occurrence tables for O(1) window counts.
struct CountedWord {
    Word w;
    // counts[t][i] = occurrences of patch t starting in [0, i).
    std::vector<std::vector<long long>> prefix;

    void add_patch(const Word& p) {
        std::vector<long long> pre(w.size() + 1, 0);
        for (size_t i = 0; i < w.size(); ++i) {
            bool hit = i + p.size() <= w.size() &&
                       std::equal(p.begin(), p.end(), w.begin() + i);
            pre[i + 1] = pre[i] + (hit ? 1 : 0);
        }
        prefix.push_back(std::move(pre));
    }
    // Occurrences of patch t fully inside [start, start+len).
    long long count(size_t t, long long start, long long len,
                    size_t patch_len) const {
        if (len < static_cast<long long>(patch_len)) return 0;
        long long hi = start + len - static_cast<long long>(patch_len) + 1;
        return prefix[t][hi] - prefix[t][start];
    }
};

Word ambient_word(const Substitution& s, long long min_len) {
    Word w{0};
    while (static_cast<long long>(w.size()) < min_len)
        w = iterate_word(s, w, 1, 8 * min_len + 1024);
    return w;
}

} // namespace

RegularityCertificate verify_certificate(const Word& patch, const RatVector& c,
                                         const ControlPatchSet& controls,
                                         const Substitution& s,
                                         const SampleConfig& cfg, int rho0) {
    CountedWord cw;
    cw.w = ambient_word(s, cfg.min_word_len);
    cw.add_patch(patch);
    for (const auto& p : controls.patches) cw.add_patch(p);

    const long long n = static_cast<long long>(cw.w.size());
    const long long min_len = 2 * static_cast<long long>(patch.size());
    const long long max_len =
        std::min(cfg.max_window_len, n / 4);
    const int rho_cap = 4 * rho0;

    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> logu(std::log(double(min_len)),
                                                std::log(double(max_len)));

    struct Sample {
        long long start, len;
        Rat e;
    };
    std::vector<Sample> samples;
    samples.reserve(cfg.num_windows);
    Rat max_abs(0);
    for (int i = 0; i < cfg.num_windows; ++i) {
        long long len = std::llround(std::exp(logu(rng)));
        len = std::clamp(len, min_len, max_len);
        std::uniform_int_distribution<long long> startd(rho_cap,
                                                        n - len - rho_cap - 1);
        long long start = startd(rng);
        Rat e(cw.count(0, start, len, patch.size()));
        for (size_t t = 0; t < controls.patches.size(); ++t)
            e -= c[t] * Rat(cw.count(t + 1, start, len,
                                     controls.patches[t].size()));
        samples.push_back({start, len, e});
        Rat a = e < 0 ? Rat(-e) : e;
        if (a > max_abs) max_abs = a;
    }

    RegularityCertificate cert;
    cert.patch = patch;
    cert.coefficients = c;
    cert.error_bound = max_abs;

    // Boundedness: split scales into log buckets; the maxima over the larger
    // half must not exceed the maximum over the smaller half.
    {
        double lo = std::log(double(min_len)), hi = std::log(double(max_len + 1));
        const int buckets = 8;
        std::vector<Rat> bucket_max(buckets, Rat(0));
        for (const auto& smp : samples) {
            int b = static_cast<int>((std::log(double(smp.len)) - lo) /
                                     (hi - lo) * buckets);
            b = std::clamp(b, 0, buckets - 1);
            Rat a = smp.e < 0 ? Rat(-smp.e) : smp.e;
            if (a > bucket_max[b]) bucket_max[b] = a;
        }
        Rat small(0), large(0);
        for (int b = 0; b < buckets; ++b)
            if (b < buckets / 2)
                small = std::max(small, bucket_max[b]);
            else
                large = std::max(large, bucket_max[b]);
        cert.bounded_ok = large <= small;
    }

    // Boundary determination: e must be a function of the two rho-collars.
    for (int rho = rho0; rho <= rho_cap; rho *= 2) {
        std::map<std::pair<Word, Word>, Rat> seen;
        bool ok = true;
        for (const auto& smp : samples) {
            Word left(cw.w.begin() + (smp.start - rho),
                      cw.w.begin() + std::min<long long>(smp.start + rho,
                                                         smp.start + smp.len));
            Word right(cw.w.begin() + std::max<long long>(smp.start,
                                                          smp.start + smp.len - rho),
                       cw.w.begin() + (smp.start + smp.len + rho));
            auto key = std::make_pair(std::move(left), std::move(right));
            auto [it, inserted] = seen.emplace(key, smp.e);
            if (!inserted && it->second != smp.e) {
                ok = false;
                break;
            }
        }
        if (ok) {
            cert.collar_radius = rho;
            cert.boundary_map_checked = true;
            break;
        }
    }
    return cert;
}

SupertileReport exact_on_supertiles(const Word& patch, const RatVector& c,
                                    const ControlPatchSet& controls,
                                    const Substitution& s, int n_lo, int n_hi,
                                    int max_ret) {
    SupertileReport rep;
    rep.all_zero = true;
    int n0 = min_order_for_length(
        s, static_cast<int>(std::max(patch.size(),
                                     [&] {
                                         size_t m = 1;
                                         for (const auto& p : controls.patches)
                                             m = std::max(m, p.size());
                                         return m;
                                     }())));
    n_lo = std::max(n_lo, n0);
    for (int letter = 0; letter < s.size(); ++letter) {
        // Return words via factor scan (no Perron data needed here).
        std::vector<Word> rets;
        for (int len = 1; len <= max_ret; ++len)
            for (const auto& u : factors(s, len + 1))
                if (u.front() == letter && u.back() == letter)
                    rets.push_back(Word(u.begin(), u.end() - 1));
        std::sort(rets.begin(), rets.end());
        rets.erase(std::unique(rets.begin(), rets.end()), rets.end());
        for (const auto& w : rets) {
            for (int n = n_lo; n <= n_hi; ++n) {
                Word body = iterate_word(s, w, n);
                Word ctx = iterate(s, w.front(), n);
                Rat e(count_anchored(patch, body, ctx));
                for (size_t t = 0; t < controls.patches.size(); ++t)
                    e -= c[t] *
                         Rat(count_anchored(controls.patches[t], body, ctx));
                if (e != 0) {
                    rep.all_zero = false;
                    rep.violations.push_back(
                        "letter " + s.alphabet[letter] + ", return word " +
                        s.word_str(w) + ", order " + std::to_string(n));
                }
            }
        }
    }
    return rep;
}

} // namespace tilecoh
