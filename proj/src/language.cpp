#include "tilecoh/language.hpp"

#include <map>

namespace tilecoh {

Word iterate_word(const Substitution& s, const Word& w, int n, long long guard) {
    Word cur = w;
    for (int step = 0; step < n; ++step) {
        Word next;
        long long total = 0;
        for (int letter : cur) {
            total += static_cast<long long>(s.rules[letter].size());
            if (total > guard) throw error("iterate: word length guard exceeded");
        }
        next.reserve(static_cast<size_t>(total));
        for (int letter : cur)
            next.insert(next.end(), s.rules[letter].begin(), s.rules[letter].end());
        cur = std::move(next);
    }
    return cur;
}

Word iterate(const Substitution& s, int letter, int n, long long guard) {
    return iterate_word(s, Word{letter}, n, guard);
}

namespace {

void insert_blocks(const Word& w, int m, std::set<Word>& out) {
    for (size_t i = 0; i + m <= w.size(); ++i)
        out.insert(Word(w.begin() + i, w.begin() + i + m));
}

} // namespace

std::set<Word> factors(const Substitution& s, int m) {
    if (m < 1) throw error("factors: length must be positive");
    // Seed with the m-blocks of phi^K(letter) for K large enough that every
    // image reaches length m, then close under substitute-and-reextract.
    int k = min_order_for_length(s, m);
    std::set<Word> cur;
    for (int l = 0; l < s.size(); ++l) insert_blocks(iterate(s, l, k), m, cur);
    for (int round = 0; round < 10000; ++round) {
        std::set<Word> next = cur;
        for (const auto& w : cur) insert_blocks(iterate_word(s, w, 1), m, next);
        if (next.size() == cur.size()) return next;
        cur = std::move(next);
    }
    throw error("factors: fixed point not reached");
}

long long count_occurrences(const Word& p, const Word& w) {
    if (p.empty()) throw error("count_occurrences: empty patch");
    if (p.size() > w.size()) return 0;
    long long n = 0;
    for (size_t i = 0; i + p.size() <= w.size(); ++i)
        if (std::equal(p.begin(), p.end(), w.begin() + i)) ++n;
    return n;
}

long long count_anchored(const Word& p, const Word& w, const Word& right_context) {
    if (p.empty()) throw error("count_anchored: empty patch");
    if (right_context.size() + 1 < p.size())
        throw error("count_anchored: right context shorter than |patch| - 1");
    Word ext = w;
    ext.insert(ext.end(), right_context.begin(), right_context.begin() + (p.size() - 1));
    long long n = 0;
    for (size_t i = 0; i < w.size(); ++i)
        if (std::equal(p.begin(), p.end(), ext.begin() + i)) ++n;
    return n;
}

Word CollaredLetter::window() const {
    Word w = left;
    w.push_back(center);
    w.insert(w.end(), right.begin(), right.end());
    return w;
}

int BlockSystem::index_of(const CollaredLetter& c) const {
    auto it = std::lower_bound(letters.begin(), letters.end(), c);
    if (it == letters.end() || !(*it == c)) return -1;
    return static_cast<int>(it - letters.begin());
}

BlockSystem collar(const Substitution& s, int m) {
    if (m < 0) throw error("collar: radius must be nonnegative");
    BlockSystem bs;
    bs.base = s;
    bs.radius = m;
    auto windows = factors(s, 2 * m + 1);
    for (const auto& w : windows) {
        CollaredLetter c;
        c.left.assign(w.begin(), w.begin() + m);
        c.center = w[m];
        c.right.assign(w.begin() + m + 1, w.end());
        bs.letters.push_back(std::move(c));
    }
    std::sort(bs.letters.begin(), bs.letters.end());

    int nc = static_cast<int>(bs.letters.size());
    bs.mc = IntMatrix(nc, nc);
    for (int j = 0; j < nc; ++j) {
        const CollaredLetter& c = bs.letters[j];
        Word image = iterate_word(s, c.window(), 1);
        size_t off = 0;
        for (int l : c.left) off += s.rules[l].size();
        size_t len = s.rules[c.center].size();
        std::vector<int> induced;
        for (size_t t = 0; t < len; ++t) {
            size_t pos = off + t;
            if (pos < static_cast<size_t>(m) || pos + m >= image.size())
                throw error("collar: image too short to re-collar");
            CollaredLetter d;
            d.left.assign(image.begin() + (pos - m), image.begin() + pos);
            d.center = image[pos];
            d.right.assign(image.begin() + pos + 1, image.begin() + pos + 1 + m);
            int idx = bs.index_of(d);
            if (idx < 0) throw error("collar: induced letter outside collared alphabet");
            induced.push_back(idx);
            bs.mc.at(idx, j) += 1;
        }
        bs.induced_rules.push_back(std::move(induced));
    }
    // Morse-Hedlund screen at window length: so few windows that the language
    // must be eventually periodic.
    bs.degenerate_cycle = nc <= 2 * m + 1;
    return bs;
}

BorderForcingResult forces_border(const Substitution& s, int max_n) {
    // Collared versions of each letter with radius 1.
    auto windows = factors(s, 3);
    for (int n = 0; n <= max_n; ++n) {
        bool all_agree = true;
        for (int l = 0; l < s.size() && all_agree; ++l) {
            // Across every legal 3-window centered on l, the letters adjacent
            // to phi^n(l) inside phi^n(window) must coincide.
            std::optional<std::pair<int, int>> seen;
            for (const auto& w : windows) {
                if (w[1] != l) continue;
                Word image = iterate_word(s, w, n);
                size_t off = iterate(s, w[0], n).size();
                size_t len = iterate(s, l, n).size();
                std::pair<int, int> adj{image[off - 1], image[off + len]};
                if (!seen) {
                    seen = adj;
                } else if (*seen != adj) {
                    all_agree = false;
                    break;
                }
            }
        }
        if (all_agree) return {true, n};
    }
    return {false, 0};
}

int min_order_for_length(const Substitution& s, int len) {
    std::vector<long long> sizes(s.size(), 1);
    for (int n = 0; n <= 64; ++n) {
        long long mn = *std::min_element(sizes.begin(), sizes.end());
        if (mn >= len) return n;
        std::vector<long long> next(s.size(), 0);
        for (int l = 0; l < s.size(); ++l) {
            for (int im : s.rules[l]) {
                next[l] += sizes[im];
                if (next[l] > (1LL << 62) / 2) next[l] = (1LL << 62) / 2;
            }
        }
        sizes = std::move(next);
    }
    throw error("min_order_for_length: image lengths do not grow (degenerate rule)");
}

AnchoredCountVector anchored_count_vector(const Word& patch, const BlockSystem& bs,
                                          int n) {
    if (patch.empty()) throw error("anchored_count_vector: empty patch");
    if (bs.radius < static_cast<int>(patch.size()))
        throw error("anchored_count_vector: collar radius below |patch|");
    if (n < min_order_for_length(bs.base, static_cast<int>(patch.size())))
        throw error("anchored_count_vector: order too small for patch length");
    AnchoredCountVector out;
    out.patch = patch;
    out.order = n;
    for (const auto& c : bs.letters) {
        Word body = iterate(bs.base, c.center, n);
        Word context = iterate_word(bs.base, c.right, n);
        out.values.push_back(Int(count_anchored(patch, body, context)));
    }
    return out;
}

} // namespace tilecoh
