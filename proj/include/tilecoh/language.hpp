#ifndef TILECOH_LANGUAGE_HPP
#define TILECOH_LANGUAGE_HPP

#include <set>
#include <vector>

#include "tilecoh/intmatrix.hpp"
#include "tilecoh/substitution.hpp"

namespace tilecoh {

using Word = std::vector<int>;

inline constexpr long long kDefaultLengthGuard = 100000000;  // letters

// phi^n(w); throws when the result would exceed the length guard.
Word iterate_word(const Substitution& s, const Word& w, int n,
                  long long guard = kDefaultLengthGuard);
Word iterate(const Substitution& s, int letter, int n,
             long long guard = kDefaultLengthGuard);

// The set of length-m factors of the substitution language (fixed point of
// substitute-and-reextract).
std::set<Word> factors(const Substitution& s, int m);

// Occurrences of p fully inside w.
long long count_occurrences(const Word& p, const Word& w);

// Occurrences of p starting inside w, allowed to run into right_context
// (which must have length >= |p| - 1).
long long count_anchored(const Word& p, const Word& w, const Word& right_context);

// A letter with m letters of context on each side.
struct CollaredLetter {
    Word left;
    int center;
    Word right;
    Word window() const;
    auto operator<=>(const CollaredLetter&) const = default;
};

// Collared alphabet with the induced substitution and its matrix.
struct BlockSystem {
    Substitution base;
    int radius = 0;
    std::vector<CollaredLetter> letters;
    std::vector<std::vector<int>> induced_rules;  // image per collared letter
    IntMatrix mc;
    bool degenerate_cycle = false;  // flagged for periodic inputs

    int index_of(const CollaredLetter& c) const;  // -1 if absent
};

BlockSystem collar(const Substitution& s, int m);

struct BorderForcingResult {
    bool forces = false;
    int depth = 0;  // meaningful when forces
    bool operator==(const BorderForcingResult&) const = default;
};

// Smallest n <= max_n at which every letter's collared versions have
// phi^n images with identical one-letter collars.
BorderForcingResult forces_border(const Substitution& s, int max_n);

struct AnchoredCountVector {
    Word patch;
    int order = 0;
    std::vector<Int> values;  // indexed like BlockSystem::letters
};

// Minimal n with min_l |phi^n(l)| >= len.
int min_order_for_length(const Substitution& s, int len);

// values[c] = occurrences of patch starting inside phi^n(center(c)), with
// lookahead supplied by the substituted right collar.
AnchoredCountVector anchored_count_vector(const Word& patch, const BlockSystem& bs,
                                          int n);

} // namespace tilecoh

#endif
