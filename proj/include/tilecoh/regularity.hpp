#ifndef TILECOH_REGULARITY_HPP
#define TILECOH_REGULARITY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tilecoh/algebraic.hpp"
#include "tilecoh/cohomology.hpp"
#include "tilecoh/language.hpp"
#include "tilecoh/substitution.hpp"

namespace tilecoh {

struct ReturnWordReport {
    int letter = 0;
    std::vector<Word> words;                     // return words, (length, lex) order
    std::vector<AlgebraicNumber> return_lengths; // natural length of each word
    AlgebraicNumber l_default;                   // min return length over all letters
};

// All return words of a letter with at most max_len letters: words w starting
// with the letter such that w followed by the letter again is legal.
ReturnWordReport return_words(const Substitution& s, int letter, int max_len,
                              const PerronData& pd);

// Minimum return length over all letters (the default L).
AlgebraicNumber default_return_length(const Substitution& s, const PerronData& pd);

struct ControlPatchSet {
    std::vector<Word> patches;
    RatMatrix classes;  // column i = class of patches[i]; invertible k x k
};

// Greedy (length, lexicographic) scan for k patches with independent classes.
ControlPatchSet find_control_patches(const CohomologyPresentation& pres,
                                     int max_len);

// Control set from explicit patches; throws unless their classes are a basis.
ControlPatchSet make_control_set(const CohomologyPresentation& pres,
                                 const std::vector<Word>& patches);

// Unique c with patch_class(P) = sum_i c_i * patch_class(controls[i]).
RatVector solve_coefficients(const Word& patch, const ControlPatchSet& controls,
                             const CohomologyPresentation& pres);

struct SampleConfig {
    std::uint64_t seed = 20240817;
    int num_windows = 10000;
    long long min_word_len = 1000000;   // ambient word length (letters)
    long long max_window_len = 100000;  // window letter-length upper bound
};

struct RegularityCertificate {
    Word patch;
    RatVector coefficients;
    int collar_radius = 0;        // rho for which boundary determination held
    Rat error_bound;              // max |e| over all sampled windows
    bool bounded_ok = false;      // |e| showed no growth with window length
    bool boundary_map_checked = false;
};

// Sample random windows of a long legal word and verify the window-counting
// law: e = count_P - sum c_i count_{P_i} is bounded independently of window
// length and determined by the rho-collars of the window boundary. rho starts
// at rho0 and doubles (up to 4x) on failure.
RegularityCertificate verify_certificate(const Word& patch, const RatVector& c,
                                         const ControlPatchSet& controls,
                                         const Substitution& s,
                                         const SampleConfig& cfg, int rho0);

struct SupertileReport {
    bool all_zero = false;
    std::vector<std::string> violations;
};

// Exactness on supertiles of return words: for each return word w (of every
// letter, up to max_ret letters) and each order n in [n_lo, n_hi], the count
// relation holds with e = 0 on phi^n(w) read with the right context
// phi^n(first letter of w).
SupertileReport exact_on_supertiles(const Word& patch, const RatVector& c,
                                    const ControlPatchSet& controls,
                                    const Substitution& s, int n_lo, int n_hi,
                                    int max_ret = 8);

} // namespace tilecoh

#endif
