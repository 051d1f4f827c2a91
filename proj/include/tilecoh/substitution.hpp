#ifndef TILECOH_SUBSTITUTION_HPP
#define TILECOH_SUBSTITUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tilecoh/algebraic.hpp"
#include "tilecoh/intmatrix.hpp"
#include "tilecoh/intpoly.hpp"

namespace tilecoh {

// A substitution rule: ordered alphabet of named letters, one nonempty image
// word per letter (stored as alphabet indices).
struct Substitution {
    std::vector<std::string> alphabet;
    std::vector<std::vector<int>> rules;
    // Optional user length overrides, integer polynomials in the stretching
    // factor (the DSL's "lengths:" header).
    std::optional<std::vector<IntPoly>> length_overrides;

    int size() const { return static_cast<int>(alphabet.size()); }
    int letter(const std::string& name) const;  // -1 if unknown
    std::string word_str(const std::vector<int>& w) const;
};

struct parse_error : error {
    parse_error(const std::string& what, int line, int col)
        : error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(col) + ")"),
          line(line),
          col(col) {}
    int line, col;
};

// Parse the substitution DSL: one rule per line, "letter -> letter letter...",
// '#' comments, blank lines ignored, optional "lengths: ..." header.
Substitution parse_substitution(const std::string& text);

// M[i][j] = number of occurrences of letter i in the image of letter j.
IntMatrix substitution_matrix(const Substitution& s);

struct PrimitivityResult {
    bool primitive = false;
    int witness_power = 0;  // smallest n with M^n > 0 when primitive
};
PrimitivityResult is_primitive(const Substitution& s);

// All images share a first letter and all share a last letter.
bool is_proper(const Substitution& s);

struct PerronData {
    FieldPtr field;                     // Q(lambda)
    AlgebraicNumber lambda;             // Perron-Frobenius eigenvalue
    IntPoly q;                          // minimal polynomial of lambda
    std::vector<AlgebraicNumber> lengths;       // left PF eigenvector
    std::vector<AlgebraicNumber> letter_freqs;  // right PF eigenvector
    RatInterval lambda2_modulus_interval;       // bounds |lambda_2| of M
};

// Exact Perron-Frobenius data. Lengths are primitive in Z[lambda]
// coordinates (or validated user overrides); frequencies are normalized so
// that sum freq_i * length_i = 1. Throws on non-primitive input.
PerronData perron_data(const Substitution& s);

enum class PeriodicityVerdict { aperiodic_evidence, periodic, inconclusive };

// Morse-Hedlund screen on factor complexity up to max_n. Never reports
// "periodic" falsely; "aperiodic-evidence" is not a proof.
PeriodicityVerdict periodicity_screen(const Substitution& s, int max_n = 64);

// Helpers shared with the matrix-only analysis path.

// Designated PF root of the characteristic polynomial of a primitive
// nonnegative matrix: its irreducible factor and the field element.
struct PerronRoot {
    IntPoly q;
    FieldPtr field;
    AlgebraicNumber lambda;
};
PerronRoot perron_root(const IntMatrix& m);

// Rational interval bounding the second-largest eigenvalue modulus of a
// matrix with characteristic polynomial cp and PF root in lambda_iv.
RatInterval second_modulus_interval(const IntPoly& cp, const RatInterval& lambda_iv);

} // namespace tilecoh

#endif
