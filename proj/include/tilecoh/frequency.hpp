#ifndef TILECOH_FREQUENCY_HPP
#define TILECOH_FREQUENCY_HPP

#include <cstdint>
#include <vector>

#include "tilecoh/algebraic.hpp"
#include "tilecoh/language.hpp"
#include "tilecoh/substitution.hpp"

namespace tilecoh {

// Exact frequencies (occurrences per unit natural length) of the collared
// letters: right PF eigenvector of the induced matrix over Q(lambda),
// normalized so sum freq(c) * length(center(c)) = 1.
std::vector<AlgebraicNumber> collared_frequencies(const BlockSystem& bs,
                                                  const PerronData& pd);

// f(P) = sum of freq(c) over collared letters whose window carries an
// occurrence of P starting at the center tile. Requires bs.radius >= |P|.
AlgebraicNumber patch_frequency(const Word& patch, const BlockSystem& bs,
                                const std::vector<AlgebraicNumber>& freqs);

// f(P) = u_P(lambda) / (L * D * q'(lambda) * |q0|^n) with n minimal and the
// sign of q0^n folded into u_P.
struct FrequencyForm {
    IntPoly u;
    int n = 0;
    AlgebraicNumber l;
    Int d;
    AlgebraicNumber qprime_at_lambda;
};

FrequencyForm frequency_decompose(const AlgebraicNumber& f,
                                  const AlgebraicNumber& l, const Int& d,
                                  const IntPoly& q, int n_max = 64);

// sum of c_P * f(P) over a rational combination of patches.
AlgebraicNumber trace_of(const std::vector<std::pair<Rat, Word>>& combo,
                         const BlockSystem& bs,
                         const std::vector<AlgebraicNumber>& freqs);

// For each target, whether it is an integer linear combination of the basis
// values (lattice membership inside Q(lambda), solved exactly).
std::vector<bool> zspan_check(const std::vector<AlgebraicNumber>& targets,
                              const std::vector<AlgebraicNumber>& basis);

struct ConvergenceReport {
    Word patch;
    double theoretical_gamma = 0;
    double fitted_exponent = 0;
    double envelope_constant = 0;
    std::vector<double> sizes;       // window sizes V (natural length)
    std::vector<double> deviations;  // sup |count/V - f(P)| per size
    std::uint64_t seed = 0;
};

// Empirical convergence of window frequencies toward the exact f(P):
// sup-deviation per scale, least-squares exponent fit, and the smallest
// envelope constant K with deviation <= K * V^(-gamma) over all samples.
ConvergenceReport convergence_experiment(const Word& patch, const Substitution& s,
                                         const PerronData& pd,
                                         const AlgebraicNumber& f,
                                         const std::vector<double>& sizes,
                                         std::uint64_t seed = 20240817,
                                         int windows_per_size = 32);

} // namespace tilecoh

#endif
