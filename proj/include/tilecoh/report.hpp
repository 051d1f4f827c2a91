#ifndef TILECOH_REPORT_HPP
#define TILECOH_REPORT_HPP

#include <string>

#include <json.hpp>

#include "tilecoh/algebraic.hpp"
#include "tilecoh/cohomology.hpp"
#include "tilecoh/frequency.hpp"
#include "tilecoh/regularity.hpp"
#include "tilecoh/substitution.hpp"

namespace tilecoh {

using json = nlohmann::ordered_json;

// Lossless textual forms: integers and rationals as decimal strings
// ("-3", "1/3"); algebraic numbers as power-basis coordinates plus a decimal
// approximation with the interval width used to produce it.
std::string rat_str(const Rat& x);
Rat rat_from_str(const std::string& s);

json int_json(const Int& x);
json rat_json(const Rat& x);
json poly_json(const IntPoly& p);          // ascending coefficient strings
json matrix_json(const IntMatrix& m);      // rows of integer strings
json ratvec_json(const RatVector& v);
json algebraic_json(const AlgebraicNumber& a);
AlgebraicNumber algebraic_from_json(const json& j, const FieldPtr& field);

json word_json(const Substitution& s, const Word& w);

json perron_json(const Substitution& s, const PerronData& pd);
json cohomology_json(const CohomologyPresentation& pres);
json certificate_json(const Substitution& s, const RegularityCertificate& cert);
json frequency_form_json(const FrequencyForm& form);
json convergence_json(const Substitution& s, const ConvergenceReport& rep);

} // namespace tilecoh

#endif
