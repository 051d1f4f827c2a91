#include "tilecoh/report.hpp"

#include <cstdio>

namespace tilecoh {

namespace {

std::string fixed_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

const Rat kApproxWidth = Rat(1, Int(1000000000000LL));  // 1e-12

} // namespace

std::string rat_str(const Rat& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

Rat rat_from_str(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

json int_json(const Int& x) { return x.str(); }
json rat_json(const Rat& x) { return rat_str(x); }

json poly_json(const IntPoly& p) {
    json out = json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(int_json(p.coeff(i)));
    return out;
}

json matrix_json(const IntMatrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_json(m.at(i, j)));
        out.push_back(row);
    }
    return out;
}

json ratvec_json(const RatVector& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rat_json(x));
    return out;
}

json algebraic_json(const AlgebraicNumber& a) {
    json out;
    out["minpoly"] = poly_json(a.field()->minpoly());
    out["coords"] = ratvec_json(a.coords());
    RatInterval iv = a.enclosure(kApproxWidth);
    out["approx"] = fixed_double(a.approx());
    out["interval_width"] = fixed_double(to_double(Rat(iv.hi - iv.lo)));
    return out;
}

AlgebraicNumber algebraic_from_json(const json& j, const FieldPtr& field) {
    RatVector coords;
    for (const auto& c : j.at("coords")) coords.push_back(rat_from_str(c));
    return AlgebraicNumber(field, std::move(coords));
}

json word_json(const Substitution& s, const Word& w) { return s.word_str(w); }

json perron_json(const Substitution& s, const PerronData& pd) {
    json out;
    out["minpoly"] = poly_json(pd.q);
    out["lambda"] = algebraic_json(pd.lambda);
    out["lengths"] = json::object();
    out["letter_frequencies"] = json::object();
    for (int l = 0; l < s.size(); ++l) {
        out["lengths"][s.alphabet[l]] = algebraic_json(pd.lengths[l]);
        out["letter_frequencies"][s.alphabet[l]] =
            algebraic_json(pd.letter_freqs[l]);
    }
    out["second_modulus_interval"] =
        json::array({rat_json(pd.lambda2_modulus_interval.lo),
                     rat_json(pd.lambda2_modulus_interval.hi)});
    return out;
}

json cohomology_json(const CohomologyPresentation& pres) {
    json out;
    out["collar_radius"] = pres.bs.radius;
    out["collared_letters"] = static_cast<int>(pres.bs.letters.size());
    out["graph_vertices"] = pres.graph.vertices;
    out["graph_edges"] = static_cast<int>(pres.graph.tail.size());
    out["h1_dim"] = pres.graph.h1_dim();
    out["rank"] = pres.k;
    out["action"] = matrix_json(pres.a);
    out["p"] = poly_json(pres.p);
    out["q"] = poly_json(pres.q);
    out["r"] = poly_json(pres.r);
    if (pres.witness) {
        out["reduced_resultant"] = int_json(pres.witness->d);
        out["bezout_q"] = poly_json(pres.witness->q_mul);
        out["bezout_r"] = poly_json(pres.witness->r_mul);
    } else {
        out["reduced_resultant"] = nullptr;
    }
    out["resultant"] = int_json(resultant(pres.q, pres.r));
    return out;
}

json certificate_json(const Substitution& s, const RegularityCertificate& cert) {
    json out;
    out["patch"] = word_json(s, cert.patch);
    out["coefficients"] = ratvec_json(cert.coefficients);
    out["collar_radius"] = cert.collar_radius;
    out["error_bound"] = rat_json(cert.error_bound);
    out["bounded"] = cert.bounded_ok;
    out["boundary_determined"] = cert.boundary_map_checked;
    return out;
}

json frequency_form_json(const FrequencyForm& form) {
    json out;
    out["u"] = poly_json(form.u);
    out["n"] = form.n;
    out["return_length"] = algebraic_json(form.l);
    out["reduced_resultant"] = int_json(form.d);
    out["qprime_at_lambda"] = algebraic_json(form.qprime_at_lambda);
    return out;
}

json convergence_json(const Substitution& s, const ConvergenceReport& rep) {
    json out;
    out["patch"] = word_json(s, rep.patch);
    out["seed"] = rep.seed;
    out["theoretical_gamma"] = fixed_double(rep.theoretical_gamma);
    out["fitted_exponent"] = fixed_double(rep.fitted_exponent);
    out["envelope_constant"] = fixed_double(rep.envelope_constant);
    json table = json::array();
    for (size_t i = 0; i < rep.sizes.size(); ++i)
        table.push_back(json::array({fixed_double(rep.sizes[i]),
                                     fixed_double(rep.deviations[i])}));
    out["deviations"] = table;
    return out;
}

} // namespace tilecoh
