#include "tilecoh/substitution.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "tilecoh/language.hpp"
#include "tilecoh/matpoly.hpp"
#include "tilecoh/polyroots.hpp"

namespace tilecoh {

int Substitution::letter(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
        if (alphabet[i] == name) return i;
    return -1;
}

std::string Substitution::word_str(const std::vector<int>& w) const {
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += alphabet[w[i]];
    }
    return out;
}

namespace {

struct Token {
    std::string text;
    int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
            ++j;
        out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
        i = j;
    }
    return out;
}

// Integer polynomial in L, e.g. "2", "L", "L^2-3*L+1", "L-1". No spaces
// (the token has already been split on whitespace).
IntPoly parse_length_poly(const std::string& t, int line_no, int base_col) {
    size_t pos = 0;
    auto fail = [&](const std::string& msg) -> IntPoly {
        throw parse_error(msg, line_no, base_col + static_cast<int>(pos));
    };
    IntPoly result;
    bool first = true;
    while (pos < t.size()) {
        int sign = 1;
        if (t[pos] == '+' || t[pos] == '-') {
            if (t[pos] == '-') sign = -1;
            ++pos;
        } else if (!first) {
            return fail("expected '+' or '-' in length polynomial");
        }
        first = false;
        bool have_coeff = false;
        Int coeff = 1;
        if (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
            coeff = 0;
            while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos]))) {
                coeff = coeff * 10 + (t[pos] - '0');
                ++pos;
            }
            have_coeff = true;
            if (pos < t.size() && t[pos] == '*') ++pos;
        }
        int exp = 0;
        if (pos < t.size() && t[pos] == 'L') {
            ++pos;
            exp = 1;
            if (pos < t.size() && t[pos] == '^') {
                ++pos;
                if (pos >= t.size() || !std::isdigit(static_cast<unsigned char>(t[pos])))
                    return fail("expected exponent after '^'");
                exp = 0;
                while (pos < t.size() && std::isdigit(static_cast<unsigned char>(t[pos])))
                    exp = exp * 10 + (t[pos++] - '0');
            }
        } else if (!have_coeff) {
            return fail("expected number or 'L' in length polynomial");
        }
        result = result + IntPoly::monomial(exp) * (coeff * sign);
    }
    if (first) fail("empty length polynomial");
    return result;
}

} // namespace

Substitution parse_substitution(const std::string& text) {
    struct RuleLine {
        int line_no;
        Token lhs;
        std::vector<Token> rhs;
        int arrow_end_col;
    };
    std::vector<RuleLine> rule_lines;
    std::optional<std::pair<int, std::vector<Token>>> lengths_line;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        if (toks[0].text == "lengths:" ||
            (toks[0].text == "lengths" && toks.size() > 1 && toks[1].text == ":")) {
            if (lengths_line)
                throw parse_error("duplicate lengths header", line_no, toks[0].col);
            std::vector<Token> vals(toks.begin() + (toks[0].text == "lengths:" ? 1 : 2),
                                    toks.end());
            if (vals.empty())
                throw parse_error("lengths header needs one value per letter", line_no,
                                  toks[0].col);
            lengths_line = {line_no, std::move(vals)};
            continue;
        }
        // Rule line: letter -> image...
        size_t arrow = std::string::npos;
        for (size_t i = 0; i < toks.size(); ++i)
            if (toks[i].text == "->") {
                arrow = i;
                break;
            }
        if (arrow == std::string::npos)
            throw parse_error("expected 'letter -> image' rule", line_no, toks[0].col);
        if (arrow != 1)
            throw parse_error("exactly one letter allowed left of '->'", line_no,
                              toks[arrow == 0 ? 0 : 2].col);
        RuleLine rl;
        rl.line_no = line_no;
        rl.lhs = toks[0];
        rl.rhs.assign(toks.begin() + 2, toks.end());
        rl.arrow_end_col = toks[1].col + 2;
        rule_lines.push_back(std::move(rl));
    }

    if (rule_lines.empty())
        throw parse_error("no rules found", line_no ? line_no : 1, 1);

    Substitution s;
    for (const auto& rl : rule_lines) {
        if (s.letter(rl.lhs.text) >= 0)
            throw parse_error("duplicate rule for letter '" + rl.lhs.text + "'",
                              rl.line_no, rl.lhs.col);
        s.alphabet.push_back(rl.lhs.text);
    }
    for (const auto& rl : rule_lines) {
        if (rl.rhs.empty())
            throw parse_error("empty image for letter '" + rl.lhs.text + "'",
                              rl.line_no, rl.arrow_end_col);
        std::vector<int> image;
        for (const auto& tok : rl.rhs) {
            int idx = s.letter(tok.text);
            if (idx < 0)
                throw parse_error("unknown letter '" + tok.text + "' in image",
                                  rl.line_no, tok.col);
            image.push_back(idx);
        }
        s.rules.push_back(std::move(image));
    }
    if (lengths_line) {
        auto& [ln, vals] = *lengths_line;
        if (static_cast<int>(vals.size()) != s.size())
            throw parse_error("lengths header has " + std::to_string(vals.size()) +
                                  " values for " + std::to_string(s.size()) + " letters",
                              ln, vals[0].col);
        std::vector<IntPoly> overrides;
        for (const auto& tok : vals)
            overrides.push_back(parse_length_poly(tok.text, ln, tok.col));
        s.length_overrides = std::move(overrides);
    }
    return s;
}

IntMatrix substitution_matrix(const Substitution& s) {
    IntMatrix m(s.size(), s.size());
    for (int j = 0; j < s.size(); ++j)
        for (int letter : s.rules[j]) m.at(letter, j) += 1;
    return m;
}

PrimitivityResult is_primitive(const Substitution& s) {
    IntMatrix m = substitution_matrix(s);
    int n = s.size();
    int bound = (n - 1) * (n - 1) + 1;  // Wielandt bound n^2 - 2n + 2
    IntMatrix p = IntMatrix::identity(n);
    for (int k = 1; k <= bound; ++k) {
        p = p * m;
        if (p.all_positive()) return {true, k};
    }
    return {false, 0};
}

bool is_proper(const Substitution& s) {
    for (int i = 1; i < s.size(); ++i) {
        if (s.rules[i].front() != s.rules[0].front()) return false;
        if (s.rules[i].back() != s.rules[0].back()) return false;
    }
    return true;
}

PerronRoot perron_root(const IntMatrix& m) {
    IntPoly cp = charpoly(m);
    auto largest = largest_real_root(cp, Rat(1, 1024));
    if (!largest)
        throw error("matrix has no real eigenvalue; not a primitive substitution matrix");
    RatInterval iv = *largest;
    auto factors = factor_irreducible(cp);
    for (const auto& [f, mult] : factors) {
        if (f.degree() < 1) continue;
        SturmChain sc(f);
        if (sc.count_roots(iv.lo, iv.hi) == 1) {
            // Shrink the interval so it isolates the root among *this factor's*
            // roots too (it already does: it isolates among all roots of cp).
            FieldPtr field;
            if (f.degree() == 1) {
                field = FieldContext::make(f, iv);
            } else {
                RatInterval tight = refine_root(f, iv, Rat(1, Int(1) << 20));
                field = FieldContext::make(f, tight);
            }
            return {f, field, AlgebraicNumber::generator(field)};
        }
    }
    throw error("internal: Perron root not matched to an irreducible factor");
}

RatInterval second_modulus_interval(const IntPoly& cp, const RatInterval& lambda_iv) {
    if (cp.degree() <= 1) return {Rat(0), Rat(0)};
    // Strip eigenvalue zero.
    IntPoly g = cp;
    bool zero_eigen = false;
    while (!g.is_zero() && g.coeff(0) == 0) {
        g = g.exact_div(IntPoly::x());
        zero_eigen = true;
    }
    // Radical (product of squarefree parts).
    IntPoly rad = IntPoly::constant(1);
    for (const auto& [part, mult] : squarefree_decomposition(g)) rad = rad * part;
    if (rad.degree() <= 0) return {Rat(0), Rat(0)};

    const Rat width(1, Int(1) << 40);
    auto real_roots = isolate_real_roots(rad);
    for (auto& iv : real_roots) iv = refine_root(rad, iv, width);
    if (real_roots.empty())
        throw error("internal: PF eigenvalue missing from characteristic polynomial");

    auto modulus_iv = [](const RatInterval& iv) -> RatInterval {
        if (iv.lo >= 0) return iv;
        if (iv.hi <= 0) return {Rat(-iv.hi), Rat(-iv.lo)};
        Rat hi = std::max(Rat(-iv.lo), iv.hi);
        return {Rat(0), hi};
    };

    // The PF root is the largest real root; drop it from the candidate set.
    std::vector<RatInterval> candidates;
    for (size_t i = 0; i + 1 < real_roots.size(); ++i)
        candidates.push_back(modulus_iv(real_roots[i]));
    if (zero_eigen) candidates.push_back({Rat(0), Rat(0)});

    if (static_cast<int>(real_roots.size()) == rad.degree()) {
        // Totally real spectrum: the second modulus is the max over candidates.
        if (candidates.empty()) return {Rat(0), Rat(0)};
        RatInterval out = candidates[0];
        for (const auto& c : candidates) {
            out.lo = std::max(out.lo, c.lo);
            out.hi = std::max(out.hi, c.hi);
        }
        return out;
    }

    // Complex eigenvalues present. The pair-product polynomial of rad has
    // |z|^2 among its real roots for every root z (taking z with its
    // conjugate); its largest real root is lambda^2 and the second largest
    // bounds the squared second modulus from above (and below, since every
    // candidate modulus squared z*zbar is a real root of it).
    IntPoly h = pair_product_poly(rad);
    IntPoly hrad = IntPoly::constant(1);
    for (const auto& [part, mult] : squarefree_decomposition(h)) hrad = hrad * part;
    auto prod_roots = isolate_real_roots(hrad);
    for (auto& iv : prod_roots) iv = refine_root(hrad, iv, width);
    if (prod_roots.size() < 2) return {Rat(0), lambda_iv.hi};

    RatInterval second = prod_roots[prod_roots.size() - 2];  // second modulus squared
    auto sqrt_upper = [](const Rat& v) -> Rat {
        if (v <= 0) return Rat(0);
        Rat s(v);  // start from v itself, then Newton-style shrink from above
        if (s < 1) s = 1;
        for (int it = 0; it < 200; ++it) {
            Rat next = (s + v / s) / 2;
            if (next * next <= v) break;
            s = next;
        }
        return s;
    };
    Rat lo(0);
    if (second.lo > 0 && lambda_iv.hi > 0) lo = second.lo / lambda_iv.hi;
    for (const auto& c : candidates) lo = std::max(lo, c.lo);
    Rat hi = sqrt_upper(std::max(second.hi, Rat(0)));
    hi = std::min(hi, lambda_iv.hi);
    return {lo, hi};
}

PerronData perron_data(const Substitution& s) {
    auto prim = is_primitive(s);
    if (!prim.primitive) throw error("substitution is not primitive");
    IntMatrix m = substitution_matrix(s);
    PerronRoot pr = perron_root(m);

    PerronData pd;
    pd.field = pr.field;
    pd.lambda = pr.lambda;
    pd.q = pr.q;

    auto normalize_sign = [](std::vector<AlgebraicNumber>& v) {
        int sg = 0;
        for (const auto& e : v) {
            sg = e.sgn();
            if (sg != 0) break;
        }
        if (sg < 0)
            for (auto& e : v) e = -e;
        for (const auto& e : v)
            if (e.sgn() <= 0) throw error("PF eigenvector not strictly positive");
    };

    // Left eigenvector (tile lengths): eigenvector of M^T.
    std::vector<AlgebraicNumber> lengths = eigenvector_for(m.transpose(), pd.lambda);
    normalize_sign(lengths);
    if (s.length_overrides) {
        std::vector<AlgebraicNumber> user;
        for (const auto& poly : *s.length_overrides)
            user.push_back(AlgebraicNumber::eval_poly(poly, pd.lambda));
        // Validate: user lengths must satisfy u M = lambda u and be positive.
        for (int j = 0; j < s.size(); ++j) {
            AlgebraicNumber acc = AlgebraicNumber::zero(pd.field);
            for (int i = 0; i < s.size(); ++i)
                acc = acc + user[i] * AlgebraicNumber::from_rational(
                                          pd.field, Rat(m.at(i, j)));
            if (acc != user[j] * pd.lambda)
                throw error("length overrides are not a left PF eigenvector");
        }
        for (const auto& u : user)
            if (u.sgn() <= 0) throw error("length overrides must be positive");
        lengths = std::move(user);
    } else {
        // Primitive Z[lambda] coordinates: clear denominators, divide by
        // the gcd of all integer coordinates.
        Int lcm_den = 1;
        for (const auto& e : lengths)
            for (const auto& c : e.coords())
                lcm_den = lcm_den / gcd_int(lcm_den, denominator(c)) * denominator(c);
        Int g = 0;
        for (const auto& e : lengths)
            for (const auto& c : e.coords())
                g = gcd_int(g, abs_int(numerator(c * Rat(lcm_den))));
        if (g == 0) throw error("internal: zero PF eigenvector");
        Rat scale(lcm_den, g);
        for (auto& e : lengths) e = e * scale;
    }
    pd.lengths = std::move(lengths);

    // Right eigenvector (letter frequencies), normalized so sum f_i l_i = 1.
    std::vector<AlgebraicNumber> freqs = eigenvector_for(m, pd.lambda);
    normalize_sign(freqs);
    AlgebraicNumber total = AlgebraicNumber::zero(pd.field);
    for (int i = 0; i < s.size(); ++i) total = total + freqs[i] * pd.lengths[i];
    for (auto& f : freqs) f = f / total;
    pd.letter_freqs = std::move(freqs);

    RatInterval lam_iv = pd.field->refined_interval(Rat(1, Int(1) << 20));
    pd.lambda2_modulus_interval = second_modulus_interval(charpoly(m), lam_iv);
    return pd;
}

PeriodicityVerdict periodicity_screen(const Substitution& s, int max_n) {
    if (max_n < 1) return PeriodicityVerdict::inconclusive;
    auto big = factors(s, max_n);
    // p(n) = number of distinct length-n blocks of the length-max_n factors.
    for (int n = 1; n <= max_n; ++n) {
        std::set<Word> blocks;
        if (n == max_n) {
            blocks = big;
        } else {
            for (const auto& w : big)
                for (size_t i = 0; i + n <= w.size(); ++i)
                    blocks.insert(Word(w.begin() + i, w.begin() + i + n));
        }
        if (static_cast<int>(blocks.size()) <= n) return PeriodicityVerdict::periodic;
    }
    return PeriodicityVerdict::aperiodic_evidence;
}

} // namespace tilecoh
