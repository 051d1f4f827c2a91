#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tilecoh/cohomology.hpp"
#include "tilecoh/polyroots.hpp"

using namespace tilecoh;

namespace {

const char* kThueMorse = "a -> a b\nb -> b a\n";
const char* kFibVariant = "a -> b a a a b\nb -> a b a\n";

Substitution power(const Substitution& s, int k) {
    Substitution out = s;
    for (int step = 1; step < k; ++step) {
        std::vector<std::vector<int>> next;
        for (int l = 0; l < s.size(); ++l) {
            std::vector<int> image;
            for (int m : out.rules[l])
                image.insert(image.end(), s.rules[m].begin(), s.rules[m].end());
            next.push_back(std::move(image));
        }
        out.rules = std::move(next);
    }
    return out;
}

Word w(const Substitution& s, const std::string& letters) {
    Word out;
    for (char c : letters) out.push_back(s.letter(std::string(1, c)));
    return out;
}

std::vector<Int> eigenvalue_list(const IntMatrix& m) {
    // Integer roots of the characteristic polynomial, with multiplicity.
    std::vector<Int> out;
    for (const auto& [f, mult] : factor_irreducible(charpoly(m)))
        if (f.degree() == 1 && f.leading() == 1)
            for (int i = 0; i < mult; ++i) out.push_back(-f.coeff(0));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("graph of the single-loop substitution") {
    Substitution s = parse_substitution("a -> a a\n");
    BlockSystem bs = collar(s, 1);
    APGraph g = build_ap_graph(bs);
    CHECK(g.vertices == 1);
    CHECK(g.tail.size() == 1);
    CHECK(g.h1_dim() == 1);
    IntMatrix a0 = h1_action(bs, g);
    CHECK(a0 == IntMatrix::from_rows({{2}}));
    CohomologyPresentation pres = make_presentation(s, 1);
    CHECK(pres.k == 1);
    CHECK(pres.p == IntPoly({-2, 1}));
    CHECK(pres.q == IntPoly({-2, 1}));
    CHECK(pres.r == IntPoly({1}));
    REQUIRE(pres.witness.has_value());
    CHECK(pres.witness->d == 1);
}

TEST_CASE("graph structure for the doubling example") {
    Substitution s = parse_substitution(kThueMorse);
    BlockSystem bs = collar(s, 1);
    APGraph g = build_ap_graph(bs);
    // Connected, with enough independent loops to carry rank 2.
    CHECK(static_cast<int>(g.tail.size()) - g.vertices + 1 == g.h1_dim());
    CHECK(g.h1_dim() >= 2);
}

TEST_CASE("presentation of the doubling example") {
    CohomologyPresentation pres = make_presentation(parse_substitution(kThueMorse), 1);
    CHECK(pres.k == 2);
    auto eig = eigenvalue_list(pres.a);
    CHECK(eig == std::vector<Int>{Int(-1), Int(2)});
    CHECK(pres.p == IntPoly({-2, -1, 1}));  // (x-2)(x+1)
    CHECK(pres.q == IntPoly({-2, 1}));
    CHECK(pres.r == IntPoly({1, 1}));
    REQUIRE(pres.witness.has_value());
    CHECK(pres.witness->d == 3);
}

TEST_CASE("presentation of the fourth-power example") {
    Substitution phi2 = power(parse_substitution(kThueMorse), 4);
    CohomologyPresentation pres = make_presentation(phi2, 1);
    CHECK(pres.k == 2);
    auto eig = eigenvalue_list(pres.a);
    CHECK(eig == std::vector<Int>{Int(1), Int(16)});
    CHECK(pres.q == IntPoly({-16, 1}));
    CHECK(pres.r == IntPoly({-1, 1}));
    REQUIRE(pres.witness.has_value());
    CHECK(pres.witness->d == 15);
}

TEST_CASE("presentation of the sixteen-fold example") {
    Substitution s = parse_substitution(
        "a -> a a a a a a a a b b b b b b b b\n"
        "b -> a a a a a a a b b b b b b b b b\n");
    CohomologyPresentation pres = make_presentation(s, 1);
    CHECK(pres.k == 2);
    CHECK(pres.q == IntPoly({-16, 1}));
}

TEST_CASE("presentation of the quadratic example") {
    CohomologyPresentation pres = make_presentation(parse_substitution(kFibVariant), 1);
    CHECK(pres.k == 3);
    CHECK(pres.q == IntPoly({-1, -4, 1}));
    CHECK(pres.p.degree() == 3);
    CHECK(pres.r.degree() == 1);
    REQUIRE(pres.witness.has_value());
    CHECK(pres.witness->d == 4);
}

TEST_CASE("rank is stable under larger collars") {
    for (const char* text : {kThueMorse, kFibVariant}) {
        Substitution s = parse_substitution(text);
        int k1 = make_presentation(s, 1).k;
        for (int m : {2, 3}) CHECK(make_presentation(s, m).k == k1);
    }
}

TEST_CASE("Bezout identity for the restricted action") {
    for (const char* text : {kThueMorse, kFibVariant}) {
        CohomologyPresentation pres = make_presentation(parse_substitution(text), 1);
        REQUIRE(pres.witness.has_value());
        IntMatrix qa = eval_poly_at(pres.q, pres.a);
        IntMatrix ra = eval_poly_at(pres.r, pres.a);
        IntMatrix lhs = eval_poly_at(pres.witness->q_mul, pres.a) * qa +
                        eval_poly_at(pres.witness->r_mul, pres.a) * ra;
        IntMatrix expect(pres.k, pres.k);
        for (int i = 0; i < pres.k; ++i) expect.at(i, i) = pres.witness->d;
        CHECK(lhs == expect);
        // p(A) = 0 and dim ker q(A) = deg q.
        CHECK(eval_poly_at(pres.p, pres.a).is_zero());
        RatMatrix qam(pres.k, pres.k);
        for (int i = 0; i < pres.k; ++i)
            for (int j = 0; j < pres.k; ++j) qam.at(i, j) = Rat(qa.at(i, j));
        CHECK(pres.k - qam.rank() == pres.q.degree());
    }
}

TEST_CASE("patch classes of the doubling example") {
    Substitution s = parse_substitution(kThueMorse);
    CohomologyPresentation pres = make_presentation(s, 6);
    CHECK(pres.k == 2);
    PatchClass ab = patch_class(w(s, "ab"), pres);
    PatchClass aa = patch_class(w(s, "aa"), pres);
    // Independent classes.
    CHECK(ab.coords[0] * aa.coords[1] - ab.coords[1] * aa.coords[0] != 0);
    // The six-letter patch decomposes as (ab - aa) / 2 in cohomology.
    PatchClass p3 = patch_class(w(s, "aababb"), pres);
    for (int i = 0; i < 2; ++i)
        CHECK(p3.coords[i] == (ab.coords[i] - aa.coords[i]) / 2);
}

TEST_CASE("patch classes are order-independent (naturality)") {
    for (const char* text : {kThueMorse, kFibVariant}) {
        Substitution s = parse_substitution(text);
        CohomologyPresentation pres = make_presentation(s, 3);
        for (const auto& p : factors(s, 3)) {
            int n0 = min_order_for_length(s, 3);
            auto v0 = anchored_count_vector(p, pres.bs, n0);
            auto v1 = anchored_count_vector(p, pres.bs, n0 + 1);
            CHECK(pres.class_of_counts(v0.values, n0) ==
                  pres.class_of_counts(v1.values, n0 + 1));
        }
    }
}

TEST_CASE("patch class requires a wide enough collar") {
    Substitution s = parse_substitution(kThueMorse);
    CohomologyPresentation pres = make_presentation(s, 2);
    CHECK_THROWS_AS(patch_class(w(s, "aab"), pres), error);
}
