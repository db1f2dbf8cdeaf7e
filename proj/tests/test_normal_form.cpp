#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpa/random.hpp"
#include "test_util.hpp"

using namespace lpat;

namespace {

// test-only normalizer that picks redexes in randomized order
Element randomized_normal_form(const Element& x, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    return normal_form_with_chooser(
        x, [&g](const std::vector<Redex>& rs) { return g() % rs.size(); });
}

}  // namespace

TEST_CASE("cuntz-krieger rewriting on rose2") {
    Quiver q = load("rose2.quiver");
    CHECK(normal_form(parse_q(q, "a * b'")).is_zero());
    CHECK(normal_form(parse_q(q, "a * a'")) == parse_q(q, "e(v)"));
    CHECK(normal_form(parse_q(q, "a' * a")) == parse_q(q, "e(v) - b' * b"));
    // non-special pairs are irreducible
    CHECK(normal_form(parse_q(q, "b' * b")) == parse_q(q, "b' * b"));
}

TEST_CASE("a2 collapses to the 4-dimensional matrix algebra") {
    Quiver q = load("a2.quiver");
    CHECK(normal_form(parse_q(q, "a' * a")) == parse_q(q, "e(v1)"));
    CHECK(normal_form(parse_q(q, "a * a'")) == parse_q(q, "e(v2)"));
    auto basis = full_basis(q);
    CHECK(basis.size() == 4);
}

TEST_CASE("loop quiver: both relations collapse, L is Laurent") {
    Quiver q = load("loop.quiver");
    CHECK(normal_form(parse_q(q, "a' * a")) == parse_q(q, "e(v)"));
    CHECK(normal_form(parse_q(q, "a * a'")) == parse_q(q, "e(v)"));
}

TEST_CASE("leavitt_equal") {
    Quiver q = load("rose2.quiver");
    CHECK(leavitt_equal(parse_q(q, "a' * a + b' * b"), parse_q(q, "e(v)")));
    Element x = parse_q(q, "a * b + 2 * e(v)");
    CHECK(leavitt_equal(x, x));
    Quiver a2 = load("a2.quiver");
    CHECK(!leavitt_equal(parse_q(a2, "a"), parse_q(a2, "a'")));
}

TEST_CASE("basis_up_to") {
    SUBCASE("loop quiver has 2N+1 monomials") {
        Quiver q = load("loop.quiver");
        for (std::size_t n = 0; n <= 6; ++n) CHECK(basis_up_to(q, n).size() == 2 * n + 1);
        auto b2 = basis_up_to(q, 2);
        std::vector<std::string> printed;
        for (const Word& w : b2) printed.push_back(print_word(q, w));
        CHECK(printed == std::vector<std::string>{"e(v)", "a", "a'", "a * a", "a' * a'"});
    }
    SUBCASE("a2 at N=2 is the full basis of M_2") {
        Quiver q = load("a2.quiver");
        auto b = basis_up_to(q, 2);
        std::vector<std::string> printed;
        for (const Word& w : b) printed.push_back(print_word(q, w));
        CHECK(printed == std::vector<std::string>{"e(v1)", "e(v2)", "a", "a'"});
    }
    SUBCASE("N=0 gives the vertex idempotents") {
        for (const char* name : {"rose3.quiver", "two_a2.quiver"}) {
            Quiver q = load(name);
            CHECK(basis_up_to(q, 0).size() == q.num_vertices());
        }
    }
}

TEST_CASE("relations normalize to zero and basis monomials are irreducible") {
    for (const char* name :
         {"a2.quiver", "a3.quiver", "loop.quiver", "rose2.quiver", "rose3.quiver",
          "sink_pair.quiver", "two_a2.quiver"}) {
        Quiver q = load(name);
        for (const Element& t : cuntz_krieger_relations(q, kRationals))
            CHECK(normal_form(t).is_zero());
        for (const Word& w : basis_up_to(q, 6)) CHECK(is_normal_monomial(q, w));
    }
}

TEST_CASE("normal_form is idempotent and a congruence on random elements") {
    for (const char* name : {"rose2.quiver", "a3.quiver", "sink_pair.quiver", "loop.quiver"}) {
        Quiver q = load(name);
        Sampler s(q, kRationals, 5);
        for (int iter = 0; iter < 100; ++iter) {
            Element x = s.element(), y = s.element();
            Element nx = normal_form(x);
            CHECK(normal_form(nx) == nx);
            CHECK(normal_form(multiply(x, y)) ==
                  normal_form(multiply(normal_form(x), normal_form(y))));
            // normalization stays within the enumerated basis
            for (const auto& [w, c] : nx.terms()) CHECK(is_normal_monomial(q, w));
        }
    }
}

TEST_CASE("normal_form output lies inside basis_up_to of the input length") {
    Quiver q = load("rose2.quiver");
    Sampler s(q, kRationals, 6, /*max_len=*/6);
    auto basis = basis_up_to(q, 6);
    std::set<Word> allowed(basis.begin(), basis.end());
    for (int iter = 0; iter < 200; ++iter) {
        Element nx = normal_form(s.element());
        for (const auto& [w, c] : nx.terms()) CHECK(allowed.count(w) == 1);
    }
}

TEST_CASE("rewrite order does not change the result") {
    for (const char* name : {"rose2.quiver", "rose3.quiver", "a3.quiver"}) {
        Quiver q = load(name);
        Sampler s(q, kRationals, 9);
        for (int iter = 0; iter < 200; ++iter) {
            Element x = s.element();
            Element free_sq = multiply(x, x);  // guarantees redexes
            CHECK(randomized_normal_form(free_sq, 1000 + iter) == normal_form(free_sq));
        }
    }
}

TEST_CASE("normal_form preserves the grading componentwise") {
    Quiver q = load("rose3.quiver");
    Sampler s(q, kRationals, 13);
    for (int iter = 0; iter < 100; ++iter) {
        Element x = multiply(s.element(), s.element());
        auto whole = degree_split(normal_form(x));
        for (const auto& [d, p] : degree_split(x)) {
            Element np = normal_form(p);
            if (np.is_zero())
                CHECK(whole.count(d) == 0);
            else
                CHECK(whole.at(d) == np);
        }
    }
}

TEST_CASE("fuel exhaustion is reported") {
    Quiver q = load("rose3.quiver");
    Element x = parse_q(q, "a' * a * a' * a");
    CHECK_THROWS_AS(normal_form(x, /*fuel=*/1), FuelExhausted);
    CHECK_NOTHROW(normal_form(x));
}
