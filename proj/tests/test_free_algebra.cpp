#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpa/random.hpp"
#include "test_util.hpp"

using namespace lpat;

TEST_CASE("multiplication is concatenation or zero") {
    Quiver q = load("a2.quiver");
    Field f = kRationals;
    Element e1 = parse_q(q, "e(v1)");
    Element e2 = parse_q(q, "e(v2)");
    Element a = parse_q(q, "a");

    CHECK(multiply(e1, e2).is_zero());
    CHECK(multiply(a, e1) == a);
    CHECK(multiply(e2, a) == a);
    CHECK(multiply(a, e2).is_zero());
    CHECK(multiply(e1, a).is_zero());
    CHECK(multiply(e1, e1) == e1);
}

TEST_CASE("bilinearity in rose2, no relations applied") {
    Quiver q = load("rose2.quiver");
    Element lhs = multiply(parse_q(q, "a + b"), parse_q(q, "a'"));
    Element rhs = parse_q(q, "a * a' + b * a'");
    CHECK(lhs == rhs);
    CHECK(lhs.num_terms() == 2);  // free words, aa' does not collapse
}

TEST_CASE("local unit action") {
    Quiver q = load("a2.quiver");
    auto v1 = *q.vertex("v1");
    auto v2 = *q.vertex("v2");
    SUBCASE("an arrow is absorbed at its endpoints") {
        auto [l, r] = local_unit_action(parse_q(q, "a"));
        CHECK(l == std::set<std::uint32_t>{v2});
        CHECK(r == std::set<std::uint32_t>{v1});
    }
    SUBCASE("an idempotent absorbs itself") {
        auto [l, r] = local_unit_action(parse_q(q, "e(v1)"));
        CHECK(l == std::set<std::uint32_t>{v1});
        CHECK(r == std::set<std::uint32_t>{v1});
    }
    SUBCASE("supports accumulate over terms") {
        Element x = parse_q(q, "a + e(v1)");
        auto [l, r] = local_unit_action(x);
        CHECK(l == std::set<std::uint32_t>{v1, v2});
        CHECK(r == std::set<std::uint32_t>{v1});
        // the defining identity
        Element left_units(q, kRationals), right_units(q, kRationals);
        for (auto v : l) left_units = left_units + Element::idempotent(q, kRationals, v);
        for (auto v : r) right_units = right_units + Element::idempotent(q, kRationals, v);
        CHECK(multiply(left_units, x) == x);
        CHECK(multiply(x, right_units) == x);
    }
}

TEST_CASE("degree split") {
    Quiver q = load("rose2.quiver");
    SUBCASE("a + a' splits into degrees 1 and -1") {
        auto parts = degree_split(parse_q(q, "a + a'"));
        REQUIRE(parts.size() == 2);
        CHECK(parts.at(1) == parse_q(q, "a"));
        CHECK(parts.at(-1) == parse_q(q, "a'"));
    }
    SUBCASE("idempotents have degree 0") {
        auto parts = degree_split(parse_q(q, "e(v)"));
        REQUIRE(parts.size() == 1);
        CHECK(parts.count(0) == 1);
    }
    SUBCASE("a' * b has degree 0") {
        auto parts = degree_split(parse_q(q, "a' * b"));
        REQUIRE(parts.size() == 1);
        CHECK(parts.count(0) == 1);
    }
}

TEST_CASE("associativity, units and grading on random elements") {
    for (const char* name : {"rose2.quiver", "a3.quiver", "sink_pair.quiver"}) {
        Quiver q = load(name);
        Field f = kRationals;
        Sampler s(q, f, 42);
        for (int iter = 0; iter < 50; ++iter) {
            Element x = s.element(), y = s.element(), z = s.element();
            CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
            CHECK(multiply(x, y + z) == multiply(x, y) + multiply(x, z));

            // e_{t(w)} w = w = w e_{s(w)} monomial-wise
            for (const auto& [w, c] : x.terms()) {
                Element mono = Element::monomial(q, f, w, c);
                CHECK(multiply(Element::idempotent(q, f, w.dst), mono) == mono);
                CHECK(multiply(mono, Element::idempotent(q, f, w.src)) == mono);
            }

            // homogeneous parts multiply into the expected degree
            for (const auto& [dx, px] : degree_split(x))
                for (const auto& [dy, py] : degree_split(y)) {
                    Element prod = multiply(px, py);
                    if (prod.is_zero()) continue;
                    auto parts = degree_split(prod);
                    CHECK(parts.size() == 1);
                    CHECK(parts.count(dx + dy) == 1);
                }

            // degree_split reassembles
            Element sum(q, f);
            for (const auto& [d, p] : degree_split(x)) sum = sum + p;
            CHECK(sum == x);
        }
    }
}

TEST_CASE("ghost-free elements are closed under multiplication") {
    Quiver q = load("a3.quiver");
    Element x = parse_q(q, "b * a + e(v1)");
    Element y = parse_q(q, "a + e(v3)");
    for (const auto& [w, c] : multiply(x, y).terms())
        for (Letter l : w.letters) CHECK(!l.ghost);
}
