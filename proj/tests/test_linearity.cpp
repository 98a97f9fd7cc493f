#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "shiftlab/borel.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/linear_quotients.hpp"

using namespace shiftlab;

namespace {

const FieldSpec kField = FieldSpec::gf(32003);

MonomialIdeal I(const std::string& text, std::size_t vars = 0) { return parse_ideal(text, vars); }

bool is_variable_generated(const MonomialIdeal& ideal) {
    for (const Monomial& g : ideal.gens())
        if (g.degree() != 1) return false;
    return true;
}

} // namespace

TEST_CASE("linear quotients of (x^2, xy, y^2) in the canonical order") {
    const LinearQuotientsResult r = find_linear_quotients_order(I("(x^2, x*y, y^2)"));
    REQUIRE(r.verdict == LqVerdict::found);
    REQUIRE(r.order.has_value());
    CHECK(r.order->order == I("(x^2, x*y, y^2)").gens());
    CHECK(r.order->sets[0].empty());
    CHECK(r.order->sets[1] == std::vector<std::size_t>{0});
    CHECK(r.order->sets[2] == std::vector<std::size_t>{0});
}

TEST_CASE("strongly stable ideals have linear quotients in lex order with full sets") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const Monomial u = corpus::random_monomial(rng, vars, 3);
        const MonomialIdeal ideal = borel_closure(vars, {u});
        const std::vector<Monomial> lex = corpus::pure_lex_desc(ideal);
        const auto sets = admissible_sets(ideal, lex);
        REQUIRE(sets.has_value());
        for (std::size_t j = 0; j < lex.size(); ++j) {
            std::vector<std::size_t> expected;
            for (std::size_t i = 0; i < lex[j].max_index(); ++i) expected.push_back(i);
            CHECK((*sets)[j] == expected);
        }
    }
}

TEST_CASE("backtracking finds an order when the canonical one fails") {
    const MonomialIdeal ideal = I("(x*z, y^2, y*z, z^2)");
    CHECK_FALSE(admissible_sets(ideal, ideal.gens()).has_value());
    const LinearQuotientsResult r = find_linear_quotients_order(ideal);
    REQUIRE(r.verdict == LqVerdict::found);
    CHECK(r.order->order != ideal.gens());
    CHECK(admissible_sets(ideal, r.order->order).has_value());
    for (std::size_t i = 0; i < 3; ++i)
        CHECK(hs_via_linear_quotients(ideal, *r.order, i) == hs(ideal, i, kField));
}

TEST_CASE("no linear quotients order exists for (x^2, y^2)") {
    const LinearQuotientsResult r = find_linear_quotients_order(I("(x^2, y^2)"));
    CHECK(r.verdict == LqVerdict::none_exists);
    CHECK_FALSE(r.order.has_value());
}

TEST_CASE("budget exhaustion is a distinct verdict") {
    const LinearQuotientsResult r = find_linear_quotients_order(I("(x^2, y^2)"), 1);
    CHECK(r.verdict == LqVerdict::budget_exhausted);
}

TEST_CASE("the shift formula from a linear-quotients order") {
    const MonomialIdeal m = I("(x, y, z)");
    const LinearQuotientsResult r = find_linear_quotients_order(m);
    REQUIRE(r.verdict == LqVerdict::found);
    CHECK(hs_via_linear_quotients(m, *r.order, 1) == I("(x*y, x*z, y*z)"));
    CHECK(hs_via_linear_quotients(m, *r.order, 0) == m);

    const MonomialIdeal square = I("(x^2, x*y, y^2)");
    const LinearQuotientsResult rs = find_linear_quotients_order(square);
    REQUIRE(rs.verdict == LqVerdict::found);
    CHECK(hs_via_linear_quotients(square, *rs.order, 1) == I("(x^2*y, x*y^2)"));
    CHECK(hs_via_linear_quotients(square, *rs.order, 1) == hs(square, 1, kField));
}

TEST_CASE("a non-admissible order is a contract violation") {
    const MonomialIdeal ideal = I("(x^2, x*y, y^2)");
    AdmissibleOrder bad;
    bad.order = {ideal.gens()[2], ideal.gens()[0], ideal.gens()[1]}; // y^2 first: (y^2):x^2 fails
    bad.sets.resize(3);
    CHECK_THROWS_AS(hs_via_linear_quotients(ideal, bad, 1), ContractError);
    AdmissibleOrder not_a_permutation;
    not_a_permutation.order = {ideal.gens()[0]};
    CHECK_THROWS_AS(hs_via_linear_quotients(ideal, not_a_permutation, 1), InputError);
}

TEST_CASE("generator graph") {
    const GeneratorGraph g = generator_graph(I("(x^2, x*y, y^2)"));
    REQUIRE(g.vertices.size() == 3);
    CHECK(g.edges == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

    CHECK(generator_graph(I("(x^2*y)")).edges.empty());
    CHECK(generator_graph(I("(x*y, z*w)")).edges.empty());
    CHECK_THROWS_AS(generator_graph(I("(x, y^2)")), UndefinedInputError);
}

TEST_CASE("linear relatedness via divisor-induced connectivity") {
    CHECK(is_linearly_related(I("(x^2, x*y, y^2)")));
    CHECK_FALSE(is_linearly_related(I("(x^2, y^2)")));
    CHECK(is_linearly_related(I("(x^2*y)"))); // single generator, vacuous
    CHECK_THROWS_AS(is_linearly_related(I("(x, y^2)")), UndefinedInputError);
}

TEST_CASE("first shifts of linearly related ideals stay linearly related") {
    std::mt19937 rng(103);
    int tested = 0;
    for (int trial = 0; trial < 200 && tested < 40; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const std::uint32_t degree = 2 + trial % 2;
        const MonomialIdeal ideal = corpus::random_equigenerated(rng, vars, degree, 8);
        if (!is_linearly_related(ideal)) continue;
        const MonomialIdeal first = hs(ideal, 1, kField);
        if (first.is_zero()) continue;
        ++tested;
        CHECK(is_linearly_related(first));
    }
    CHECK(tested == 40);
}

TEST_CASE("first-shift generators factor as x_i u = x_j v over the generators") {
    std::mt19937 rng(107);
    int tested = 0;
    for (int trial = 0; trial < 120 && tested < 25; ++trial) {
        const MonomialIdeal ideal = corpus::random_equigenerated(rng, 3, 2 + trial % 2, 7);
        if (!is_linearly_related(ideal)) continue;
        const MonomialIdeal first = hs(ideal, 1, kField);
        if (first.is_zero()) continue;
        ++tested;
        for (const Monomial& w : first.gens()) {
            // Count distinct variables x_i with w / x_i a minimal generator.
            std::size_t factorizations = 0;
            for (std::size_t i : w.support()) {
                const Monomial candidate = w.divide(Monomial::variable(3, i));
                for (const Monomial& u : ideal.gens())
                    if (u == candidate) ++factorizations;
            }
            CHECK(factorizations >= 2); // x_i u = x_j v with i != j
        }
    }
    CHECK(tested == 25);
}

TEST_CASE("linear quotients certify linear resolution and the shift formula") {
    std::mt19937 rng(109);
    int found = 0;
    for (int trial = 0; trial < 60 && found < 15; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const MonomialIdeal ideal = corpus::random_equigenerated(rng, vars, 2 + trial % 2, 6);
        const LinearQuotientsResult r = find_linear_quotients_order(ideal, 200000);
        if (r.verdict != LqVerdict::found) continue;
        ++found;
        CHECK(has_linear_resolution(ideal, kField));
        for (std::size_t i = 0; i < vars; ++i)
            CHECK(hs_via_linear_quotients(ideal, *r.order, i) == hs(ideal, i, kField));
    }
    CHECK(found == 15);
}

TEST_CASE("ideals with linear resolution have variable-generated restricted colons") {
    std::mt19937 rng(113);
    int tested = 0;
    for (int trial = 0; trial < 120 && tested < 20; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const MonomialIdeal ideal = corpus::random_equigenerated(rng, vars, 2, 6);
        if (ideal.gens().size() < 2 || !has_linear_resolution(ideal, kField)) continue;
        ++tested;
        for (const Monomial& u : ideal.gens()) CHECK(is_variable_generated(colon_by_rest(ideal, u)));
    }
    CHECK(tested == 20);
}

TEST_CASE("colon by the rest of the generators") {
    CHECK(colon_by_rest(I("(x^2, x*y, y^2)"), parse_ideal("(x*y)").gens().front()) == I("(x, y)"));
    CHECK(colon_by_rest(I("(x^2, y^2)"), parse_ideal("(x^2)", 2).gens().front()) == I("(y^2)", 2));
    CHECK_THROWS_AS(colon_by_rest(I("(x^2, y^2)"), parse_ideal("(x*y)").gens().front()), InputError);
    CHECK_THROWS_AS(colon_by_rest(I("(x^2)", 2), parse_ideal("(x^2)", 2).gens().front()), InputError);
}

TEST_CASE("first shifts of powers of strongly stable samples keep linear quotients") {
    std::mt19937 rng(127);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t vars = 2 + trial % 2;
        const MonomialIdeal ideal = borel_closure(vars, {corpus::random_monomial(rng, vars, 2)});
        for (std::uint32_t k = 1; k <= 3; ++k) {
            const MonomialIdeal first = hs(power(ideal, k), 1, kField);
            if (first.is_zero()) continue;
            CHECK(find_linear_quotients_order(first).verdict == LqVerdict::found);
        }
    }
}

// Open probe, not an assertion: scan equigenerated ideals with linear
// resolution for a first shift without linear resolution or quotients.
// Candidates are printed for inspection; none are expected.
TEST_CASE("probe: linear resolution passing to the first shift") {
    std::mt19937 rng(131);
    int candidates = 0;
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t vars = 2 + trial % 3;
        const MonomialIdeal ideal = corpus::random_equigenerated(rng, vars, 2 + trial % 2, 6);
        if (!has_linear_resolution(ideal, kField)) continue;
        const MonomialIdeal first = hs(ideal, 1, kField);
        if (first.is_zero()) continue;
        const bool first_linear = has_linear_resolution(first, kField);
        const bool first_quotients = find_linear_quotients_order(first).verdict == LqVerdict::found;
        if (!first_linear || !first_quotients) {
            ++candidates;
            MESSAGE("candidate: ", to_string(ideal), " first shift ", to_string(first),
                    " linear=", first_linear, " quotients=", first_quotients);
        }
    }
    WARN(candidates == 0);
}
