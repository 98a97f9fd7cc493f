#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "corpus.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/ideal.hpp"
#include "shiftlab/io.hpp"

using namespace shiftlab;

namespace {

MonomialIdeal I(const std::string& text, std::size_t vars = 0) { return parse_ideal(text, vars); }

Monomial mono(const std::string& text, std::size_t vars = 0) {
    return parse_ideal("(" + text + ")", vars).gens().front();
}

/// Membership by direct divisor scan, written independently of
/// MonomialIdeal::contains.
bool brute_contains(const MonomialIdeal& ideal, const Monomial& m) {
    for (const Monomial& g : ideal.gens()) {
        bool div = true;
        for (std::size_t i = 0; i < m.vars(); ++i)
            if (g[i] > m[i]) div = false;
        if (div) return true;
    }
    return false;
}

} // namespace

TEST_CASE("minimize removes divisible and duplicate generators") {
    CHECK(I("(x^2, x^3, x*y)") == I("(x^2, x*y)"));
    CHECK(I("()", 2).is_zero());
    CHECK(I("(x^2, x*y, y*x, y^2)") == I("(x^2, x*y, y^2)"));
    CHECK(I("(x^2, x*y)").gens().size() == 2);
}

TEST_CASE("minimize is idempotent and order independent") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Monomial> gens;
        for (int t = 0; t < 8; ++t) gens.push_back(corpus::random_monomial(rng, 3, 4));
        std::vector<Monomial> once = minimize(gens);
        CHECK(minimize(once) == once);
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(minimize(gens) == once);
    }
}

TEST_CASE("generators are kept in canonical order") {
    const MonomialIdeal ideal = I("(y^2, x*y, x^2)");
    const auto& gens = ideal.gens();
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == mono("x^2", 2));
    CHECK(gens[1] == mono("x*y"));
    CHECK(gens[2] == mono("y^2", 2));
}

TEST_CASE("membership") {
    const MonomialIdeal ideal = I("(x^2, y^2, x*y*z)");
    CHECK(ideal.contains(mono("x*y^2", 3)));
    CHECK_FALSE(ideal.contains(mono("x*y", 3)));
    CHECK_FALSE(MonomialIdeal::zero(3).contains(mono("x*y", 3)));
    CHECK_THROWS_AS((void)ideal.contains(mono("x*y")), AmbientMismatchError);
}

TEST_CASE("membership agrees with divisor brute force on low degrees") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const MonomialIdeal ideal = corpus::random_ideal(rng, 3, 5, 3);
        for (Exponent a = 0; a <= 4; ++a)
            for (Exponent b = 0; b <= 4; ++b)
                for (Exponent c = 0; c <= 4; ++c) {
                    const Monomial m{std::vector<Exponent>{a, b, c}};
                    CHECK(ideal.contains(m) == brute_contains(ideal, m));
                }
    }
}

TEST_CASE("products and powers") {
    CHECK(power(I("(x, y)"), 2) == I("(x^2, x*y, y^2)"));
    CHECK(power(I("(x^2, y^2, x*y*z)"), 2) ==
          I("(x^4, x^2*y^2, y^4, x^3*y*z, x*y^3*z)"));
    const MonomialIdeal ideal = I("(x^2, y^2, x*y*z)");
    CHECK(power(ideal, 1) == ideal);
    CHECK(power(ideal, 0).is_unit());
    CHECK(power(MonomialIdeal::zero(2), 0).is_unit());
}

TEST_CASE("power additivity on random ideals") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 12; ++trial) {
        const MonomialIdeal ideal = corpus::random_ideal(rng, 3, 5, 3);
        for (std::uint32_t a = 0; a <= 3; ++a)
            for (std::uint32_t b = 0; a + b <= 6 && b <= 3; ++b)
                CHECK(multiply(power(ideal, a), power(ideal, b)) == power(ideal, a + b));
    }
}

TEST_CASE("exponent overflow is detected") {
    const Monomial big{std::vector<Exponent>{4000000000u}};
    CHECK_THROWS_AS((void)big.times(big), OverflowError);
}

TEST_CASE("colon by monomials and ideals") {
    const MonomialIdeal ideal = I("(x^2, y^2, x*y*z)");
    CHECK(colon(ideal, mono("x*y", 3)) == I("(x, y, z)"));
    CHECK(colon(ideal, mono("1", 3)) == ideal);
    CHECK(colon(ideal, maximal_ideal(3)) == I("(x^2, x*y, y^2)", 3));
    CHECK_THROWS_AS(colon(ideal, MonomialIdeal::zero(3)), UndefinedInputError);
}

TEST_CASE("colon agrees with the membership definition, including on powers") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 15; ++trial) {
        const std::uint32_t k = 1 + trial % 4;
        const MonomialIdeal ideal = power(corpus::random_ideal(rng, 3, 4, 2), k);
        const Monomial m = corpus::random_monomial(rng, 3, 2, false);
        const MonomialIdeal quotient = colon(ideal, m);
        for (const Monomial& g : quotient.gens()) CHECK(ideal.contains(g.times(m)));
        const Exponent bound = static_cast<Exponent>(2 * k + 2);
        for (Exponent a = 0; a <= bound; ++a)
            for (Exponent b = 0; b <= bound; ++b)
                for (Exponent c = 0; c <= bound; ++c) {
                    const Monomial f{std::vector<Exponent>{a, b, c}};
                    CHECK(quotient.contains(f) == ideal.contains(f.times(m)));
                }
    }
}

TEST_CASE("single-variable colons of the running example") {
    const MonomialIdeal J = I("(x^2, y^2, x*y*z)");
    CHECK(colon(J, mono("x", 3)) == I("(x, y^2, y*z)"));
    CHECK(colon(J, mono("y", 3)) == I("(y, x^2, x*z)"));
    CHECK(colon(J, mono("z", 3)) == I("(x^2, x*y, y^2)", 3));
}

TEST_CASE("colon identity probe on the running three-variable example") {
    // J^k : (x_i) = J^{k-1} (J : (x_i)) holds on this family; probed as a
    // consistency check, never used as a shortcut anywhere.
    const MonomialIdeal J = I("(x^2, y^2, x*y*z)");
    for (std::uint32_t k = 1; k <= 4; ++k)
        for (std::size_t i = 0; i < 3; ++i) {
            const Monomial xi = Monomial::variable(3, i);
            CHECK(colon(power(J, k), xi) == multiply(power(J, k - 1), colon(J, xi)));
        }
    // Consequently J^k : m = J^{k-1} (x, y)^2 = (x, y)^{2k} inside K[x,y,z].
    const MonomialIdeal xy = I("(x, y)", 3);
    for (std::uint32_t k = 1; k <= 4; ++k) {
        const MonomialIdeal quotient = colon(power(J, k), maximal_ideal(3));
        CHECK(quotient == multiply(power(J, k - 1), power(xy, 2)));
        CHECK(quotient == power(xy, 2 * k));
    }
}

TEST_CASE("intersection") {
    CHECK(intersect(I("(x)", 2), I("(y)", 2)) == I("(x*y)"));
    const MonomialIdeal ideal = I("(x, y)");
    CHECK(intersect(ideal, ideal) == ideal);
    CHECK(intersect(I("(x^2, x*y)"), I("(y)", 2)) == I("(x*y)"));
    CHECK(intersect(MonomialIdeal::zero(2), ideal).is_zero());
    CHECK(intersect(MonomialIdeal::unit(2), ideal) == ideal);
}

TEST_CASE("socle of the running example and of maximal-ideal powers") {
    CHECK(socle(I("(x^2, y^2, x*y*z)")).ideal == I("(x*y)", 3));
    for (std::size_t n = 2; n <= 4; ++n)
        for (std::uint32_t k = 1; k <= 5; ++k) {
            const SocleResult s = socle(power(maximal_ideal(n), k));
            CHECK(s.ideal == power(maximal_ideal(n), k - 1));
            CHECK(s.degenerate == (k == 1));
        }
}

TEST_CASE("degenerate socle and rejected inputs") {
    const SocleResult s = socle(I("(x)", 1));
    CHECK(s.degenerate);
    CHECK(s.ideal.is_unit());
    CHECK_THROWS_AS(socle(MonomialIdeal::zero(2)), UndefinedInputError);
    CHECK_THROWS_AS(socle(MonomialIdeal::unit(2)), UndefinedInputError);
}

TEST_CASE("edge and cover ideals") {
    const Graph path = Graph::make(3, {{0, 1}, {1, 2}});
    CHECK(edge_ideal(path) == I("(x1*x2, x2*x3)"));
    const Graph triangle = Graph::make(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(cover_ideal(triangle) == I("(x1*x2, x1*x3, x2*x3)"));
    const Graph single = Graph::make(2, {{0, 1}});
    CHECK(edge_ideal(single) == I("(x1*x2)"));
    CHECK(edge_ideal(Graph::make(3, {})).is_zero());
    CHECK(cover_ideal(Graph::make(3, {})).is_unit());
    CHECK_THROWS_AS(Graph::make(2, {{0, 0}}), InputError);
}

TEST_CASE("shape") {
    Shape s = shape(I("(x^2, y^2, x*y*z)"));
    CHECK(s.alpha == 2);
    CHECK_FALSE(s.equigenerated);
    CHECK(s.support == std::vector<std::size_t>{0, 1, 2});

    s = shape(power(I("(x, y)"), 3));
    CHECK(s.alpha == 3);
    CHECK(s.equigenerated);

    s = shape(I("(x1, x2*x3)"));
    CHECK(s.alpha == 1);
    CHECK_FALSE(s.equigenerated);

    CHECK_THROWS_AS(shape(MonomialIdeal::zero(2)), UndefinedInputError);
    CHECK_THROWS_AS(shape(MonomialIdeal::unit(2)), UndefinedInputError);
}
