#include "shiftlab/ideal.hpp"

#include <algorithm>
#include <set>

namespace shiftlab {

namespace {

void check_same_ambient(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw AmbientMismatchError("ideals live in different ambient rings");
}

} // namespace

std::vector<Monomial> minimize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> kept;
    kept.reserve(gens.size());
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : kept)
            if (k.divides(g)) {
                redundant = true;
                break;
            }
        if (!redundant) kept.push_back(g);
    }
    return kept;
}

MonomialIdeal MonomialIdeal::make(std::size_t vars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != vars)
            throw AmbientMismatchError("generator length does not match the ambient variable count");
    return MonomialIdeal(vars, minimize(std::move(gens)));
}

MonomialIdeal MonomialIdeal::from_antichain(std::size_t vars, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != vars)
            throw AmbientMismatchError("generator length does not match the ambient variable count");
    std::sort(gens.begin(), gens.end(), canonical_less);
    return MonomialIdeal(vars, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.vars() != vars_)
        throw AmbientMismatchError("monomial length does not match the ambient variable count");
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    check_same_ambient(*this, other);
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string MonomialIdeal::key() const {
    std::string k = std::to_string(vars_) + ":";
    for (const Monomial& g : gens_) {
        for (Exponent e : g.exponents()) {
            k += std::to_string(e);
            k += ',';
        }
        k += ';';
    }
    return k;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ambient(a, b);
    std::vector<Monomial> products;
    products.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& g : a.gens())
        for (const Monomial& h : b.gens()) products.push_back(g.times(h));
    return MonomialIdeal::make(a.vars(), std::move(products));
}

MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t k) {
    if (k == 0) return MonomialIdeal::unit(ideal.vars());
    MonomialIdeal result = ideal;
    for (std::uint32_t step = 1; step < k; ++step) result = multiply(result, ideal);
    return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
    if (m.vars() != ideal.vars())
        throw AmbientMismatchError("monomial length does not match the ambient variable count");
    std::vector<Monomial> quotients;
    quotients.reserve(ideal.gens().size());
    for (const Monomial& g : ideal.gens()) quotients.push_back(g.quotient_by(m));
    return MonomialIdeal::make(ideal.vars(), std::move(quotients));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
    check_same_ambient(ideal, by);
    if (by.is_zero()) throw UndefinedInputError("colon by the zero ideal is undefined");
    bool first = true;
    MonomialIdeal result;
    for (const Monomial& h : by.gens()) {
        MonomialIdeal part = colon(ideal, h);
        result = first ? part : intersect(result, part);
        first = false;
    }
    return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    check_same_ambient(a, b);
    std::vector<Monomial> lcms;
    lcms.reserve(a.gens().size() * b.gens().size());
    for (const Monomial& g : a.gens())
        for (const Monomial& h : b.gens()) lcms.push_back(lcm(g, h));
    return MonomialIdeal::make(a.vars(), std::move(lcms));
}

MonomialIdeal maximal_ideal(std::size_t vars) {
    std::vector<Monomial> gens;
    gens.reserve(vars);
    for (std::size_t i = 0; i < vars; ++i) gens.push_back(Monomial::variable(vars, i));
    return MonomialIdeal::make(vars, std::move(gens));
}

SocleResult socle(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("socle of the zero or unit ideal is undefined");
    const MonomialIdeal quotient = colon(ideal, maximal_ideal(ideal.vars()));
    std::vector<Monomial> gens;
    bool degenerate = false;
    for (const Monomial& g : quotient.gens()) {
        if (g.is_one()) degenerate = true;
        if (!ideal.contains(g)) gens.push_back(g);
    }
    return SocleResult{MonomialIdeal::make(ideal.vars(), std::move(gens)), degenerate};
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    gens.reserve(g.edges.size());
    for (const auto& [a, b] : g.edges)
        gens.push_back(Monomial::variable(g.vertex_count, a).times(Monomial::variable(g.vertex_count, b)));
    return MonomialIdeal::make(g.vertex_count, std::move(gens));
}

MonomialIdeal cover_ideal(const Graph& g) {
    MonomialIdeal result = MonomialIdeal::unit(g.vertex_count);
    for (const auto& [a, b] : g.edges) {
        MonomialIdeal edge_prime = MonomialIdeal::make(
            g.vertex_count,
            {Monomial::variable(g.vertex_count, a), Monomial::variable(g.vertex_count, b)});
        result = intersect(result, edge_prime);
    }
    return result;
}

Shape shape(const MonomialIdeal& ideal) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("shape of the zero or unit ideal is undefined");
    Shape s;
    s.alpha = ideal.gens().front().degree(); // canonical order: least degree first
    s.equigenerated = ideal.gens().back().degree() == s.alpha;
    std::set<std::size_t> support;
    for (const Monomial& g : ideal.gens())
        for (std::size_t i : g.support()) support.insert(i);
    s.support.assign(support.begin(), support.end());
    return s;
}

} // namespace shiftlab
