#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shiftlab/graph.hpp"
#include "shiftlab/monomial.hpp"

namespace shiftlab {

/// A monomial ideal, represented by its unique minimal generating set.
///
/// Invariants: the generators form an antichain under divisibility and are
/// kept in canonical order, so two ideals are equal iff their generator
/// vectors are equal. The zero ideal has no generators; the unit ideal is
/// generated by 1. Values are immutable after construction.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t vars) { return MonomialIdeal(vars, {}); }

    static MonomialIdeal unit(std::size_t vars) {
        return MonomialIdeal(vars, {Monomial::one(vars)});
    }

    /// Builds the ideal generated by `gens`, minimizing to the divisibility
    /// antichain. Every monomial must have length `vars`.
    static MonomialIdeal make(std::size_t vars, std::vector<Monomial> gens);

    /// Hot-path constructor for callers that already hold a divisibility
    /// antichain (sorted canonically here, but not re-minimized).
    static MonomialIdeal from_antichain(std::size_t vars, std::vector<Monomial> gens);

    std::size_t vars() const { return vars_; }
    const std::vector<Monomial>& gens() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }

    /// Membership: true iff some generator divides m.
    bool contains(const Monomial& m) const;

    /// Ideal inclusion: other is a subset of this ideal.
    bool contains(const MonomialIdeal& other) const;

    /// A compact text key identifying (vars, generators); used as cache key.
    std::string key() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.vars_ == b.vars_ && a.gens_ == b.gens_;
    }
    friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

private:
    MonomialIdeal(std::size_t vars, std::vector<Monomial> gens)
        : vars_(vars), gens_(std::move(gens)) {}

    std::size_t vars_ = 0;
    std::vector<Monomial> gens_; // canonical order, divisibility antichain
};

/// Reduces a set of monomials to the divisibility antichain generating the
/// same ideal. Idempotent and independent of the input order.
std::vector<Monomial> minimize(std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);

/// I^k, with I^0 = S.
MonomialIdeal power(const MonomialIdeal& ideal, std::uint32_t k);

/// Colon by a monomial: (I : m) = ( g / gcd(g, m) : g in G(I) ).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);

/// Colon by an ideal: intersection of (I : h) over the generators h of J.
/// J must be nonzero.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// The maximal ideal (x_1, ..., x_n).
MonomialIdeal maximal_ideal(std::size_t vars);

struct SocleResult {
    MonomialIdeal ideal;
    /// Set when (I : m) produced the generator 1, i.e. the result is the
    /// unit ideal (happens e.g. for the maximal ideal itself or principal
    /// ideals in one variable).
    bool degenerate = false;
};

/// soc(I): the ideal generated by the minimal generators of (I : m) that
/// do not lie in I, where m is the maximal ideal. These are exactly the
/// monomials u outside I with x_j u in I for every j. I must be a proper
/// nonzero ideal.
SocleResult socle(const MonomialIdeal& ideal);

MonomialIdeal edge_ideal(const Graph& g);

/// Intersection of the primes (x_i, x_j) over the edges; generated by the
/// minimal vertex covers. An edgeless graph yields the unit ideal (the
/// empty cover suffices).
MonomialIdeal cover_ideal(const Graph& g);

struct Shape {
    std::uint64_t alpha = 0; // initial degree: least generator degree
    bool equigenerated = false;
    std::vector<std::size_t> support; // union of generator supports, 0-based
};

/// Initial degree / equigeneration / support. Rejects the zero and the
/// unit ideal.
Shape shape(const MonomialIdeal& ideal);

} // namespace shiftlab
