#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftlab/budget.hpp"
#include "shiftlab/ideal.hpp"

namespace shiftlab {

/// A monomial prime (x_i : i in variables); indices 0-based, sorted.
struct MonomialPrime {
    std::vector<std::size_t> variables;

    friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
        return a.variables == b.variables;
    }
    friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
        return a.variables < b.variables;
    }
};

MonomialIdeal prime_ideal(std::size_t vars, const MonomialPrime& p);

/// Writes a proper nonzero monomial ideal as an irredundant intersection
/// of irreducible ideals (ideals generated by pure variable powers), by
/// recursively splitting generators with mixed support and filtering
/// redundant components. The component count is capped.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     std::size_t cap = resource_caps().component_cap);

/// Associated primes of S/I: the support sets of the irredundant
/// irreducible components. Sorted.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// The v-number report: for each associated prime p the least degree of a
/// monomial witness f with (I : f) = p, the witness itself, and the
/// overall minimum. Witnesses are searched over exponent vectors bounded
/// componentwise by the generator exponents (larger exponents cannot
/// change the colon), in increasing degree.
struct VNumberReport {
    struct Entry {
        MonomialPrime prime;
        std::uint64_t v = 0;
        Monomial witness;
    };
    std::vector<Entry> primes; // sorted by prime
    std::uint64_t v = 0;       // min over primes
    Monomial witness;          // witness attaining the minimum
};

VNumberReport v_number(const MonomialIdeal& ideal);

} // namespace shiftlab
