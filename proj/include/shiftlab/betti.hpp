#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "shiftlab/budget.hpp"
#include "shiftlab/field.hpp"
#include "shiftlab/ideal.hpp"
#include "shiftlab/simplicial.hpp"

namespace shiftlab {

struct BettiOptions {
    /// Cap on the number of lcm-lattice elements before a resource error.
    std::size_t lattice_cap = resource_caps().lattice_cap;
};

/// The join closure of the generator multidegrees of I: every multidegree
/// with a nonzero Betti number lies here. Sorted in canonical order.
struct LcmLattice {
    std::vector<Monomial> points;
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const BettiOptions& options = {});

struct BettiEntry {
    std::size_t index = 0; // homological index i
    Monomial multidegree;
    std::size_t dim = 0;
};

/// The multigraded Betti numbers beta_{i,a}(I) of a monomial ideal over a
/// fixed field, computed one lattice point at a time from the reduced
/// homology of upper Koszul complexes. Zero entries are omitted. Entries
/// are sorted by (i, canonical multidegree order).
class BettiTable {
public:
    BettiTable(std::size_t vars, FieldSpec field, std::vector<BettiEntry> entries);

    std::size_t vars() const { return vars_; }
    const FieldSpec& field() const { return field_; }
    const std::vector<BettiEntry>& entries() const { return entries_; }

    std::size_t value(std::size_t index, const Monomial& multidegree) const;

    /// Multidegrees with a nonzero entry at homological index i.
    std::vector<Monomial> multidegrees(std::size_t index) const;

    /// Graded Betti numbers: (i, total degree j) -> dim.
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded() const;

    std::size_t projective_dimension() const; // max i with a nonzero entry
    std::uint64_t regularity() const;         // max (|a| - i) over entries

private:
    std::size_t vars_;
    FieldSpec field_;
    std::vector<BettiEntry> entries_;
};

/// Computes the full multigraded Betti table of a proper nonzero ideal.
BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const BettiOptions& options = {});

/// Thread-safe get-or-compute cache keyed by (canonical ideal form, field).
class BettiCache {
public:
    std::shared_ptr<const BettiTable> get_or_compute(const MonomialIdeal& ideal,
                                                     const FieldSpec& field,
                                                     const BettiOptions& options = {});
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<const BettiTable>> tables_;
};

/// The process-wide cache used by hs / graded_invariants / power sweeps.
BettiCache& default_betti_cache();

/// The i-th homological shift ideal HS_i(I): generated by the x^a with
/// beta_{i,a}(I) != 0. Returns the zero ideal when i exceeds the
/// projective dimension. HS_0(I) = I.
MonomialIdeal hs(const MonomialIdeal& ideal, std::size_t index, const FieldSpec& field);

struct GradedInvariants {
    std::uint64_t regularity = 0;
    std::size_t projective_dimension = 0;
    /// depth of S/I, via the Auslander-Buchsbaum formula: n - (pdim I + 1).
    std::size_t depth_of_quotient = 0;
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> graded_betti;
};

GradedInvariants graded_invariants(const MonomialIdeal& ideal, const FieldSpec& field);

/// True iff I is equigenerated in some degree d and reg(I) = d.
bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field);

} // namespace shiftlab
