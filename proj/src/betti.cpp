#include "shiftlab/betti.hpp"

#include <algorithm>
#include <set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError(std::string(what) + " is undefined for the zero or unit ideal");
}

} // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const BettiOptions& options) {
    require_proper_nonzero(ideal, "the lcm lattice");

    std::vector<std::vector<Exponent>> points;
    std::set<std::vector<Exponent>> seen;
    for (const Monomial& g : ideal.gens())
        if (seen.insert(g.exponents()).second) points.push_back(g.exponents());

    // Close under joins with the generators: every subset lcm is a fold of
    // single-generator joins, so extending each element by one generator at
    // a time reaches the full join closure in O(size * generators) joins.
    const std::vector<std::vector<Exponent>> base = points;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (const std::vector<Exponent>& g : base) {
            std::vector<Exponent> join(points[i].size());
            for (std::size_t t = 0; t < join.size(); ++t)
                join[t] = std::max(points[i][t], g[t]);
            if (seen.insert(join).second) {
                points.push_back(std::move(join));
                if (points.size() > options.lattice_cap)
                    throw ResourceLimitError("lcm lattice exceeded the size cap of " +
                                             std::to_string(options.lattice_cap) + " elements");
            }
        }
    }

    LcmLattice lattice;
    lattice.points.reserve(points.size());
    for (auto& p : points) lattice.points.emplace_back(std::move(p));
    std::sort(lattice.points.begin(), lattice.points.end(), canonical_less);
    return lattice;
}

BettiTable::BettiTable(std::size_t vars, FieldSpec field, std::vector<BettiEntry> entries)
    : vars_(vars), field_(field), entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.index != b.index) return a.index < b.index;
        return canonical_less(a.multidegree, b.multidegree);
    });
}

std::size_t BettiTable::value(std::size_t index, const Monomial& multidegree) const {
    for (const BettiEntry& e : entries_)
        if (e.index == index && e.multidegree == multidegree) return e.dim;
    return 0;
}

std::vector<Monomial> BettiTable::multidegrees(std::size_t index) const {
    std::vector<Monomial> result;
    for (const BettiEntry& e : entries_)
        if (e.index == index) result.push_back(e.multidegree);
    return result;
}

std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> BettiTable::graded() const {
    std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> g;
    for (const BettiEntry& e : entries_) g[{e.index, e.multidegree.degree()}] += e.dim;
    return g;
}

std::size_t BettiTable::projective_dimension() const {
    std::size_t p = 0;
    for (const BettiEntry& e : entries_) p = std::max(p, e.index);
    return p;
}

std::uint64_t BettiTable::regularity() const {
    std::uint64_t r = 0;
    for (const BettiEntry& e : entries_) r = std::max(r, e.multidegree.degree() - e.index);
    return r;
}

BettiTable betti_table(const MonomialIdeal& ideal, const FieldSpec& field,
                       const BettiOptions& options) {
    require_proper_nonzero(ideal, "the Betti table");

    const LcmLattice lattice = lcm_lattice(ideal, options);
    std::vector<BettiEntry> entries;
    for (const Monomial& a : lattice.points) {
        const SimplicialComplex complex = upper_koszul_complex(ideal, a);
        // A full simplex on the support of a is a cone: no contribution.
        if (complex.faces.size() == (std::size_t{1} << a.support_size())) continue;
        const std::vector<std::size_t> dims = reduced_homology_dims(complex, field);
        // beta_{i,a} = dim H~_{i-1}, stored at dims[i].
        const std::size_t top = std::min(dims.size(), ideal.vars());
        for (std::size_t i = 0; i < top; ++i)
            if (dims[i] > 0) entries.push_back(BettiEntry{i, a, dims[i]});
    }
    return BettiTable(ideal.vars(), field, std::move(entries));
}

std::shared_ptr<const BettiTable> BettiCache::get_or_compute(const MonomialIdeal& ideal,
                                                             const FieldSpec& field,
                                                             const BettiOptions& options) {
    const std::string key = ideal.key() + "#" + std::to_string(field.characteristic);
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tables_.find(key);
    if (it != tables_.end()) return it->second;
    auto table = std::make_shared<const BettiTable>(betti_table(ideal, field, options));
    tables_.emplace(key, table);
    return table;
}

std::size_t BettiCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return tables_.size();
}

BettiCache& default_betti_cache() {
    static BettiCache cache;
    return cache;
}

MonomialIdeal hs(const MonomialIdeal& ideal, std::size_t index, const FieldSpec& field) {
    require_proper_nonzero(ideal, "a homological shift ideal");
    if (index >= ideal.vars()) return MonomialIdeal::zero(ideal.vars());
    auto table = default_betti_cache().get_or_compute(ideal, field);
    return MonomialIdeal::make(ideal.vars(), table->multidegrees(index));
}

GradedInvariants graded_invariants(const MonomialIdeal& ideal, const FieldSpec& field) {
    require_proper_nonzero(ideal, "graded invariants");
    auto table = default_betti_cache().get_or_compute(ideal, field);
    GradedInvariants inv;
    inv.regularity = table->regularity();
    inv.projective_dimension = table->projective_dimension();
    inv.depth_of_quotient = ideal.vars() - (inv.projective_dimension + 1);
    inv.graded_betti = table->graded();
    return inv;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field) {
    const Shape s = shape(ideal);
    if (!s.equigenerated) return false;
    return graded_invariants(ideal, field).regularity == s.alpha;
}

} // namespace shiftlab
