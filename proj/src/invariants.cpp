#include "shiftlab/invariants.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError(std::string(what) + " is undefined for the zero or unit ideal");
}

bool is_irreducible(const MonomialIdeal& ideal) {
    for (const Monomial& g : ideal.gens())
        if (g.support_size() > 1) return false;
    return true;
}

} // namespace

MonomialIdeal prime_ideal(std::size_t vars, const MonomialPrime& p) {
    std::vector<Monomial> gens;
    for (std::size_t i : p.variables) gens.push_back(Monomial::variable(vars, i));
    return MonomialIdeal::make(vars, std::move(gens));
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal, std::size_t cap) {
    require_proper_nonzero(ideal, "irreducible decomposition");

    std::vector<MonomialIdeal> components;
    std::vector<MonomialIdeal> stack{ideal};
    std::unordered_set<std::string> seen{ideal.key()};
    while (!stack.empty()) {
        MonomialIdeal current = std::move(stack.back());
        stack.pop_back();
        if (is_irreducible(current)) {
            components.push_back(std::move(current));
            continue;
        }
        // Split a mixed generator g = p * q with coprime p, q:
        // (rest, pq) = (rest, p) ∩ (rest, q).
        const Monomial* mixed = nullptr;
        for (const Monomial& g : current.gens())
            if (g.support_size() > 1) {
                mixed = &g;
                break;
            }
        const std::size_t split_var = mixed->support().front();
        std::vector<Exponent> pure(current.vars(), 0);
        pure[split_var] = (*mixed)[split_var];
        const Monomial p{std::vector<Exponent>(pure)};
        const Monomial q = mixed->divide(p);

        for (const Monomial& half : {p, q}) {
            // The rest is already an antichain; folding in one monomial
            // keeps it one without a full re-minimization.
            std::vector<Monomial> gens;
            bool half_redundant = false;
            for (const Monomial& g : current.gens()) {
                if (g == *mixed || half.divides(g)) continue;
                if (g.divides(half)) half_redundant = true;
                gens.push_back(g);
            }
            if (!half_redundant) gens.push_back(half);
            MonomialIdeal branch = MonomialIdeal::from_antichain(current.vars(), std::move(gens));
            if (seen.insert(branch.key()).second) stack.push_back(std::move(branch));
            // The cap bounds the whole splitting tree, not just its leaves.
            if (seen.size() > cap)
                throw ResourceLimitError("irreducible decomposition exceeded the component cap");
        }
    }

    std::sort(components.begin(), components.end(),
              [](const MonomialIdeal& a, const MonomialIdeal& b) { return a.key() < b.key(); });
    components.erase(std::unique(components.begin(), components.end()), components.end());

    // Irredundancy. A component C_j with exponents e_i on its support F_j
    // is implied by the others exactly when its corner monomial
    //   w_j = prod_{i in F_j} x_i^{e_i - 1} * prod_{i not in F_j} x_i^{B_i}
    // (B_i the largest exponent of x_i over all components) lies in every
    // other component: w_j is the componentwise largest monomial outside
    // C_j within the bound box, and membership in each component is an
    // upward-closed componentwise threshold test.
    const std::size_t n = ideal.vars();
    std::vector<std::vector<Exponent>> thresholds; // 0 = variable absent
    for (const MonomialIdeal& c : components) {
        std::vector<Exponent> t(n, 0);
        for (const Monomial& g : c.gens()) t[g.max_index()] = g[g.max_index()];
        thresholds.push_back(std::move(t));
    }
    std::vector<Exponent> box(n, 0);
    for (const auto& t : thresholds)
        for (std::size_t i = 0; i < n; ++i) box[i] = std::max(box[i], t[i]);

    // C_j is essential exactly when its corner lies in every other active
    // component (then the corner witnesses a monomial of the intersection
    // outside C_j); otherwise the others already cut out C_j and it drops.
    // Removals only shrink the active set, which keeps every earlier
    // essentiality verdict valid, so one pass suffices.
    std::vector<bool> removed(components.size(), false);
    for (std::size_t j = 0; j < components.size(); ++j) {
        std::vector<Exponent> corner(box);
        for (std::size_t i = 0; i < n; ++i)
            if (thresholds[j][i] > 0) corner[i] = thresholds[j][i] - 1;
        bool essential = true;
        bool any_other = false;
        for (std::size_t t = 0; t < components.size() && essential; ++t) {
            if (t == j || removed[t]) continue;
            any_other = true;
            bool member = false; // corner in C_t iff some threshold is met
            for (std::size_t i = 0; i < n && !member; ++i)
                member = thresholds[t][i] > 0 && corner[i] >= thresholds[t][i];
            essential = member;
        }
        removed[j] = any_other && !essential;
    }
    std::vector<MonomialIdeal> result;
    for (std::size_t j = 0; j < components.size(); ++j)
        if (!removed[j]) result.push_back(components[j]);
    return result;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
    std::set<std::vector<std::size_t>> supports;
    for (const MonomialIdeal& component : irreducible_decomposition(ideal)) {
        std::set<std::size_t> support;
        for (const Monomial& g : component.gens()) support.insert(g.support().front());
        supports.insert(std::vector<std::size_t>(support.begin(), support.end()));
    }
    std::vector<MonomialPrime> primes;
    for (const auto& s : supports) primes.push_back(MonomialPrime{s});
    return primes;
}

VNumberReport v_number(const MonomialIdeal& ideal) {
    require_proper_nonzero(ideal, "the v-number");
    const std::size_t n = ideal.vars();

    const std::vector<MonomialPrime> primes = associated_primes(ideal);
    std::set<std::vector<std::size_t>> pending;
    for (const MonomialPrime& p : primes) pending.insert(p.variables);

    // Componentwise exponent bound: past the largest generator exponent a
    // variable's exponent no longer changes the colon.
    std::vector<Exponent> bound(n, 0);
    for (const Monomial& g : ideal.gens())
        for (std::size_t i = 0; i < n; ++i) bound[i] = std::max(bound[i], g[i]);

    std::vector<Monomial> candidates;
    std::vector<Exponent> cursor(n, 0);
    auto enumerate = [&](auto&& self, std::size_t slot) -> void {
        if (slot == n) {
            candidates.emplace_back(std::vector<Exponent>(cursor));
            return;
        }
        for (Exponent e = 0; e <= bound[slot]; ++e) {
            cursor[slot] = e;
            self(self, slot + 1);
        }
        cursor[slot] = 0;
    };
    enumerate(enumerate, 0);
    std::sort(candidates.begin(), candidates.end(), canonical_less);

    // (I : f) is generated by the quotients g : f. It equals a monomial
    // prime exactly when f is outside I and every quotient is divisible by
    // one that is a single variable; the prime is then the set of those
    // variables. Two passes over the generators decide this without
    // materializing the colon.
    VNumberReport report;
    report.primes.resize(primes.size());
    for (const Monomial& f : candidates) {
        if (pending.empty()) break;
        std::vector<bool> is_variable(n, false);
        bool in_ideal = false;
        for (const Monomial& g : ideal.gens()) {
            std::uint64_t degree = 0;
            std::size_t last = 0;
            for (std::size_t i = 0; i < n; ++i) {
                const Exponent q = g[i] > f[i] ? g[i] - f[i] : 0;
                degree += q;
                if (q > 0) last = i;
            }
            if (degree == 0) {
                in_ideal = true; // g divides f
                break;
            }
            if (degree == 1) is_variable[last] = true;
        }
        if (in_ideal) continue;
        bool prime = true;
        for (const Monomial& g : ideal.gens()) {
            bool covered = false;
            for (std::size_t i = 0; i < n && !covered; ++i)
                covered = is_variable[i] && g[i] > f[i];
            if (!covered) {
                prime = false;
                break;
            }
        }
        if (!prime) continue;
        std::vector<std::size_t> support;
        for (std::size_t i = 0; i < n; ++i)
            if (is_variable[i]) support.push_back(i);
        auto it = pending.find(support);
        if (it == pending.end()) continue;
        for (std::size_t p = 0; p < primes.size(); ++p)
            if (primes[p].variables == support)
                report.primes[p] = VNumberReport::Entry{primes[p], f.degree(), f};
        pending.erase(it);
    }
    if (!pending.empty())
        throw Error("internal error: no monomial witness found inside the exponent bound");

    report.v = report.primes.front().v;
    report.witness = report.primes.front().witness;
    for (const auto& entry : report.primes)
        if (entry.v < report.v) {
            report.v = entry.v;
            report.witness = entry.witness;
        }
    return report;
}

} // namespace shiftlab
