#include "shiftlab/linear_quotients.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

/// Decides whether (prefix) : u is generated by variables; on success fills
/// `set_out` with the variable indices. The colon of a monomial prefix is
/// generated by the quotients q_t = u_t : u, and it is variable-generated
/// iff every q_t is divisible by some q_s that is a single variable.
bool prefix_admissible(const std::vector<Monomial>& gens, const std::vector<std::size_t>& prefix,
                       std::size_t candidate, std::vector<std::size_t>* set_out) {
    const Monomial& u = gens[candidate];
    std::vector<Monomial> quotients;
    quotients.reserve(prefix.size());
    std::vector<bool> is_variable_quotient(u.vars(), false);
    for (std::size_t t : prefix) {
        Monomial q = gens[t].quotient_by(u);
        if (q.degree() == 1) is_variable_quotient[q.max_index()] = true;
        quotients.push_back(std::move(q));
    }
    for (const Monomial& q : quotients) {
        bool covered = false;
        for (std::size_t i = 0; i < u.vars() && !covered; ++i)
            if (is_variable_quotient[i] && q[i] > 0) covered = true;
        if (!covered) return false;
    }
    if (set_out) {
        set_out->clear();
        for (std::size_t i = 0; i < u.vars(); ++i)
            if (is_variable_quotient[i]) set_out->push_back(i);
    }
    return true;
}

struct BitsetHash {
    std::size_t operator()(const std::vector<std::uint64_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint64_t w : v) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

std::optional<std::vector<std::vector<std::size_t>>> admissible_sets(
    const MonomialIdeal& ideal, const std::vector<Monomial>& order) {
    std::vector<Monomial> sorted_order = order;
    std::sort(sorted_order.begin(), sorted_order.end(), canonical_less);
    if (sorted_order != ideal.gens())
        throw InputError("order is not a permutation of the minimal generators");

    std::vector<std::size_t> index_of(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) {
        auto it = std::find(ideal.gens().begin(), ideal.gens().end(), order[j]);
        index_of[j] = static_cast<std::size_t>(it - ideal.gens().begin());
    }

    std::vector<std::vector<std::size_t>> sets(order.size());
    std::vector<std::size_t> prefix;
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (!prefix_admissible(ideal.gens(), prefix, index_of[j], &sets[j])) return std::nullopt;
        prefix.push_back(index_of[j]);
    }
    return sets;
}

LinearQuotientsResult find_linear_quotients_order(const MonomialIdeal& ideal,
                                                  std::uint64_t budget) {
    if (ideal.is_zero() || ideal.is_unit())
        throw UndefinedInputError("linear-quotients search needs a proper nonzero ideal");

    const std::vector<Monomial>& gens = ideal.gens();
    const std::size_t m = gens.size();
    LinearQuotientsResult result;

    // Fast path: the canonical (degree, lex) order itself.
    std::vector<std::size_t> identity(m);
    for (std::size_t j = 0; j < m; ++j) identity[j] = j;
    {
        std::vector<std::vector<std::size_t>> sets(m);
        std::vector<std::size_t> prefix;
        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j) {
            ++result.nodes;
            if (result.nodes > budget) {
                result.verdict = LqVerdict::budget_exhausted;
                return result;
            }
            ok = prefix_admissible(gens, prefix, j, &sets[j]);
            prefix.push_back(j);
        }
        if (ok) {
            result.verdict = LqVerdict::found;
            result.order = AdmissibleOrder{gens, std::move(sets)};
            return result;
        }
    }

    // Full backtracking over generator orders. Whether a generator can
    // extend a prefix depends only on the chosen set, so failed states are
    // memoized by their bitmask.
    const std::size_t words = (m + 63) / 64;
    std::unordered_set<std::vector<std::uint64_t>, BitsetHash> failed;
    std::vector<std::uint64_t> state(words, 0);
    std::vector<std::size_t> chosen;
    std::vector<std::vector<std::size_t>> sets(m);
    bool out_of_budget = false;

    auto dfs = [&](auto&& self) -> bool {
        if (chosen.size() == m) return true;
        if (failed.contains(state)) return false;
        for (std::size_t j = 0; j < m; ++j) {
            if (state[j / 64] & (1ull << (j % 64))) continue;
            if (++result.nodes > budget) {
                out_of_budget = true;
                return false;
            }
            if (!prefix_admissible(gens, chosen, j, &sets[chosen.size()])) continue;
            chosen.push_back(j);
            state[j / 64] |= (1ull << (j % 64));
            if (self(self)) return true;
            state[j / 64] &= ~(1ull << (j % 64));
            chosen.pop_back();
            if (out_of_budget) return false;
        }
        failed.insert(state);
        return false;
    };

    if (dfs(dfs)) {
        AdmissibleOrder order;
        for (std::size_t j : chosen) order.order.push_back(gens[j]);
        order.sets = std::move(sets);
        result.verdict = LqVerdict::found;
        result.order = std::move(order);
    } else {
        result.verdict = out_of_budget ? LqVerdict::budget_exhausted : LqVerdict::none_exists;
    }
    return result;
}

MonomialIdeal hs_via_linear_quotients(const MonomialIdeal& ideal, const AdmissibleOrder& order,
                                      std::size_t index) {
    auto sets = admissible_sets(ideal, order.order);
    if (!sets) throw ContractError("the supplied generator order is not admissible");

    std::vector<Monomial> gens;
    for (std::size_t j = 0; j < order.order.size(); ++j) {
        const std::vector<std::size_t>& s = (*sets)[j];
        if (s.size() < index) continue;
        // All index-subsets F of set(u_j); gens x_F * u_j.
        std::vector<std::size_t> pick(index);
        auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == index) {
                Monomial g = order.order[j];
                for (std::size_t t : pick) g = g.times(Monomial::variable(ideal.vars(), t));
                gens.push_back(std::move(g));
                return;
            }
            for (std::size_t t = from; t < s.size(); ++t) {
                pick[depth] = s[t];
                self(self, t + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    return MonomialIdeal::make(ideal.vars(), std::move(gens));
}

GeneratorGraph generator_graph(const MonomialIdeal& ideal) {
    const Shape s = shape(ideal);
    if (!s.equigenerated)
        throw UndefinedInputError("the generator graph is defined for equigenerated ideals only");
    GeneratorGraph g;
    g.vertices = ideal.gens();
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
            if (lcm(g.vertices[i], g.vertices[j]).degree() == s.alpha + 1) g.edges.emplace_back(i, j);
    return g;
}

bool is_linearly_related(const MonomialIdeal& ideal) {
    const GeneratorGraph g = generator_graph(ideal); // also enforces equigeneration
    const std::size_t m = g.vertices.size();
    std::vector<std::vector<std::size_t>> adjacency(m);
    for (const auto& [a, b] : g.edges) {
        adjacency[a].push_back(b);
        adjacency[b].push_back(a);
    }

    for (std::size_t s = 0; s < m; ++s) {
        for (std::size_t t = s + 1; t < m; ++t) {
            const Monomial bound = lcm(g.vertices[s], g.vertices[t]);
            // Breadth-first search inside the divisor-induced subgraph.
            std::vector<bool> seen(m, false);
            std::queue<std::size_t> queue;
            seen[s] = true;
            queue.push(s);
            bool connected = false;
            while (!queue.empty() && !connected) {
                const std::size_t v = queue.front();
                queue.pop();
                for (std::size_t w : adjacency[v]) {
                    if (seen[w] || !g.vertices[w].divides(bound)) continue;
                    if (w == t) {
                        connected = true;
                        break;
                    }
                    seen[w] = true;
                    queue.push(w);
                }
            }
            if (!connected) return false;
        }
    }
    return true;
}

MonomialIdeal colon_by_rest(const MonomialIdeal& ideal, const Monomial& u) {
    const auto& gens = ideal.gens();
    if (std::find(gens.begin(), gens.end(), u) == gens.end())
        throw InputError("u is not a minimal generator");
    if (gens.size() < 2) throw InputError("colon_by_rest needs at least two generators");
    std::vector<Monomial> quotients;
    for (const Monomial& g : gens)
        if (g != u) quotients.push_back(g.quotient_by(u));
    return MonomialIdeal::make(ideal.vars(), std::move(quotients));
}

} // namespace shiftlab
