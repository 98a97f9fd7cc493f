#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "shiftlab/betti.hpp"
#include "shiftlab/budget.hpp"
#include "shiftlab/ideal.hpp"

namespace shiftlab {

/// An order u_1, ..., u_m of the minimal generators such that each colon
/// (u_1, ..., u_{j-1}) : u_j is generated by variables, together with
/// set(u_j) = the 0-based indices of those variables.
struct AdmissibleOrder {
    std::vector<Monomial> order;
    std::vector<std::vector<std::size_t>> sets;
};

enum class LqVerdict {
    found,            // an admissible order was produced
    none_exists,      // the full backtracking tree was exhausted
    budget_exhausted, // undecided within the node budget
};

struct LinearQuotientsResult {
    LqVerdict verdict = LqVerdict::budget_exhausted;
    std::optional<AdmissibleOrder> order;
    std::uint64_t nodes = 0;
};

/// Searches for a linear-quotients order. The canonical generator order is
/// tried first (it works for the stable and lex-friendly families), then a
/// full backtracking search with memoized prefix states. Budget exhaustion
/// is a distinct verdict, never reported as "none exists".
LinearQuotientsResult find_linear_quotients_order(const MonomialIdeal& ideal,
                                                  std::uint64_t budget = resource_caps().search_nodes);

/// set(u_j) for the given order if it is admissible, nullopt otherwise.
/// The order must be a permutation of G(I).
std::optional<std::vector<std::vector<std::size_t>>> admissible_sets(
    const MonomialIdeal& ideal, const std::vector<Monomial>& order);

/// HS_i(I) from a linear-quotients order: generated by x_F u over
/// u in G(I), F a subset of set(u) with |F| = i. Throws ContractError if
/// the order is not admissible.
MonomialIdeal hs_via_linear_quotients(const MonomialIdeal& ideal, const AdmissibleOrder& order,
                                      std::size_t index);

/// The graph on G(I) (I equigenerated in degree d) whose edges are the
/// pairs {u, v} with deg lcm(u, v) = d + 1.
struct GeneratorGraph {
    std::vector<Monomial> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

GeneratorGraph generator_graph(const MonomialIdeal& ideal);

/// True iff every generator pair u, v is connected inside the subgraph of
/// the generator graph induced on the divisors of lcm(u, v). Requires an
/// equigenerated ideal.
bool is_linearly_related(const MonomialIdeal& ideal);

/// Colon of the ideal generated by the other generators by u; u must be a
/// minimal generator and I must have at least two generators.
MonomialIdeal colon_by_rest(const MonomialIdeal& ideal, const Monomial& u);

} // namespace shiftlab
