#pragma once

#include <cstdint>
#include <vector>

#include "shiftlab/ideal.hpp"

namespace shiftlab {

/// The exchange condition: for every minimal generator u and all i < j
/// with x_j | u, the monomial x_i (u / x_j) lies in I.
bool is_strongly_stable(const MonomialIdeal& ideal);

/// The smallest strongly stable ideal containing the given monomials,
/// computed as the fixpoint of the exchange moves (they preserve degree,
/// so the orbit is finite), then minimized.
MonomialIdeal borel_closure(std::size_t vars, const std::vector<Monomial>& borel_gens);

/// Componentwise exponent caps c; a monomial is c-bounded when its
/// exponents are at most c.
using BoundVector = std::vector<Exponent>;

bool is_c_bounded(const Monomial& u, const BoundVector& bounds);

/// The smallest c-bounded strongly stable ideal containing the c-bounded
/// monomial u: exchange moves restricted to c-bounded results.
MonomialIdeal c_bounded_borel_closure(const Monomial& u, const BoundVector& bounds);

/// Exchange condition restricted to c-bounded moves; generators must be
/// c-bounded.
bool is_c_bounded_strongly_stable(const MonomialIdeal& ideal, const BoundVector& bounds);

/// Closed form for the homological shift ideals of powers of a principal
/// Borel ideal B(u): generated by x_{j_1} ... x_{j_i} v over the minimal
/// generators v of B(u^k) and index tuples j_1 < ... < j_i < max(v)
/// (1-based maximum). Returns the zero ideal for i >= max(u).
MonomialIdeal hs_principal_borel_power(const Monomial& u, std::size_t index, std::uint32_t k);

/// Closed form for the homological shift ideals of powers of a monomial
/// complete intersection (u_1, ..., u_m) with pairwise disjoint supports:
/// generated by u_{j_1} ... u_{j_i} u^b over |b| = k and
/// j_1 < ... < j_i < max(u^b). The sequence is sorted by ascending degree
/// internally. Overlapping supports are an input error.
MonomialIdeal monomial_ci_hs(std::size_t vars, std::vector<Monomial> regular_sequence,
                             std::size_t index, std::uint32_t k);

/// The two closed-form candidates for reg HS_i(I^k) of a monomial complete
/// intersection with degrees d_1 <= ... <= d_m, valid for k >= 2. They
/// differ in whether the middle sum includes the top degree d_m:
///   sum_all:        d_m k + (d_1 + ... + d_m)     + (d_{m-1} + ... + d_{m-i}) - (m - 1)
///   sum_below_max:  d_m k + (d_1 + ... + d_{m-1}) + (d_{m-1} + ... + d_{m-i}) - (m - 1)
/// The Betti table is authoritative; reports state which candidate agrees.
std::uint64_t ci_regularity_sum_all(const std::vector<Monomial>& regular_sequence,
                                    std::size_t index, std::uint32_t k);
std::uint64_t ci_regularity_sum_below_max(const std::vector<Monomial>& regular_sequence,
                                          std::size_t index, std::uint32_t k);

} // namespace shiftlab
