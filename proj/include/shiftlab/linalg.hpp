#pragma once

#include <cstdint>
#include <tuple>
#include <vector>

#include "shiftlab/field.hpp"

namespace shiftlab {

/// A sparse integer matrix given by its nonzero entries (row, col, value).
/// Positions must be distinct; values are small signed integers (boundary
/// maps only ever produce +-1, but any int64 works).
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::int64_t>> entries;
};

/// Dense Gaussian elimination over GF(p).
std::size_t rank_gf_dense(const SparseIntMatrix& m, std::uint32_t p);

/// Row-reduction over GF(p) keeping rows sparse; intended for wide
/// matrices. Same result as the dense routine by construction.
std::size_t rank_gf_sparse(const SparseIntMatrix& m, std::uint32_t p);

/// Fraction-free (Bareiss) elimination over the rationals using checked
/// 128-bit intermediates. Throws ResourceLimitError when an intermediate
/// value leaves the 128-bit range; prime fields are the remedy.
std::size_t rank_rational(const SparseIntMatrix& m);

/// Rank over the given field. GF(p) dispatches on the column count:
/// dense elimination below 512 columns, sparse elimination from 512 up.
std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field);

} // namespace shiftlab
