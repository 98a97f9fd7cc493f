#include "shiftlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "shiftlab/errors.hpp"

namespace shiftlab {

namespace {

constexpr std::size_t kDenseColumnLimit = 512;

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint32_t to_residue(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

} // namespace

std::size_t rank_gf_dense(const SparseIntMatrix& m, std::uint32_t p) {
    std::vector<std::vector<std::uint32_t>> a(m.rows, std::vector<std::uint32_t>(m.cols, 0));
    for (const auto& [r, c, v] : m.entries) a[r][c] = to_residue(v, p);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[pivot], a[rank]);
        const std::uint64_t inv = invmod(a[rank][col], p);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            if (a[r][col] == 0) continue;
            const std::uint64_t factor = a[r][col] * inv % p;
            for (std::size_t c = col; c < m.cols; ++c) {
                std::uint64_t sub = factor * a[rank][c] % p;
                a[r][c] = static_cast<std::uint32_t>((a[r][c] + p - sub) % p);
            }
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_gf_sparse(const SparseIntMatrix& m, std::uint32_t p) {
    using Row = std::vector<std::pair<std::size_t, std::uint32_t>>; // sorted by column

    std::vector<Row> rows(m.rows);
    for (const auto& [r, c, v] : m.entries) {
        std::uint32_t res = to_residue(v, p);
        if (res != 0) rows[r].emplace_back(c, res);
    }
    for (Row& row : rows) std::sort(row.begin(), row.end());

    // Reduce each row against the pivot rows collected so far; a row that
    // survives with a fresh leading column becomes a pivot itself.
    std::unordered_map<std::size_t, Row> pivot_by_col;
    std::size_t rank = 0;
    for (Row& row : rows) {
        while (!row.empty()) {
            const std::size_t lead = row.front().first;
            auto it = pivot_by_col.find(lead);
            if (it == pivot_by_col.end()) {
                const std::uint64_t inv = invmod(row.front().second, p);
                for (auto& [c, v] : row) v = static_cast<std::uint32_t>(v * inv % p);
                pivot_by_col.emplace(lead, std::move(row));
                ++rank;
                break;
            }
            const Row& pivot = it->second; // leading coefficient 1
            const std::uint64_t factor = row.front().second;
            Row next;
            next.reserve(row.size() + pivot.size());
            std::size_t i = 0, j = 0;
            while (i < row.size() || j < pivot.size()) {
                if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
                    next.push_back(row[i++]);
                } else if (i == row.size() || pivot[j].first < row[i].first) {
                    std::uint64_t v = (p - factor * pivot[j].second % p) % p;
                    if (v != 0) next.emplace_back(pivot[j].first, static_cast<std::uint32_t>(v));
                    ++j;
                } else {
                    std::uint64_t v = (row[i].second + p - factor * pivot[j].second % p) % p;
                    if (v != 0) next.emplace_back(row[i].first, static_cast<std::uint32_t>(v));
                    ++i, ++j;
                }
            }
            row = std::move(next);
        }
    }
    return rank;
}

namespace {

using Int128 = __int128;

constexpr Int128 kMagnitudeCap = (Int128(1) << 120);

Int128 checked_mul(Int128 a, Int128 b) {
    if (a == 0 || b == 0) return 0;
    Int128 r = a * b;
    if (r / b != a || r > kMagnitudeCap || r < -kMagnitudeCap)
        throw ResourceLimitError(
            "characteristic-0 elimination exceeded the 128-bit intermediate cap; "
            "use a prime field");
    return r;
}

} // namespace

std::size_t rank_rational(const SparseIntMatrix& m) {
    std::vector<std::vector<Int128>> a(m.rows, std::vector<Int128>(m.cols, 0));
    for (const auto& [r, c, v] : m.entries) a[r][c] = v;

    std::size_t rank = 0;
    Int128 prev_pivot = 1;
    for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows && a[pivot][col] == 0) ++pivot;
        if (pivot == m.rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = rank + 1; r < m.rows; ++r) {
            for (std::size_t c = col + 1; c < m.cols; ++c) {
                Int128 num = checked_mul(a[rank][col], a[r][c]) - checked_mul(a[r][col], a[rank][c]);
                a[r][c] = num / prev_pivot; // exact by the fraction-free identity
            }
            a[r][col] = 0;
        }
        prev_pivot = a[rank][col];
        ++rank;
    }
    return rank;
}

std::size_t rank(const SparseIntMatrix& m, const FieldSpec& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    if (field.is_rational()) return rank_rational(m);
    return m.cols < kDenseColumnLimit ? rank_gf_dense(m, field.characteristic)
                                      : rank_gf_sparse(m, field.characteristic);
}

} // namespace shiftlab
