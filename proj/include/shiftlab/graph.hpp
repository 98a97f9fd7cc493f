#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "shiftlab/errors.hpp"

namespace shiftlab {

/// A finite simple graph on vertices 0..n-1. Edges are stored as
/// ordered pairs (i, j) with i < j, sorted and duplicate-free.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    static Graph make(std::size_t vertex_count,
                      std::vector<std::pair<std::size_t, std::size_t>> edges) {
        for (auto& [a, b] : edges) {
            if (a == b) throw InputError("graph has a loop");
            if (a >= vertex_count || b >= vertex_count)
                throw InputError("graph edge endpoint out of range");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        return Graph{vertex_count, std::move(edges)};
    }
};

} // namespace shiftlab
