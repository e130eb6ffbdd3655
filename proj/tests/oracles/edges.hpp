/*
angstruct

Copyright 2026 The angstruct Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

   http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

/* Edge classes by union-find over face gluings; no corner walk. */

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "angstruct/triangulation.hpp"
#include "oracles/union_find.hpp"

namespace oracle
{

// Tet-edge index of the unordered vertex pair {u, v}.
inline auto pair_index(int u, int v) -> int
{
    static constexpr int table[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return table[u][v];
}

struct EdgePartition {
    // Each class as a sorted set of (tet, tet-edge); classes sorted.
    std::set<std::set<std::pair<std::size_t, int>>> classes;
    std::set<std::set<std::pair<std::size_t, int>>> boundary;
};

inline auto edge_partition(const angstruct::Triangulation& t) -> EdgePartition
{
    const std::size_t n = t.size();
    UnionFind uf(6 * n);
    std::vector<bool> touches_boundary(6 * n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing({i, f});
            for (int u = 0; u < 4; ++u) {
                for (int v = u + 1; v < 4; ++v) {
                    if (u == f || v == f) {
                        continue;
                    }
                    const auto here = 6 * i + static_cast<std::size_t>(pair_index(u, v));
                    if (!g) {
                        touches_boundary[here] = true;
                        continue;
                    }
                    const auto there = 6 * g->target.tet +
                                       static_cast<std::size_t>(pair_index(g->perm[u], g->perm[v]));
                    uf.unite(here, there);
                }
            }
        }
    }
    std::vector<std::set<std::pair<std::size_t, int>>> by_root(6 * n);
    std::vector<bool> root_boundary(6 * n, false);
    for (std::size_t c = 0; c < 6 * n; ++c) {
        const auto r = uf.find(c);
        by_root[r].insert({c / 6, static_cast<int>(c % 6)});
        root_boundary[r] = root_boundary[r] || touches_boundary[c];
    }
    EdgePartition out;
    for (std::size_t r = 0; r < 6 * n; ++r) {
        if (!by_root[r].empty()) {
            out.classes.insert(by_root[r]);
            if (root_boundary[r]) {
                out.boundary.insert(by_root[r]);
            }
        }
    }
    return out;
}

/* Same shape, from the library's classes, for comparison. */
inline auto library_partition(const std::vector<angstruct::EdgeClass>& classes) -> EdgePartition
{
    EdgePartition out;
    for (const auto& e : classes) {
        std::set<std::pair<std::size_t, int>> s;
        for (const auto& c : e.corners) {
            s.insert({c.tet, c.edge});
        }
        out.classes.insert(s);
        if (e.is_boundary) {
            out.boundary.insert(s);
        }
    }
    return out;
}

}  // namespace oracle
