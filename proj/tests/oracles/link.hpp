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

/*
 * Vertex links assembled as explicit cell complexes. Each corner (i, v) is a
 * link triangle; its three vertices sit on the tet-edges vw and its three
 * sides lie in the faces f != v. Face gluings identify sides and vertices,
 * and V, E, F are counted after the identification.
 */

#include <map>
#include <set>
#include <vector>

#include "angstruct/triangulation.hpp"
#include "oracles/union_find.hpp"

namespace oracle
{

struct LinkSurface {
    // Sorted corner set of the vertex class.
    std::set<std::pair<std::size_t, int>> corners;
    long vertices{0};
    long edges{0};
    long faces{0};
    bool closed{true};
    [[nodiscard]] auto euler() const -> long { return vertices - edges + faces; }
};

inline auto link_surfaces(const angstruct::Triangulation& t) -> std::vector<LinkSurface>
{
    const std::size_t n = t.size();
    auto corner = [](std::size_t i, int v) { return 4 * i + static_cast<std::size_t>(v); };
    auto slot = [](std::size_t i, int v, int w) { return 16 * i + 4 * static_cast<std::size_t>(v) + static_cast<std::size_t>(w); };
    auto side = [](std::size_t i, int v, int f) { return 16 * i + 4 * static_cast<std::size_t>(v) + static_cast<std::size_t>(f); };

    UnionFind corners(4 * n);
    UnionFind slots(16 * n);
    UnionFind sides(16 * n);
    std::vector<bool> side_glued(16 * n, false);

    for (std::size_t i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing({i, f});
            if (!g) {
                continue;
            }
            const auto j = g->target.tet;
            const int h = g->target.face;
            for (int v = 0; v < 4; ++v) {
                if (v == f) {
                    continue;
                }
                corners.unite(corner(i, v), corner(j, g->perm[v]));
                sides.unite(side(i, v, f), side(j, g->perm[v], h));
                side_glued[side(i, v, f)] = true;
                for (int w = 0; w < 4; ++w) {
                    if (w != v && w != f) {
                        slots.unite(slot(i, v, w), slot(j, g->perm[v], g->perm[w]));
                    }
                }
            }
        }
    }

    std::map<std::size_t, LinkSurface> by_root;
    std::map<std::size_t, std::set<std::size_t>> vset;
    std::map<std::size_t, std::set<std::size_t>> eset;
    for (std::size_t i = 0; i < n; ++i) {
        for (int v = 0; v < 4; ++v) {
            const auto r = corners.find(corner(i, v));
            auto& s = by_root[r];
            s.corners.insert({i, v});
            ++s.faces;
            for (int w = 0; w < 4; ++w) {
                if (w == v) {
                    continue;
                }
                vset[r].insert(slots.find(slot(i, v, w)));
                eset[r].insert(sides.find(side(i, v, w)));
                if (!side_glued[side(i, v, w)]) {
                    s.closed = false;
                }
            }
        }
    }
    std::vector<LinkSurface> out;
    for (auto& [r, s] : by_root) {
        s.vertices = static_cast<long>(vset[r].size());
        s.edges = static_cast<long>(eset[r].size());
        out.push_back(s);
    }
    return out;
}

}  // namespace oracle
