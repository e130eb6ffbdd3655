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

/** @file triangulation.hpp
 *  @brief Face-glued tetrahedra, edge and vertex classes, vertex links
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace angstruct
{

/** @brief Vertex pairs of tet-edges 0..5; edge k is opposite edge 5-k */
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVertices{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/** @brief Tet-edge joining vertices a and b */
constexpr auto edge_index(int a, int b) -> int
{
    if (a > b) {
        std::swap(a, b);
    }
    // 01,02,03,12,13,23
    return a == 0 ? b - 1 : a + b;
}

constexpr auto opposite_edge(int k) -> int { return 5 - k; }

/** @brief Quad type that faces (is disjoint from) tet-edge k */
constexpr auto quad_facing(int k) -> int { return std::min(k, 5 - k); }

/** @brief The three tet-edges incident to vertex l (triangle type l) */
constexpr auto triangle_edges(int l) -> std::array<int, 3>
{
    std::array<int, 3> out{};
    int n = 0;
    for (int k = 0; k < 6; ++k) {
        if (kEdgeVertices[k][0] == l || kEdgeVertices[k][1] == l) {
            out[n++] = k;
        }
    }
    return out;
}

/** @brief The four tet-edges met by quad type p */
constexpr auto quad_edges(int p) -> std::array<int, 4>
{
    std::array<int, 4> out{};
    int n = 0;
    for (int k = 0; k < 6; ++k) {
        if (k != p && k != 5 - p) {
            out[n++] = k;
        }
    }
    return out;
}

/** @brief Permutation of the tetrahedron vertex labels {0,1,2,3} */
class Perm4
{
public:
    constexpr Perm4() : img_{0, 1, 2, 3} {}
    constexpr explicit Perm4(std::array<std::uint8_t, 4> img) : img_(img)
    {
        unsigned seen = 0;
        for (auto v : img_) {
            if (v > 3 || (seen & (1U << v)) != 0) {
                throw std::invalid_argument("not a permutation of 0123");
            }
            seen |= 1U << v;
        }
    }

    /** @brief From the 4-character image string, e.g. "1023" */
    static auto parse(std::string_view s) -> Perm4
    {
        if (s.size() != 4) {
            throw std::invalid_argument("permutation must have 4 characters");
        }
        std::array<std::uint8_t, 4> img{};
        for (std::size_t i = 0; i < 4; ++i) {
            if (s[i] < '0' || s[i] > '3') {
                throw std::invalid_argument("permutation characters must be 0..3");
            }
            img[i] = static_cast<std::uint8_t>(s[i] - '0');
        }
        return Perm4(img);
    }

    constexpr auto operator[](int v) const -> int { return img_[static_cast<std::size_t>(v)]; }

    [[nodiscard]] constexpr auto inverse() const -> Perm4
    {
        std::array<std::uint8_t, 4> inv{};
        for (std::uint8_t i = 0; i < 4; ++i) {
            inv[img_[i]] = i;
        }
        return Perm4(inv);
    }

    /** @brief (this * o)(v) = this(o(v)) */
    [[nodiscard]] constexpr auto compose(const Perm4& o) const -> Perm4
    {
        std::array<std::uint8_t, 4> c{};
        for (int i = 0; i < 4; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((*this)[o[i]]);
        }
        return Perm4(c);
    }

    [[nodiscard]] constexpr auto sign() const -> int
    {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                if ((*this)[i] > (*this)[j]) {
                    ++inversions;
                }
            }
        }
        return inversions % 2 == 0 ? 1 : -1;
    }

    [[nodiscard]] auto str() const -> std::string
    {
        std::string s(4, '0');
        for (std::size_t i = 0; i < 4; ++i) {
            s[i] = static_cast<char>('0' + img_[i]);
        }
        return s;
    }

    friend constexpr auto operator==(const Perm4&, const Perm4&) -> bool = default;

private:
    std::array<std::uint8_t, 4> img_;
};

/** @brief A face of a tetrahedron: (tet index, face index 0..3) */
struct FaceRef {
    std::size_t tet{0};
    int face{0};
    friend constexpr auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/** @brief One row of a gluing table: face `from` is glued to `to` by `perm` */
struct FaceGluing {
    FaceRef from;
    FaceRef to;
    Perm4 perm;
};

/** @brief Where a face is glued and by which vertex map */
struct Gluing {
    FaceRef target;
    Perm4 perm;
    friend auto operator==(const Gluing&, const Gluing&) -> bool = default;
};

/** @brief Thrown by Triangulation::create; `entry` indexes the offending gluing */
class GluingError : public std::runtime_error
{
public:
    GluingError(std::size_t entry, const std::string& msg)
        : std::runtime_error(msg), entry_(entry)
    {
    }
    [[nodiscard]] auto entry() const -> std::size_t { return entry_; }

private:
    std::size_t entry_;
};

/** @brief Gluing-table text errors, carrying a 1-based line number (0 = end of input) */
class ParseError : public std::runtime_error
{
public:
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line), msg_(msg)
    {
    }
    [[nodiscard]] auto line() const -> std::size_t { return line_; }
    [[nodiscard]] auto message() const -> const std::string& { return msg_; }

private:
    std::size_t line_;
    std::string msg_;
};

/**
 * @brief n tetrahedra with an involutive partial face pairing
 *
 * Immutable once created. Unpaired faces are boundary faces.
 */
class Triangulation
{
public:
    /**
     * @brief Validate and build from a list of gluings
     *
     * Each entry defines both directions. A repeated entry for the reverse
     * direction is accepted only if it is the exact inverse.
     * @throws GluingError
     */
    static auto create(std::size_t tets, const std::vector<FaceGluing>& gluings,
                       std::string name = {}) -> Triangulation
    {
        if (tets == 0) {
            throw GluingError(0, "tet count must be positive");
        }
        Triangulation t;
        t.name_ = std::move(name);
        t.faces_.assign(tets, {});
        for (std::size_t e = 0; e < gluings.size(); ++e) {
            const auto& g = gluings[e];
            if (g.from.tet >= tets || g.to.tet >= tets || g.from.face < 0 || g.from.face > 3 ||
                g.to.face < 0 || g.to.face > 3) {
                throw GluingError(e, "index out of range");
            }
            if (g.from == g.to) {
                throw GluingError(e, "self-gluing of a face to itself");
            }
            if (g.perm[g.from.face] != g.to.face) {
                throw GluingError(e, "permutation does not carry face " +
                                         std::to_string(g.from.face) + " to face " +
                                         std::to_string(g.to.face));
            }
            const Gluing fwd{g.to, g.perm};
            const Gluing back{g.from, g.perm.inverse()};
            auto& slot_a = t.faces_[g.from.tet][static_cast<std::size_t>(g.from.face)];
            auto& slot_b = t.faces_[g.to.tet][static_cast<std::size_t>(g.to.face)];
            if ((slot_a && *slot_a != fwd) || (slot_b && *slot_b != back)) {
                throw GluingError(e, "non-involutive gluing");
            }
            slot_a = fwd;
            slot_b = back;
        }
        return t;
    }

    [[nodiscard]] auto size() const -> std::size_t { return faces_.size(); }
    [[nodiscard]] auto name() const -> const std::string& { return name_; }

    [[nodiscard]] auto gluing(FaceRef f) const -> const std::optional<Gluing>&
    {
        return faces_.at(f.tet).at(static_cast<std::size_t>(f.face));
    }

    [[nodiscard]] auto is_boundary(FaceRef f) const -> bool { return !gluing(f).has_value(); }

    [[nodiscard]] auto boundary_faces() const -> std::vector<FaceRef>
    {
        std::vector<FaceRef> out;
        for (std::size_t i = 0; i < size(); ++i) {
            for (int f = 0; f < 4; ++f) {
                if (is_boundary({i, f})) {
                    out.push_back({i, f});
                }
            }
        }
        return out;
    }

    /** @brief Each glued face pair once, listed from its smaller side */
    [[nodiscard]] auto gluing_list() const -> std::vector<FaceGluing>
    {
        std::vector<FaceGluing> out;
        for (std::size_t i = 0; i < size(); ++i) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing({i, f});
                if (g && FaceRef{i, f} < g->target) {
                    out.push_back({{i, f}, g->target, g->perm});
                }
            }
        }
        return out;
    }

    /** @brief Re-check the involution and face-carrying invariants */
    [[nodiscard]] auto is_valid() const -> bool
    {
        for (std::size_t i = 0; i < size(); ++i) {
            for (int f = 0; f < 4; ++f) {
                const auto& g = gluing({i, f});
                if (!g) {
                    continue;
                }
                if (g->target == FaceRef{i, f} || g->target.tet >= size() ||
                    g->perm[f] != g->target.face) {
                    return false;
                }
                const auto& r = gluing(g->target);
                if (!r || r->target != FaceRef{i, f} || r->perm != g->perm.inverse()) {
                    return false;
                }
            }
        }
        return true;
    }

private:
    Triangulation() = default;
    std::string name_;
    std::vector<std::array<std::optional<Gluing>, 4>> faces_;
};

/** @brief A (tet, tet-edge) corner */
struct EdgeCorner {
    std::size_t tet{0};
    int edge{0};
    friend constexpr auto operator<=>(const EdgeCorner&, const EdgeCorner&) = default;
};

/** @brief A (tet, tet-vertex) corner */
struct VertexCorner {
    std::size_t tet{0};
    int vertex{0};
    friend constexpr auto operator<=>(const VertexCorner&, const VertexCorner&) = default;
};

struct EdgeClass {
    std::size_t index{0};
    /** Walk order around the edge; boundary edges start at a boundary end */
    std::vector<EdgeCorner> corners;
    bool is_boundary{false};
    [[nodiscard]] auto valence() const -> std::size_t { return corners.size(); }
};

struct VertexClass {
    std::size_t index{0};
    std::vector<VertexCorner> corners;
    long link_euler{0};
    bool link_orientable{true};
    /** No link edge lies in a boundary face */
    bool link_closed{true};
};

namespace detail
{
/** Vertices of a tet not in edge k, ascending */
constexpr auto edge_complement(int k) -> std::array<int, 2>
{
    const auto o = kEdgeVertices[static_cast<std::size_t>(5 - k)];
    return {o[0], o[1]};
}
}  // namespace detail

/**
 * @brief Partition the 6n corners into edge classes by walking around each edge
 *
 * Classes are numbered in order of their lowest corner.
 */
inline auto build_edge_classes(const Triangulation& t) -> std::vector<EdgeClass>
{
    struct State {
        EdgeCorner corner;
        int exit_face;
    };
    // Step across exit_face; nullopt at a boundary face.
    auto step = [&t](const State& s) -> std::optional<State> {
        const auto& g = t.gluing({s.corner.tet, s.exit_face});
        if (!g) {
            return std::nullopt;
        }
        const auto [u, v] = kEdgeVertices[static_cast<std::size_t>(s.corner.edge)];
        const int k2 = edge_index(g->perm[u], g->perm[v]);
        const auto comp = detail::edge_complement(k2);
        const int entry = g->target.face;
        const int exit = comp[0] == entry ? comp[1] : comp[0];
        return State{{g->target.tet, k2}, exit};
    };

    std::vector<EdgeClass> classes;
    std::vector<bool> seen(6 * t.size(), false);
    auto flat = [](const EdgeCorner& c) { return 6 * c.tet + static_cast<std::size_t>(c.edge); };

    for (std::size_t i = 0; i < t.size(); ++i) {
        for (int k = 0; k < 6; ++k) {
            const EdgeCorner start{i, k};
            if (seen[flat(start)]) {
                continue;
            }
            const auto comp = detail::edge_complement(k);
            EdgeClass ec;
            ec.index = classes.size();

            std::vector<EdgeCorner> forward{start};
            State s{start, comp[0]};
            bool closed = false;
            for (;;) {
                auto next = step(s);
                if (!next) {
                    break;
                }
                if (next->corner == start) {
                    closed = true;
                    break;
                }
                forward.push_back(next->corner);
                s = *next;
            }
            if (closed) {
                ec.corners = std::move(forward);
            } else {
                std::vector<EdgeCorner> backward;
                State b{start, comp[1]};
                while (auto next = step(b)) {
                    backward.push_back(next->corner);
                    b = *next;
                }
                ec.corners.assign(backward.rbegin(), backward.rend());
                ec.corners.insert(ec.corners.end(), forward.begin(), forward.end());
                ec.is_boundary = true;
            }
            for (const auto& c : ec.corners) {
                seen[flat(c)] = true;
            }
            classes.push_back(std::move(ec));
        }
    }
    return classes;
}

/** @brief Map from flat corner index 6*tet+edge to edge class index */
inline auto edge_class_lookup(const std::vector<EdgeClass>& classes, std::size_t tets)
    -> std::vector<std::size_t>
{
    std::vector<std::size_t> out(6 * tets, 0);
    for (const auto& ec : classes) {
        for (const auto& c : ec.corners) {
            out[6 * c.tet + static_cast<std::size_t>(c.edge)] = ec.index;
        }
    }
    return out;
}

namespace detail
{
class DisjointSets
{
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    auto find(std::size_t x) -> std::size_t
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

private:
    std::vector<std::size_t> parent_;
};
}  // namespace detail

/**
 * @brief Partition the 4n vertex corners and describe each vertex link
 *
 * The link of a vertex class is triangulated by one triangle per corner.
 * Its Euler characteristic is V - E + F where link vertices are the
 * identified (tet, v, w) edge ends.
 */
inline auto build_vertex_classes(const Triangulation& t) -> std::vector<VertexClass>
{
    const std::size_t n = t.size();
    detail::DisjointSets corners(4 * n);
    // end (i, v, w) -> 16*i + 4*v + w
    detail::DisjointSets ends(16 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (int f = 0; f < 4; ++f) {
            const auto& g = t.gluing({i, f});
            if (!g) {
                continue;
            }
            for (int v = 0; v < 4; ++v) {
                if (v == f) {
                    continue;
                }
                corners.unite(4 * i + static_cast<std::size_t>(v),
                              4 * g->target.tet + static_cast<std::size_t>(g->perm[v]));
                for (int w = 0; w < 4; ++w) {
                    if (w == f || w == v) {
                        continue;
                    }
                    ends.unite(16 * i + static_cast<std::size_t>(4 * v + w),
                               16 * g->target.tet +
                                   static_cast<std::size_t>(4 * g->perm[v] + g->perm[w]));
                }
            }
        }
    }

    std::vector<VertexClass> classes;
    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t c = 0; c < 4 * n; ++c) {
        const auto r = corners.find(c);
        auto [it, inserted] = root_to_class.try_emplace(r, classes.size());
        if (inserted) {
            classes.push_back({});
            classes.back().index = it->second;
        }
        classes[it->second].corners.push_back({c / 4, static_cast<int>(c % 4)});
    }

    for (auto& vc : classes) {
        long faces = static_cast<long>(vc.corners.size());
        long boundary_edges = 0;
        std::vector<std::size_t> end_roots;
        for (const auto& c : vc.corners) {
            for (int f = 0; f < 4; ++f) {
                if (f != c.vertex && t.is_boundary({c.tet, f})) {
                    ++boundary_edges;
                }
            }
            for (int w = 0; w < 4; ++w) {
                if (w != c.vertex) {
                    end_roots.push_back(ends.find(16 * c.tet + static_cast<std::size_t>(4 * c.vertex + w)));
                }
            }
        }
        std::sort(end_roots.begin(), end_roots.end());
        const long verts = std::unique(end_roots.begin(), end_roots.end()) - end_roots.begin();
        const long edges = (3 * faces + boundary_edges) / 2;
        vc.link_euler = verts - edges + faces;
        vc.link_closed = boundary_edges == 0;

        // Two-colour the link triangles; crossing a face by P flips by -sign(P).
        std::map<VertexCorner, int> colour;
        std::vector<VertexCorner> stack{vc.corners.front()};
        colour[vc.corners.front()] = 1;
        while (!stack.empty() && vc.link_orientable) {
            const auto c = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                if (f == c.vertex) {
                    continue;
                }
                const auto& g = t.gluing({c.tet, f});
                if (!g) {
                    continue;
                }
                const VertexCorner d{g->target.tet, g->perm[c.vertex]};
                const int want = -g->perm.sign() * colour[c];
                auto [it, inserted] = colour.try_emplace(d, want);
                if (inserted) {
                    stack.push_back(d);
                } else if (it->second != want) {
                    vc.link_orientable = false;
                    break;
                }
            }
        }
    }
    return classes;
}

/** @brief Whether the tetrahedra can be oriented so every gluing reverses orientation */
inline auto is_orientable(const Triangulation& t) -> bool
{
    std::vector<int> colour(t.size(), 0);
    for (std::size_t s = 0; s < t.size(); ++s) {
        if (colour[s] != 0) {
            continue;
        }
        colour[s] = 1;
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const auto& g = t.gluing({i, f});
                if (!g) {
                    continue;
                }
                const int want = -g->perm.sign() * colour[i];
                auto& c = colour[g->target.tet];
                if (c == 0) {
                    c = want;
                    stack.push_back(g->target.tet);
                } else if (c != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

struct IdealVertexReport {
    std::size_t vertex{0};
    long link_euler{0};
    bool link_closed{true};
    bool link_orientable{true};
};

struct IdealReport {
    bool ideal{false};
    std::vector<IdealVertexReport> vertices;
};

/** @brief Ideal iff every vertex link is closed with Euler characteristic <= 0 */
inline auto is_ideal_triangulation(const Triangulation& t) -> IdealReport
{
    IdealReport r;
    r.ideal = true;
    for (const auto& vc : build_vertex_classes(t)) {
        r.vertices.push_back({vc.index, vc.link_euler, vc.link_closed, vc.link_orientable});
        if (!vc.link_closed || vc.link_euler > 0) {
            r.ideal = false;
        }
    }
    return r;
}

/**
 * @brief Read a gluing table
 *
 * First non-comment line "tets N", then lines "glue I F J G P". Text after
 * '#' is ignored.
 * @throws ParseError
 */
inline auto parse_triangulation(std::string_view text, std::string name = {}) -> Triangulation
{
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::optional<std::size_t> tets;
    std::vector<FaceGluing> gluings;
    std::vector<std::size_t> lines;

    auto parse_index = [](const std::string& tok, std::size_t line) -> std::size_t {
        if (tok.empty() || !std::all_of(tok.begin(), tok.end(),
                                        [](char c) { return c >= '0' && c <= '9'; })) {
            throw ParseError(line, "malformed line: expected a non-negative integer, got '" +
                                       tok + "'");
        }
        if (tok.size() > 9) {
            throw ParseError(line, "index out of range");
        }
        return static_cast<std::size_t>(std::stoul(tok));
    };

    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) {
            tok.push_back(w);
        }
        if (tok.empty()) {
            continue;
        }
        if (!tets) {
            if (tok[0] != "tets") {
                throw ParseError(line_no, "missing tets header");
            }
            if (tok.size() != 2) {
                throw ParseError(line_no, "malformed line: expected 'tets N'");
            }
            const auto n = parse_index(tok[1], line_no);
            if (n == 0) {
                throw ParseError(line_no, "tet count must be positive");
            }
            tets = n;
            continue;
        }
        if (tok[0] == "tets") {
            throw ParseError(line_no, "duplicate tets header");
        }
        if (tok[0] != "glue" || tok.size() != 6) {
            throw ParseError(line_no, "malformed line: expected 'glue I F J G P'");
        }
        const auto i = parse_index(tok[1], line_no);
        const auto f = parse_index(tok[2], line_no);
        const auto j = parse_index(tok[3], line_no);
        const auto g = parse_index(tok[4], line_no);
        if (i >= *tets || j >= *tets || f > 3 || g > 3) {
            throw ParseError(line_no, "index out of range");
        }
        Perm4 p;
        try {
            p = Perm4::parse(tok[5]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line_no, std::string("malformed line: ") + e.what());
        }
        gluings.push_back({{i, static_cast<int>(f)}, {j, static_cast<int>(g)}, p});
        lines.push_back(line_no);
    }
    if (!tets) {
        throw ParseError(0, "missing tets header");
    }
    try {
        return Triangulation::create(*tets, gluings, std::move(name));
    } catch (const GluingError& e) {
        throw ParseError(lines.at(e.entry()), e.what());
    }
}

/** @brief Canonical gluing table, one line per glued face pair */
inline auto format_triangulation(const Triangulation& t) -> std::string
{
    std::ostringstream out;
    out << "tets " << t.size() << "\n";
    for (const auto& g : t.gluing_list()) {
        out << "glue " << g.from.tet << " " << g.from.face << " " << g.to.tet << " "
            << g.to.face << " " << g.perm.str() << "\n";
    }
    return out.str();
}

/** @brief Result of inserting a flat tetrahedron between two faces */
struct FlatInsertion {
    Triangulation triangulation;
    std::size_t tet{0};
    /** Opposite tet-edge pair of the new tetrahedron carrying the pi angles */
    std::pair<int, int> diagonal_pair{0, 5};
};

/**
 * @brief Split a face pairing with one new folded tetrahedron
 *
 * The new tetrahedron N has face 3 glued to face_a and face 2 glued to
 * face_b, compatibly with `matching` (face_a -> face_b). Faces 0 and 1 of N
 * are glued to each other by the 4-cycle 1230, which identifies all four
 * vertices of N. face_a and face_b must either be glued to each other by
 * `matching` or both be boundary.
 * @throws std::invalid_argument if the faces are not compatibly positioned
 */
inline auto insert_flat_tetrahedron(const Triangulation& t, FaceRef face_a, FaceRef face_b,
                                    Perm4 matching) -> FlatInsertion
{
    if (face_a.tet >= t.size() || face_b.tet >= t.size() || face_a.face < 0 || face_a.face > 3 ||
        face_b.face < 0 || face_b.face > 3 || face_a == face_b) {
        throw std::invalid_argument("faces not compatibly positioned: bad face reference");
    }
    if (matching[face_a.face] != face_b.face) {
        throw std::invalid_argument("faces not compatibly positioned: matching does not carry "
                                    "face_a to face_b");
    }
    const auto& ga = t.gluing(face_a);
    const bool both_boundary = !ga && t.is_boundary(face_b);
    const bool paired = ga && ga->target == face_b && ga->perm == matching;
    if (!both_boundary && !paired) {
        throw std::invalid_argument("faces not compatibly positioned: not glued to each other "
                                    "by the matching and not both boundary");
    }

    std::vector<FaceGluing> gl;
    for (const auto& g : t.gluing_list()) {
        if (g.from == face_a || g.from == face_b) {
            continue;
        }
        gl.push_back(g);
    }
    const std::size_t n = t.size();
    std::array<std::uint8_t, 4> s{};
    std::uint8_t next = 0;
    for (int v = 0; v < 4; ++v) {
        if (v != face_a.face) {
            s[next++] = static_cast<std::uint8_t>(v);
        }
    }
    s[3] = static_cast<std::uint8_t>(face_a.face);
    const Perm4 sigma(s);
    const Perm4 swap23 = Perm4::parse("0132");
    const Perm4 tau = matching.compose(sigma).compose(swap23);

    gl.push_back({{n, 3}, face_a, sigma});
    gl.push_back({{n, 2}, face_b, tau});
    gl.push_back({{n, 0}, {n, 1}, Perm4::parse("1230")});
    return {Triangulation::create(n + 1, gl, t.name()), n, {0, 5}};
}

}  // namespace angstruct
