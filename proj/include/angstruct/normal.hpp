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

/** @file normal.hpp
 *  @brief Normal disk types, compatibility equations and the solution space
 */

#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "angstruct/errors.hpp"
#include "angstruct/matrix.hpp"
#include "angstruct/rational.hpp"
#include "angstruct/triangulation.hpp"

namespace angstruct
{

struct TriangleType {
    std::size_t tet{0};
    int vertex{0};
};

struct QuadType {
    std::size_t tet{0};
    int type{0};
};

using DiskType = std::variant<TriangleType, QuadType>;

/** @brief Column of quad (tet, p) in the global 7n ordering */
constexpr auto quad_column(std::size_t tet, int p) -> std::size_t
{
    return 3 * tet + static_cast<std::size_t>(p);
}

/** @brief Column of triangle (tet, v) in the global 7n ordering */
constexpr auto triangle_column(std::size_t tets, std::size_t tet, int v) -> std::size_t
{
    return 3 * tets + 4 * tet + static_cast<std::size_t>(v);
}

/**
 * @brief Rational normal coordinate, quads then triangles, tet-major
 */
class NormalCoordinate
{
public:
    NormalCoordinate() = default;
    explicit NormalCoordinate(std::size_t tets)
        : quads_(3 * tets, Rational{0}), tris_(4 * tets, Rational{0})
    {
    }

    /** @throws std::invalid_argument unless the length is a multiple of 7 */
    static auto from_flat(std::span<const Rational> v) -> NormalCoordinate
    {
        if (v.size() % 7 != 0) {
            throw std::invalid_argument("normal coordinate length must be 7n");
        }
        const std::size_t n = v.size() / 7;
        NormalCoordinate s(n);
        std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(3 * n), s.quads_.begin());
        std::copy(v.begin() + static_cast<std::ptrdiff_t>(3 * n), v.end(), s.tris_.begin());
        return s;
    }

    [[nodiscard]] auto tets() const -> std::size_t { return quads_.size() / 3; }
    [[nodiscard]] auto quads() const -> const std::vector<Rational>& { return quads_; }
    [[nodiscard]] auto tris() const -> const std::vector<Rational>& { return tris_; }

    auto quad(std::size_t tet, int p) -> Rational& { return quads_.at(quad_column(tet, p)); }
    [[nodiscard]] auto quad(std::size_t tet, int p) const -> const Rational&
    {
        return quads_.at(quad_column(tet, p));
    }
    auto tri(std::size_t tet, int v) -> Rational&
    {
        return tris_.at(4 * tet + static_cast<std::size_t>(v));
    }
    [[nodiscard]] auto tri(std::size_t tet, int v) const -> const Rational&
    {
        return tris_.at(4 * tet + static_cast<std::size_t>(v));
    }

    [[nodiscard]] auto flat() const -> std::vector<Rational>
    {
        std::vector<Rational> v = quads_;
        v.insert(v.end(), tris_.begin(), tris_.end());
        return v;
    }

    friend auto operator+(NormalCoordinate a, const NormalCoordinate& b) -> NormalCoordinate
    {
        check_same(a, b);
        for (std::size_t k = 0; k < a.quads_.size(); ++k) {
            a.quads_[k] += b.quads_[k];
        }
        for (std::size_t k = 0; k < a.tris_.size(); ++k) {
            a.tris_[k] += b.tris_[k];
        }
        return a;
    }
    friend auto operator*(const Rational& c, NormalCoordinate a) -> NormalCoordinate
    {
        for (auto& x : a.quads_) {
            x *= c;
        }
        for (auto& x : a.tris_) {
            x *= c;
        }
        return a;
    }
    friend auto operator==(const NormalCoordinate&, const NormalCoordinate&) -> bool = default;

private:
    static void check_same(const NormalCoordinate& a, const NormalCoordinate& b)
    {
        if (a.quads_.size() != b.quads_.size()) {
            throw std::invalid_argument("normal coordinate dimension mismatch");
        }
    }
    std::vector<Rational> quads_;
    std::vector<Rational> tris_;
};

/** @brief Row label: the arc around `vertex` in face `face`, matched with `partner` */
struct ArcLabel {
    FaceRef face;
    FaceRef partner;
    int vertex{0};
};

struct CompatibilitySystem {
    RationalMatrix matrix;
    std::vector<ArcLabel> labels;
};

class NotInSolutionSpace : public PreconditionError
{
public:
    NotInSolutionSpace() : PreconditionError("normal coordinate is not in the solution space")
    {
    }
};

class BasisError : public PreconditionError
{
public:
    using PreconditionError::PreconditionError;
};

/**
 * @brief One row per glued face pair and normal arc type
 *
 * Rows are ordered by face pair (smaller side first), then by the arc's
 * vertex on the smaller side.
 */
inline auto compatibility_system(const Triangulation& t) -> CompatibilitySystem
{
    const std::size_t n = t.size();
    CompatibilitySystem sys;
    sys.matrix = RationalMatrix(0, 7 * n);
    std::vector<Rational> row(7 * n);
    for (const auto& g : t.gluing_list()) {
        for (int v = 0; v < 4; ++v) {
            if (v == g.from.face) {
                continue;
            }
            std::fill(row.begin(), row.end(), Rational{0});
            const int w = g.perm[v];
            row[quad_column(g.from.tet, quad_facing(edge_index(v, g.from.face)))] += 1;
            row[triangle_column(n, g.from.tet, v)] += 1;
            row[quad_column(g.to.tet, quad_facing(edge_index(w, g.to.face)))] -= 1;
            row[triangle_column(n, g.to.tet, w)] -= 1;
            sys.matrix.append_row(row);
            sys.labels.push_back({g.from, g.to, v});
        }
    }
    return sys;
}

/** @throws std::invalid_argument on dimension mismatch */
inline auto is_in_solution_space(const CompatibilitySystem& sys, const NormalCoordinate& s) -> bool
{
    const auto v = s.flat();
    if (v.size() != sys.matrix.cols()) {
        throw std::invalid_argument("normal coordinate dimension mismatch");
    }
    for (const auto& x : multiply(sys.matrix, v)) {
        if (x != 0) {
            return false;
        }
    }
    return true;
}

struct QuadConePredicates {
    bool all_quads_nonneg{true};
    bool some_quad_positive{false};
};

inline auto quad_cone_predicates(const NormalCoordinate& s) -> QuadConePredicates
{
    QuadConePredicates p;
    for (const auto& q : s.quads()) {
        if (q < 0) {
            p.all_quads_nonneg = false;
        }
        if (q > 0) {
            p.some_quad_positive = true;
        }
    }
    return p;
}

/** @brief Tetrahedral solution: +1 on the four triangles of `tet`, -1 on its quads */
inline auto tetrahedral_solution(std::size_t tets, std::size_t tet) -> NormalCoordinate
{
    NormalCoordinate w(tets);
    for (int p = 0; p < 3; ++p) {
        w.quad(tet, p) = -1;
    }
    for (int v = 0; v < 4; ++v) {
        w.tri(tet, v) = 1;
    }
    return w;
}

/** @brief Edge solution: per corner {u,v}, +1 on triangles u and v, -1 on the facing quad */
inline auto edge_solution(std::size_t tets, const EdgeClass& e) -> NormalCoordinate
{
    NormalCoordinate w(tets);
    for (const auto& c : e.corners) {
        const auto [u, v] = kEdgeVertices[static_cast<std::size_t>(c.edge)];
        w.tri(c.tet, u) += 1;
        w.tri(c.tet, v) += 1;
        w.quad(c.tet, quad_facing(c.edge)) -= 1;
    }
    return w;
}

struct SolutionBasis {
    std::vector<NormalCoordinate> tetrahedral;
    std::vector<NormalCoordinate> edge;
};

struct Decomposition {
    std::vector<Rational> omega;
    std::vector<Rational> z;
};

/**
 * @brief Cached combinatorics for normal-surface computations on one triangulation
 */
class NormalSpace
{
public:
    explicit NormalSpace(Triangulation t)
        : t_(std::move(t)),
          edges_(build_edge_classes(t_)),
          lookup_(edge_class_lookup(edges_, t_.size())),
          compat_(compatibility_system(t_)),
          chi_(7 * t_.size())
    {
        const std::size_t n = t_.size();
        for (std::size_t i = 0; i < n; ++i) {
            int boundary = 0;
            for (int f = 0; f < 4; ++f) {
                boundary += t_.is_boundary({i, f}) ? 1 : 0;
            }
            for (int p = 0; p < 3; ++p) {
                Rational c = Rational(-(2 + boundary), 2);
                for (int k : quad_edges(p)) {
                    c += Rational(1, static_cast<long>(valence(i, k)));
                }
                chi_[quad_column(i, p)] = c;
            }
            for (int v = 0; v < 4; ++v) {
                int b = 0;
                for (int f = 0; f < 4; ++f) {
                    b += (f != v && t_.is_boundary({i, f})) ? 1 : 0;
                }
                Rational c = Rational(-(1 + b), 2);
                for (int k : triangle_edges(v)) {
                    c += Rational(1, static_cast<long>(valence(i, k)));
                }
                chi_[triangle_column(n, i, v)] = c;
            }
        }
    }

    [[nodiscard]] auto triangulation() const -> const Triangulation& { return t_; }
    [[nodiscard]] auto tets() const -> std::size_t { return t_.size(); }
    [[nodiscard]] auto edges() const -> const std::vector<EdgeClass>& { return edges_; }
    [[nodiscard]] auto compatibility() const -> const CompatibilitySystem& { return compat_; }

    [[nodiscard]] auto edge_of(std::size_t tet, int k) const -> std::size_t
    {
        return lookup_.at(6 * tet + static_cast<std::size_t>(k));
    }
    [[nodiscard]] auto valence(std::size_t tet, int k) const -> std::size_t
    {
        return edges_[edge_of(tet, k)].valence();
    }

    /** @brief chi* of every disk type in the 7n ordering */
    [[nodiscard]] auto chi_star_weights() const -> const std::vector<Rational>& { return chi_; }

    [[nodiscard]] auto chi_star_disk(const DiskType& d) const -> Rational
    {
        if (const auto* q = std::get_if<QuadType>(&d)) {
            return chi_.at(quad_column(q->tet, q->type));
        }
        const auto& tr = std::get<TriangleType>(d);
        return chi_.at(triangle_column(tets(), tr.tet, tr.vertex));
    }

    [[nodiscard]] auto contains(const NormalCoordinate& s) const -> bool
    {
        check_dim(s);
        return is_in_solution_space(compat_, s);
    }

    [[nodiscard]] auto chi_star(const NormalCoordinate& s) const -> Rational
    {
        check_dim(s);
        return dot(chi_, s.flat());
    }

    /**
     * @brief Half the weighted intersection count of s with edge class e
     * @throws NotInSolutionSpace
     */
    [[nodiscard]] auto z(const NormalCoordinate& s, std::size_t e) const -> Rational
    {
        if (!contains(s)) {
            throw NotInSolutionSpace();
        }
        return z_unchecked(s, e);
    }

    [[nodiscard]] auto z_all(const NormalCoordinate& s) const -> std::vector<Rational>
    {
        if (!contains(s)) {
            throw NotInSolutionSpace();
        }
        std::vector<Rational> out;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            out.push_back(z_unchecked(s, e));
        }
        return out;
    }

    /**
     * @brief Tetrahedral and edge solutions spanning the solution space
     *
     * Verified on every call: membership, rank n+m and the solution-space
     * dimension.
     * @throws BasisError with boundary faces or on failed verification
     */
    [[nodiscard]] auto basis() const -> SolutionBasis
    {
        if (!t_.boundary_faces().empty()) {
            throw BasisError("basis unavailable (boundary faces present)");
        }
        const std::size_t n = tets();
        SolutionBasis b;
        for (std::size_t i = 0; i < n; ++i) {
            b.tetrahedral.push_back(tetrahedral_solution(n, i));
        }
        for (const auto& e : edges_) {
            b.edge.push_back(edge_solution(n, e));
        }
        RationalMatrix stacked(0, 7 * n);
        for (const auto* group : {&b.tetrahedral, &b.edge}) {
            for (const auto& w : *group) {
                if (!contains(w)) {
                    throw BasisError("basis vector outside the solution space");
                }
                stacked.append_row(w.flat());
            }
        }
        const std::size_t m = edges_.size();
        if (rank(stacked) != n + m) {
            throw BasisError("basis vectors are linearly dependent");
        }
        if (7 * n - rank(compat_.matrix) != n + m) {
            throw BasisError("solution space dimension differs from n + m");
        }
        for (std::size_t e = 0; e < m; ++e) {
            for (std::size_t f = 0; f < m; ++f) {
                if (z_unchecked(b.edge[e], f) != (e == f ? 1 : 0)) {
                    throw BasisError("edge solution fails the z cross-check");
                }
            }
        }
        return b;
    }

    /**
     * @brief Coefficients of s in the basis
     * @throws NotInSolutionSpace, BasisError if the edge coefficients disagree with z
     */
    [[nodiscard]] auto decompose(const NormalCoordinate& s) const -> Decomposition
    {
        if (!contains(s)) {
            throw NotInSolutionSpace();
        }
        const auto b = basis();
        const std::size_t n = tets();
        const std::size_t m = edges_.size();
        RationalMatrix cols(7 * n, n + m);
        for (std::size_t c = 0; c < n + m; ++c) {
            const auto v = c < n ? b.tetrahedral[c].flat() : b.edge[c - n].flat();
            for (std::size_t r = 0; r < 7 * n; ++r) {
                cols(r, c) = v[r];
            }
        }
        const auto coeffs = solve_linear(cols, s.flat());
        if (!coeffs) {
            throw BasisError("solution space member not spanned by the basis");
        }
        Decomposition d;
        d.omega.assign(coeffs->begin(), coeffs->begin() + static_cast<std::ptrdiff_t>(n));
        d.z.assign(coeffs->begin() + static_cast<std::ptrdiff_t>(n), coeffs->end());
        for (std::size_t e = 0; e < m; ++e) {
            if (d.z[e] != z_unchecked(s, e)) {
                throw BasisError("decomposition edge coefficient " + std::to_string(e) +
                                 " disagrees with the intersection formula");
            }
        }
        return d;
    }

    /** @brief Sum of omega_i W_sigma_i + z_j W_e_j */
    [[nodiscard]] auto compose(std::span<const Rational> omega, std::span<const Rational> z) const
        -> NormalCoordinate
    {
        const std::size_t n = tets();
        if (omega.size() != n || z.size() != edges_.size()) {
            throw std::invalid_argument("compose: coefficient dimension mismatch");
        }
        NormalCoordinate s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s = s + omega[i] * tetrahedral_solution(n, i);
        }
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            s = s + z[e] * edge_solution(n, edges_[e]);
        }
        return s;
    }

private:
    void check_dim(const NormalCoordinate& s) const
    {
        if (s.tets() != tets()) {
            throw std::invalid_argument("normal coordinate dimension mismatch");
        }
    }

    [[nodiscard]] auto z_unchecked(const NormalCoordinate& s, std::size_t e) const -> Rational
    {
        const auto& ec = edges_.at(e);
        Rational total{0};
        for (const auto& c : ec.corners) {
            const auto [u, v] = kEdgeVertices[static_cast<std::size_t>(c.edge)];
            total += s.tri(c.tet, u) + s.tri(c.tet, v);
            for (int p = 0; p < 3; ++p) {
                if (p != quad_facing(c.edge)) {
                    total += s.quad(c.tet, p);
                }
            }
        }
        return total / Rational(2 * static_cast<long>(ec.valence()));
    }

    Triangulation t_;
    std::vector<EdgeClass> edges_;
    std::vector<std::size_t> lookup_;
    CompatibilitySystem compat_;
    std::vector<Rational> chi_;
};

inline auto chi_star_disk(const Triangulation& t, const DiskType& d) -> Rational
{
    return NormalSpace(t).chi_star_disk(d);
}

inline auto chi_star(const Triangulation& t, const NormalCoordinate& s) -> Rational
{
    return NormalSpace(t).chi_star(s);
}

inline auto z_functional(const Triangulation& t, const NormalCoordinate& s, std::size_t e)
    -> Rational
{
    return NormalSpace(t).z(s, e);
}

inline auto solution_space_basis(const Triangulation& t) -> SolutionBasis
{
    return NormalSpace(t).basis();
}

/** @brief All triangles at the corners of one vertex class set to 1 */
inline auto vertex_linking_class(std::size_t tets, const VertexClass& vc) -> NormalCoordinate
{
    NormalCoordinate s(tets);
    for (const auto& c : vc.corners) {
        s.tri(c.tet, c.vertex) = 1;
    }
    return s;
}

}  // namespace angstruct
