#pragma once

// Simplicial sets presented as explicit-degree oracles, plus the finite
// truncations used by the homology engine.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbar/errors.hpp"
#include "wbar/ordinal.hpp"
#include "wbar/parallel.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

/// Structure maps only: X_n -> X_{n-1} and X_n -> X_{n+1}. Degrees are
/// passed explicitly because simplices do not have to know their own degree.
template <class M>
concept SimplicialStructure = requires(const M& m, const typename M::Simplex& x, int n, int i) {
    typename M::Simplex;
    { m.face(n, i, x) } -> std::convertible_to<typename M::Simplex>;
    { m.degeneracy(n, i, x) } -> std::convertible_to<typename M::Simplex>;
    { m.describe(x) } -> std::convertible_to<std::string>;
};

/// A structure whose levels can be listed (all simplices, degenerate ones
/// included). Simplices must be totally ordered so levels can be indexed.
template <class M>
concept SimplicialModel = SimplicialStructure<M> && requires(const M& m, int n) {
    { m.simplices(n) } -> std::convertible_to<std::vector<typename M::Simplex>>;
} && std::totally_ordered<typename M::Simplex>;

/// theta^* y through the epi-mono factorisation, given face(n, i, y) and
/// degeneracy(n, j, y) on whatever direction is being acted on.
template <class S, class Face, class Degen>
S act_with(const OrdinalMap& theta, S y, Face&& face, Degen&& degen) {
    const auto [epi, mono] = epi_mono_factor(theta);
    int n = theta.target_dim();
    const auto missing = coface_word(mono);
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) {
        y = face(n, *it, y);
        --n;
    }
    for (int j : codegeneracy_word(epi)) {
        y = degen(n, j, y);
        ++n;
    }
    return y;
}

/// theta^* x for theta: [m] -> [n] and x in X_n.
template <SimplicialStructure M>
typename M::Simplex act(const M& model, const OrdinalMap& theta, const typename M::Simplex& x) {
    return act_with(
        theta, x, [&](int n, int i, const auto& y) { return model.face(n, i, y); },
        [&](int n, int j, const auto& y) { return model.degeneracy(n, j, y); });
}

template <SimplicialStructure M>
bool is_degenerate(const M& model, int n, const typename M::Simplex& x) {
    for (int i = 0; i < n; ++i) {
        if (model.degeneracy(n - 1, i, model.face(n, i, x)) == x) return true;
    }
    return false;
}

/// Checks every simplicial identity on every simplex of degree <= max_degree.
template <SimplicialModel M>
Verdict check_simplicial_identities(const M& model, int max_degree, std::string name = "identities") {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        const auto level = model.simplices(n);
        auto bad = first_failure(level.size(), [&](std::size_t idx) -> std::string {
            const auto& x = level[idx];
            const auto tag = [&](const std::string& what) {
                return what + " on " + model.describe(x) + " (degree " + std::to_string(n) + ")";
            };
            for (int i = 0; i <= n; ++i) {
                for (int j = i + 1; j <= n && n >= 2; ++j) {
                    if (model.face(n - 1, i, model.face(n, j, x)) !=
                        model.face(n - 1, j - 1, model.face(n, i, x)))
                        return tag("d" + std::to_string(i) + "d" + std::to_string(j));
                }
            }
            for (int j = 0; j <= n; ++j) {
                const auto sx = model.degeneracy(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    const auto lhs = model.face(n + 1, i, sx);
                    bool ok;
                    if (i < j) {
                        ok = n >= 1 && lhs == model.degeneracy(n - 1, j - 1, model.face(n, i, x));
                    } else if (i == j || i == j + 1) {
                        ok = lhs == x;
                    } else {
                        ok = lhs == model.degeneracy(n - 1, j, model.face(n, i - 1, x));
                    }
                    if (!ok) return tag("d" + std::to_string(i) + "s" + std::to_string(j));
                }
                for (int i = 0; i <= j; ++i) {
                    if (model.degeneracy(n + 1, i, sx) !=
                        model.degeneracy(n + 1, j + 1, model.degeneracy(n, i, x)))
                        return tag("s" + std::to_string(i) + "s" + std::to_string(j));
                }
            }
            return {};
        });
        v.checked += level.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

/// Checks that f commutes with all faces and degeneracies of simplices of
/// degree <= max_degree. `f(n, x)` maps src_n to dst_n.
template <SimplicialModel Src, SimplicialStructure Dst, class F>
Verdict check_simplicial_map(const Src& src, const Dst& dst, F&& f, int max_degree,
                             std::string name = "map") {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        const auto level = src.simplices(n);
        auto bad = first_failure(level.size(), [&](std::size_t idx) -> std::string {
            const auto& x = level[idx];
            const auto fx = f(n, x);
            for (int i = 0; i <= n && n >= 1; ++i) {
                if (f(n - 1, src.face(n, i, x)) != dst.face(n, i, fx))
                    return "d" + std::to_string(i) + " on " + src.describe(x);
            }
            if (n < max_degree) {
                for (int j = 0; j <= n; ++j) {
                    if (f(n + 1, src.degeneracy(n, j, x)) != dst.degeneracy(n, j, fx))
                        return "s" + std::to_string(j) + " on " + src.describe(x);
                }
            }
            return {};
        });
        v.checked += level.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

/// Checks that a levelwise predicate cuts out a subcomplex.
template <SimplicialModel M, class Member>
Verdict check_subcomplex(const M& model, Member&& member, int max_degree,
                         std::string name = "subcomplex") {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        const auto level = model.simplices(n);
        auto bad = first_failure(level.size(), [&](std::size_t idx) -> std::string {
            const auto& x = level[idx];
            if (!member(n, x)) return {};
            for (int i = 0; i <= n && n >= 1; ++i)
                if (!member(n - 1, model.face(n, i, x)))
                    return "d" + std::to_string(i) + " leaves on " + model.describe(x);
            if (n < max_degree) {
                for (int j = 0; j <= n; ++j)
                    if (!member(n + 1, model.degeneracy(n, j, x)))
                        return "s" + std::to_string(j) + " leaves on " + model.describe(x);
            }
            return {};
        });
        v.checked += level.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Truncated complexes in Eilenberg-Zilber normal form.

/// theta^* c for a nondegenerate cell c, theta a surjection [n] -> [deg c].
struct SimplexRef {
    OrdinalMap degeneracy;
    std::size_t cell = 0;

    int degree() const { return degeneracy.source_dim(); }
    int cell_degree() const { return degeneracy.target_dim(); }
    bool nondegenerate() const { return degeneracy.is_identity(); }

    friend auto operator<=>(const SimplexRef& a, const SimplexRef& b) {
        if (auto c = a.cell_degree() <=> b.cell_degree(); c != 0) return c;
        if (auto c = a.degeneracy <=> b.degeneracy; c != 0) return c;
        return a.cell <=> b.cell;
    }
    friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
};

class TruncatedComplex {
public:
    using Simplex = SimplexRef;

    explicit TruncatedComplex(int dim = 0) : cells_(static_cast<std::size_t>(dim + 1)) {}

    int dim() const { return static_cast<int>(cells_.size()) - 1; }
    std::size_t cell_count(int d) const { return cells_.at(static_cast<std::size_t>(d)).size(); }
    std::vector<std::size_t> cell_counts() const;

    /// Appends a nondegenerate cell of degree d. Faces must have degree d - 1
    /// and refer to existing cells. Returns the new cell's index.
    std::size_t add_cell(int d, std::vector<SimplexRef> faces);
    /// Convenience for vertices.
    std::size_t add_vertex() { return add_cell(0, {}); }

    const std::vector<SimplexRef>& cell_faces(int d, std::size_t c) const {
        return cells_.at(static_cast<std::size_t>(d)).at(c);
    }

    static SimplexRef cell_ref(int d, std::size_t c) { return {OrdinalMap::identity(d), c}; }

    /// Normal form of theta^* s.
    SimplexRef act(const OrdinalMap& theta, const SimplexRef& s) const;

    SimplexRef face(int n, int i, const SimplexRef& s) const;
    SimplexRef degeneracy(int n, int j, const SimplexRef& s) const;
    /// Every simplex of degree n, degenerate ones included; needs n <= dim().
    std::vector<SimplexRef> simplices(int n) const;
    std::string describe(const SimplexRef& s) const;

    /// Re-checks the simplicial identities d_i d_j = d_{j-1} d_i on all cells.
    Verdict validate() const;

    nlohmann::json to_json() const;
    static TruncatedComplex from_json(const nlohmann::json& j);

private:
    // cells_[d][c] = faces d_0 .. d_d of cell c
    std::vector<std::vector<std::vector<SimplexRef>>> cells_;
};

/// A truncation together with the index from model simplices to normal forms.
template <class S>
struct Materialized {
    TruncatedComplex complex;
    std::vector<std::map<S, SimplexRef>> index;

    const SimplexRef& ref(int n, const S& x) const {
        auto it = index.at(static_cast<std::size_t>(n)).find(x);
        if (it == index[static_cast<std::size_t>(n)].end())
            throw InsufficientTruncation("simplex not present in materialized level " +
                                         std::to_string(n));
        return it->second;
    }
};

/// Builds the Eilenberg-Zilber truncation of a model up to degree N.
/// Nondegenerate cells are numbered in the model's enumeration order.
template <SimplicialModel M>
Materialized<typename M::Simplex> materialize(const M& model, int N) {
    using S = typename M::Simplex;
    Materialized<S> out{TruncatedComplex(N), std::vector<std::map<S, SimplexRef>>(
                                                 static_cast<std::size_t>(N + 1))};
    for (int n = 0; n <= N; ++n) {
        auto& here = out.index[static_cast<std::size_t>(n)];
        for (const S& x : model.simplices(n)) {
            bool degenerate = false;
            for (int i = 0; i < n && !degenerate; ++i) {
                const S y = model.face(n, i, x);
                if (model.degeneracy(n - 1, i, y) != x) continue;
                const SimplexRef& ry = out.ref(n - 1, y);
                here.emplace(x, SimplexRef{compose(codegeneracy(i, n - 1), ry.degeneracy), ry.cell});
                degenerate = true;
            }
            if (degenerate) continue;
            std::vector<SimplexRef> faces;
            if (n > 0) {
                faces.reserve(static_cast<std::size_t>(n + 1));
                for (int i = 0; i <= n; ++i) faces.push_back(out.ref(n - 1, model.face(n, i, x)));
            }
            const std::size_t c = out.complex.add_cell(n, std::move(faces));
            here.emplace(x, TruncatedComplex::cell_ref(n, c));
        }
    }
    return out;
}

/// Number of nondegenerate simplices of each degree <= N.
template <SimplicialModel M>
std::vector<std::size_t> nondegenerate_counts(const M& model, int N) {
    std::vector<std::size_t> out;
    for (int n = 0; n <= N; ++n) {
        std::size_t count = 0;
        for (const auto& x : model.simplices(n))
            if (!is_degenerate(model, n, x)) ++count;
        out.push_back(count);
    }
    return out;
}

}  // namespace wbar
