#pragma once

// Bisimplicial sets and the comparison maps between their condensations.
//
// X_{p,q}: p is the horizontal degree, q the vertical one. hface(p, q, i, x)
// sends X_{p,q} to X_{p-1,q}; vface(p, q, j, x) sends X_{p,q} to X_{p,q-1}.

#include <algorithm>
#include <concepts>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "wbar/errors.hpp"
#include "wbar/ordinal.hpp"
#include "wbar/parallel.hpp"
#include "wbar/simplicial.hpp"
#include "wbar/simplicial_group.hpp"
#include "wbar/tau.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

template <class X>
concept Bisimplicial = requires(const X& b, const typename X::Simplex& x, int p, int q, int i) {
    typename X::Simplex;
    { b.simplices(p, q) } -> std::convertible_to<std::vector<typename X::Simplex>>;
    { b.hface(p, q, i, x) } -> std::convertible_to<typename X::Simplex>;
    { b.hdegeneracy(p, q, i, x) } -> std::convertible_to<typename X::Simplex>;
    { b.vface(p, q, i, x) } -> std::convertible_to<typename X::Simplex>;
    { b.vdegeneracy(p, q, i, x) } -> std::convertible_to<typename X::Simplex>;
    { b.describe(x) } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename X::Simplex>;

/// Visits X_{p,q}, streaming when the object can; visit returns false to stop.
template <Bisimplicial X, class Visit>
void for_each_simplex(const X& b, int p, int q, Visit&& visit) {
    if constexpr (requires { b.for_each(p, q, visit); }) {
        b.for_each(p, q, visit);
    } else {
        for (const auto& x : b.simplices(p, q))
            if (!visit(x)) return;
    }
}

template <SimplicialModel X, class Visit>
void for_each_simplex(const X& model, int n, Visit&& visit) {
    if constexpr (requires { model.for_each(n, visit); }) {
        model.for_each(n, visit);
    } else {
        for (const auto& x : model.simplices(n))
            if (!visit(x)) return;
    }
}

/// Horizontal action theta^*_h on X_{n,q}, theta : [m] -> [n].
template <Bisimplicial X>
typename X::Simplex hact(const X& b, const OrdinalMap& theta, int q, const typename X::Simplex& x) {
    return act_with(
        theta, x, [&](int n, int i, const auto& y) { return b.hface(n, q, i, y); },
        [&](int n, int j, const auto& y) { return b.hdegeneracy(n, q, j, y); });
}

/// Vertical action theta^*_v on X_{p,n}.
template <Bisimplicial X>
typename X::Simplex vact(const X& b, int p, const OrdinalMap& theta, const typename X::Simplex& x) {
    return act_with(
        theta, x, [&](int n, int j, const auto& y) { return b.vface(p, n, j, y); },
        [&](int n, int j, const auto& y) { return b.vdegeneracy(p, n, j, y); });
}

/// The horizontal simplicial set X_{*,q}.
template <Bisimplicial X>
class Row {
public:
    using Simplex = typename X::Simplex;
    Row(const X& b, int q) : b_(&b), q_(q) {}
    std::vector<Simplex> simplices(int n) const { return b_->simplices(n, q_); }
    Simplex face(int n, int i, const Simplex& x) const { return b_->hface(n, q_, i, x); }
    Simplex degeneracy(int n, int j, const Simplex& x) const { return b_->hdegeneracy(n, q_, j, x); }
    std::string describe(const Simplex& x) const { return b_->describe(x); }

private:
    const X* b_;
    int q_;
};

/// The vertical simplicial set X_{p,*}.
template <Bisimplicial X>
class Column {
public:
    using Simplex = typename X::Simplex;
    Column(const X& b, int p) : b_(&b), p_(p) {}
    std::vector<Simplex> simplices(int n) const { return b_->simplices(p_, n); }
    Simplex face(int n, int i, const Simplex& x) const { return b_->vface(p_, n, i, x); }
    Simplex degeneracy(int n, int j, const Simplex& x) const { return b_->vdegeneracy(p_, n, j, x); }
    std::string describe(const Simplex& x) const { return b_->describe(x); }

private:
    const X* b_;
    int p_;
};

/// Both families of simplicial identities, and horizontal maps commuting
/// with vertical ones, on X_{p,q} for p <= max_p, q <= max_q.
template <Bisimplicial X>
Verdict check_bisimplicial(const X& b, int max_p, int max_q, std::string name = "bisimplicial") {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = std::max(max_p, max_q);
    v.caps = {{"p", max_p}, {"q", max_q}};
    for (int q = 0; q <= max_q && v.passed; ++q)
        v.absorb(check_simplicial_identities(Row<X>(b, q), max_p, "row " + std::to_string(q)));
    for (int p = 0; p <= max_p && v.passed; ++p)
        v.absorb(check_simplicial_identities(Column<X>(b, p), max_q, "column " + std::to_string(p)));
    if (!v.passed) return v;
    for (int p = 0; p <= max_p; ++p)
        for (int q = 0; q <= max_q; ++q) {
            using S = typename X::Simplex;
            const auto bad = batched_first_failure<S>(
                [&](auto&& visit) { for_each_simplex(b, p, q, visit); },
                [&](const S& x) -> std::string {
                    const auto at = [&](std::string what) {
                        return what + " at (" + std::to_string(p) + "," + std::to_string(q) + ") " + b.describe(x);
                    };
                    for (int i = 0; i <= p; ++i)
                        for (int j = 0; j <= q; ++j) {
                            if (p >= 1 && q >= 1 &&
                                b.hface(p, q - 1, i, b.vface(p, q, j, x)) != b.vface(p - 1, q, j, b.hface(p, q, i, x)))
                                return at("d" + std::to_string(i) + "h d" + std::to_string(j) + "v");
                            if (b.hdegeneracy(p, q + 1, i, b.vdegeneracy(p, q, j, x)) !=
                                b.vdegeneracy(p + 1, q, j, b.hdegeneracy(p, q, i, x)))
                                return at("s" + std::to_string(i) + "h s" + std::to_string(j) + "v");
                            if (p >= 1 &&
                                b.hface(p, q + 1, i, b.vdegeneracy(p, q, j, x)) != b.vdegeneracy(p - 1, q, j, b.hface(p, q, i, x)))
                                return at("d" + std::to_string(i) + "h s" + std::to_string(j) + "v");
                            if (q >= 1 &&
                                b.hdegeneracy(p, q - 1, i, b.vface(p, q, j, x)) != b.vface(p + 1, q, j, b.hdegeneracy(p, q, i, x)))
                                return at("s" + std::to_string(i) + "h d" + std::to_string(j) + "v");
                        }
                    return {};
                },
                v.checked);
            if (bad) {
                v.fail(*bad);
                return v;
            }
        }
    return v;
}

/// Checks that f(n, x) commutes with faces and degeneracies, streaming the
/// source levels. Same contract as check_simplicial_map; extra(n, x, fx)
/// may add a per-simplex condition (empty string means it holds).
template <SimplicialModel Src, SimplicialStructure Dst, class F, class Extra>
Verdict check_simplicial_map_streaming(const Src& src, const Dst& dst, F&& f, int max_degree, std::string name,
                                       Extra&& extra) {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = max_degree;
    using S = typename Src::Simplex;
    for (int n = 0; n <= max_degree; ++n) {
        const auto bad = batched_first_failure<S>(
            [&](auto&& visit) { for_each_simplex(src, n, visit); },
            [&](const S& x) -> std::string {
                const auto fx = f(n, x);
                for (int i = 0; i <= n && n >= 1; ++i)
                    if (f(n - 1, src.face(n, i, x)) != dst.face(n, i, fx))
                        return "d" + std::to_string(i) + " on " + src.describe(x);
                if (n < max_degree)
                    for (int j = 0; j <= n; ++j)
                        if (f(n + 1, src.degeneracy(n, j, x)) != dst.degeneracy(n, j, fx))
                            return "s" + std::to_string(j) + " on " + src.describe(x);
                return extra(n, x, fx);
            },
            v.checked);
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

template <SimplicialModel Src, SimplicialStructure Dst, class F>
Verdict check_simplicial_map_streaming(const Src& src, const Dst& dst, F&& f, int max_degree,
                                       std::string name = "map") {
    return check_simplicial_map_streaming(src, dst, std::forward<F>(f), max_degree, std::move(name),
                                          [](int, const auto&, const auto&) { return std::string{}; });
}

// ---------------------------------------------------------------------------
// Diagonal, total simplicial set, transpose.

template <Bisimplicial X>
class Diagonal {
public:
    using Simplex = typename X::Simplex;

    explicit Diagonal(const X& b) : b_(&b) {}

    std::vector<Simplex> simplices(int n) const { return b_->simplices(n, n); }
    template <class Visit>
    void for_each(int n, Visit&& visit) const {
        for_each_simplex(*b_, n, n, visit);
    }
    Simplex face(int n, int i, const Simplex& x) const { return b_->hface(n, n - 1, i, b_->vface(n, n, i, x)); }
    Simplex degeneracy(int n, int j, const Simplex& x) const {
        return b_->hdegeneracy(n, n + 1, j, b_->vdegeneracy(n, n, j, x));
    }
    std::string describe(const Simplex& x) const { return b_->describe(x); }

    const X& base() const { return *b_; }

private:
    const X* b_;
};

/// TX_n = {(x_0, ..., x_n) : x_i in X_{i,n-i}, d_0^v x_i = d_{i+1}^h x_{i+1}}.
template <Bisimplicial X>
class Total {
public:
    using Component = typename X::Simplex;
    using Simplex = std::vector<Component>;

    explicit Total(const X& b) : b_(&b) {}

    /// Enumerates by choosing x_0, then each x_{i+1} from an index of
    /// X_{i+1,n-i-1} keyed by d_{i+1}^h; the order is lexicographic.
    template <class Visit>
    void for_each(int n, Visit&& visit) const {
        std::vector<std::map<Component, std::vector<Component>>> index(static_cast<std::size_t>(n + 1));
        for (int i = 1; i <= n; ++i) {
            auto& idx = index[static_cast<std::size_t>(i)];
            for_each_simplex(*b_, i, n - i, [&](const Component& y) {
                idx[b_->hface(i, n - i, i, y)].push_back(y);
                return true;
            });
            for (auto& [key, list] : idx) std::sort(list.begin(), list.end());
        }
        auto firsts = b_->simplices(0, n);
        std::sort(firsts.begin(), firsts.end());
        Simplex cur;
        cur.reserve(static_cast<std::size_t>(n + 1));
        bool go = true;
        const auto extend = [&](const auto& self, int i) -> void {
            if (i == n) {
                go = visit(static_cast<const Simplex&>(cur));
                return;
            }
            const auto& idx = index[static_cast<std::size_t>(i + 1)];
            const auto it = idx.find(b_->vface(i, n - i, 0, cur.back()));
            if (it == idx.end()) return;
            for (const auto& y : it->second) {
                cur.push_back(y);
                self(self, i + 1);
                cur.pop_back();
                if (!go) return;
            }
        };
        for (const auto& x0 : firsts) {
            cur.assign(1, x0);
            extend(extend, 0);
            if (!go) return;
        }
    }

    std::vector<Simplex> simplices(int n) const {
        std::vector<Simplex> out;
        for_each(n, [&](const Simplex& t) {
            out.push_back(t);
            return true;
        });
        return out;
    }

    std::size_t count(int n) const {
        std::size_t c = 0;
        for_each(n, [&](const Simplex&) {
            ++c;
            return true;
        });
        return c;
    }

    /// The matching condition only; components are assumed to lie in X.
    bool matched(int n, const Simplex& t) const {
        if (static_cast<int>(t.size()) != n + 1) return false;
        for (int i = 0; i < n; ++i)
            if (b_->vface(i, n - i, 0, t[static_cast<std::size_t>(i)]) !=
                b_->hface(i + 1, n - i - 1, i + 1, t[static_cast<std::size_t>(i + 1)]))
                return false;
        return true;
    }

    Simplex face(int n, int i, const Simplex& t) const {
        Simplex out;
        out.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < i; ++j) out.push_back(b_->vface(j, n - j, i - j, t[static_cast<std::size_t>(j)]));
        for (int j = i; j < n; ++j) out.push_back(b_->hface(j + 1, n - j - 1, i, t[static_cast<std::size_t>(j + 1)]));
        return out;
    }

    Simplex degeneracy(int n, int i, const Simplex& t) const {
        Simplex out;
        out.reserve(static_cast<std::size_t>(n + 2));
        for (int j = 0; j <= i; ++j) out.push_back(b_->vdegeneracy(j, n - j, i - j, t[static_cast<std::size_t>(j)]));
        for (int j = i + 1; j <= n + 1; ++j)
            out.push_back(b_->hdegeneracy(j - 1, n + 1 - j, i, t[static_cast<std::size_t>(j - 1)]));
        return out;
    }

    std::string describe(const Simplex& t) const {
        std::string out = "<";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) out += " | ";
            out += b_->describe(t[i]);
        }
        return out + ">";
    }

    const X& base() const { return *b_; }

private:
    const X* b_;
};

template <Bisimplicial X>
class Transpose {
public:
    using Simplex = typename X::Simplex;

    explicit Transpose(const X& b) : b_(&b) {}

    std::vector<Simplex> simplices(int p, int q) const { return b_->simplices(q, p); }
    template <class Visit>
    void for_each(int p, int q, Visit&& visit) const {
        for_each_simplex(*b_, q, p, visit);
    }
    Simplex hface(int p, int q, int i, const Simplex& x) const { return b_->vface(q, p, i, x); }
    Simplex hdegeneracy(int p, int q, int i, const Simplex& x) const { return b_->vdegeneracy(q, p, i, x); }
    Simplex vface(int p, int q, int j, const Simplex& x) const { return b_->hface(q, p, j, x); }
    Simplex vdegeneracy(int p, int q, int j, const Simplex& x) const { return b_->hdegeneracy(q, p, j, x); }
    std::string describe(const Simplex& x) const { return b_->describe(x); }

    const X& base() const { return *b_; }

private:
    const X* b_;
};

/// CR(x) for x in X_{l,l}: component i is (d_{i+1}^h)^{l-i} (d_0^v)^i x.
template <Bisimplicial X>
typename Total<X>::Simplex cr_map(const X& b, int l, const typename X::Simplex& x) {
    typename Total<X>::Simplex out;
    out.reserve(static_cast<std::size_t>(l + 1));
    auto y = x;
    for (int i = 0; i <= l; ++i) {
        if (i > 0) y = b.vface(l, l - i + 1, 0, y);
        auto z = y;
        for (int p = l; p > i; --p) z = b.hface(p, l - i, i + 1, z);
        out.push_back(std::move(z));
    }
    return out;
}

/// CR is simplicial dX -> TX and lands on matched tuples.
template <Bisimplicial X>
Verdict verify_cr(const X& b, int max_degree, std::string name = "CR") {
    const Diagonal<X> diag(b);
    const Total<X> total(b);
    return check_simplicial_map_streaming(
        diag, total, [&](int n, const typename X::Simplex& x) { return cr_map(b, n, x); }, max_degree,
        std::move(name), [&](int n, const typename X::Simplex& x, const typename Total<X>::Simplex& t) {
            return total.matched(n, t) ? std::string{} : "unmatched image of " + b.describe(x);
        });
}

// ---------------------------------------------------------------------------
// The nerve of a simplicial group, levelwise.

/// NK_{p,q} = N(K_q)_p = K_q^p, or the tau-admissible p-tuples when tau is
/// not Free. Horizontal maps are those of the bar construction of K_q;
/// vertical maps act entrywise.
class GroupNerve {
public:
    using Simplex = std::vector<Element>;

    explicit GroupNerve(const SimplicialGroup& K, TauDescriptor tau = {}, std::size_t budget = 1u << 22)
        : K_(&K), tau_(tau), budget_(budget) {}

    std::vector<Simplex> simplices(int p, int q) const;
    bool member(int p, int q, const Simplex& g) const;

    Simplex hface(int p, int q, int i, const Simplex& g) const;
    Simplex hdegeneracy(int p, int q, int i, const Simplex& g) const;
    Simplex vface(int p, int q, int j, const Simplex& g) const;
    Simplex vdegeneracy(int p, int q, int j, const Simplex& g) const;
    std::string describe(const Simplex& g) const;

    const SimplicialGroup& group() const { return *K_; }
    const TauDescriptor& tau() const { return tau_; }

private:
    const SimplicialGroup* K_;
    TauDescriptor tau_;
    std::size_t budget_;
};

/// W-bar K -> TNK: component i is the i-th membership tuple.
std::vector<GroupNerve::Simplex> wbar_to_total(const SimplicialGroup& K, int n, const std::vector<Element>& x);
/// The inverse: entries[t] is the last entry of component t + 1.
std::vector<Element> total_to_wbar(int n, const std::vector<GroupNerve::Simplex>& t);

/// W-bar(tau, K) -> TN(tau, K) is a simplicial bijection with the stated
/// inverse, on degrees <= max_degree.
Verdict verify_wbar_total_iso(const SimplicialGroup& K, const TauDescriptor& tau, int max_degree);

// ---------------------------------------------------------------------------
// Chains in the simplex category.

/// [n_0] -> ... -> [n_q], maps[i] : [n_i] -> [n_{i+1}].
struct DeltaChain {
    std::vector<int> ordinals;
    std::vector<OrdinalMap> maps;

    int length() const { return static_cast<int>(maps.size()); }
    int last() const { return ordinals.back(); }
    std::string str() const;

    friend auto operator<=>(const DeltaChain&, const DeltaChain&) = default;
    friend bool operator==(const DeltaChain&, const DeltaChain&) = default;
};

DeltaChain chain_face(const DeltaChain& c, int i);
DeltaChain chain_degeneracy(const DeltaChain& c, int j);
/// The first i + 1 objects and i maps.
DeltaChain chain_prefix(const DeltaChain& c, int i);
/// All chains of length q with every ordinal <= cap, lexicographic.
std::vector<DeltaChain> enumerate_chains(int q, int cap);
/// Throws CapExceeded when an ordinal is above cap.
void check_chain_cap(const DeltaChain& c, int cap);

/// The nerve of the simplex category restricted to ordinals <= cap.
class DeltaNerve {
public:
    using Simplex = DeltaChain;
    explicit DeltaNerve(int cap) : cap_(cap) {}
    std::vector<DeltaChain> simplices(int q) const { return enumerate_chains(q, cap_); }
    DeltaChain face(int, int i, const DeltaChain& c) const { return chain_face(c, i); }
    DeltaChain degeneracy(int, int j, const DeltaChain& c) const { return chain_degeneracy(c, j); }
    std::string describe(const DeltaChain& c) const { return c.str(); }

private:
    int cap_;
};

// ---------------------------------------------------------------------------
// The fat resolution Psi X.

template <class S>
struct PsiSimplex {
    DeltaChain chain;
    S x;
    friend auto operator<=>(const PsiSimplex&, const PsiSimplex&) = default;
    friend bool operator==(const PsiSimplex&, const PsiSimplex&) = default;
};

/// (Psi X)_{p,q}: a q-chain sigma = [n_0] -> ... -> [n_q] and x in X_{p,n_q}.
/// Horizontal maps act on x; vertical ones act on sigma, with the last face
/// also pulling x back along the last map. Ordinals are capped.
template <Bisimplicial X>
class Psi {
public:
    using Simplex = PsiSimplex<typename X::Simplex>;

    Psi(const X& base, int cap) : base_(&base), cap_(cap) {}

    template <class Visit>
    void for_each(int p, int q, Visit&& visit) const {
        std::vector<std::vector<typename X::Simplex>> levels(static_cast<std::size_t>(cap_ + 1));
        std::vector<bool> loaded(static_cast<std::size_t>(cap_ + 1), false);
        for (const auto& chain : enumerate_chains(q, cap_)) {
            const auto n = static_cast<std::size_t>(chain.last());
            if (!loaded[n]) {
                levels[n] = base_->simplices(p, chain.last());
                loaded[n] = true;
            }
            for (const auto& x : levels[n]) {
                if (!visit(Simplex{chain, x})) return;
            }
        }
    }

    std::vector<Simplex> simplices(int p, int q) const {
        std::vector<Simplex> out;
        for_each(p, q, [&](const Simplex& s) {
            out.push_back(s);
            return true;
        });
        return out;
    }

    Simplex hface(int p, int, int i, const Simplex& s) const {
        check_chain_cap(s.chain, cap_);
        return {s.chain, base_->hface(p, s.chain.last(), i, s.x)};
    }
    Simplex hdegeneracy(int p, int, int i, const Simplex& s) const {
        check_chain_cap(s.chain, cap_);
        return {s.chain, base_->hdegeneracy(p, s.chain.last(), i, s.x)};
    }
    Simplex vface(int p, int q, int j, const Simplex& s) const {
        check_chain_cap(s.chain, cap_);
        if (q < 1 || j < 0 || j > q) throw IndexError("Psi: vertical face index out of range");
        if (j < q) return {chain_face(s.chain, j), s.x};
        return {chain_face(s.chain, q), vact(*base_, p, s.chain.maps.back(), s.x)};
    }
    Simplex vdegeneracy(int, int, int j, const Simplex& s) const {
        check_chain_cap(s.chain, cap_);
        return {chain_degeneracy(s.chain, j), s.x};
    }
    std::string describe(const Simplex& s) const { return "(" + s.chain.str() + ", " + base_->describe(s.x) + ")"; }

    const X& base() const { return *base_; }
    int cap() const { return cap_; }

private:
    const X* base_;
    int cap_;
};

/// BK(sigma, x) = u^*_v x with u(i) = theta_{l-1} ... theta_i (n_i).
template <Bisimplicial X>
typename X::Simplex bk_map(const Psi<X>& psi, int l, const typename Psi<X>::Simplex& s) {
    check_chain_cap(s.chain, psi.cap());
    if (s.chain.length() != l) throw IndexError("BK: chain length differs from degree");
    std::vector<int> u(static_cast<std::size_t>(l + 1));
    for (int i = 0; i <= l; ++i) {
        int v = s.chain.ordinals[static_cast<std::size_t>(i)];
        for (int t = i; t < l; ++t) v = s.chain.maps[static_cast<std::size_t>(t)](v);
        u[static_cast<std::size_t>(i)] = v;
    }
    return vact(psi.base(), l, OrdinalMap(std::move(u), s.chain.last() + 1), s.x);
}

/// BK is simplicial d Psi X -> dX. The diagonal of the transpose Psi'X is
/// the same simplicial set, so this also covers d Psi'X -> dX.
template <Bisimplicial X>
Verdict verify_bk(const Psi<X>& psi, int max_degree, std::string name = "BK") {
    auto v = check_simplicial_map_streaming(
        Diagonal<Psi<X>>(psi), Diagonal<X>(psi.base()),
        [&](int n, const typename Psi<X>::Simplex& s) { return bk_map(psi, n, s); }, max_degree, std::move(name));
    v.caps.emplace_back("ordinal", psi.cap());
    return v;
}

// ---------------------------------------------------------------------------
// The Grothendieck construction of a simplicial group.

/// [n_0] -(theta_0, k_0)-> ... -(theta_{l-1}, k_{l-1})-> [n_l], k_i in K_{n_i}.
struct IntChain {
    std::vector<int> ordinals;
    std::vector<OrdinalMap> maps;
    std::vector<Element> elems;

    int length() const { return static_cast<int>(maps.size()); }
    std::string str() const;

    friend auto operator<=>(const IntChain&, const IntChain&) = default;
    friend bool operator==(const IntChain&, const IntChain&) = default;
};

/// (k_i, theta_i^* k_{i+1}, ..., theta_i^* ... theta_{l-2}^* k_{l-1}) in K_{n_i}.
std::vector<Element> int_chain_tuple(const SimplicialGroup& K, const IntChain& c, int i);
/// Every int_chain_tuple is tau-admissible.
bool int_chain_member(const TauDescriptor& tau, const SimplicialGroup& K, const IntChain& c);

/// N(integral K) with ordinals <= cap, or N(tau, integral K). Composition is
/// (theta, k)(phi, k') = (theta phi, k' . phi^* k).
class GrothendieckNerve {
public:
    using Simplex = IntChain;

    GrothendieckNerve(const SimplicialGroup& K, int cap, TauDescriptor tau = {}, std::size_t budget = 1u << 24);

    template <class Visit>
    void for_each(int l, Visit&& visit) const {
        for (const auto& chain : enumerate_chains(l, cap_)) {
            bool go = true;
            for_each_labelling(chain, [&](const IntChain& c) { return go = visit(c); });
            if (!go) return;
        }
    }
    std::vector<IntChain> simplices(int l) const;
    std::size_t count(int l) const;
    bool member(const IntChain& c) const;

    IntChain face(int l, int i, const IntChain& c) const;
    IntChain degeneracy(int l, int j, const IntChain& c) const;
    std::string describe(const IntChain& c) const { return c.str(); }

    const SimplicialGroup& group() const { return *K_; }
    const TauDescriptor& tau() const { return tau_; }
    int cap() const { return cap_; }

private:
    /// Every admissible element labelling of a Delta-chain, lexicographic.
    void for_each_labelling(const DeltaChain& chain, const std::function<bool(const IntChain&)>& visit) const;

    const SimplicialGroup* K_;
    int cap_;
    TauDescriptor tau_;
    std::size_t budget_;
};

// ---------------------------------------------------------------------------
// The Tonks isomorphism N(integral K) -> T Psi' NK.

class Tonks {
public:
    using Nerve = GroupNerve;
    using PsiN = Psi<GroupNerve>;
    using PsiPrime = Transpose<PsiN>;
    using Target = Total<PsiPrime>;

    Tonks(const SimplicialGroup& K, int cap, TauDescriptor tau = {});
    Tonks(const Tonks&) = delete;
    Tonks& operator=(const Tonks&) = delete;

    /// Component i: (the first i maps, int_chain_tuple(c, i)) in (Psi'NK)_{i,l-i}.
    Target::Simplex forward(int l, const IntChain& c) const;
    /// Chain from the last component; k_i is the first entry of component i.
    IntChain backward(int l, const Target::Simplex& t) const;

    /// forward is simplicial; both composites are identities; level counts
    /// agree; membership in the tau-subobjects is preserved both ways.
    Verdict verify(int max_degree) const;

    const GrothendieckNerve& source() const { return source_; }
    const GroupNerve& nerve() const { return nerve_; }
    const PsiN& psi() const { return psi_; }
    const PsiPrime& psi_prime() const { return prime_; }
    const Target& target() const { return target_; }

private:
    const SimplicialGroup* K_;
    GrothendieckNerve source_;
    GroupNerve nerve_;
    PsiN psi_;
    PsiPrime prime_;
    Target target_;
};

/// The zigzag
///   N(tau, int K) -> T Psi' N(tau,K) <-CR- d Psi' N(tau,K) -BK-> d N(tau,K)
///   -CR-> T N(tau,K) -> W-bar(tau, K),
/// each step checked as a simplicial map within the caps.
Verdict verify_zigzag(const SimplicialGroup& K, const TauDescriptor& tau, int cap, int max_degree);

// ---------------------------------------------------------------------------
// Total decalage of a simplicial set and the model D[k] of Dec Delta[k].

template <SimplicialModel X>
class DecTotal {
public:
    using Simplex = typename X::Simplex;

    explicit DecTotal(const X& base) : base_(&base) {}

    std::vector<Simplex> simplices(int m, int n) const { return base_->simplices(m + n + 1); }
    Simplex hface(int m, int n, int i, const Simplex& x) const { return base_->face(m + n + 1, i, x); }
    Simplex hdegeneracy(int m, int n, int i, const Simplex& x) const { return base_->degeneracy(m + n + 1, i, x); }
    Simplex vface(int m, int n, int j, const Simplex& x) const { return base_->face(m + n + 1, m + 1 + j, x); }
    Simplex vdegeneracy(int m, int n, int j, const Simplex& x) const {
        return base_->degeneracy(m + n + 1, m + 1 + j, x);
    }
    std::string describe(const Simplex& x) const { return base_->describe(x); }

private:
    const X* base_;
};

/// (phi : [n] -> [k], theta : [m] -> [phi(0)]).
struct DSimplex {
    OrdinalMap phi;
    OrdinalMap theta;
    friend auto operator<=>(const DSimplex&, const DSimplex&) = default;
    friend bool operator==(const DSimplex&, const DSimplex&) = default;
};

/// D[k]_{m,n} = coproduct over phi : [n] -> [k] of Delta[phi(0)]_m.
class DModel {
public:
    using Simplex = DSimplex;

    explicit DModel(int k) : k_(k) {}

    std::vector<DSimplex> simplices(int m, int n) const;
    DSimplex hface(int m, int n, int i, const DSimplex& s) const;
    DSimplex hdegeneracy(int m, int n, int i, const DSimplex& s) const;
    DSimplex vface(int m, int n, int j, const DSimplex& s) const;
    DSimplex vdegeneracy(int m, int n, int j, const DSimplex& s) const;
    std::string describe(const DSimplex& s) const;

    int k() const { return k_; }

private:
    int k_;
};

/// g(phi, theta) : [m + n + 1] -> [k], theta on [m] and phi on the rest.
OrdinalMap dec_g(const DSimplex& s);
/// alpha -> (alpha (d^0)^{m+1}, alpha restricted to [m]).
DSimplex dec_g_inverse(const OrdinalMap& alpha, int m);

/// g is a bijection on each level (m, n) and commutes with all horizontal
/// and vertical structure maps.
Verdict verify_dec_iso(int k, int max_m, int max_n);

}  // namespace wbar
