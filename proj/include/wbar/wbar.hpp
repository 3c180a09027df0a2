#pragma once

// The bar construction W-bar K of a simplicial group, its tau-subcomplexes,
// the universal bundle WK, and the comparison maps around them.
//
// A k-simplex is stored top entry first:
//   entries[t] = x_{k-1-t},   t = 0 .. k-1,   x_i in K_i.

#include <functional>
#include <string>
#include <vector>

#include "wbar/errors.hpp"
#include "wbar/loop_group.hpp"
#include "wbar/simplicial.hpp"
#include "wbar/simplicial_group.hpp"
#include "wbar/tau.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

template <class SG>
using WbarTuple = std::vector<typename SG::element_type>;

template <class SG>
WbarTuple<SG> wbar_face(const SG& K, int k, int i, const WbarTuple<SG>& x) {
    if (static_cast<int>(x.size()) != k) throw IndexError("wbar_face: tuple has wrong length");
    if (k < 1 || i < 0 || i > k) throw IndexError("wbar_face: index out of range");
    WbarTuple<SG> out;
    out.reserve(static_cast<std::size_t>(k - 1));
    if (i == 0) {
        out.assign(x.begin() + 1, x.end());
    } else if (i < k) {
        for (int t = 0; t + 1 < i; ++t) out.push_back(K.face(k - 1 - t, i - 1 - t, x[t]));
        out.push_back(K.multiply(k - i - 1, K.face(k - i, 0, x[i - 1]), x[i]));
        out.insert(out.end(), x.begin() + i + 1, x.end());
    } else {
        for (int t = 0; t + 1 < k; ++t) out.push_back(K.face(k - 1 - t, k - 1 - t, x[t]));
    }
    return out;
}

template <class SG>
WbarTuple<SG> wbar_degeneracy(const SG& K, int k, int i, const WbarTuple<SG>& x) {
    if (static_cast<int>(x.size()) != k) throw IndexError("wbar_degeneracy: tuple has wrong length");
    if (i < 0 || i > k) throw IndexError("wbar_degeneracy: index out of range");
    WbarTuple<SG> out;
    out.reserve(static_cast<std::size_t>(k + 1));
    for (int t = 0; t < i; ++t) out.push_back(K.degeneracy(k - 1 - t, i - 1 - t, x[t]));
    out.push_back(K.identity(k - i));
    out.insert(out.end(), x.begin() + i, x.end());
    return out;
}

/// The l-th membership tuple of a W-bar simplex:
/// ((d_0)^{l-1} x_{k-1}, ..., d_0 x_{k-l+1}, x_{k-l}) in K_{k-l}.
std::vector<Element> wbar_membership_tuple(const SimplicialGroup& K, const std::vector<Element>& x, int l);

/// True iff every membership tuple is tau-admissible.
bool wbar_tau_member(const TauDescriptor& tau, const SimplicialGroup& K, const std::vector<Element>& x);

/// W-bar K for a simplicial group with finite levels; with a tau other than
/// Free, the subcomplex W-bar(tau, K).
class Wbar {
public:
    using Simplex = std::vector<Element>;

    explicit Wbar(const SimplicialGroup& K, TauDescriptor tau = {}, std::size_t budget = 1u << 22)
        : K_(&K), tau_(tau), budget_(budget) {}

    /// All (admissible) k-simplices in lexicographic order of entries.
    std::vector<Simplex> simplices(int k) const;
    std::size_t count(int k) const;
    bool member(int k, const Simplex& x) const;

    Simplex face(int k, int i, const Simplex& x) const { return wbar_face(*K_, k, i, x); }
    Simplex degeneracy(int k, int i, const Simplex& x) const { return wbar_degeneracy(*K_, k, i, x); }
    std::string describe(const Simplex& x) const;

    const SimplicialGroup& group() const { return *K_; }
    const TauDescriptor& tau() const { return tau_; }

private:
    template <class Visit>
    void enumerate(int k, Visit&& visit) const;

    const SimplicialGroup* K_;
    TauDescriptor tau_;
    std::size_t budget_;
};

/// W-bar over a symbolic group; structure maps only, no enumeration.
template <class SG>
class SymbolicWbar {
public:
    using Simplex = WbarTuple<SG>;

    explicit SymbolicWbar(const SG& K) : K_(&K) {}

    Simplex face(int k, int i, const Simplex& x) const { return wbar_face(*K_, k, i, x); }
    Simplex degeneracy(int k, int i, const Simplex& x) const { return wbar_degeneracy(*K_, k, i, x); }
    std::string describe(const Simplex& x) const {
        std::string out = "(";
        for (std::size_t t = 0; t < x.size(); ++t) {
            if (t) out += ", ";
            out += K_->describe(static_cast<int>(x.size() - 1 - t), x[t]);
        }
        return out + ")";
    }

private:
    const SG* K_;
};

/// WK_n = W-bar K_{n+1} with d_i = d_{i+1}, s_i = s_{i+1}; entries
/// (g_n, x_{n-1}, ..., x_0). K acts on the left of g_n; the projection to
/// W-bar K is d_0.
class WTotal {
public:
    using Simplex = std::vector<Element>;

    explicit WTotal(const SimplicialGroup& K, std::size_t budget = 1u << 22) : bar_(K, {}, budget) {}

    std::vector<Simplex> simplices(int n) const { return bar_.simplices(n + 1); }
    Simplex face(int n, int i, const Simplex& w) const { return bar_.face(n + 1, i + 1, w); }
    Simplex degeneracy(int n, int j, const Simplex& w) const { return bar_.degeneracy(n + 1, j + 1, w); }
    std::string describe(const Simplex& w) const { return bar_.describe(w); }

    Simplex project(int n, const Simplex& w) const { return bar_.face(n + 1, 0, w); }
    Simplex act(int n, Element g, Simplex w) const;
    const Wbar& base() const { return bar_; }

private:
    Wbar bar_;
};

/// Projection surjective with free K_n-orbits as fibers, and
/// face/degeneracy equivariance, up to max_degree.
Verdict verify_w_total(const WTotal& W, int max_degree);

// ---------------------------------------------------------------------------
// Homomorphisms pi_1 Dec Delta[k] -> K and W-bar tuples.

/// The homomorphism f determined by a k-simplex x of W-bar K:
/// f_n[phi, e_j] = theta^* (d_0)^{l-j} x_{k-j}, where l = phi(0) and
/// theta(t) = phi(t) - l.
class DecodedHom {
public:
    DecodedHom(const SimplicialGroup& K, int k, std::vector<Element> tuple);

    Element image(int n, const OrdinalMap& phi, int j) const;
    Element apply(const Pi1Dec& P, int n, const Word& w) const;
    const std::vector<Element>& tuple() const { return tuple_; }

private:
    const SimplicialGroup* K_;
    int k_;
    std::vector<Element> tuple_;
};

/// x_{k-l} = f_{k-l}[(d^0)^l, e_l].
std::vector<Element> encode_hom(int k, const std::function<Element(int, const OrdinalMap&, int)>& f);

/// For every k-simplex: decode is a simplicial group homomorphism on levels
/// <= max_level, encode(decode(x)) = x, and decode transports the coface and
/// codegeneracy actions to the W-bar faces and degeneracies.
Verdict verify_tuple_bijection(const SimplicialGroup& K, int k, int max_level);

// ---------------------------------------------------------------------------
// Kan suspension comparison.

/// kappa(i, x) has x in the K_{n-i} slot and 1 elsewhere; the basepoint
/// goes to the identity tuple.
std::vector<Element> kappa(int n, const SuspensionSimplex& s);
/// kappa followed by the membership test; throws FactorizationFailure.
std::vector<Element> kappa_tau(const TauDescriptor& tau, const SimplicialGroup& K, int n,
                               const SuspensionSimplex& s);

Verdict verify_kappa(const SimplicialGroup& K, const TauDescriptor& tau, int max_degree);

// ---------------------------------------------------------------------------
// Unit and counit of the loop group adjunction.

/// eta(x) = ([x], [d_0 x], ..., [(d_0)^{n-1} x]).
template <SimplicialModel X>
std::vector<Word> unit_eta(const LoopGroup<X>& GX, int n, const typename X::Simplex& x) {
    std::vector<Word> out;
    typename X::Simplex y = x;
    for (int t = 0; t < n; ++t) {
        out.push_back(GX.bracket(n - 1 - t, y));
        y = GX.base().face(n - t, 0, y);
    }
    return out;
}

template <SimplicialModel X>
Verdict verify_unit(const LoopGroup<X>& GX, int max_degree) {
    SymbolicWbar<LoopGroup<X>> target(GX);
    auto v = check_simplicial_map(
        GX.base(), target, [&](int n, const typename X::Simplex& x) { return unit_eta(GX, n, x); },
        max_degree, "unit eta");
    return v;
}

/// epsilon[(k_n, ..., k_0)] = k_n, extended multiplicatively.
Element counit_epsilon(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int n, const Word& w);
Verdict verify_counit(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int max_level);
/// (W-bar epsilon)(eta(w)) = w on every simplex of degree <= max_degree.
Verdict verify_triangle(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int max_degree);

/// The chain K -> FK = G(Sigma K) -> G W-bar(tau, K) -> G W-bar K -> K.
class SplittingChain {
public:
    SplittingChain(const SimplicialGroup& K, TauDescriptor tau, int max_level);

    /// Pushes x in K_n through all five maps.
    Element composite(int n, Element x) const;
    /// G(kappa_tau) and the counit are homomorphisms commuting with the
    /// structure maps; the composite is the identity on K_n, n <= max_level.
    Verdict verify() const;

    const LoopGroup<KanSuspension>& loop_suspension() const { return g_sigma_; }
    const MilnorFK& milnor() const { return fk_; }

private:
    Word to_loop_suspension(int n, const Word& w) const;
    Word to_loop_wbar_tau(int n, const Word& w) const;
    Word to_loop_wbar(int n, const Word& w) const;

    const SimplicialGroup* K_;
    TauDescriptor tau_;
    int max_level_;
    KanSuspension sigma_;
    LoopGroup<KanSuspension> g_sigma_;
    MilnorFK fk_;
    Wbar bar_tau_;
    Wbar bar_;
    LoopGroup<Wbar> g_bar_tau_;
    LoopGroup<Wbar> g_bar_;
};

/// Counts |W-bar(tau, K)_k| for k = 0..k_max.
std::vector<std::size_t> wbar_counts(const SimplicialGroup& K, const TauDescriptor& tau, int k_max);

/// Levelwise inclusions W-bar(gamma:2) in W-bar(gamma:3) in ... in
/// W-bar(gamma:q_max) in W-bar K, each a subcomplex.
Verdict verify_filtration(const SimplicialGroup& K, int q_max, int max_degree);

}  // namespace wbar
