#pragma once

// Symbolic free simplicial groups. Levels are free groups and elements are
// reduced words over per-level generator indices; nothing is enumerated
// beyond the generator tables.
//
// Every class here provides
//   using element_type = Word;
//   rank(n), identity(n), multiply(n, a, b), inverse(n, a),
//   face(n, i, w), degeneracy(n, j, w), describe(n, w)

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "wbar/errors.hpp"
#include "wbar/ordinal.hpp"
#include "wbar/simplicial.hpp"
#include "wbar/simplicial_group.hpp"
#include "wbar/standard.hpp"
#include "wbar/verdict.hpp"
#include "wbar/word.hpp"

namespace wbar {

/// Shared plumbing: group operations on words.
struct FreeLevels {
    using element_type = Word;
    Word identity(int) const { return {}; }
    Word multiply(int, const Word& a, const Word& b) const { return a * b; }
    Word inverse(int, const Word& a) const { return a.inverse(); }
};

/// The Kan loop group GX. Level n is free on X_{n+1} minus the image of s_0;
/// d_0[x] = [d_1 x][d_0 x]^-1, d_i[x] = [d_{i+1} x], s_j[x] = [s_{j+1} x].
template <SimplicialModel X>
class LoopGroup : public FreeLevels {
public:
    using Simplex = typename X::Simplex;

    /// Generator tables cover levels 0 .. max_level + 1.
    LoopGroup(const X& base, int max_level) : base_(&base), max_level_(max_level) {
        for (int n = 0; n <= max_level + 1; ++n) {
            auto& gens = gens_.emplace_back();
            auto& index = index_.emplace_back();
            for (const auto& x : base.simplices(n + 1)) {
                if (s0_degenerate(n + 1, x)) continue;
                index.emplace(x, gens.size());
                gens.push_back(x);
            }
        }
    }

    int max_level() const { return max_level_; }
    std::size_t rank(int n) const { return table(n).size(); }
    const Simplex& generator_simplex(int n, std::size_t g) const { return table(n).at(g); }

    /// [x] for x in X_{n+1}, an element of level n.
    Word bracket(int n, const Simplex& x) const {
        if (s0_degenerate(n + 1, x)) return {};
        check(n);
        const auto& index = index_[static_cast<std::size_t>(n)];
        const auto it = index.find(x);
        if (it == index.end()) throw InvalidInput("loop group: simplex not in X_" + std::to_string(n + 1));
        return Word::generator(it->second);
    }

    Word face(int n, int i, const Word& w) const {
        Word out;
        for (const auto& l : w.letters()) {
            const Simplex& x = generator_simplex(n, l.gen);
            Word image = i == 0 ? bracket(n - 1, base_->face(n + 1, 1, x)) *
                                      bracket(n - 1, base_->face(n + 1, 0, x)).inverse()
                                : bracket(n - 1, base_->face(n + 1, i + 1, x));
            out *= image.pow(l.exp);
        }
        return out;
    }

    Word degeneracy(int n, int j, const Word& w) const {
        Word out;
        for (const auto& l : w.letters())
            out *= bracket(n + 1, base_->degeneracy(n + 1, j + 1, generator_simplex(n, l.gen))).pow(l.exp);
        return out;
    }

    std::string describe(int n, const Word& w) const {
        return w.str([&](std::size_t g) { return "[" + base_->describe(generator_simplex(n, g)) + "]"; });
    }

    const X& base() const { return *base_; }

private:
    bool s0_degenerate(int n, const Simplex& x) const {
        return base_->degeneracy(n - 1, 0, base_->face(n, 0, x)) == x;
    }
    void check(int n) const {
        if (n < 0 || n >= static_cast<int>(gens_.size()))
            throw InsufficientTruncation("loop group level " + std::to_string(n) + " beyond truncation");
    }
    const std::vector<Simplex>& table(int n) const {
        check(n);
        return gens_[static_cast<std::size_t>(n)];
    }

    const X* base_;
    int max_level_;
    std::vector<std::vector<Simplex>> gens_;
    std::vector<std::map<Simplex, std::size_t>> index_;
};

/// A generator [phi, e_j] of pi_1 Dec Delta[k]: phi : [n] -> [k], 1 <= j <= phi(0).
struct Pi1DecGenerator {
    OrdinalMap phi;
    int j = 1;
    friend auto operator<=>(const Pi1DecGenerator&, const Pi1DecGenerator&) = default;
};

/// pi_1 Dec Delta[k]: level n is the free product over phi : [n] -> [k] of
/// F^{phi(0)}.
class Pi1Dec : public FreeLevels {
public:
    Pi1Dec(int k, int max_level);

    int k() const { return k_; }
    int max_level() const { return max_level_; }
    std::size_t rank(int n) const { return table(n).size(); }
    const Pi1DecGenerator& generator(int n, std::size_t g) const { return table(n).at(g); }
    Word bracket(int n, const OrdinalMap& phi, int j) const;

    Word face(int n, int i, const Word& w) const;
    Word degeneracy(int n, int j, const Word& w) const;
    std::string describe(int n, const Word& w) const;

    /// The cosimplicial action alpha_* : pi_1 Dec Delta[k] -> pi_1 Dec Delta[k'],
    /// [phi, e_j] -> [alpha phi, e_{alpha(j-1)+1} ... e_{alpha(j)}].
    Word push_forward(const OrdinalMap& alpha, const Pi1Dec& target, int n, const Word& w) const;

private:
    const std::vector<Pi1DecGenerator>& table(int n) const;

    int k_;
    int max_level_;
    std::vector<std::vector<Pi1DecGenerator>> gens_;
    std::vector<std::map<OrdinalMap, std::size_t>> offset_;
};

/// The isomorphism G Delta[k] -> pi_1 Dec Delta[k] and its inverse.
class Epsilon {
public:
    Epsilon(int k, int max_level);

    const LoopGroup<StandardSimplex>& loop() const { return loop_; }
    const Pi1Dec& dec() const { return dec_; }

    /// beta : [n+1] -> [k] with a = beta(0) < b = beta(1) goes to
    /// [beta d^0, e_{a+1} ... e_b].
    Word forward(int n, const Word& w) const;
    /// [phi, e_j] -> [alpha_{j-1}][alpha_j]^-1 with alpha_a = (a, phi(0), ..., phi(n)).
    Word backward(int n, const Word& w) const;

    /// Mutual inverses on generators, ranks equal, and both maps commute with
    /// every d_i and s_j, for levels 0..max_level.
    Verdict verify() const;

private:
    StandardSimplex simplex_;
    LoopGroup<StandardSimplex> loop_;
    Pi1Dec dec_;
};

/// Naturality of epsilon in k along alpha : [k] -> [k'].
Verdict verify_epsilon_naturality(const Epsilon& source, const Epsilon& target, const OrdinalMap& alpha);

/// Checks the simplicial identities on the generators of a symbolic group.
template <class SG>
Verdict check_symbolic_identities(const SG& K, int max_level, std::string name) {
    Verdict v;
    v.map = std::move(name);
    v.max_degree = max_level;
    for (int n = 0; n <= max_level; ++n) {
        for (std::size_t g = 0; g < K.rank(n); ++g) {
            ++v.checked;
            const Word x = Word::generator(g);
            const auto where = " on " + K.describe(n, x) + " at level " + std::to_string(n);
            for (int i = 0; i <= n && n >= 2; ++i)
                for (int j = i + 1; j <= n; ++j)
                    if (K.face(n - 1, i, K.face(n, j, x)) != K.face(n - 1, j - 1, K.face(n, i, x))) {
                        v.fail("d" + std::to_string(i) + "d" + std::to_string(j) + where);
                        return v;
                    }
            if (n == max_level) continue;
            for (int j = 0; j <= n; ++j) {
                const Word s = K.degeneracy(n, j, x);
                for (int i = 0; i <= n + 1; ++i) {
                    Word rhs;
                    if (i < j) rhs = K.degeneracy(n - 1, j - 1, K.face(n, i, x));
                    else if (i <= j + 1) rhs = x;
                    else rhs = K.degeneracy(n - 1, j, K.face(n, i - 1, x));
                    if (K.face(n + 1, i, s) != rhs) {
                        v.fail("d" + std::to_string(i) + "s" + std::to_string(j) + where);
                        return v;
                    }
                }
                for (int i = 0; i <= j && n + 1 <= max_level; ++i)
                    if (K.degeneracy(n + 1, i, s) != K.degeneracy(n + 1, j + 1, K.degeneracy(n, i, x))) {
                        v.fail("s" + std::to_string(i) + "s" + std::to_string(j) + where);
                        return v;
                    }
            }
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Kan suspension and Milnor's construction.

/// A simplex of Sigma K: the basepoint (summand 0) or (i, x) with
/// 1 <= i <= n and x in K_{n-i}, x != 1.
struct SuspensionSimplex {
    int summand = 0;
    Element x = 0;
    friend auto operator<=>(const SuspensionSimplex&, const SuspensionSimplex&) = default;
};

/// Sigma K, (Sigma K)_n = K_{n-1} v ... v K_0, as the reduced cone: the
/// summand i holds cone simplices whose first i vertices are the cone point.
/// theta^*(i, x) = (i', x pulled back along t -> theta(i' + t) - i), where
/// i' = #theta^-1{0..i-1}; i' = 0 or i' = m + 1 give the basepoint.
class KanSuspension {
public:
    using Simplex = SuspensionSimplex;

    explicit KanSuspension(const SimplicialGroup& K) : K_(&K) {}

    std::vector<Simplex> simplices(int n) const;
    Simplex pullback(const OrdinalMap& theta, const Simplex& s) const;
    Simplex face(int n, int i, const Simplex& s) const { return pullback(coface(i, n), s); }
    Simplex degeneracy(int n, int j, const Simplex& s) const { return pullback(codegeneracy(j, n), s); }
    std::string describe(const Simplex& s) const;

    const SimplicialGroup& group() const { return *K_; }

private:
    const SimplicialGroup* K_;
};

/// Milnor's FK: level n free on K_n minus the identity, d_i[x] = [d_i x].
class MilnorFK : public FreeLevels {
public:
    MilnorFK(const SimplicialGroup& K, int max_level) : K_(&K), max_level_(max_level) {}

    std::size_t rank(int n) const { return K_->order(n) - 1; }
    /// [x] for x in K_n; the identity goes to the empty word.
    Word bracket(int, Element x) const { return x == 0 ? Word{} : Word::generator(x - 1); }
    Element generator_element(std::size_t g) const { return static_cast<Element>(g + 1); }

    Word face(int n, int i, const Word& w) const;
    Word degeneracy(int n, int j, const Word& w) const;
    std::string describe(int n, const Word& w) const;

    const SimplicialGroup& group() const { return *K_; }

private:
    const SimplicialGroup* K_;
    int max_level_;
};

/// The generator bijection FK_n -> G(Sigma K)_n, [x] -> [(1, x)], checked
/// against every face and degeneracy in both directions.
Verdict verify_milnor(const MilnorFK& F, const LoopGroup<KanSuspension>& G, int max_level);

}  // namespace wbar
