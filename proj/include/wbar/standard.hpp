#pragma once

// Standard simplices, the one-sided decalage, small hand-built complexes,
// and the fundamental-group presentation of a simplicial set.

#include <map>
#include <string>
#include <vector>

#include "wbar/ordinal.hpp"
#include "wbar/simplicial.hpp"
#include "wbar/word.hpp"

namespace wbar {

/// Delta[k]: n-simplices are the monotone maps [n] -> [k].
class StandardSimplex {
public:
    using Simplex = OrdinalMap;

    explicit StandardSimplex(int k);

    int k() const { return k_; }
    std::vector<OrdinalMap> simplices(int n) const { return enumerate_maps(n, k_); }
    OrdinalMap face(int n, int i, const OrdinalMap& x) const { return compose(coface(i, n), x); }
    OrdinalMap degeneracy(int n, int j, const OrdinalMap& x) const {
        return compose(codegeneracy(j, n), x);
    }
    std::string describe(const OrdinalMap& x) const { return x.str(); }

private:
    int k_;
};

/// Dec_0 X: level n is X_{n+1}, structure maps use indices 0..n of X's.
template <SimplicialModel X>
class Dec0 {
public:
    using Simplex = typename X::Simplex;

    explicit Dec0(const X& base) : base_(&base) {}

    std::vector<Simplex> simplices(int n) const { return base_->simplices(n + 1); }
    Simplex face(int n, int i, const Simplex& x) const { return base_->face(n + 1, i, x); }
    Simplex degeneracy(int n, int j, const Simplex& x) const { return base_->degeneracy(n + 1, j, x); }
    std::string describe(const Simplex& x) const { return base_->describe(x); }

    /// The augmentation to X_0: restriction along (d^0)^{n+1} : [0] -> [n+1],
    /// i.e. the last vertex.
    Simplex augmentation(int n, const Simplex& x) const { return act(*base_, shift(0, n + 1), x); }

private:
    const X* base_;
};

/// One vertex and one nondegenerate edge, truncated at N.
TruncatedComplex circle_model(int N);
/// A single vertex, truncated at N.
TruncatedComplex point_model(int N);

/// pi_1 of a simplicial set: generators are the 1-simplices (in enumeration
/// order), relators [s_0 v] and [d_2 x][d_0 x][d_1 x]^-1 for 2-simplices x.
template <SimplicialModel M>
FpPresentation pi1_presentation(const M& model) {
    const auto edges = model.simplices(1);
    std::map<typename M::Simplex, std::size_t> index;
    for (std::size_t i = 0; i < edges.size(); ++i) index.emplace(edges[i], i);
    FpPresentation P;
    P.generator_count = edges.size();
    for (const auto& v : model.simplices(0)) P.relators.push_back(Word::generator(index.at(model.degeneracy(0, 0, v))));
    for (const auto& x : model.simplices(2)) {
        Word r = Word::generator(index.at(model.face(2, 2, x)));
        r *= Word::generator(index.at(model.face(2, 0, x)));
        r *= Word::generator(index.at(model.face(2, 1, x)), -1);
        P.relators.push_back(r);
    }
    return P;
}

}  // namespace wbar
