#pragma once

// Principal K-bundles over truncated complexes, presented by a classifying
// map r: B -> W-bar K. The total space is the pullback of WK, written in
// the product model E_n = K_n x B_n:
//
//   d_i (g, b) = ((d_{i+1} (g, r(b)))_top, d_i b)
//
// and K acts on the left of g.
//
// Transition elements use the left-action convention
//   theta^* sigma(b) = alpha(b, theta) . sigma(theta^* b),
// so alpha(b, d^0) is the top entry of r(b) and the cocycle law reads
//   alpha(b, theta phi) = phi^* alpha(b, theta) . alpha(theta^* b, phi).

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "wbar/simplicial.hpp"
#include "wbar/simplicial_group.hpp"
#include "wbar/tau.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

/// r on nondegenerate cells: cells[d][c] is a W-bar tuple of length d.
using ClassifyingData = std::vector<std::vector<std::vector<Element>>>;

struct BundleSimplex {
    Element g = 0;
    SimplexRef b;

    friend auto operator<=>(const BundleSimplex&, const BundleSimplex&) = default;
    friend bool operator==(const BundleSimplex&, const BundleSimplex&) = default;
};

class PrincipalBundle {
public:
    using Simplex = BundleSimplex;

    /// Validates the base and that r commutes with faces on every cell;
    /// throws NotSimplicial naming the offending cell.
    PrincipalBundle(TruncatedComplex base, const SimplicialGroup& K, ClassifyingData r);

    int dim() const { return base_.dim(); }
    const TruncatedComplex& base() const { return base_; }
    const SimplicialGroup& group() const { return *K_; }
    const ClassifyingData& cells() const { return r_; }

    /// r(theta^* c) = theta^* r(c).
    std::vector<Element> r(const SimplexRef& b) const;

    std::vector<BundleSimplex> simplices(int n) const;
    BundleSimplex face(int n, int i, const BundleSimplex& e) const;
    BundleSimplex degeneracy(int n, int j, const BundleSimplex& e) const;
    std::string describe(const BundleSimplex& e) const;

    SimplexRef project(int, const BundleSimplex& e) const { return e.b; }
    BundleSimplex act(int n, Element k, const BundleSimplex& e) const {
        return {K_->multiply(n, k, e.g), e.b};
    }

private:
    TruncatedComplex base_;
    const SimplicialGroup* K_;
    ClassifyingData r_;
};

PrincipalBundle bundle_from_classifying_map(TruncatedComplex B, const SimplicialGroup& K, ClassifyingData r);

/// Identities on E, simplicial projection, equivariance of the structure
/// maps, and that every fibre is a K_n-torsor.
Verdict verify_bundle(const PrincipalBundle& E, int max_degree);

/// Fibre coordinate g of sigma(b) = (g, b), for every b of degree <= dim.
struct PseudoSection {
    std::vector<std::map<SimplexRef, Element>> coordinate;

    Element at(const SimplexRef& b) const;
};

/// sigma(b) = (1, b).
PseudoSection canonical_pseudo_section(const PrincipalBundle& E);
/// sigma(b) = (f(v_0 b), b) for f on vertices, pushed up to K_n along the
/// constant map. Faces d_i with i > 0 and all degeneracies keep vertex 0.
PseudoSection vertex_gauge_section(const PrincipalBundle& E, const std::vector<Element>& f);

/// s_i sigma = sigma s_i for all i and d_i sigma = sigma d_i for i > 0.
Verdict verify_pseudo_section(const PrincipalBundle& E, const PseudoSection& sigma);

class TransitionAssignment {
public:
    TransitionAssignment(const TruncatedComplex& B, const SimplicialGroup& K) : B_(&B), K_(&K) {}

    Element get(const SimplexRef& b, const OrdinalMap& theta) const;
    void set(const SimplexRef& b, const OrdinalMap& theta, Element value) { values_[{b, theta}] = value; }
    bool contains(const SimplexRef& b, const OrdinalMap& theta) const { return values_.count({b, theta}) > 0; }
    std::size_t size() const { return values_.size(); }

    const TruncatedComplex& base() const { return *B_; }
    const SimplicialGroup& group() const { return *K_; }

private:
    const TruncatedComplex* B_;
    const SimplicialGroup* K_;
    std::map<std::pair<SimplexRef, OrdinalMap>, Element> values_;
};

/// alpha(b, theta) for every b of degree <= dim and theta: [m] -> [deg b]
/// with m <= dim, solved from theta^* sigma(b) = alpha . sigma(theta^* b).
TransitionAssignment transition_elements(const PrincipalBundle& E, const PseudoSection& sigma);

/// Cocycle law for every composable pair, and alpha(b, id) = 1.
Verdict transition_functor_check(const TransitionAssignment& alpha);

/// (alpha(b, d^0), alpha(d_0 b, d^0), ..., alpha(d_0^{n-1} b, d^0)).
std::vector<Element> r_hat(const TransitionAssignment& alpha, const SimplexRef& b);

/// r-hat is simplicial into W-bar K and, when `expect_r` is set, equals r.
Verdict verify_r_hat(const PrincipalBundle& E, const TransitionAssignment& alpha, bool expect_r);

/// Bundle round trip: canonical section, transitions, r-hat == r, cocycle law.
Verdict verify_roundtrip(const PrincipalBundle& E);

struct AtlasVerdict {
    /// Chains of N(integral B) of length <= L with ordinals <= M land in
    /// N(tau, integral K).
    Verdict atlas;
    /// r-hat(b) lies in W-bar(tau, K) for every b.
    Verdict factorization;

    bool passed() const { return atlas.passed && factorization.passed; }
};

/// A chain b_0 -> ... -> b_l with b_i = theta_i^* b_{i+1} goes to
/// [n_0] -(theta_0, alpha(b_1, theta_0)^-1)-> ... in the integral of K.
AtlasVerdict tau_atlas_check(const TauDescriptor& tau, const PrincipalBundle& E, const TransitionAssignment& alpha,
                             int chain_length_cap, int ordinal_cap);

/// A random complex of dimension <= max_dim with random simplicial r into
/// W-bar K; cells whose boundary admits no filler are retried, falling back
/// to the boundary of s_0 y.
struct RandomBundleData {
    TruncatedComplex base;
    ClassifyingData r;
};
RandomBundleData random_classified_base(const SimplicialGroup& K, int max_dim, std::uint64_t seed);

/// Base complex, group and r on cells. Only discrete groups serialize.
nlohmann::json bundle_to_json(const PrincipalBundle& E);

struct BundleData {
    std::shared_ptr<const SimplicialGroup> group;
    TruncatedComplex base;
    ClassifyingData r;

    PrincipalBundle make() const { return PrincipalBundle(base, *group, r); }
};
BundleData bundle_from_json(const nlohmann::json& j);

}  // namespace wbar
