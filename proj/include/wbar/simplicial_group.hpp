#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wbar/group.hpp"
#include "wbar/ordinal.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

/// A simplicial group with finite levels. Structure maps act on element
/// indices: face(n, i, x) sends K_n to K_{n-1}, degeneracy(n, j, x) sends
/// K_n to K_{n+1}.
class SimplicialGroup {
public:
    using element_type = Element;

    virtual ~SimplicialGroup() = default;
    virtual const Group& level(int n) const = 0;
    virtual Element face(int n, int i, Element x) const = 0;
    virtual Element degeneracy(int n, int j, Element x) const = 0;
    virtual std::string name() const = 0;
    virtual bool is_discrete() const { return false; }

    Element identity(int) const { return 0; }
    std::size_t order(int n) const { return level(n).order(); }
    Element multiply(int n, Element a, Element b) const { return level(n).multiply(a, b); }
    Element inverse(int n, Element a) const { return level(n).inverse(a); }
    std::string describe(int n, Element x) const { return level(n).element_name(x); }

    /// theta^* x for theta: [m] -> [n], x in K_n.
    Element act(const OrdinalMap& theta, Element x) const;
};

/// Every level is G and every structure map is the identity.
class DiscreteSimplicialGroup : public SimplicialGroup {
public:
    explicit DiscreteSimplicialGroup(std::shared_ptr<const FiniteGroup> G) : G_(std::move(G)) {}
    explicit DiscreteSimplicialGroup(FiniteGroup G)
        : G_(std::make_shared<const FiniteGroup>(std::move(G))) {}

    const Group& level(int) const override { return *G_; }
    Element face(int, int, Element x) const override { return x; }
    Element degeneracy(int, int, Element x) const override { return x; }
    std::string name() const override { return "discrete " + G_->name(); }
    bool is_discrete() const override { return true; }

    const FiniteGroup& group() const { return *G_; }

private:
    std::shared_ptr<const FiniteGroup> G_;
};

/// K_n = G^{[n]}, maps from the vertices of [n] to G, with
/// (theta^* g)_t = g_{theta(t)}. Contractible and not discrete; used to
/// exercise face formulas that discrete groups cannot see.
class VertexPowerGroup : public SimplicialGroup {
public:
    VertexPowerGroup(std::shared_ptr<const FiniteGroup> G, int max_level);

    const Group& level(int n) const override;
    Element face(int n, int i, Element x) const override;
    Element degeneracy(int n, int j, Element x) const override;
    std::string name() const override { return "vertex-power " + G_->name(); }

private:
    std::shared_ptr<const FiniteGroup> G_;
    std::vector<std::unique_ptr<PowerGroup>> levels_;
};

/// Checks that every structure map is a homomorphism and that the simplicial
/// identities hold elementwise up to degree max_degree.
Verdict check_simplicial_group(const SimplicialGroup& K, int max_degree);

}  // namespace wbar
