#include <gtest/gtest.h>

#include "wbar/bisimplicial.hpp"
#include "wbar/errors.hpp"
#include "wbar/standard.hpp"
#include "wbar/wbar.hpp"

using namespace wbar;

namespace {

std::shared_ptr<const FiniteGroup> shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

std::uint64_t binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

// Chains of length q through ordinals <= cap, by a transfer matrix of
// binomial map counts.
std::uint64_t chain_count(int q, int cap) {
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(cap + 1), 1);
    for (int step = 0; step < q; ++step) {
        std::vector<std::uint64_t> next(ways.size(), 0);
        for (int a = 0; a <= cap; ++a)
            for (int b = 0; b <= cap; ++b) next[static_cast<std::size_t>(b)] += ways[static_cast<std::size_t>(a)] * binom(a + b + 1, a + 1);
        ways = next;
    }
    std::uint64_t total = 0;
    for (auto w : ways) total += w;
    return total;
}

bool commute(const Group& G, Element a, Element b) { return G.multiply(a, b) == G.multiply(b, a); }

}  // namespace

TEST(GroupNerve, IsBisimplicial) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    EXPECT_TRUE(check_bisimplicial(GroupNerve(S3), 3, 3).passed);
    EXPECT_TRUE(check_bisimplicial(GroupNerve(S3, TauDescriptor::lower_central(2)), 3, 2).passed);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 5);
    const auto v = check_bisimplicial(GroupNerve(V), 3, 3);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
}

TEST(GroupNerve, FaceFormulas) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const GroupNerve N(S3);
    const auto& G = S3.level(0);
    EXPECT_EQ(N.hface(3, 0, 0, {1, 2, 3}), (std::vector<Element>{2, 3}));
    EXPECT_EQ(N.hface(3, 0, 1, {1, 2, 3}), (std::vector<Element>{G.multiply(1, 2), 3}));
    EXPECT_EQ(N.hface(3, 0, 3, {1, 2, 3}), (std::vector<Element>{1, 2}));
    EXPECT_EQ(N.hdegeneracy(0, 0, 0, {}), (std::vector<Element>{0}));
    EXPECT_EQ(N.hdegeneracy(2, 0, 1, {4, 5}), (std::vector<Element>{4, 0, 5}));
    EXPECT_THROW(N.hface(2, 0, 3, {1, 2}), IndexError);
}

TEST(Diagonal, ConstantInQ) {
    // For a discrete group NK does not depend on q, so dNK is the nerve.
    const DiscreteSimplicialGroup Z4(FiniteGroup::cyclic(4));
    const GroupNerve N(Z4);
    const Diagonal<GroupNerve> d(N);
    const Row<GroupNerve> row(N, 0);
    for (int n = 0; n <= 3; ++n) {
        EXPECT_EQ(d.simplices(n), row.simplices(n));
        for (const auto& x : d.simplices(n))
            for (int i = 0; i <= n && n > 0; ++i) EXPECT_EQ(d.face(n, i, x), row.face(n, i, x));
    }
    EXPECT_TRUE(check_simplicial_identities(d, 3).passed);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 5);
    EXPECT_TRUE(check_simplicial_identities(Diagonal<GroupNerve>(GroupNerve(V)), 3).passed);
}

TEST(Total, IdentitiesAndCounts) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const GroupNerve N2(S3, TauDescriptor::lower_central(2));
    const Total<GroupNerve> T2(N2);
    EXPECT_EQ(T2.count(2), 18u);
    EXPECT_EQ(T2.count(3), 48u);
    EXPECT_TRUE(check_simplicial_identities(T2, 3).passed);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 5);
    const GroupNerve NV(V);
    const Total<GroupNerve> TV(NV);
    EXPECT_EQ(TV.count(2), Wbar(V).count(2));
    EXPECT_TRUE(check_simplicial_identities(TV, 3).passed);
    const auto level = TV.simplices(2);
    EXPECT_TRUE(std::is_sorted(level.begin(), level.end()));
    for (const auto& t : level) EXPECT_TRUE(TV.matched(2, t));
}

TEST(Total, WbarIsomorphism) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3)), Z4(FiniteGroup::cyclic(4));
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 5);
    const VertexPowerGroup V3(shared(FiniteGroup::symmetric(3)), 4);
    for (const auto& [K, tau, deg] : std::vector<std::tuple<const SimplicialGroup*, TauDescriptor, int>>{
             {&S3, {}, 3},
             {&S3, TauDescriptor::lower_central(2), 3},
             {&Z4, TauDescriptor::abelian_mod_pow(2, 1), 3},
             {&V, {}, 3},
             {&V3, TauDescriptor::lower_central(2), 2}}) {
        const auto v = verify_wbar_total_iso(*K, tau, deg);
        EXPECT_TRUE(v.passed) << K->name() << " " << tau.str() << ": " << v.counterexample.value_or("");
    }
    // The displayed formula: x_i = (d_0^{i-1} k_{n-1}, ..., k_{n-i}).
    const auto t = wbar_to_total(V, 2, {5, 1});
    ASSERT_EQ(t.size(), 3u);
    EXPECT_TRUE(t[0].empty());
    EXPECT_EQ(t[1], (std::vector<Element>{5}));
    EXPECT_EQ(t[2], (std::vector<Element>{V.face(1, 0, 5), 1}));
}

TEST(CegarraRemedios, Examples) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const GroupNerve N(S3);
    EXPECT_EQ(cr_map(N, 0, {}), (Total<GroupNerve>::Simplex{{}}));
    // On a discrete group CR followed by TN = W-bar is the identity.
    for (int l = 0; l <= 3; ++l)
        for (const auto& x : N.simplices(l, l)) EXPECT_EQ(total_to_wbar(l, cr_map(N, l, x)), x);
    EXPECT_TRUE(verify_cr(N, 3).passed);
    EXPECT_TRUE(verify_cr(GroupNerve(S3, TauDescriptor::lower_central(2)), 3).passed);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 5);
    const auto v = verify_cr(GroupNerve(V), 3);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
}

TEST(DeltaChains, CountsAndIdentities) {
    for (int cap = 0; cap <= 2; ++cap)
        for (int q = 0; q <= 3; ++q) {
            const auto chains = enumerate_chains(q, cap);
            EXPECT_EQ(chains.size(), chain_count(q, cap));
            EXPECT_TRUE(std::is_sorted(chains.begin(), chains.end()));
        }
    EXPECT_EQ(enumerate_chains(3, 2).size(), 5071u);
    EXPECT_TRUE(check_simplicial_identities(DeltaNerve(2), 3).passed);
    const DeltaChain c{{0, 1, 2}, {OrdinalMap({1}, 2), OrdinalMap({0, 2}, 3)}};
    EXPECT_EQ(chain_face(c, 1), (DeltaChain{{0, 2}, {OrdinalMap({2}, 3)}}));
    EXPECT_THROW(check_chain_cap(c, 1), CapExceeded);
}

TEST(Psi, LevelsAndIdentities) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const GroupNerve N(Z2);
    const Psi<GroupNerve> psi(N, 2);
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            EXPECT_EQ(psi.simplices(p, q).size(), chain_count(q, 2) * (std::uint64_t{1} << p));
    // Row q = 0 is the disjoint union of the columns X_{*,n}, n <= cap.
    EXPECT_EQ(psi.simplices(1, 0).size(), 3u * 2u);
    const auto v = check_bisimplicial(psi, 2, 2);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const GroupNerve NV(V);
    const Psi<GroupNerve> psiv(NV, 2);
    const auto vv = check_bisimplicial(psiv, 2, 2);
    EXPECT_TRUE(vv.passed) << vv.counterexample.value_or("");
    EXPECT_TRUE(check_bisimplicial(Transpose<Psi<GroupNerve>>(psiv), 2, 2).passed);
}

TEST(Psi, LastVerticalFacePullsBack) {
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const GroupNerve NV(V);
    const Psi<GroupNerve> psi(NV, 2);
    const OrdinalMap theta({0, 2}, 3);
    const DeltaChain chain{{1, 2}, {theta}};
    const auto& P2 = dynamic_cast<const PowerGroup&>(V.level(2));
    const Element x = P2.pack({1, 0, 1});
    const auto s = psi.vface(1, 1, 1, {chain, {x}});
    EXPECT_EQ(s.chain, (DeltaChain{{1}, {}}));
    EXPECT_EQ(s.x, (std::vector<Element>{V.act(theta, x)}));
    const auto s0 = psi.vface(1, 1, 0, {chain, {x}});
    EXPECT_EQ(s0.x, (std::vector<Element>{x}));
    EXPECT_THROW(psi.vface(1, 1, 0, {DeltaChain{{3, 2}, {OrdinalMap({0, 0, 1, 2}, 3)}}, {x}}), CapExceeded);
}

TEST(BousfieldKan, ValuesAndSimplicial) {
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const GroupNerve NV(V);
    const Psi<GroupNerve> psi(NV, 2);
    // l = 0: ([n_0], x) -> x restricted to the vertex n_0.
    EXPECT_EQ(bk_map(psi, 0, {DeltaChain{{2}, {}}, {}}), std::vector<Element>{});
    // l = 1: the vertex pair (theta(n_0), n_1).
    const OrdinalMap theta({0, 1}, 3);
    const Element x = dynamic_cast<const PowerGroup&>(V.level(2)).pack({1, 0, 1});
    const auto image = bk_map(psi, 1, {DeltaChain{{1, 2}, {theta}}, {x}});
    EXPECT_EQ(image, (std::vector<Element>{V.act(OrdinalMap({1, 2}, 3), x)}));
    const auto v = verify_bk(psi, 2);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const GroupNerve N(Z2);
    EXPECT_TRUE(verify_bk(Psi<GroupNerve>(N, 2), 3).passed);
}

TEST(Grothendieck, IdentitiesAndCounts) {
    const DiscreteSimplicialGroup Z4(FiniteGroup::cyclic(4));
    const GrothendieckNerve G(Z4, 2);
    for (int l = 0; l <= 2; ++l) {
        std::uint64_t expect = chain_count(l, 2);
        for (int i = 0; i < l; ++i) expect *= 4;
        EXPECT_EQ(G.count(l), expect);
    }
    EXPECT_TRUE(check_simplicial_identities(G, 2).passed);
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    EXPECT_TRUE(check_simplicial_identities(GrothendieckNerve(Z2, 2), 3).passed);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const auto v = check_simplicial_identities(GrothendieckNerve(V, 1), 2);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
}

TEST(Grothendieck, Composition) {
    const VertexPowerGroup V(shared(FiniteGroup::symmetric(3)), 3);
    const GrothendieckNerve G(V, 2);
    const OrdinalMap a({1}, 2), b({0, 2}, 3);
    const auto& P0 = V.level(0);
    const IntChain c{{0, 1, 2}, {a, b}, {3, 7}};
    const auto d1 = G.face(2, 1, c);
    EXPECT_EQ(d1.maps, (std::vector<OrdinalMap>{compose(a, b)}));
    EXPECT_EQ(d1.elems, (std::vector<Element>{P0.multiply(3, V.act(a, 7))}));
}

TEST(Grothendieck, TauMembership) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto g2 = TauDescriptor::lower_central(2);
    const GrothendieckNerve G(S3, 2, g2);
    const auto& group = S3.level(0);
    const OrdinalMap id = OrdinalMap::identity(0);
    std::size_t admissible = 0;
    for (Element a = 0; a < 6; ++a)
        for (Element b = 0; b < 6; ++b) {
            const IntChain c{{0, 0, 0}, {id, id}, {a, b}};
            EXPECT_EQ(G.member(c), commute(group, a, b));
            admissible += G.member(c);
        }
    EXPECT_EQ(admissible, 18u);
    const DiscreteSimplicialGroup trivial(FiniteGroup::cyclic(1));
    const GrothendieckNerve T(trivial, 2, g2);
    for (const auto& c : GrothendieckNerve(trivial, 2).simplices(2)) EXPECT_TRUE(T.member(c));
    EXPECT_THROW(G.member(IntChain{{3}, {}, {}}), CapExceeded);
}

TEST(Grothendieck, SubcomplexClosure) {
    const DiscreteSimplicialGroup Z4(FiniteGroup::cyclic(4));
    for (const auto& tau : {TauDescriptor::abelian_mod_pow(2, 1), TauDescriptor::mod_p_lower_central(2, 2)}) {
        const GrothendieckNerve full(Z4, 2);
        const GrothendieckNerve sub(Z4, 2, tau);
        const auto v = check_subcomplex(full, [&](int, const IntChain& c) { return sub.member(c); }, 3);
        EXPECT_TRUE(v.passed) << tau.str() << ": " << v.counterexample.value_or("");
        for (int l = 0; l <= 2; ++l) {
            std::size_t members = 0;
            for (const auto& c : full.simplices(l)) members += sub.member(c);
            EXPECT_EQ(members, sub.count(l));
        }
    }
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const GrothendieckNerve full(S3, 1), sub(S3, 1, TauDescriptor::lower_central(2));
    EXPECT_TRUE(check_subcomplex(full, [&](int, const IntChain& c) { return sub.member(c); }, 2).passed);
}

TEST(Tonks, LowDegrees) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const Tonks t(Z2, 2);
    const IntChain c0{{2}, {}, {}};
    const auto image = t.forward(0, c0);
    ASSERT_EQ(image.size(), 1u);
    EXPECT_EQ(image[0].chain, (DeltaChain{{2}, {}}));
    EXPECT_TRUE(image[0].x.empty());
    for (const auto& c : t.source().simplices(1)) EXPECT_EQ(t.backward(1, t.forward(1, c)), c);
    for (const auto& s : t.target().simplices(1)) EXPECT_EQ(t.forward(1, t.backward(1, s)), s);
    EXPECT_EQ(t.target().count(1), t.source().count(1));
}

TEST(Tonks, Isomorphism) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const auto v = Tonks(Z2, 2).verify(3);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto r = Tonks(S3, 1, TauDescriptor::lower_central(2)).verify(2);
    EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const auto w = Tonks(V, 1).verify(2);
    EXPECT_TRUE(w.passed) << w.counterexample.value_or("");
    const VertexPowerGroup V3(shared(FiniteGroup::symmetric(3)), 3);
    const auto w3 = Tonks(V3, 1, TauDescriptor::lower_central(2)).verify(2);
    EXPECT_TRUE(w3.passed) << w3.counterexample.value_or("");
}

TEST(Zigzag, SmallCases) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const auto v = verify_zigzag(Z2, {}, 2, 3);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto r = verify_zigzag(S3, TauDescriptor::lower_central(2), 1, 2);
    EXPECT_TRUE(r.passed) << r.counterexample.value_or("");
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const auto w = verify_zigzag(V, {}, 1, 2);
    EXPECT_TRUE(w.passed) << w.counterexample.value_or("");
}

TEST(DecTotal, LevelsAndRows) {
    const StandardSimplex D2(2);
    const DecTotal<StandardSimplex> dec(D2);
    EXPECT_EQ(dec.simplices(1, 1).size(), 15u);
    EXPECT_EQ(binom(6, 4), 15u);
    const Dec0<StandardSimplex> dec0(D2);
    const Row<DecTotal<StandardSimplex>> row(dec, 0);
    for (int m = 0; m <= 3; ++m) {
        EXPECT_EQ(row.simplices(m), dec0.simplices(m));
        for (const auto& x : row.simplices(m))
            for (int i = 0; i <= m && m > 0; ++i) EXPECT_EQ(row.face(m, i, x), dec0.face(m, i, x));
    }
    EXPECT_TRUE(check_bisimplicial(dec, 3, 3).passed);
}

TEST(DecTotal, DModelIsomorphism) {
    for (int k = 0; k <= 3; ++k) {
        EXPECT_TRUE(check_bisimplicial(DModel(k), 3, 3).passed) << k;
        const auto v = verify_dec_iso(k, 3, 3);
        EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    }
    const DSimplex s{OrdinalMap({1, 2}, 3), OrdinalMap({0, 1}, 2)};
    EXPECT_EQ(dec_g(s), OrdinalMap({0, 1, 1, 2}, 3));
    EXPECT_EQ(dec_g_inverse(dec_g(s), 1), s);
}
