#include <gtest/gtest.h>

#include "wbar/errors.hpp"
#include "wbar/loop_group.hpp"
#include "wbar/simplicial_group.hpp"
#include "wbar/standard.hpp"

using namespace wbar;

namespace {

std::shared_ptr<const FiniteGroup> shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

OrdinalMap om(std::vector<int> v, int n) { return OrdinalMap(std::move(v), n + 1); }

}  // namespace

TEST(DiscreteGroup, LevelsAndMaps) {
    const DiscreteSimplicialGroup K(FiniteGroup::symmetric(3));
    EXPECT_EQ(K.level(5).order(), 6u);
    for (Element x = 0; x < 6; ++x) {
        EXPECT_EQ(K.face(3, 1, x), x);
        EXPECT_EQ(K.degeneracy(2, 0, x), x);
        EXPECT_EQ(K.act(om({0, 0, 1}, 3), x), x);
    }
    EXPECT_TRUE(check_simplicial_group(K, 3).passed);
    EXPECT_TRUE(K.is_discrete());
}

TEST(VertexPowerGroup, IsSimplicialGroup) {
    const VertexPowerGroup V(shared(FiniteGroup::symmetric(3)), 4);
    EXPECT_EQ(V.order(2), 216u);
    EXPECT_TRUE(check_simplicial_group(V, 3).passed);
    EXPECT_FALSE(V.is_discrete());
    // (theta^* g)_t = g_{theta(t)}
    const auto& P = dynamic_cast<const PowerGroup&>(V.level(2));
    const Element g = P.pack({1, 2, 3});
    const auto& P1 = dynamic_cast<const PowerGroup&>(V.level(1));
    EXPECT_EQ(P1.unpack(V.face(2, 1, g)), (std::vector<Element>{1, 3}));
    EXPECT_EQ(P1.unpack(V.act(om({0, 2}, 2), g)), (std::vector<Element>{1, 3}));
    EXPECT_THROW(V.level(9), InsufficientTruncation);
}

TEST(LoopGroup, Ranks) {
    const StandardSimplex D1(1), D2(2);
    const LoopGroup<StandardSimplex> G1(D1, 2), G2(D2, 2);
    EXPECT_EQ(G1.rank(0), 1u);
    EXPECT_EQ(G2.rank(1), 4u);
    // |Delta[k]_{n+1}| - |Delta[k]_n|, since s_0 is injective.
    for (int k = 0; k <= 3; ++k) {
        const StandardSimplex D(k);
        const LoopGroup<StandardSimplex> G(D, 3);
        for (int n = 0; n <= 3; ++n) EXPECT_EQ(G.rank(n), D.simplices(n + 1).size() - D.simplices(n).size());
    }
    EXPECT_THROW(G1.rank(7), InsufficientTruncation);
}

TEST(LoopGroup, FaceFormula) {
    const StandardSimplex D1(1);
    const LoopGroup<StandardSimplex> G(D1, 2);
    const Word x = G.bracket(1, om({0, 1, 1}, 1));
    ASSERT_FALSE(x.empty());
    EXPECT_EQ(G.face(1, 0, x), G.bracket(0, om({0, 1}, 1)));
    EXPECT_TRUE(G.bracket(0, om({1, 1}, 1)).empty());
}

TEST(LoopGroup, SymbolicIdentities) {
    for (int k = 0; k <= 3; ++k) {
        const StandardSimplex D(k);
        const LoopGroup<StandardSimplex> G(D, 3);
        EXPECT_TRUE(check_symbolic_identities(G, 3, "G Delta").passed) << k;
    }
    const auto C = circle_model(5);
    const LoopGroup<TruncatedComplex> GC(C, 3);
    EXPECT_EQ(GC.rank(0), 1u);
    EXPECT_TRUE(check_symbolic_identities(GC, 3, "G circle").passed);
}

TEST(Pi1Dec, RanksAndMaps) {
    const Pi1Dec P2(2, 3), P1(1, 2);
    EXPECT_EQ(P2.rank(1), 4u);
    EXPECT_EQ(P1.rank(0), 1u);
    const auto phi = om({1, 2}, 2);
    for (int i = 0; i <= 1; ++i)
        for (int j = 1; j <= 1; ++j)
            EXPECT_EQ(P2.degeneracy(1, i, P2.bracket(1, phi, j)), P2.bracket(2, compose(codegeneracy(i, 1), phi), j));
    // d_0 moves phi(0) to phi(1) and keeps e_j.
    EXPECT_EQ(P2.face(1, 0, P2.bracket(1, phi, 1)), P2.bracket(0, om({2}, 2), 1));
    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(check_symbolic_identities(Pi1Dec(k, 3), 3, "pi1dec").passed);
}

TEST(Epsilon, LowExample) {
    const Epsilon e(1, 1);
    ASSERT_EQ(e.loop().rank(0), 1u);
    const Word x = e.loop().bracket(0, OrdinalMap::identity(1));
    EXPECT_EQ(e.forward(0, x), e.dec().bracket(0, om({1}, 1), 1));
}

TEST(Epsilon, IsomorphismSmall) {
    for (int k = 0; k <= 3; ++k) {
        const auto v = Epsilon(k, 3).verify();
        EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    }
}

TEST(Epsilon, InverseIsCanonicalTuple) {
    for (int k = 1; k <= 3; ++k) {
        const Epsilon e(k, k);
        for (int l = 1; l <= k; ++l) {
            const int n = k - l;
            const Word image = e.backward(n, e.dec().bracket(n, shift(n, l), l));
            EXPECT_EQ(image, e.loop().bracket(n, shift(n + 1, l - 1)));
        }
    }
}

TEST(Epsilon, Natural) {
    const Epsilon e1(1, 2), e2(2, 2), e3(3, 2);
    for (const auto& alpha : enumerate_maps(1, 2)) EXPECT_TRUE(verify_epsilon_naturality(e1, e2, alpha).passed);
    for (const auto& alpha : enumerate_maps(2, 3)) EXPECT_TRUE(verify_epsilon_naturality(e2, e3, alpha).passed);
    for (const auto& alpha : enumerate_maps(3, 1)) EXPECT_TRUE(verify_epsilon_naturality(e3, e1, alpha).passed);
}

TEST(Pi1, SimplexPresentation) {
    const auto S3 = FiniteGroup::symmetric(3);
    for (int k = 0; k <= 3; ++k) {
        const auto M = materialize(StandardSimplex(k), 2);
        std::size_t expect = 1;
        for (int i = 0; i < k; ++i) expect *= 6;
        // Homs out of pi_1 X are simplicial maps X -> NG, so Delta[k] has |G|^k.
        EXPECT_EQ(hom_enumeration(pi1_presentation(M.complex), S3, std::size_t{1} << 30).size(), expect);
    }
}
