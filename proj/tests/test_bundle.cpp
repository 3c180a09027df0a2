#include <gtest/gtest.h>

#include <numeric>

#include "wbar/bundle.hpp"
#include "wbar/errors.hpp"
#include "wbar/standard.hpp"
#include "wbar/wbar.hpp"

using namespace wbar;

namespace {

std::shared_ptr<const FiniteGroup> shared(FiniteGroup G) { return std::make_shared<const FiniteGroup>(std::move(G)); }

ClassifyingData constant_r(const TruncatedComplex& B) {
    ClassifyingData r;
    for (int d = 0; d <= B.dim(); ++d)
        r.emplace_back(B.cell_count(d), std::vector<Element>(static_cast<std::size_t>(d), 0));
    return r;
}

struct Triangle {
    TruncatedComplex B{2};
    ClassifyingData r;
};

// Vertices 0, 1, 2, edges 01, 12, 02 and one 2-cell, with r = (a, b) on it.
Triangle triangle(const Group& G, Element a, Element b) {
    Triangle t;
    for (int v = 0; v < 3; ++v) t.B.add_vertex();
    auto vtx = [](std::size_t v) { return TruncatedComplex::cell_ref(0, v); };
    auto edge = [](std::size_t e) { return TruncatedComplex::cell_ref(1, e); };
    t.B.add_cell(1, {vtx(1), vtx(0)});
    t.B.add_cell(1, {vtx(2), vtx(1)});
    t.B.add_cell(1, {vtx(2), vtx(0)});
    t.B.add_cell(2, {edge(1), edge(2), edge(0)});
    t.r = {{{}, {}, {}}, {{a}, {b}, {G.multiply(a, b)}}, {{a, b}}};
    return t;
}

std::size_t find_root(std::vector<std::size_t>& p, std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}

// Components of the 1-skeleton, by union-find over edges.
std::size_t components(const PrincipalBundle& E) {
    const auto verts = E.simplices(0);
    std::vector<std::size_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto index = [&](const BundleSimplex& v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (const auto& e : E.simplices(1)) {
        const auto a = find_root(parent, index(E.face(1, 0, e)));
        const auto b = find_root(parent, index(E.face(1, 1, e)));
        parent[a] = b;
    }
    std::size_t roots = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) roots += find_root(parent, i) == i;
    return roots;
}

}  // namespace

TEST(Bundle, TrivialBundleIsProduct) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto B = materialize(StandardSimplex(2), 3).complex;
    const auto E = bundle_from_classifying_map(B, S3, constant_r(B));
    EXPECT_TRUE(verify_bundle(E, 3).passed);
    for (int n = 1; n <= 3; ++n)
        for (const auto& e : E.simplices(n))
            for (int i = 0; i <= n; ++i) EXPECT_EQ(E.face(n, i, e), (BundleSimplex{e.g, B.face(n, i, e.b)}));
    const auto alpha = transition_elements(E, canonical_pseudo_section(E));
    for (int n = 0; n <= 3; ++n)
        for (const auto& b : B.simplices(n)) EXPECT_EQ(r_hat(alpha, b), std::vector<Element>(static_cast<std::size_t>(n), 0));
}

TEST(Bundle, DoubleCoverOfCircle) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const auto C = circle_model(3);
    auto r = constant_r(C);
    r[1][0] = {1};
    const auto E = bundle_from_classifying_map(C, Z2, r);
    EXPECT_EQ(E.simplices(0).size(), 2u);
    EXPECT_EQ(components(E), 1u);
    EXPECT_TRUE(verify_bundle(E, 3).passed);
    const auto alpha = transition_elements(E, canonical_pseudo_section(E));
    EXPECT_EQ(r_hat(alpha, TruncatedComplex::cell_ref(1, 0)), (std::vector<Element>{1}));
    EXPECT_TRUE(verify_roundtrip(E).passed);

    const auto trivial = bundle_from_classifying_map(C, Z2, constant_r(C));
    EXPECT_EQ(components(trivial), 2u);
}

TEST(Bundle, FibreSizes) {
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 4);
    const auto data = random_classified_base(V, 2, 7);
    const auto E = bundle_from_classifying_map(data.base, V, data.r);
    for (int n = 0; n <= 2; ++n) EXPECT_EQ(E.simplices(n).size(), V.order(n) * data.base.simplices(n).size());
    const auto v = verify_bundle(E, 2);
    EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
}

TEST(Bundle, RejectsNonSimplicialR) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    auto t = triangle(S3.level(0), 1, 2);
    t.r[1][2] = {S3.multiply(1, 1, 2) == 3 ? 4u : 3u};
    EXPECT_THROW(bundle_from_classifying_map(t.B, S3, t.r), NotSimplicial);
    t.r[1][2] = {1, 1};
    EXPECT_THROW(bundle_from_classifying_map(t.B, S3, t.r), InvalidInput);
}

TEST(Transitions, NormalizedAndTopEntry) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const auto data = random_classified_base(S3, 3, seed);
        const auto E = bundle_from_classifying_map(data.base, S3, data.r);
        const auto alpha = transition_elements(E, canonical_pseudo_section(E));
        for (int n = 0; n <= 3; ++n)
            for (const auto& b : data.base.simplices(n)) {
                EXPECT_EQ(alpha.get(b, OrdinalMap::identity(n)), 0u);
                if (n >= 1) EXPECT_EQ(alpha.get(b, coface(0, n)), E.r(b).front());
                for (int i = 1; i <= n; ++i) EXPECT_EQ(alpha.get(b, coface(i, n)), 0u);
                if (n < 3)
                    for (int j = 0; j <= n; ++j) EXPECT_EQ(alpha.get(b, codegeneracy(j, n)), 0u);
            }
    }
}

TEST(Transitions, CocycleAndCorruption) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto data = random_classified_base(S3, 2, 11);
    const auto E = bundle_from_classifying_map(data.base, S3, data.r);
    auto alpha = transition_elements(E, canonical_pseudo_section(E));
    EXPECT_TRUE(transition_functor_check(alpha).passed);

    const auto b = data.base.simplices(2).front();
    const auto theta = OrdinalMap({0, 2}, 3);
    alpha.set(b, theta, S3.multiply(1, alpha.get(b, theta), 1));
    const auto v = transition_functor_check(alpha);
    ASSERT_FALSE(v.passed);
    EXPECT_NE(v.counterexample->find("theta"), std::string::npos);
}

TEST(Roundtrip, RandomDiscrete) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2)), S3(FiniteGroup::symmetric(3));
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const SimplicialGroup& K = seed % 2 ? static_cast<const SimplicialGroup&>(S3) : Z2;
        const auto data = random_classified_base(K, 3, seed);
        const auto E = bundle_from_classifying_map(data.base, K, data.r);
        // r itself is simplicial on all simplices, not only on cells.
        ASSERT_TRUE(check_simplicial_map(
                        data.base, Wbar(K), [&](int, const SimplexRef& b) { return E.r(b); }, 3)
                        .passed);
        const auto v = verify_roundtrip(E);
        ASSERT_TRUE(v.passed) << "seed " << seed << ": " << v.counterexample.value_or("");
    }
}

TEST(Roundtrip, NonDiscrete) {
    const VertexPowerGroup V(shared(FiniteGroup::symmetric(3)), 3);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto data = random_classified_base(V, 2, seed);
        const auto E = bundle_from_classifying_map(data.base, V, data.r);
        const auto v = verify_roundtrip(E);
        EXPECT_TRUE(v.passed) << v.counterexample.value_or("");
    }
}

TEST(PseudoSection, VertexGauge) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto& G = S3.level(0);
    for (std::uint64_t seed = 20; seed < 26; ++seed) {
        const auto data = random_classified_base(S3, 3, seed);
        const auto E = bundle_from_classifying_map(data.base, S3, data.r);
        std::vector<Element> f(data.base.cell_count(0));
        for (std::size_t v = 0; v < f.size(); ++v) f[v] = static_cast<Element>((seed + 2 * v) % 6);
        const auto sigma = vertex_gauge_section(E, f);
        EXPECT_TRUE(verify_pseudo_section(E, sigma).passed);
        const auto alpha = transition_elements(E, sigma);
        EXPECT_TRUE(transition_functor_check(alpha).passed);
        EXPECT_TRUE(verify_r_hat(E, alpha, false).passed);
        // Conjugated classifying map: f(v_0) r_t f(v_1)^-1 on each d_0^t b.
        auto vertex = [&](const SimplexRef& b, int t) {
            return data.base.act(OrdinalMap({t}, b.degree() + 1), b).cell;
        };
        for (int n = 1; n <= 3; ++n)
            for (const auto& b : data.base.simplices(n)) {
                const auto got = r_hat(alpha, b);
                const auto r = E.r(b);
                for (int t = 0; t < n; ++t) {
                    const Element want = G.multiply(G.multiply(f[vertex(b, t)], r[static_cast<std::size_t>(t)]),
                                                    G.inverse(f[vertex(b, t + 1)]));
                    EXPECT_EQ(got[static_cast<std::size_t>(t)], want);
                }
            }
    }
}

TEST(PseudoSection, DetectsBadSection) {
    const DiscreteSimplicialGroup Z2(FiniteGroup::cyclic(2));
    const auto C = circle_model(2);
    const auto E = bundle_from_classifying_map(C, Z2, constant_r(C));
    auto sigma = canonical_pseudo_section(E);
    sigma.coordinate[1].begin()->second = 1;
    EXPECT_FALSE(verify_pseudo_section(E, sigma).passed);
}

TEST(Atlas, TrivialBundlePasses) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto B = materialize(StandardSimplex(2), 2).complex;
    const auto E = bundle_from_classifying_map(B, S3, constant_r(B));
    const auto alpha = transition_elements(E, canonical_pseudo_section(E));
    for (const auto& tau : {TauDescriptor::lower_central(2), TauDescriptor::mod_p_lower_central(2, 2),
                            TauDescriptor::abelian_mod_pow(2, 1)})
        EXPECT_TRUE(tau_atlas_check(tau, E, alpha, 3, 2).passed()) << tau.str();
}

TEST(Atlas, NonCommutingCounterexample) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto& G = S3.level(0);
    Element a = 0, b = 0;
    for (Element x = 1; x < 6 && !a; ++x)
        for (Element y = 1; y < 6; ++y)
            if (!G.commute(x, y) && G.multiply(x, x) == 0 && G.multiply(y, y) == 0) {
                a = x;
                b = y;
                break;
            }
    ASSERT_NE(a, 0u);
    const auto t = triangle(G, a, b);
    const auto E = bundle_from_classifying_map(t.B, S3, t.r);
    const auto alpha = transition_elements(E, canonical_pseudo_section(E));
    const auto g2 = tau_atlas_check(TauDescriptor::lower_central(2), E, alpha, 3, 2);
    EXPECT_FALSE(g2.atlas.passed);
    EXPECT_FALSE(g2.factorization.passed);
    ASSERT_TRUE(g2.atlas.counterexample);
    EXPECT_NE(g2.atlas.counterexample->find("chain over"), std::string::npos);
    // Two involutions generate S3, which is not nilpotent.
    EXPECT_FALSE(tau_atlas_check(TauDescriptor::lower_central(3), E, alpha, 3, 2).passed());
    EXPECT_TRUE(tau_atlas_check(TauDescriptor::free_group(), E, alpha, 3, 2).passed());

    const auto ok = triangle(G, a, a);
    const auto E2 = bundle_from_classifying_map(ok.B, S3, ok.r);
    EXPECT_TRUE(tau_atlas_check(TauDescriptor::lower_central(2), E2, transition_elements(E2, canonical_pseudo_section(E2)),
                                3, 2)
                    .passed());
}

TEST(Atlas, FiltrationAndFactorization) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    int passing = 0, failing = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const auto data = random_classified_base(S3, 3, 100 + seed);
        const auto E = bundle_from_classifying_map(data.base, S3, data.r);
        const auto alpha = transition_elements(E, canonical_pseudo_section(E));
        const auto g2 = tau_atlas_check(TauDescriptor::lower_central(2), E, alpha, 3, 2);
        const auto g3 = tau_atlas_check(TauDescriptor::lower_central(3), E, alpha, 3, 2);
        if (g2.atlas.passed) {
            ++passing;
            EXPECT_TRUE(g2.factorization.passed) << g2.factorization.counterexample.value_or("");
            EXPECT_TRUE(g3.atlas.passed);
        } else {
            ++failing;
        }
        if (g3.atlas.passed) EXPECT_TRUE(g3.factorization.passed);
    }
    EXPECT_GT(passing, 0);
    EXPECT_GT(failing, 0);
}

TEST(BundleJson, Roundtrip) {
    const DiscreteSimplicialGroup S3(FiniteGroup::symmetric(3));
    const auto data = random_classified_base(S3, 3, 5);
    const auto E = bundle_from_classifying_map(data.base, S3, data.r);
    const auto j = bundle_to_json(E);
    const auto back = bundle_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back.r, data.r);
    EXPECT_EQ(back.base.cell_counts(), data.base.cell_counts());
    EXPECT_TRUE(verify_roundtrip(back.make()).passed);

    // An edge label that disagrees with the 2-cell above it.
    const auto t = triangle(S3.level(0), 1, 2);
    auto broken = bundle_to_json(bundle_from_classifying_map(t.B, S3, t.r));
    broken["r"][1][0][0] = 3;
    EXPECT_THROW(bundle_from_json(broken), NotSimplicial);
    EXPECT_THROW(bundle_from_json(nlohmann::json{{"group", 1}}), InvalidInput);
    const VertexPowerGroup V(shared(FiniteGroup::cyclic(2)), 2);
    const auto vd = random_classified_base(V, 1, 0);
    EXPECT_THROW(bundle_to_json(bundle_from_classifying_map(vd.base, V, vd.r)), InvalidInput);
}
