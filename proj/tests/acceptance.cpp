// End-to-end acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wbar/bisimplicial.hpp"
#include "wbar/bundle.hpp"
#include "wbar/homology.hpp"
#include "wbar/loop_group.hpp"
#include "wbar/standard.hpp"
#include "wbar/wbar.hpp"

using namespace wbar;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        if (!ok && passed) {
            passed = false;
            detail = what;
        }
    }
    void require(const Verdict& v) {
        require(v.passed, v.map + ": " + v.counterexample.value_or(""));
    }
};

DiscreteSimplicialGroup discrete(const std::string& name) { return DiscreteSimplicialGroup(FiniteGroup::builtin(name)); }

Outcome epsilon_iso() {
    Outcome o;
    std::vector<Epsilon> eps;
    for (int k = 0; k <= 4; ++k) {
        eps.emplace_back(k, 4);
        o.require(eps.back().verify());
    }
    for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l)
            for (const auto& alpha : enumerate_maps(k, l))
                o.require(verify_epsilon_naturality(eps[static_cast<std::size_t>(k)], eps[static_cast<std::size_t>(l)], alpha));
    return o;
}

Outcome tuple_bijection() {
    Outcome o;
    for (const char* name : {"Z4", "S3"}) {
        const auto K = discrete(name);
        for (int k = 0; k <= 3; ++k) o.require(verify_tuple_bijection(K, k, 3));
    }
    return o;
}

Outcome tau_counts() {
    Outcome o;
    const auto S3 = discrete("S3");
    const auto& G = S3.level(0);
    std::vector<std::size_t> oracle;
    // Brute force over all tuples: pairwise commuting.
    for (int k = 0; k <= 3; ++k) {
        std::size_t total = 1, good = 0;
        for (int i = 0; i < k; ++i) total *= 6;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<Element> x;
            for (std::size_t c = code, i = 0; i < static_cast<std::size_t>(k); ++i, c /= 6) x.push_back(static_cast<Element>(c % 6));
            bool ok = true;
            for (std::size_t a = 0; a < x.size(); ++a)
                for (std::size_t b = a + 1; b < x.size(); ++b) ok = ok && G.commute(x[a], x[b]);
            good += ok;
        }
        oracle.push_back(good);
    }
    const auto counts = wbar_counts(S3, TauDescriptor::lower_central(2), 3);
    o.require(counts == std::vector<std::size_t>{1, 6, 18, 48}, "counts differ from 1, 6, 18, 48");
    o.require(counts == oracle, "counts differ from the commutation oracle");
    for (const char* name : {"Z2", "Z4", "S3", "D4", "Q8"}) {
        const auto K = discrete(name);
        const auto free = wbar_counts(K, {}, 3);
        std::size_t p = 1;
        for (int k = 0; k <= 3; ++k, p *= K.order(0))
            o.require(free[static_cast<std::size_t>(k)] == p, std::string("free count for ") + name);
    }
    return o;
}

Outcome subcomplex_closure() {
    Outcome o;
    const std::vector<TauDescriptor> taus{TauDescriptor::lower_central(2), TauDescriptor::lower_central(3),
                                          TauDescriptor::mod_p_lower_central(2, 2)};
    for (const char* name : {"S3", "D4", "Q8"}) {
        const auto K = discrete(name);
        const Wbar full(K);
        for (const auto& tau : taus)
            o.require(check_subcomplex(
                full, [&](int, const Wbar::Simplex& x) { return wbar_tau_member(tau, K, x); }, 4,
                std::string(name) + " " + tau.str()));
        o.require(verify_filtration(K, 4, 4));
    }
    return o;
}

// Rank over Q and elementary divisors by gcd of minors, for the tiny
// matrices of W-bar(Z/2).
HomologyGroup minors_homology(const ChainComplex& C, int i) {
    auto divisors = [](const IntMatrix& M) {
        std::vector<Integer> out;
        Integer prev = 1;
        const std::size_t r = M.rows(), c = M.cols();
        for (std::size_t k = 1; k <= std::min(r, c); ++k) {
            Integer g = 0;
            std::vector<bool> rs(r), cs(c);
            std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
            do {
                std::fill(cs.begin(), cs.end(), false);
                std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
                do {
                    IntMatrix S(k, k);
                    std::size_t a = 0;
                    for (std::size_t x = 0; x < r; ++x) {
                        if (!rs[x]) continue;
                        std::size_t b = 0;
                        for (std::size_t y = 0; y < c; ++y)
                            if (cs[y]) S.at(a, b++) = M.at(x, y);
                        ++a;
                    }
                    g = gcd(g, determinant(S));
                } while (std::prev_permutation(cs.begin(), cs.end()));
            } while (std::prev_permutation(rs.begin(), rs.end()));
            if (g == 0) break;
            out.push_back(g / prev);
            prev = g;
        }
        return out;
    };
    const auto ui = static_cast<std::size_t>(i);
    const auto below = i == 0 ? std::vector<Integer>{} : divisors(C.boundary[ui]);
    const auto above = divisors(C.boundary[ui + 1]);
    HomologyGroup H;
    H.betti = C.basis[ui] - below.size() - above.size();
    for (const auto& d : above)
        if (d > 1) H.torsion.push_back(d);
    return H;
}

Outcome homology_oracle() {
    Outcome o;
    const auto Z2 = discrete("Z2");
    const auto C = normalized_chains(materialize(Wbar(Z2), 5).complex);
    o.require(check_boundary_squared(C));
    const auto H = homology_range(C, 4);
    o.require(H[1] == HomologyGroup{0, {2}}, "H_1 = " + H[1].str());
    o.require(H[2].trivial(), "H_2 = " + H[2].str());
    o.require(H[3] == HomologyGroup{0, {2}}, "H_3 = " + H[3].str());
    for (int i = 0; i <= 4; ++i)
        o.require(H[static_cast<std::size_t>(i)] == minors_homology(C, i), "oracle disagrees in degree " + std::to_string(i));
    return o;
}

Outcome hocolim_maps() {
    Outcome o;
    for (const char* name : {"Z2", "S3"}) {
        const auto K = discrete(name);
        for (const auto& tau : {TauDescriptor::free_group(), TauDescriptor::lower_central(2)})
            o.require(verify_zigzag(K, tau, 2, 3));
    }
    const auto S3 = discrete("S3");
    const auto g2 = TauDescriptor::lower_central(2);
    const GroupNerve N(S3, g2);
    const auto Hd = model_homology(Diagonal<GroupNerve>(N), 3, 2);
    const auto Hw = model_homology(Wbar(S3, g2), 3, 2);
    o.require(Hd == Hw, "homology of the diagonal differs from W-bar(gamma:2, S3)");
    return o;
}

Outcome bundle_roundtrip() {
    Outcome o;
    const auto Z2 = discrete("Z2"), S3 = discrete("S3");
    for (std::uint64_t seed = 0; seed < 100 && o.passed; ++seed) {
        const SimplicialGroup& K = seed % 2 ? static_cast<const SimplicialGroup&>(S3) : Z2;
        const auto data = random_classified_base(K, 3, seed);
        const auto E = bundle_from_classifying_map(data.base, K, data.r);
        const auto v = verify_roundtrip(E);
        o.require(v.passed, "seed " + std::to_string(seed) + ": " + v.counterexample.value_or(""));
    }
    return o;
}

Outcome atlas_factorization() {
    Outcome o;
    const auto Z2 = discrete("Z2"), S3 = discrete("S3");
    int passing = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const SimplicialGroup& K = seed % 4 == 0 ? static_cast<const SimplicialGroup&>(Z2) : S3;
        const auto data = random_classified_base(K, 3, 500 + seed);
        const auto E = bundle_from_classifying_map(data.base, K, data.r);
        const auto alpha = transition_elements(E, canonical_pseudo_section(E));
        for (const auto& tau : {TauDescriptor::lower_central(2), TauDescriptor::lower_central(3)}) {
            const auto a = tau_atlas_check(tau, E, alpha, 3, 2);
            if (!a.atlas.passed) continue;
            ++passing;
            o.require(a.factorization);
        }
    }
    o.require(passing > 0, "no bundle passed the atlas check");

    // Vertices 0, 1, 2 with non-commuting labels a, b on the 2-cell.
    const auto& G = S3.level(0);
    Element a = 0, b = 0;
    for (Element x = 1; x < 6 && !a; ++x)
        for (Element y = 1; y < 6; ++y)
            if (!G.commute(x, y)) {
                a = x;
                b = y;
                break;
            }
    TruncatedComplex B(2);
    for (int v = 0; v < 3; ++v) B.add_vertex();
    auto vtx = [](std::size_t v) { return TruncatedComplex::cell_ref(0, v); };
    B.add_cell(1, {vtx(1), vtx(0)});
    B.add_cell(1, {vtx(2), vtx(1)});
    B.add_cell(1, {vtx(2), vtx(0)});
    B.add_cell(2, {TruncatedComplex::cell_ref(1, 1), TruncatedComplex::cell_ref(1, 2), TruncatedComplex::cell_ref(1, 0)});
    const ClassifyingData r{{{}, {}, {}}, {{a}, {b}, {G.multiply(a, b)}}, {{a, b}}};
    const auto E = bundle_from_classifying_map(B, S3, r);
    const auto bad = tau_atlas_check(TauDescriptor::lower_central(2), E, transition_elements(E, canonical_pseudo_section(E)), 3, 2);
    o.require(!bad.atlas.passed, "counterexample passed the atlas check");
    o.require(bad.atlas.counterexample.value_or("").find("chain over") != std::string::npos, "no located witness");
    if (o.passed) o.detail = "witness: " + *bad.atlas.counterexample;
    return o;
}

Outcome milnor() {
    Outcome o;
    for (const char* name : {"Z2", "Z4", "S3"}) {
        const auto K = discrete(name);
        const KanSuspension sigma(K);
        const LoopGroup<KanSuspension> F(sigma, 3);
        for (int n = 0; n <= 3; ++n)
            o.require(F.rank(n) == K.order(n) - 1, std::string("rank of G(Sigma ") + name + ")_" + std::to_string(n));
        o.require(verify_milnor(MilnorFK(K, 3), F, 3));
        for (const auto& tau : {TauDescriptor::free_group(), TauDescriptor::lower_central(2)}) {
            const SplittingChain chain(K, tau, 2);
            o.require(chain.verify());
            for (int n = 0; n <= 2; ++n)
                for (Element x = 0; x < K.order(n); ++x)
                    o.require(chain.composite(n, x) == x, std::string("composite moves an element of ") + name);
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit;  // seconds; 0 = none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "epsilon isomorphism", 30, epsilon_iso},
        {2, "tuple bijection", 10, tuple_bijection},
        {3, "tau counts", 10, tau_counts},
        {4, "subcomplex closure", 0, subcomplex_closure},
        {5, "homology oracle", 60, homology_oracle},
        {6, "CR/BK/Tonks", 0, hocolim_maps},
        {7, "bundle roundtrip", 60, bundle_roundtrip},
        {8, "tau-atlas factorization", 0, atlas_factorization},
        {9, "Milnor comparison", 0, milnor},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.passed = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) o.require(false, "over the time limit");
        failures += !o.passed;
        std::printf("criterion %d %-24s %s  %7.2fs%s%s\n", c.id, c.name, o.passed ? "PASS" : "FAIL", secs,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
