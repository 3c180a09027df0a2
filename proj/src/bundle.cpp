#include "wbar/bundle.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wbar/bisimplicial.hpp"
#include "wbar/errors.hpp"
#include "wbar/parallel.hpp"
#include "wbar/wbar.hpp"

namespace wbar {

namespace {

std::string tuple_str(const std::vector<Element>& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t t = 0; t < x.size(); ++t) os << (t ? ", " : "") << x[t];
    os << ")";
    return os.str();
}

std::vector<Element> r_of(const SimplicialGroup& K, const ClassifyingData& r, const SimplexRef& b) {
    const auto& top = r.at(static_cast<std::size_t>(b.cell_degree())).at(b.cell);
    if (b.nondegenerate()) return top;
    return act_with(
        b.degeneracy, top, [&](int k, int i, const auto& y) { return wbar_face(K, k, i, y); },
        [&](int k, int j, const auto& y) { return wbar_degeneracy(K, k, j, y); });
}

}  // namespace

PrincipalBundle::PrincipalBundle(TruncatedComplex base, const SimplicialGroup& K, ClassifyingData r)
    : base_(std::move(base)), K_(&K), r_(std::move(r)) {
    const auto v = base_.validate();
    if (!v.passed) throw NotSimplicial("bundle base: " + v.counterexample.value_or(""));
    if (r_.size() != static_cast<std::size_t>(dim() + 1))
        throw InvalidInput("classifying data must have one level per degree");
    for (int d = 0; d <= dim(); ++d) {
        const auto& level = r_[static_cast<std::size_t>(d)];
        if (level.size() != base_.cell_count(d))
            throw InvalidInput("classifying data: wrong number of cells in degree " + std::to_string(d));
        for (std::size_t c = 0; c < level.size(); ++c) {
            const auto& x = level[c];
            const std::string where = "cell " + std::to_string(c) + " of degree " + std::to_string(d);
            if (x.size() != static_cast<std::size_t>(d)) throw InvalidInput("r on " + where + " has wrong length");
            for (int t = 0; t < d; ++t)
                if (x[static_cast<std::size_t>(t)] >= K.order(d - 1 - t))
                    throw InvalidInput("r on " + where + " has an entry outside K");
            for (int i = 0; i <= d && d >= 1; ++i) {
                const auto f = base_.cell_faces(d, c)[static_cast<std::size_t>(i)];
                if (this->r(f) != wbar_face(K, d, i, x))
                    throw NotSimplicial("r does not commute with d" + std::to_string(i) + " on " + where + ": r = " +
                                        tuple_str(x) + ", r(face) = " + tuple_str(this->r(f)));
            }
        }
    }
}

std::vector<Element> PrincipalBundle::r(const SimplexRef& b) const { return r_of(*K_, r_, b); }

std::vector<BundleSimplex> PrincipalBundle::simplices(int n) const {
    std::vector<BundleSimplex> out;
    const auto order = static_cast<Element>(K_->order(n));
    for (const auto& b : base_.simplices(n))
        for (Element g = 0; g < order; ++g) out.push_back({g, b});
    std::sort(out.begin(), out.end());
    return out;
}

BundleSimplex PrincipalBundle::face(int n, int i, const BundleSimplex& e) const {
    std::vector<Element> w{e.g};
    const auto rb = r(e.b);
    w.insert(w.end(), rb.begin(), rb.end());
    return {wbar_face(*K_, n + 1, i + 1, w).front(), base_.face(n, i, e.b)};
}

BundleSimplex PrincipalBundle::degeneracy(int n, int j, const BundleSimplex& e) const {
    std::vector<Element> w{e.g};
    const auto rb = r(e.b);
    w.insert(w.end(), rb.begin(), rb.end());
    return {wbar_degeneracy(*K_, n + 1, j + 1, w).front(), base_.degeneracy(n, j, e.b)};
}

std::string PrincipalBundle::describe(const BundleSimplex& e) const {
    return "(" + K_->describe(e.b.degree(), e.g) + ", " + base_.describe(e.b) + ")";
}

PrincipalBundle bundle_from_classifying_map(TruncatedComplex B, const SimplicialGroup& K, ClassifyingData r) {
    return PrincipalBundle(std::move(B), K, std::move(r));
}

Verdict verify_bundle(const PrincipalBundle& E, int max_degree) {
    Verdict v;
    v.map = "principal bundle";
    v.max_degree = max_degree;
    v.absorb(check_simplicial_identities(E, max_degree, "total space"));
    v.absorb(check_simplicial_map(
        E, E.base(), [&](int n, const BundleSimplex& e) { return E.project(n, e); }, max_degree, "projection"));
    if (!v.passed) return v;

    const auto& K = E.group();
    for (int n = 0; n <= max_degree; ++n) {
        const auto base = E.base().simplices(n);
        const auto order = static_cast<Element>(K.order(n));
        auto bad = first_failure(base.size(), [&](std::size_t idx) -> std::string {
            const auto& b = base[idx];
            for (Element g = 0; g < order; ++g) {
                const BundleSimplex e{g, b};
                for (Element k = 0; k < order; ++k) {
                    const auto ke = E.act(n, k, e);
                    for (int i = 0; i <= n && n >= 1; ++i)
                        if (E.face(n, i, ke) != E.act(n - 1, K.face(n, i, k), E.face(n, i, e)))
                            return "d" + std::to_string(i) + " not equivariant at " + E.describe(e);
                    if (n < max_degree)
                        for (int j = 0; j <= n; ++j)
                            if (E.degeneracy(n, j, ke) != E.act(n + 1, K.degeneracy(n, j, k), E.degeneracy(n, j, e)))
                                return "s" + std::to_string(j) + " not equivariant at " + E.describe(e);
                }
            }
            // Torsor: k -> k . e is a bijection onto the fibre.
            std::vector<char> hit(order, 0);
            const BundleSimplex e{0, b};
            for (Element k = 0; k < order; ++k) {
                const auto ke = E.act(n, k, e);
                if (ke.b != b) return "action leaves the fibre over " + E.base().describe(b);
                if (hit[ke.g]++) return "action not free over " + E.base().describe(b);
            }
            return {};
        });
        v.checked += base.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

Element PseudoSection::at(const SimplexRef& b) const {
    const auto n = static_cast<std::size_t>(b.degree());
    if (n >= coordinate.size()) throw InsufficientTruncation("pseudo-section: degree beyond truncation");
    auto it = coordinate[n].find(b);
    if (it == coordinate[n].end()) throw IndexError("pseudo-section: simplex not covered");
    return it->second;
}

PseudoSection canonical_pseudo_section(const PrincipalBundle& E) {
    PseudoSection s;
    for (int n = 0; n <= E.dim(); ++n) {
        auto& level = s.coordinate.emplace_back();
        for (const auto& b : E.base().simplices(n)) level.emplace(b, 0);
    }
    return s;
}

PseudoSection vertex_gauge_section(const PrincipalBundle& E, const std::vector<Element>& f) {
    if (f.size() != E.base().cell_count(0)) throw InvalidInput("gauge: one group element per vertex");
    const auto& K = E.group();
    PseudoSection s;
    for (int n = 0; n <= E.dim(); ++n) {
        auto& level = s.coordinate.emplace_back();
        const OrdinalMap first({0}, n + 1);
        const OrdinalMap collapse(std::vector<int>(static_cast<std::size_t>(n + 1), 0), 1);
        for (const auto& b : E.base().simplices(n)) {
            const Element g = f.at(E.base().act(first, b).cell);
            if (g >= K.order(0)) throw InvalidInput("gauge: element outside K_0");
            level.emplace(b, K.act(collapse, g));
        }
    }
    return s;
}

Verdict verify_pseudo_section(const PrincipalBundle& E, const PseudoSection& sigma) {
    Verdict v;
    v.map = "pseudo-section";
    v.max_degree = E.dim();
    const auto& B = E.base();
    for (int n = 0; n <= E.dim(); ++n) {
        const auto level = B.simplices(n);
        auto bad = first_failure(level.size(), [&](std::size_t idx) -> std::string {
            const auto& b = level[idx];
            const BundleSimplex s{sigma.at(b), b};
            for (int i = 1; i <= n; ++i) {
                const auto fb = B.face(n, i, b);
                if (E.face(n, i, s) != BundleSimplex{sigma.at(fb), fb})
                    return "d" + std::to_string(i) + " sigma != sigma d" + std::to_string(i) + " at " + B.describe(b);
            }
            if (n < E.dim())
                for (int j = 0; j <= n; ++j) {
                    const auto sb = B.degeneracy(n, j, b);
                    if (E.degeneracy(n, j, s) != BundleSimplex{sigma.at(sb), sb})
                        return "s" + std::to_string(j) + " sigma != sigma s" + std::to_string(j) + " at " +
                               B.describe(b);
                }
            return {};
        });
        v.checked += level.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

Element TransitionAssignment::get(const SimplexRef& b, const OrdinalMap& theta) const {
    auto it = values_.find({b, theta});
    if (it == values_.end())
        throw IndexError("transition not assigned at " + B_->describe(b) + ", " + theta.str());
    return it->second;
}

TransitionAssignment transition_elements(const PrincipalBundle& E, const PseudoSection& sigma) {
    TransitionAssignment out(E.base(), E.group());
    const auto& B = E.base();
    const auto& K = E.group();
    const int N = E.dim();
    for (int n = 0; n <= N; ++n)
        for (const auto& b : B.simplices(n))
            for (int m = 0; m <= N; ++m)
                for (const auto& theta : enumerate_maps(m, n)) {
                    const auto y = act(E, theta, BundleSimplex{sigma.at(b), b});
                    const auto tb = B.act(theta, b);
                    if (y.b != tb) throw VerificationFailure("transition: theta^* sigma(b) left the fibre");
                    out.set(b, theta, K.multiply(m, y.g, K.inverse(m, sigma.at(tb))));
                }
    return out;
}

Verdict transition_functor_check(const TransitionAssignment& alpha) {
    Verdict v;
    v.map = "transition cocycle";
    const auto& B = alpha.base();
    const auto& K = alpha.group();
    const int N = B.dim();
    v.max_degree = N;
    std::vector<std::vector<std::vector<OrdinalMap>>> maps(static_cast<std::size_t>(N + 1));
    for (int m = 0; m <= N; ++m)
        for (int n = 0; n <= N; ++n) maps[static_cast<std::size_t>(m)].push_back(enumerate_maps(m, n));

    for (int n = 0; n <= N; ++n) {
        const auto level = B.simplices(n);
        auto bad = first_failure(level.size(), [&](std::size_t idx) -> std::string {
            const auto& b = level[idx];
            if (alpha.get(b, OrdinalMap::identity(n)) != K.identity(n))
                return "alpha(b, id) != 1 at " + B.describe(b);
            for (int m = 0; m <= N; ++m)
                for (const auto& theta : maps[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]) {
                    const Element a = alpha.get(b, theta);
                    const auto tb = B.act(theta, b);
                    for (int k = 0; k <= N; ++k)
                        for (const auto& phi : maps[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)]) {
                            const Element lhs = alpha.get(b, compose(phi, theta));
                            const Element rhs = K.multiply(k, K.act(phi, a), alpha.get(tb, phi));
                            if (lhs != rhs)
                                return "alpha(b, theta phi) != phi^* alpha(b, theta) . alpha(theta^* b, phi) at b = " +
                                       B.describe(b) + ", theta = " + theta.str() + ", phi = " + phi.str();
                        }
                }
            return {};
        });
        v.checked += level.size();
        if (bad) {
            v.fail(*bad);
            return v;
        }
    }
    return v;
}

std::vector<Element> r_hat(const TransitionAssignment& alpha, const SimplexRef& b) {
    const auto& B = alpha.base();
    const int n = b.degree();
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    SimplexRef cur = b;
    for (int t = 0; t < n; ++t) {
        out.push_back(alpha.get(cur, coface(0, n - t)));
        cur = B.face(n - t, 0, cur);
    }
    return out;
}

Verdict verify_r_hat(const PrincipalBundle& E, const TransitionAssignment& alpha, bool expect_r) {
    const Wbar W(E.group());
    Verdict v = check_simplicial_map(
        E.base(), W, [&](int, const SimplexRef& b) { return r_hat(alpha, b); }, E.dim(), "r-hat");
    if (!v.passed || !expect_r) return v;
    for (int n = 0; n <= E.dim(); ++n)
        for (const auto& b : E.base().simplices(n)) {
            const auto got = r_hat(alpha, b);
            if (got != E.r(b)) {
                v.fail("r-hat " + tuple_str(got) + " != r " + tuple_str(E.r(b)) + " at " + E.base().describe(b));
                return v;
            }
        }
    return v;
}

Verdict verify_roundtrip(const PrincipalBundle& E) {
    Verdict v;
    v.map = "bundle roundtrip";
    v.max_degree = E.dim();
    const auto sigma = canonical_pseudo_section(E);
    v.absorb(verify_pseudo_section(E, sigma));
    const auto alpha = transition_elements(E, sigma);
    v.absorb(transition_functor_check(alpha));

    // Normalized: alpha(b, s^i) = 1 and alpha(b, d^i) = 1 for i > 0.
    Verdict norm;
    norm.map = "normalized atlas";
    const auto& B = E.base();
    for (int n = 0; n <= E.dim() && norm.passed; ++n)
        for (const auto& b : B.simplices(n)) {
            ++norm.checked;
            for (int i = 1; i <= n; ++i)
                if (alpha.get(b, coface(i, n)) != 0) norm.fail("alpha(b, d^" + std::to_string(i) + ") != 1 at " + B.describe(b));
            if (n < E.dim())
                for (int j = 0; j <= n; ++j)
                    if (alpha.get(b, codegeneracy(j, n)) != 0)
                        norm.fail("alpha(b, s^" + std::to_string(j) + ") != 1 at " + B.describe(b));
        }
    v.absorb(norm);
    v.absorb(verify_r_hat(E, alpha, true));
    return v;
}

AtlasVerdict tau_atlas_check(const TauDescriptor& tau, const PrincipalBundle& E, const TransitionAssignment& alpha,
                             int chain_length_cap, int ordinal_cap) {
    AtlasVerdict out;
    const auto& B = E.base();
    const auto& K = E.group();
    const int M = std::min(ordinal_cap, E.dim());
    out.atlas.map = "tau-atlas " + tau.str();
    out.atlas.max_degree = chain_length_cap;
    out.atlas.caps = {{"chain_length", chain_length_cap}, {"ordinal", ordinal_cap}};

    std::vector<std::vector<SimplexRef>> levels;
    for (int n = 0; n <= M; ++n) levels.push_back(B.simplices(n));

    for (int l = 1; l <= chain_length_cap && out.atlas.passed; ++l) {
        const auto chains = enumerate_chains(l, M);
        auto bad = first_failure(chains.size(), [&](std::size_t idx) -> std::string {
            const auto& chain = chains[idx];
            for (const auto& top : levels[static_cast<std::size_t>(chain.last())]) {
                std::vector<SimplexRef> bs(static_cast<std::size_t>(l + 1));
                bs.back() = top;
                IntChain c{chain.ordinals, chain.maps, std::vector<Element>(static_cast<std::size_t>(l))};
                for (int i = l - 1; i >= 0; --i) {
                    const auto ui = static_cast<std::size_t>(i);
                    bs[ui] = B.act(chain.maps[ui], bs[ui + 1]);
                    c.elems[ui] = K.inverse(chain.ordinals[ui], alpha.get(bs[ui + 1], chain.maps[ui]));
                }
                for (int i = 0; i < l; ++i) {
                    const auto tuple = int_chain_tuple(K, c, i);
                    if (!tuple_admissible(tau, K.level(chain.ordinals[static_cast<std::size_t>(i)]), tuple))
                        return "chain over " + B.describe(top) + " along " + chain.str() + " maps to " + c.str() +
                               "; tuple " + tuple_str(tuple) + " at position " + std::to_string(i) +
                               " is not admissible";
                }
            }
            return {};
        });
        for (const auto& chain : chains) out.atlas.checked += levels[static_cast<std::size_t>(chain.last())].size();
        if (bad) out.atlas.fail(*bad);
    }

    out.factorization.map = "r-hat into W-bar(" + tau.str() + ")";
    out.factorization.max_degree = E.dim();
    for (int n = 0; n <= E.dim() && out.factorization.passed; ++n)
        for (const auto& b : B.simplices(n)) {
            ++out.factorization.checked;
            const auto x = r_hat(alpha, b);
            if (!wbar_tau_member(tau, K, x)) {
                out.factorization.fail("r-hat(" + B.describe(b) + ") = " + tuple_str(x) + " is not in the subcomplex");
                break;
            }
        }
    return out;
}

RandomBundleData random_classified_base(const SimplicialGroup& K, int max_dim, std::uint64_t seed) {
    if (max_dim < 0) throw InvalidInput("random base: negative dimension");
    std::mt19937_64 rng(seed);
    auto below = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

    RandomBundleData out{TruncatedComplex(max_dim), ClassifyingData(static_cast<std::size_t>(max_dim + 1))};
    auto& B = out.base;
    auto& r = out.r;
    const std::size_t vertices = 1 + below(3);
    for (std::size_t v = 0; v < vertices; ++v) {
        B.add_vertex();
        r[0].push_back({});
    }

    for (int d = 1; d <= max_dim; ++d) {
        const auto prev = B.simplices(d - 1);
        const std::size_t cells = (d == 1 ? 1 : 0) + below(4);
        for (std::size_t c = 0; c < cells; ++c) {
            std::vector<SimplexRef> faces;
            std::vector<Element> x;
            if (d == 2 && below(2) == 0) {
                // Fill a horn (f_0, -, f_2) and add the missing edge.
                auto pick = [&](auto&& fits) {
                    std::vector<SimplexRef> all, cells;
                    for (const auto& f : prev)
                        if (fits(f)) (f.nondegenerate() ? cells : all).push_back(f);
                    const auto& from = cells.empty() ? all : cells;
                    return from[below(from.size())];
                };
                const auto f0 = pick([](const SimplexRef&) { return true; });
                const auto f2 = pick([&](const SimplexRef& f) { return B.face(1, 0, f) == B.face(1, 1, f0); });
                const Element x0 = r_of(K, r, f0).front();
                const Element x1 = K.degeneracy(0, 0, r_of(K, r, f2).front());
                const Element label = K.multiply(0, K.face(1, 0, x1), x0);
                const auto e = B.add_cell(1, {B.face(1, 0, f0), B.face(1, 1, f2)});
                r[1].push_back({label});
                faces = {f0, TruncatedComplex::cell_ref(1, e), f2};
                x = {x1, x0};
            }
            for (int attempt = 0; attempt < 40 && x.empty(); ++attempt) {
                faces.clear();
                bool ok = true;
                for (int j = 0; j <= d && ok; ++j) {
                    std::vector<SimplexRef> cand;
                    for (const auto& f : prev) {
                        bool fits = true;
                        for (int i = 0; i < j && fits; ++i)
                            fits = d < 2 || B.face(d - 1, i, f) == B.face(d - 1, j - 1, faces[static_cast<std::size_t>(i)]);
                        if (fits) cand.push_back(f);
                    }
                    if (cand.empty()) ok = false;
                    else faces.push_back(cand[below(cand.size())]);
                }
                if (!ok) continue;
                const auto tail = r_of(K, r, faces[0]);
                const auto order = static_cast<Element>(K.order(d - 1));
                const auto start = static_cast<Element>(below(order));
                for (Element t = 0; t < order; ++t) {
                    std::vector<Element> cand{static_cast<Element>((start + t) % order)};
                    cand.insert(cand.end(), tail.begin(), tail.end());
                    bool fills = true;
                    for (int i = 1; i <= d && fills; ++i)
                        fills = wbar_face(K, d, i, cand) == r_of(K, r, faces[static_cast<std::size_t>(i)]);
                    if (fills) {
                        x = std::move(cand);
                        break;
                    }
                }
            }
            if (x.empty()) {
                // The boundary of s_0 y always has a filler.
                const auto& y = prev[below(prev.size())];
                faces = {y, y};
                for (int j = 2; j <= d; ++j) faces.push_back(B.degeneracy(d - 2, 0, B.face(d - 1, j - 1, y)));
                x = wbar_degeneracy(K, d - 1, 0, r_of(K, r, y));
            }
            B.add_cell(d, faces);
            r[static_cast<std::size_t>(d)].push_back(std::move(x));
        }
    }
    return out;
}

nlohmann::json bundle_to_json(const PrincipalBundle& E) {
    const auto* D = dynamic_cast<const DiscreteSimplicialGroup*>(&E.group());
    if (!D) throw InvalidInput("bundle JSON: only discrete groups serialize");
    return {{"group", D->group().to_json()}, {"base", E.base().to_json()}, {"r", E.cells()}};
}

BundleData bundle_from_json(const nlohmann::json& j) {
    try {
        BundleData out{std::make_shared<const DiscreteSimplicialGroup>(FiniteGroup::from_json(j.at("group"))),
                       TruncatedComplex::from_json(j.at("base")), j.at("r").get<ClassifyingData>()};
        (void)out.make();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bundle JSON: ") + e.what());
    }
}

}  // namespace wbar
