#include "wbar/wbar.hpp"

#include <map>

namespace wbar {

std::vector<Element> wbar_membership_tuple(const SimplicialGroup& K, const std::vector<Element>& x, int l) {
    const int k = static_cast<int>(x.size());
    std::vector<Element> tuple;
    tuple.reserve(static_cast<std::size_t>(l));
    for (int j = 0; j < l; ++j) {
        Element y = x[static_cast<std::size_t>(j)];
        for (int level = k - 1 - j; level > k - l; --level) y = K.face(level, 0, y);
        tuple.push_back(y);
    }
    return tuple;
}

bool wbar_tau_member(const TauDescriptor& tau, const SimplicialGroup& K, const std::vector<Element>& x) {
    if (tau.kind == TauDescriptor::Kind::Free) return true;
    const int k = static_cast<int>(x.size());
    for (int l = 1; l <= k; ++l)
        if (!tuple_admissible(tau, K.level(k - l), wbar_membership_tuple(K, x, l))) return false;
    return true;
}

template <class Visit>
void Wbar::enumerate(int k, Visit&& visit) const {
    double total = 1;
    for (int i = 0; i < k; ++i) total *= static_cast<double>(K_->order(i));
    if (total > static_cast<double>(budget_))
        throw BudgetExceeded("W-bar level " + std::to_string(k) + " has " + std::to_string(static_cast<unsigned long long>(total)) +
                             " tuples, over budget " + std::to_string(budget_));
    const bool filter = tau_.kind != TauDescriptor::Kind::Free;
    Simplex x(static_cast<std::size_t>(k), 0);
    // Membership condition l only involves the first l entries, so it prunes.
    auto extend = [&](auto&& self, int t) -> void {
        if (t == k) {
            visit(x);
            return;
        }
        const auto count = static_cast<Element>(K_->order(k - 1 - t));
        for (Element g = 0; g < count; ++g) {
            x[static_cast<std::size_t>(t)] = g;
            if (filter) {
                Simplex prefix(x.begin(), x.begin() + t + 1);
                const int l = t + 1;
                std::vector<Element> tuple;
                for (int j = 0; j < l; ++j) {
                    Element y = prefix[static_cast<std::size_t>(j)];
                    for (int level = k - 1 - j; level > k - l; --level) y = K_->face(level, 0, y);
                    tuple.push_back(y);
                }
                if (!tuple_admissible(tau_, K_->level(k - l), tuple)) continue;
            }
            self(self, t + 1);
        }
        x[static_cast<std::size_t>(t)] = 0;
    };
    extend(extend, 0);
}

std::vector<Wbar::Simplex> Wbar::simplices(int k) const {
    std::vector<Simplex> out;
    enumerate(k, [&](const Simplex& x) { out.push_back(x); });
    return out;
}

std::size_t Wbar::count(int k) const {
    std::size_t n = 0;
    enumerate(k, [&](const Simplex&) { ++n; });
    return n;
}

bool Wbar::member(int k, const Simplex& x) const {
    if (static_cast<int>(x.size()) != k) return false;
    for (int t = 0; t < k; ++t)
        if (x[static_cast<std::size_t>(t)] >= K_->order(k - 1 - t)) return false;
    return wbar_tau_member(tau_, *K_, x);
}

std::string Wbar::describe(const Simplex& x) const {
    const int k = static_cast<int>(x.size());
    std::string out = "(";
    for (int t = 0; t < k; ++t) {
        if (t) out += ", ";
        out += K_->describe(k - 1 - t, x[static_cast<std::size_t>(t)]);
    }
    return out + ")";
}

WTotal::Simplex WTotal::act(int n, Element g, Simplex w) const {
    w.at(0) = bar_.group().multiply(n, g, w[0]);
    return w;
}

Verdict verify_w_total(const WTotal& W, int max_degree) {
    const SimplicialGroup& K = W.base().group();
    Verdict v = check_simplicial_identities(W, max_degree, "WK");
    if (!v.passed) return v;
    v.absorb(check_simplicial_map(
        W, W.base(), [&](int n, const WTotal::Simplex& w) { return W.project(n, w); }, max_degree,
        "WK -> W-bar K"));
    if (!v.passed) return v;
    for (int n = 0; n <= max_degree; ++n) {
        std::map<Wbar::Simplex, std::size_t> fibers;
        for (const auto& w : W.simplices(n)) {
            ++fibers[W.project(n, w)];
            for (Element g = 1; g < K.order(n); ++g) {
                const auto gw = W.act(n, g, w);
                if (gw == w) {
                    v.fail("action not free at " + W.describe(w));
                    return v;
                }
                if (W.project(n, gw) != W.project(n, w)) {
                    v.fail("action leaves the fiber at " + W.describe(w));
                    return v;
                }
                for (int i = 0; i <= n && n >= 1; ++i)
                    if (W.face(n, i, gw) != W.act(n - 1, K.face(n, i, g), W.face(n, i, w))) {
                        v.fail("d" + std::to_string(i) + " not equivariant at " + W.describe(w));
                        return v;
                    }
                for (int j = 0; j <= n; ++j)
                    if (W.degeneracy(n, j, gw) != W.act(n + 1, K.degeneracy(n, j, g), W.degeneracy(n, j, w))) {
                        v.fail("s" + std::to_string(j) + " not equivariant at " + W.describe(w));
                        return v;
                    }
            }
        }
        const auto base = W.base().simplices(n);
        if (fibers.size() != base.size()) {
            v.fail("projection not surjective in degree " + std::to_string(n));
            return v;
        }
        for (const auto& [b, size] : fibers)
            if (size != K.order(n)) {
                v.fail("fiber over " + W.base().describe(b) + " has " + std::to_string(size) + " elements");
                return v;
            }
    }
    return v;
}

DecodedHom::DecodedHom(const SimplicialGroup& K, int k, std::vector<Element> tuple)
    : K_(&K), k_(k), tuple_(std::move(tuple)) {
    if (static_cast<int>(tuple_.size()) != k) throw InvalidInput("decode: tuple length differs from k");
}

Element DecodedHom::image(int n, const OrdinalMap& phi, int j) const {
    const int l = phi(0);
    if (j < 1 || j > l || l > k_) throw IndexError("decode: generator out of range");
    Element y = tuple_[static_cast<std::size_t>(j - 1)];
    for (int level = k_ - j; level > k_ - l; --level) y = K_->face(level, 0, y);
    std::vector<int> shifted;
    shifted.reserve(phi.values().size());
    for (int t : phi.values()) shifted.push_back(t - l);
    (void)n;
    return K_->act(OrdinalMap(std::move(shifted), k_ - l + 1), y);
}

Element DecodedHom::apply(const Pi1Dec& P, int n, const Word& w) const {
    const Group& G = K_->level(n);
    Element out = 0;
    for (const auto& letter : w.letters()) {
        const auto& g = P.generator(n, letter.gen);
        out = G.multiply(out, G.power(image(n, g.phi, g.j), letter.exp));
    }
    return out;
}

std::vector<Element> encode_hom(int k, const std::function<Element(int, const OrdinalMap&, int)>& f) {
    std::vector<Element> out;
    for (int l = 1; l <= k; ++l) out.push_back(f(k - l, shift(k - l, l), l));
    return out;
}

Verdict verify_tuple_bijection(const SimplicialGroup& K, int k, int max_level) {
    max_level = std::max(max_level, k);
    Verdict v;
    v.map = "tuple bijection k=" + std::to_string(k);
    v.max_degree = max_level;
    v.caps = {{"k", k}};
    const Pi1Dec P(k, max_level);
    const Pi1Dec P_plus(k + 1, max_level + 1);
    const std::unique_ptr<Pi1Dec> P_minus = k >= 1 ? std::make_unique<Pi1Dec>(k - 1, max_level) : nullptr;
    const Wbar W(K);
    for (const auto& x : W.simplices(k)) {
        ++v.checked;
        const DecodedHom f(K, k, x);
        const std::string at = " at " + W.describe(x);
        const auto image = [&](int n, const OrdinalMap& phi, int j) { return f.image(n, phi, j); };
        if (encode_hom(k, image) != x) {
            v.fail("encode(decode) differs" + at);
            return v;
        }
        for (int n = 0; n <= max_level; ++n)
            for (std::size_t g = 0; g < P.rank(n); ++g) {
                const Word gen = Word::generator(g);
                const Element fx = f.apply(P, n, gen);
                for (int i = 0; i <= n && n >= 1; ++i)
                    if (f.apply(P, n - 1, P.face(n, i, gen)) != K.face(n, i, fx)) {
                        v.fail("decode does not commute with d" + std::to_string(i) + " on " +
                               P.describe(n, gen) + at);
                        return v;
                    }
                for (int j = 0; j <= n; ++j)
                    if (f.apply(P, n + 1, P.degeneracy(n, j, gen)) != K.degeneracy(n, j, fx)) {
                        v.fail("decode does not commute with s" + std::to_string(j) + " on " +
                               P.describe(n, gen) + at);
                        return v;
                    }
            }
        for (int i = 0; i <= k && k >= 1; ++i) {
            const OrdinalMap delta = coface(i, k);
            std::vector<Element> pulled;
            for (int l = 1; l <= k - 1; ++l) {
                const int level = k - 1 - l;
                const Word pushed = P_minus->push_forward(delta, P, level, P_minus->bracket(level, shift(level, l), l));
                pulled.push_back(f.apply(P, level, pushed));
            }
            if (pulled != wbar_face(K, k, i, x)) {
                v.fail("coface d^" + std::to_string(i) + " does not give the face" + at);
                return v;
            }
        }
        for (int i = 0; i <= k; ++i) {
            const OrdinalMap sigma = codegeneracy(i, k);
            std::vector<Element> pulled;
            for (int l = 1; l <= k + 1; ++l) {
                const int level = k + 1 - l;
                const Word pushed = P_plus.push_forward(sigma, P, level, P_plus.bracket(level, shift(level, l), l));
                pulled.push_back(f.apply(P, level, pushed));
            }
            if (pulled != wbar_degeneracy(K, k, i, x)) {
                v.fail("codegeneracy s^" + std::to_string(i) + " does not give the degeneracy" + at);
                return v;
            }
        }
    }
    return v;
}

std::vector<Element> kappa(int n, const SuspensionSimplex& s) {
    std::vector<Element> out(static_cast<std::size_t>(n), 0);
    if (s.summand > 0) out.at(static_cast<std::size_t>(s.summand - 1)) = s.x;
    return out;
}

std::vector<Element> kappa_tau(const TauDescriptor& tau, const SimplicialGroup& K, int n,
                               const SuspensionSimplex& s) {
    auto out = kappa(n, s);
    if (!wbar_tau_member(tau, K, out))
        throw FactorizationFailure("kappa image (" + std::to_string(s.summand) + "," + std::to_string(s.x) +
                                   ") in degree " + std::to_string(n) + " is not in W-bar(" + tau.str() + ")");
    return out;
}

Verdict verify_kappa(const SimplicialGroup& K, const TauDescriptor& tau, int max_degree) {
    const KanSuspension sigma(K);
    const Wbar target(K, tau);
    const std::string name = "kappa " + tau.str();
    try {
        auto v = check_simplicial_map(
            sigma, target, [&](int n, const SuspensionSimplex& s) { return kappa_tau(tau, K, n, s); }, max_degree,
            name);
        v.caps = {{"degree", max_degree}};
        return v;
    } catch (const FactorizationFailure& e) {
        Verdict v;
        v.map = name;
        v.max_degree = max_degree;
        v.fail(e.what());
        return v;
    }
}

Element counit_epsilon(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int n, const Word& w) {
    const Group& G = K.level(n);
    Element out = 0;
    for (const auto& l : w.letters()) out = G.multiply(out, G.power(GW.generator_simplex(n, l.gen).at(0), l.exp));
    return out;
}

Verdict verify_counit(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int max_level) {
    Verdict v;
    v.map = "counit";
    v.max_degree = max_level;
    for (int n = 0; n <= max_level; ++n)
        for (std::size_t g = 0; g < GW.rank(n); ++g) {
            ++v.checked;
            const Word x = Word::generator(g);
            const Element ex = counit_epsilon(K, GW, n, x);
            const std::string at = " on " + GW.describe(n, x);
            for (int i = 0; i <= n && n >= 1; ++i)
                if (counit_epsilon(K, GW, n - 1, GW.face(n, i, x)) != K.face(n, i, ex)) {
                    v.fail("d" + std::to_string(i) + at);
                    return v;
                }
            for (int j = 0; j <= n && n < max_level; ++j)
                if (counit_epsilon(K, GW, n + 1, GW.degeneracy(n, j, x)) != K.degeneracy(n, j, ex)) {
                    v.fail("s" + std::to_string(j) + at);
                    return v;
                }
        }
    return v;
}

Verdict verify_triangle(const SimplicialGroup& K, const LoopGroup<Wbar>& GW, int max_degree) {
    Verdict v;
    v.map = "triangle identity";
    v.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& w : GW.base().simplices(n)) {
            ++v.checked;
            const auto eta = unit_eta(GW, n, w);
            std::vector<Element> back;
            for (int t = 0; t < n; ++t)
                back.push_back(counit_epsilon(K, GW, n - 1 - t, eta[static_cast<std::size_t>(t)]));
            if (back != w) {
                v.fail("at " + GW.base().describe(w));
                return v;
            }
        }
    return v;
}

SplittingChain::SplittingChain(const SimplicialGroup& K, TauDescriptor tau, int max_level)
    : K_(&K),
      tau_(tau),
      max_level_(max_level),
      sigma_(K),
      g_sigma_(sigma_, max_level),
      fk_(K, max_level),
      bar_tau_(K, tau),
      bar_(K),
      g_bar_tau_(bar_tau_, max_level),
      g_bar_(bar_, max_level) {}

Word SplittingChain::to_loop_suspension(int n, const Word& w) const {
    return substitute(w, [&](std::size_t g) { return g_sigma_.bracket(n, {1, fk_.generator_element(g)}); });
}

Word SplittingChain::to_loop_wbar_tau(int n, const Word& w) const {
    return substitute(w, [&](std::size_t g) {
        return g_bar_tau_.bracket(n, kappa_tau(tau_, *K_, n + 1, g_sigma_.generator_simplex(n, g)));
    });
}

Word SplittingChain::to_loop_wbar(int n, const Word& w) const {
    return substitute(w, [&](std::size_t g) { return g_bar_.bracket(n, g_bar_tau_.generator_simplex(n, g)); });
}

Element SplittingChain::composite(int n, Element x) const {
    const Word w = to_loop_wbar(n, to_loop_wbar_tau(n, to_loop_suspension(n, fk_.bracket(n, x))));
    return counit_epsilon(*K_, g_bar_, n, w);
}

Verdict SplittingChain::verify() const {
    Verdict v;
    v.map = "splitting chain " + tau_.str();
    v.max_degree = max_level_;
    try {
        v.absorb(verify_milnor(fk_, g_sigma_, max_level_));
        if (!v.passed) return v;
        auto commutes = [&](auto&& source, auto&& target, auto&& map, const std::string& name) {
            for (int n = 0; n <= max_level_; ++n)
                for (std::size_t g = 0; g < source.rank(n); ++g) {
                    ++v.checked;
                    const Word x = Word::generator(g);
                    const std::string at = " on " + source.describe(n, x);
                    for (int i = 0; i <= n && n >= 1; ++i)
                        if (map(n - 1, source.face(n, i, x)) != target.face(n, i, map(n, x))) {
                            v.fail(name + " vs d" + std::to_string(i) + at);
                            return;
                        }
                    for (int j = 0; j <= n && n < max_level_; ++j)
                        if (map(n + 1, source.degeneracy(n, j, x)) != target.degeneracy(n, j, map(n, x))) {
                            v.fail(name + " vs s" + std::to_string(j) + at);
                            return;
                        }
                }
        };
        commutes(g_sigma_, g_bar_tau_, [&](int n, const Word& w) { return to_loop_wbar_tau(n, w); },
                 "G(kappa_tau)");
        if (!v.passed) return v;
        commutes(g_bar_tau_, g_bar_, [&](int n, const Word& w) { return to_loop_wbar(n, w); }, "G(inclusion)");
        if (!v.passed) return v;
        v.absorb(verify_counit(*K_, g_bar_, max_level_));
        if (!v.passed) return v;
        for (int n = 0; n <= max_level_; ++n)
            for (Element x = 0; x < K_->order(n); ++x) {
                ++v.checked;
                if (composite(n, x) != x) {
                    v.fail("composite moves " + K_->describe(n, x) + " in degree " + std::to_string(n));
                    return v;
                }
            }
    } catch (const FactorizationFailure& e) {
        v.fail(e.what());
    }
    return v;
}

std::vector<std::size_t> wbar_counts(const SimplicialGroup& K, const TauDescriptor& tau, int k_max) {
    const Wbar W(K, tau);
    std::vector<std::size_t> out;
    for (int k = 0; k <= k_max; ++k) out.push_back(W.count(k));
    return out;
}

Verdict verify_filtration(const SimplicialGroup& K, int q_max, int max_degree) {
    Verdict v;
    v.map = "filtration gamma:2..gamma:" + std::to_string(q_max);
    v.max_degree = max_degree;
    v.caps = {{"q_max", q_max}};
    const Wbar full(K);
    for (int q = 2; q <= q_max; ++q) {
        const auto tau = TauDescriptor::lower_central(q);
        v.absorb(check_subcomplex(
            full, [&](int, const Wbar::Simplex& x) { return wbar_tau_member(tau, K, x); }, max_degree,
            "W-bar(" + tau.str() + ") closure"));
        if (!v.passed) return v;
    }
    for (int k = 0; k <= max_degree; ++k)
        for (const auto& x : full.simplices(k)) {
            bool inside = false;
            for (int q = 2; q <= q_max; ++q) {
                const bool member = wbar_tau_member(TauDescriptor::lower_central(q), K, x);
                if (inside && !member) {
                    v.fail("gamma:" + std::to_string(q - 1) + " member outside gamma:" + std::to_string(q) +
                           " at " + full.describe(x));
                    return v;
                }
                inside = member;
            }
        }
    return v;
}

}  // namespace wbar
