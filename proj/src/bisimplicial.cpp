#include "wbar/bisimplicial.hpp"

#include <algorithm>
#include <set>

#include "wbar/standard.hpp"
#include "wbar/wbar.hpp"

namespace wbar {

namespace {

std::string join_elements(const std::vector<Element>& g) {
    std::string out = "(";
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(g[i]);
    }
    return out + ")";
}

template <class T>
void erase_at(std::vector<T>& v, int i) {
    v.erase(v.begin() + i);
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<GroupNerve::Simplex> GroupNerve::simplices(int p, int q) const {
    return enumerate_admissible(tau_, K_->level(q), p, budget_);
}

bool GroupNerve::member(int p, int q, const Simplex& g) const {
    if (static_cast<int>(g.size()) != p) return false;
    const Group& G = K_->level(q);
    for (Element x : g)
        if (x >= G.order()) return false;
    return tuple_admissible(tau_, G, g);
}

GroupNerve::Simplex GroupNerve::hface(int p, int q, int i, const Simplex& g) const {
    if (p < 1 || i < 0 || i > p || static_cast<int>(g.size()) != p) throw IndexError("nerve: bad horizontal face");
    Simplex out = g;
    if (i == 0) {
        erase_at(out, 0);
    } else if (i == p) {
        out.pop_back();
    } else {
        out[static_cast<std::size_t>(i - 1)] = K_->multiply(q, g[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(i)]);
        erase_at(out, i);
    }
    return out;
}

GroupNerve::Simplex GroupNerve::hdegeneracy(int p, int, int i, const Simplex& g) const {
    if (i < 0 || i > p) throw IndexError("nerve: bad horizontal degeneracy");
    Simplex out = g;
    out.insert(out.begin() + i, Element{0});
    return out;
}

GroupNerve::Simplex GroupNerve::vface(int, int q, int j, const Simplex& g) const {
    Simplex out;
    out.reserve(g.size());
    for (Element x : g) out.push_back(K_->face(q, j, x));
    return out;
}

GroupNerve::Simplex GroupNerve::vdegeneracy(int, int q, int j, const Simplex& g) const {
    Simplex out;
    out.reserve(g.size());
    for (Element x : g) out.push_back(K_->degeneracy(q, j, x));
    return out;
}

std::string GroupNerve::describe(const Simplex& g) const { return join_elements(g); }

std::vector<GroupNerve::Simplex> wbar_to_total(const SimplicialGroup& K, int n, const std::vector<Element>& x) {
    if (static_cast<int>(x.size()) != n) throw IndexError("wbar_to_total: tuple has wrong length");
    std::vector<GroupNerve::Simplex> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    out.emplace_back();
    for (int i = 1; i <= n; ++i) out.push_back(wbar_membership_tuple(K, x, i));
    return out;
}

std::vector<Element> total_to_wbar(int n, const std::vector<GroupNerve::Simplex>& t) {
    if (static_cast<int>(t.size()) != n + 1) throw IndexError("total_to_wbar: wrong number of components");
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) out.push_back(t[static_cast<std::size_t>(i)].back());
    return out;
}

Verdict verify_wbar_total_iso(const SimplicialGroup& K, const TauDescriptor& tau, int max_degree) {
    const Wbar W(K, tau);
    const GroupNerve N(K, tau);
    const Total<GroupNerve> T(N);
    auto v = check_simplicial_map(
        W, T, [&](int n, const std::vector<Element>& x) { return wbar_to_total(K, n, x); }, max_degree,
        "W-bar -> TN");
    if (!v.passed) return v;
    for (int n = 0; n <= max_degree; ++n) {
        const auto ws = W.simplices(n);
        const auto ts = T.simplices(n);
        if (ws.size() != ts.size()) {
            v.fail("degree " + std::to_string(n) + ": " + std::to_string(ws.size()) + " W-bar simplices but " +
                   std::to_string(ts.size()) + " in TN");
            return v;
        }
        for (const auto& x : ws)
            if (total_to_wbar(n, wbar_to_total(K, n, x)) != x) {
                v.fail("inverse after forward differs at " + W.describe(x));
                return v;
            }
        for (const auto& t : ts) {
            const auto x = total_to_wbar(n, t);
            if (!W.member(n, x) || wbar_to_total(K, n, x) != t) {
                v.fail("forward after inverse differs at " + T.describe(t));
                return v;
            }
        }
    }
    return v;
}

// ---------------------------------------------------------------------------

std::string DeltaChain::str() const {
    std::string out = "[" + std::to_string(ordinals.front()) + "]";
    for (std::size_t i = 0; i < maps.size(); ++i)
        out += " -" + maps[i].str() + "-> [" + std::to_string(ordinals[i + 1]) + "]";
    return out;
}

DeltaChain chain_face(const DeltaChain& c, int i) {
    const int q = c.length();
    if (q < 1 || i < 0 || i > q) throw IndexError("chain face index out of range");
    DeltaChain out = c;
    if (i == 0) {
        erase_at(out.ordinals, 0);
        erase_at(out.maps, 0);
    } else if (i == q) {
        out.ordinals.pop_back();
        out.maps.pop_back();
    } else {
        out.maps[static_cast<std::size_t>(i - 1)] = compose(c.maps[static_cast<std::size_t>(i - 1)], c.maps[static_cast<std::size_t>(i)]);
        erase_at(out.maps, i);
        erase_at(out.ordinals, i);
    }
    return out;
}

DeltaChain chain_degeneracy(const DeltaChain& c, int j) {
    if (j < 0 || j > c.length()) throw IndexError("chain degeneracy index out of range");
    DeltaChain out = c;
    const int n = c.ordinals[static_cast<std::size_t>(j)];
    out.ordinals.insert(out.ordinals.begin() + j, n);
    out.maps.insert(out.maps.begin() + j, OrdinalMap::identity(n));
    return out;
}

DeltaChain chain_prefix(const DeltaChain& c, int i) {
    if (i < 0 || i > c.length()) throw IndexError("chain prefix out of range");
    return {std::vector<int>(c.ordinals.begin(), c.ordinals.begin() + i + 1),
            std::vector<OrdinalMap>(c.maps.begin(), c.maps.begin() + i)};
}

std::vector<DeltaChain> enumerate_chains(int q, int cap) {
    if (q < 0 || cap < 0) throw IndexError("enumerate_chains: negative argument");
    std::vector<DeltaChain> out;
    std::vector<int> ords(static_cast<std::size_t>(q + 1), 0);
    while (true) {
        std::vector<std::vector<OrdinalMap>> choices;
        for (int i = 0; i < q; ++i) choices.push_back(enumerate_maps(ords[static_cast<std::size_t>(i)], ords[static_cast<std::size_t>(i + 1)]));
        std::vector<std::size_t> pick(static_cast<std::size_t>(q), 0);
        while (true) {
            DeltaChain c{ords, {}};
            for (int i = 0; i < q; ++i) c.maps.push_back(choices[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]]);
            out.push_back(std::move(c));
            int t = q - 1;
            while (t >= 0 && ++pick[static_cast<std::size_t>(t)] == choices[static_cast<std::size_t>(t)].size()) pick[static_cast<std::size_t>(t--)] = 0;
            if (t < 0) break;
        }
        int t = q;
        while (t >= 0 && ++ords[static_cast<std::size_t>(t)] > cap) ords[static_cast<std::size_t>(t--)] = 0;
        if (t < 0) break;
    }
    return out;
}

void check_chain_cap(const DeltaChain& c, int cap) {
    for (int n : c.ordinals)
        if (n > cap) throw CapExceeded("ordinal [" + std::to_string(n) + "] above cap " + std::to_string(cap));
}

// ---------------------------------------------------------------------------

std::string IntChain::str() const {
    std::string out = "[" + std::to_string(ordinals.front()) + "]";
    for (std::size_t i = 0; i < maps.size(); ++i)
        out += " -(" + maps[i].str() + "," + std::to_string(elems[i]) + ")-> [" + std::to_string(ordinals[i + 1]) + "]";
    return out;
}

std::vector<Element> int_chain_tuple(const SimplicialGroup& K, const IntChain& c, int i) {
    const int l = c.length();
    if (i < 0 || i >= l) throw IndexError("int_chain_tuple: index out of range");
    std::vector<Element> out{c.elems[static_cast<std::size_t>(i)]};
    OrdinalMap phi = c.maps[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < l; ++j) {
        out.push_back(K.act(phi, c.elems[static_cast<std::size_t>(j)]));
        if (j + 1 < l) phi = compose(phi, c.maps[static_cast<std::size_t>(j)]);
    }
    return out;
}

bool int_chain_member(const TauDescriptor& tau, const SimplicialGroup& K, const IntChain& c) {
    if (tau.kind == TauDescriptor::Kind::Free) return true;
    for (int i = 0; i < c.length(); ++i)
        if (!tuple_admissible(tau, K.level(c.ordinals[static_cast<std::size_t>(i)]), int_chain_tuple(K, c, i)))
            return false;
    return true;
}

GrothendieckNerve::GrothendieckNerve(const SimplicialGroup& K, int cap, TauDescriptor tau, std::size_t budget)
    : K_(&K), cap_(cap), tau_(tau), budget_(budget) {
    if (cap < 0) throw InvalidInput("ordinal cap must be non-negative");
}

void GrothendieckNerve::for_each_labelling(const DeltaChain& chain,
                                           const std::function<bool(const IntChain&)>& visit) const {
    const int l = chain.length();
    std::size_t size = 1;
    for (int i = 0; i < l; ++i) {
        size *= K_->order(chain.ordinals[static_cast<std::size_t>(i)]);
        if (size > budget_) throw BudgetExceeded("Grothendieck nerve: labellings of " + chain.str() + " exceed budget");
    }
    // Condition i involves k_i .. k_{l-1} only, so fill from the right and prune.
    IntChain c{chain.ordinals, chain.maps, std::vector<Element>(static_cast<std::size_t>(l), 0)};
    std::vector<std::vector<Element>> found;
    const bool free = tau_.kind == TauDescriptor::Kind::Free;
    const auto fill = [&](const auto& self, int i) -> void {
        if (i < 0) {
            found.push_back(c.elems);
            return;
        }
        const int n = chain.ordinals[static_cast<std::size_t>(i)];
        const Group& G = K_->level(n);
        for (Element g = 0; g < G.order(); ++g) {
            c.elems[static_cast<std::size_t>(i)] = g;
            if (free || tuple_admissible(tau_, G, int_chain_tuple(*K_, c, i))) self(self, i - 1);
        }
    };
    fill(fill, l - 1);
    std::sort(found.begin(), found.end());
    for (auto& elems : found) {
        c.elems = std::move(elems);
        if (!visit(c)) return;
    }
}

std::vector<IntChain> GrothendieckNerve::simplices(int l) const {
    std::vector<IntChain> out;
    for_each(l, [&](const IntChain& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

std::size_t GrothendieckNerve::count(int l) const {
    std::size_t n = 0;
    for_each(l, [&](const IntChain&) {
        ++n;
        return true;
    });
    return n;
}

bool GrothendieckNerve::member(const IntChain& c) const {
    const int l = c.length();
    if (static_cast<int>(c.ordinals.size()) != l + 1 || static_cast<int>(c.elems.size()) != l) return false;
    for (int n : c.ordinals)
        if (n > cap_) throw CapExceeded("chain ordinal [" + std::to_string(n) + "] above cap " + std::to_string(cap_));
    for (int i = 0; i < l; ++i) {
        const auto& f = c.maps[static_cast<std::size_t>(i)];
        if (f.source_dim() != c.ordinals[static_cast<std::size_t>(i)] ||
            f.target_dim() != c.ordinals[static_cast<std::size_t>(i + 1)])
            return false;
        if (c.elems[static_cast<std::size_t>(i)] >= K_->order(c.ordinals[static_cast<std::size_t>(i)])) return false;
    }
    return int_chain_member(tau_, *K_, c);
}

IntChain GrothendieckNerve::face(int l, int i, const IntChain& c) const {
    if (l < 1 || i < 0 || i > l || c.length() != l) throw IndexError("Grothendieck nerve: bad face");
    IntChain out = c;
    if (i == 0) {
        erase_at(out.ordinals, 0);
        erase_at(out.maps, 0);
        erase_at(out.elems, 0);
    } else if (i == l) {
        out.ordinals.pop_back();
        out.maps.pop_back();
        out.elems.pop_back();
    } else {
        const auto a = static_cast<std::size_t>(i - 1), b = static_cast<std::size_t>(i);
        // (theta_i, k_i)(theta_{i-1}, k_{i-1}) = (theta_i theta_{i-1}, k_{i-1} . theta_{i-1}^* k_i)
        out.elems[a] = K_->multiply(c.ordinals[a], c.elems[a], K_->act(c.maps[a], c.elems[b]));
        out.maps[a] = compose(c.maps[a], c.maps[b]);
        erase_at(out.ordinals, i);
        erase_at(out.maps, i);
        erase_at(out.elems, i);
    }
    return out;
}

IntChain GrothendieckNerve::degeneracy(int l, int j, const IntChain& c) const {
    if (j < 0 || j > l || c.length() != l) throw IndexError("Grothendieck nerve: bad degeneracy");
    IntChain out = c;
    const int n = c.ordinals[static_cast<std::size_t>(j)];
    out.ordinals.insert(out.ordinals.begin() + j, n);
    out.maps.insert(out.maps.begin() + j, OrdinalMap::identity(n));
    out.elems.insert(out.elems.begin() + j, Element{0});
    return out;
}

// ---------------------------------------------------------------------------

Tonks::Tonks(const SimplicialGroup& K, int cap, TauDescriptor tau)
    : K_(&K), source_(K, cap, tau), nerve_(K, tau), psi_(nerve_, cap), prime_(psi_), target_(prime_) {}

Tonks::Target::Simplex Tonks::forward(int l, const IntChain& c) const {
    if (c.length() != l) throw IndexError("Tonks: chain length differs from degree");
    const DeltaChain chain{c.ordinals, c.maps};
    check_chain_cap(chain, source_.cap());
    Target::Simplex out;
    out.reserve(static_cast<std::size_t>(l + 1));
    for (int i = 0; i <= l; ++i)
        out.push_back({chain_prefix(chain, i), i < l ? int_chain_tuple(*K_, c, i) : std::vector<Element>{}});
    return out;
}

IntChain Tonks::backward(int l, const Target::Simplex& t) const {
    if (static_cast<int>(t.size()) != l + 1) throw IndexError("Tonks inverse: wrong number of components");
    const auto& last = t.back().chain;
    if (last.length() != l) throw InvalidInput("Tonks inverse: last component has the wrong chain length");
    check_chain_cap(last, source_.cap());
    IntChain c{last.ordinals, last.maps, {}};
    for (int i = 0; i < l; ++i) {
        const auto& x = t[static_cast<std::size_t>(i)].x;
        if (x.empty()) throw InvalidInput("Tonks inverse: empty component");
        c.elems.push_back(x.front());
    }
    return c;
}

Verdict Tonks::verify(int max_degree) const {
    // Forward: simplicial, matched, inside the tau-nerve, and left inverse to
    // backward, in one pass over the source.
    auto v = check_simplicial_map_streaming(
        source_, target_, [&](int n, const IntChain& c) { return forward(n, c); }, max_degree,
        "Tonks " + source_.tau().str(), [&](int l, const IntChain& c, const Target::Simplex& t) -> std::string {
            if (!target_.matched(l, t)) return "image not matched at " + c.str();
            for (int i = 0; i <= l; ++i) {
                const auto& comp = t[static_cast<std::size_t>(i)];
                if (!nerve_.member(l - i, comp.chain.last(), comp.x)) return "image leaves the tau-nerve at " + c.str();
            }
            if (backward(l, t) != c) return "inverse after forward differs at " + c.str();
            return {};
        });
    v.caps.emplace_back("ordinal", source_.cap());
    if (!v.passed) return v;
    for (int l = 0; l <= max_degree; ++l) {
        std::size_t targets = 0;
        const auto bad = batched_first_failure<Target::Simplex>(
            [&](auto&& visit) { target_.for_each(l, visit); },
            [&](const Target::Simplex& t) -> std::string {
                const auto c = backward(l, t);
                if (!source_.member(c)) return "inverse leaves the tau-subobject at " + target_.describe(t);
                if (forward(l, c) != t) return "forward after inverse differs at " + target_.describe(t);
                return {};
            },
            targets);
        v.checked += targets;
        if (bad) {
            v.fail(*bad);
            return v;
        }
        const std::size_t sources = source_.count(l);
        if (sources != targets) {
            v.fail("degree " + std::to_string(l) + ": " + std::to_string(sources) + " chains but " +
                   std::to_string(targets) + " total simplices");
            return v;
        }
    }
    return v;
}

Verdict verify_zigzag(const SimplicialGroup& K, const TauDescriptor& tau, int cap, int max_degree) {
    Verdict v;
    v.map = "zigzag " + tau.str() + " over " + K.name();
    v.max_degree = max_degree;
    v.caps = {{"ordinal", cap}};
    const Tonks tonks(K, cap, tau);
    v.absorb(tonks.verify(max_degree));
    if (v.passed) v.absorb(verify_cr(tonks.psi_prime(), max_degree, "CR on Psi'N"));
    if (v.passed) v.absorb(verify_bk(tonks.psi(), max_degree, "BK"));
    if (v.passed) v.absorb(verify_cr(tonks.nerve(), max_degree, "CR on N"));
    if (v.passed) v.absorb(verify_wbar_total_iso(K, tau, max_degree));
    return v;
}

// ---------------------------------------------------------------------------

std::vector<DSimplex> DModel::simplices(int m, int n) const {
    std::vector<DSimplex> out;
    for (const auto& phi : enumerate_maps(n, k_))
        for (const auto& theta : enumerate_maps(m, phi(0))) out.push_back({phi, theta});
    return out;
}

DSimplex DModel::hface(int m, int, int i, const DSimplex& s) const { return {s.phi, compose(coface(i, m), s.theta)}; }

DSimplex DModel::hdegeneracy(int m, int, int i, const DSimplex& s) const {
    return {s.phi, compose(codegeneracy(i, m), s.theta)};
}

DSimplex DModel::vface(int, int n, int j, const DSimplex& s) const {
    const OrdinalMap phi = compose(coface(j, n), s.phi);
    if (j > 0) return {phi, s.theta};
    // d_0 moves the base vertex from phi(0) to phi(1): include [phi(0)] in [phi(1)].
    return {phi, OrdinalMap(s.theta.values(), s.phi(1) + 1)};
}

DSimplex DModel::vdegeneracy(int, int n, int j, const DSimplex& s) const {
    return {compose(codegeneracy(j, n), s.phi), s.theta};
}

std::string DModel::describe(const DSimplex& s) const { return "(" + s.phi.str() + ", " + s.theta.str() + ")"; }

OrdinalMap dec_g(const DSimplex& s) {
    std::vector<int> values = s.theta.values();
    values.insert(values.end(), s.phi.values().begin(), s.phi.values().end());
    return OrdinalMap(std::move(values), s.phi.codomain_size());
}

DSimplex dec_g_inverse(const OrdinalMap& alpha, int m) {
    const auto& a = alpha.values();
    if (m < 0 || m + 1 >= alpha.domain_size()) throw IndexError("dec_g_inverse: split point out of range");
    OrdinalMap phi(std::vector<int>(a.begin() + m + 1, a.end()), alpha.codomain_size());
    OrdinalMap theta(std::vector<int>(a.begin(), a.begin() + m + 1), a[static_cast<std::size_t>(m + 1)] + 1);
    return {std::move(phi), std::move(theta)};
}

Verdict verify_dec_iso(int k, int max_m, int max_n) {
    Verdict v;
    v.map = "D[" + std::to_string(k) + "] -> Dec Delta[" + std::to_string(k) + "]";
    v.max_degree = std::max(max_m, max_n);
    v.caps = {{"m", max_m}, {"n", max_n}};
    const DModel D(k);
    const StandardSimplex simplex(k);
    const DecTotal<StandardSimplex> dec(simplex);
    for (int m = 0; m <= max_m; ++m)
        for (int n = 0; n <= max_n; ++n) {
            const auto here = D.simplices(m, n);
            const auto there = dec.simplices(m, n);
            std::set<OrdinalMap> images;
            const std::string at = " at (" + std::to_string(m) + "," + std::to_string(n) + ")";
            for (const auto& s : here) {
                ++v.checked;
                const OrdinalMap a = dec_g(s);
                images.insert(a);
                const auto where = " on " + D.describe(s) + at;
                if (dec_g_inverse(a, m) != s) v.fail("inverse after g differs" + where);
                for (int i = 0; i <= m; ++i) {
                    if (m >= 1 && dec_g(D.hface(m, n, i, s)) != dec.hface(m, n, i, a))
                        v.fail("horizontal d" + std::to_string(i) + where);
                    if (dec_g(D.hdegeneracy(m, n, i, s)) != dec.hdegeneracy(m, n, i, a))
                        v.fail("horizontal s" + std::to_string(i) + where);
                }
                for (int j = 0; j <= n; ++j) {
                    if (n >= 1 && dec_g(D.vface(m, n, j, s)) != dec.vface(m, n, j, a))
                        v.fail("vertical d" + std::to_string(j) + where);
                    if (dec_g(D.vdegeneracy(m, n, j, s)) != dec.vdegeneracy(m, n, j, a))
                        v.fail("vertical s" + std::to_string(j) + where);
                }
                if (!v.passed) return v;
            }
            if (images.size() != here.size() || here.size() != there.size()) {
                v.fail("g is not a bijection" + at);
                return v;
            }
        }
    return v;
}

}  // namespace wbar
