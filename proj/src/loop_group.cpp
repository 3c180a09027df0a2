#include "wbar/loop_group.hpp"

namespace wbar {

Pi1Dec::Pi1Dec(int k, int max_level) : k_(k), max_level_(max_level) {
    if (k < 0) throw InvalidInput("pi1dec needs k >= 0");
    for (int n = 0; n <= max_level + 1; ++n) {
        auto& gens = gens_.emplace_back();
        auto& offset = offset_.emplace_back();
        for (const auto& phi : enumerate_maps(n, k)) {
            offset.emplace(phi, gens.size());
            for (int j = 1; j <= phi(0); ++j) gens.push_back({phi, j});
        }
    }
}

const std::vector<Pi1DecGenerator>& Pi1Dec::table(int n) const {
    if (n < 0 || n >= static_cast<int>(gens_.size()))
        throw InsufficientTruncation("pi1dec level " + std::to_string(n) + " beyond truncation");
    return gens_[static_cast<std::size_t>(n)];
}

Word Pi1Dec::bracket(int n, const OrdinalMap& phi, int j) const {
    table(n);
    if (j < 1 || j > phi(0)) throw IndexError("pi1dec generator index out of range");
    return Word::generator(offset_[static_cast<std::size_t>(n)].at(phi) + static_cast<std::size_t>(j - 1));
}

Word Pi1Dec::face(int n, int i, const Word& w) const {
    // d_0 changes phi(0) to phi(1) and includes e_j along F^{phi(0)} -> F^{phi(1)}.
    const OrdinalMap delta = coface(i, n);
    Word out;
    for (const auto& l : w.letters()) {
        const auto& g = generator(n, l.gen);
        out *= bracket(n - 1, compose(delta, g.phi), g.j).pow(l.exp);
    }
    return out;
}

Word Pi1Dec::degeneracy(int n, int j, const Word& w) const {
    const OrdinalMap sigma = codegeneracy(j, n);
    Word out;
    for (const auto& l : w.letters()) {
        const auto& g = generator(n, l.gen);
        out *= bracket(n + 1, compose(sigma, g.phi), g.j).pow(l.exp);
    }
    return out;
}

std::string Pi1Dec::describe(int n, const Word& w) const {
    return w.str([&](std::size_t g) {
        const auto& gen = generator(n, g);
        return "[" + gen.phi.str() + ",e" + std::to_string(gen.j) + "]";
    });
}

Word Pi1Dec::push_forward(const OrdinalMap& alpha, const Pi1Dec& target, int n, const Word& w) const {
    Word out;
    for (const auto& l : w.letters()) {
        const auto& g = generator(n, l.gen);
        const OrdinalMap phi = compose(g.phi, alpha);
        Word image;
        for (int t = alpha(g.j - 1) + 1; t <= alpha(g.j); ++t) image *= target.bracket(n, phi, t);
        out *= image.pow(l.exp);
    }
    return out;
}

Epsilon::Epsilon(int k, int max_level)
    : simplex_(k), loop_(simplex_, max_level), dec_(k, max_level) {}

Word Epsilon::forward(int n, const Word& w) const {
    Word out;
    for (const auto& l : w.letters()) {
        const OrdinalMap& beta = loop_.generator_simplex(n, l.gen);
        const OrdinalMap phi = compose(coface(0, n + 1), beta);
        Word image;
        for (int t = beta(0) + 1; t <= beta(1); ++t) image *= dec_.bracket(n, phi, t);
        out *= image.pow(l.exp);
    }
    return out;
}

Word Epsilon::backward(int n, const Word& w) const {
    Word out;
    for (const auto& l : w.letters()) {
        const auto& g = dec_.generator(n, l.gen);
        auto alpha = [&](int a) {
            std::vector<int> v{a};
            v.insert(v.end(), g.phi.values().begin(), g.phi.values().end());
            return OrdinalMap(std::move(v), dec_.k() + 1);
        };
        const Word image = loop_.bracket(n, alpha(g.j - 1)) * loop_.bracket(n, alpha(g.j)).inverse();
        out *= image.pow(l.exp);
    }
    return out;
}

Verdict Epsilon::verify() const {
    Verdict v;
    v.map = "epsilon k=" + std::to_string(dec_.k());
    v.max_degree = dec_.max_level();
    v.caps = {{"k", dec_.k()}};
    for (int n = 0; n <= dec_.max_level(); ++n) {
        const std::string level = " at level " + std::to_string(n);
        if (loop_.rank(n) != dec_.rank(n)) {
            v.fail("ranks differ" + level + ": " + std::to_string(loop_.rank(n)) + " vs " +
                   std::to_string(dec_.rank(n)));
            return v;
        }
        for (std::size_t g = 0; g < loop_.rank(n); ++g) {
            ++v.checked;
            const Word x = Word::generator(g);
            const Word fx = forward(n, x);
            const auto at = " on " + loop_.describe(n, x) + level;
            if (backward(n, fx) != x) {
                v.fail("backward(forward) != id" + at);
                return v;
            }
            for (int i = 0; i <= n && n >= 1; ++i)
                if (forward(n - 1, loop_.face(n, i, x)) != dec_.face(n, i, fx)) {
                    v.fail("forward does not commute with d" + std::to_string(i) + at);
                    return v;
                }
            for (int j = 0; j <= n; ++j)
                if (forward(n + 1, loop_.degeneracy(n, j, x)) != dec_.degeneracy(n, j, fx)) {
                    v.fail("forward does not commute with s" + std::to_string(j) + at);
                    return v;
                }
        }
        for (std::size_t g = 0; g < dec_.rank(n); ++g) {
            ++v.checked;
            const Word y = Word::generator(g);
            const Word by = backward(n, y);
            const auto at = " on " + dec_.describe(n, y) + level;
            if (forward(n, by) != y) {
                v.fail("forward(backward) != id" + at);
                return v;
            }
            for (int i = 0; i <= n && n >= 1; ++i)
                if (backward(n - 1, dec_.face(n, i, y)) != loop_.face(n, i, by)) {
                    v.fail("backward does not commute with d" + std::to_string(i) + at);
                    return v;
                }
            for (int j = 0; j <= n; ++j)
                if (backward(n + 1, dec_.degeneracy(n, j, y)) != loop_.degeneracy(n, j, by)) {
                    v.fail("backward does not commute with s" + std::to_string(j) + at);
                    return v;
                }
        }
    }
    return v;
}

Verdict verify_epsilon_naturality(const Epsilon& source, const Epsilon& target, const OrdinalMap& alpha) {
    Verdict v;
    v.map = "epsilon naturality along " + alpha.str();
    v.max_degree = std::min(source.dec().max_level(), target.dec().max_level());
    for (int n = 0; n <= v.max_degree; ++n) {
        for (std::size_t g = 0; g < source.loop().rank(n); ++g) {
            ++v.checked;
            const OrdinalMap beta = compose(source.loop().generator_simplex(n, g), alpha);
            const Word lhs = target.forward(n, target.loop().bracket(n, beta));
            const Word rhs = source.dec().push_forward(alpha, target.dec(), n, source.forward(n, Word::generator(g)));
            if (lhs != rhs) {
                v.fail("generator " + source.loop().describe(n, Word::generator(g)));
                return v;
            }
        }
    }
    return v;
}

std::vector<SuspensionSimplex> KanSuspension::simplices(int n) const {
    std::vector<Simplex> out{{0, 0}};
    for (int i = 1; i <= n; ++i) {
        const auto count = static_cast<Element>(K_->order(n - i));
        for (Element x = 1; x < count; ++x) out.push_back({i, x});
    }
    return out;
}

SuspensionSimplex KanSuspension::pullback(const OrdinalMap& theta, const Simplex& s) const {
    if (s.summand == 0) return s;
    const int m = theta.source_dim();
    int cone = 0;
    while (cone <= m && theta(cone) < s.summand) ++cone;
    if (cone == 0 || cone == m + 1) return {0, 0};
    std::vector<int> rest;
    for (int t = cone; t <= m; ++t) rest.push_back(theta(t) - s.summand);
    const int base_dim = theta.target_dim() - s.summand;
    const Element y = K_->act(OrdinalMap(std::move(rest), base_dim + 1), s.x);
    if (y == 0) return {0, 0};
    return {cone, y};
}

std::string KanSuspension::describe(const Simplex& s) const {
    if (s.summand == 0) return "*";
    return "(" + std::to_string(s.summand) + "," + std::to_string(s.x) + ")";
}

Word MilnorFK::face(int n, int i, const Word& w) const {
    Word out;
    for (const auto& l : w.letters())
        out *= bracket(n - 1, K_->face(n, i, generator_element(l.gen))).pow(l.exp);
    return out;
}

Word MilnorFK::degeneracy(int n, int j, const Word& w) const {
    Word out;
    for (const auto& l : w.letters())
        out *= bracket(n + 1, K_->degeneracy(n, j, generator_element(l.gen))).pow(l.exp);
    return out;
}

std::string MilnorFK::describe(int n, const Word& w) const {
    return w.str([&](std::size_t g) { return "[" + K_->describe(n, generator_element(g)) + "]"; });
}

Verdict verify_milnor(const MilnorFK& F, const LoopGroup<KanSuspension>& G, int max_level) {
    Verdict v;
    v.map = "milnor FK = G(Sigma K)";
    v.max_degree = max_level;
    auto to_loop = [&](int n, const Word& w) {
        return substitute(w, [&](std::size_t g) { return G.bracket(n, {1, F.generator_element(g)}); });
    };
    auto to_free = [&](int n, const Word& w) {
        return substitute(w, [&](std::size_t g) {
            const auto& s = G.generator_simplex(n, g);
            if (s.summand != 1) throw VerificationFailure("loop generator outside summand 1");
            return F.bracket(n, s.x);
        });
    };
    for (int n = 0; n <= max_level; ++n) {
        if (F.rank(n) != G.rank(n)) {
            v.fail("ranks differ at level " + std::to_string(n));
            return v;
        }
        for (std::size_t g = 0; g < F.rank(n); ++g) {
            ++v.checked;
            const Word x = Word::generator(g);
            const Word y = to_loop(n, x);
            const auto at = " on " + F.describe(n, x) + " at level " + std::to_string(n);
            if (y.letters().size() != 1 || y.letters()[0].exp != 1 || to_free(n, y) != x) {
                v.fail("not a generator bijection" + at);
                return v;
            }
            for (int i = 0; i <= n && n >= 1; ++i) {
                if (to_loop(n - 1, F.face(n, i, x)) != G.face(n, i, y) ||
                    to_free(n - 1, G.face(n, i, y)) != F.face(n, i, x)) {
                    v.fail("d" + std::to_string(i) + at);
                    return v;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (to_loop(n + 1, F.degeneracy(n, j, x)) != G.degeneracy(n, j, y) ||
                    to_free(n + 1, G.degeneracy(n, j, y)) != F.degeneracy(n, j, x)) {
                    v.fail("s" + std::to_string(j) + at);
                    return v;
                }
            }
        }
    }
    return v;
}

}  // namespace wbar
