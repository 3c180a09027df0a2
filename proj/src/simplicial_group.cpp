#include "wbar/simplicial_group.hpp"

#include "wbar/errors.hpp"

namespace wbar {

Element SimplicialGroup::act(const OrdinalMap& theta, Element x) const {
    if (is_discrete()) return x;
    const auto [epi, mono] = epi_mono_factor(theta);
    int n = theta.target_dim();
    const auto missing = coface_word(mono);
    for (auto it = missing.rbegin(); it != missing.rend(); ++it) x = face(n--, *it, x);
    for (int j : codegeneracy_word(epi)) x = degeneracy(n++, j, x);
    return x;
}

VertexPowerGroup::VertexPowerGroup(std::shared_ptr<const FiniteGroup> G, int max_level)
    : G_(std::move(G)) {
    for (int n = 0; n <= max_level + 1; ++n) levels_.push_back(std::make_unique<PowerGroup>(G_, n + 1));
}

const Group& VertexPowerGroup::level(int n) const {
    if (n < 0 || n >= static_cast<int>(levels_.size()))
        throw InsufficientTruncation("vertex-power group built only to level " +
                                     std::to_string(levels_.size() - 1));
    return *levels_[static_cast<std::size_t>(n)];
}

Element VertexPowerGroup::face(int n, int i, Element x) const {
    auto parts = levels_.at(static_cast<std::size_t>(n))->unpack(x);
    parts.erase(parts.begin() + i);
    return static_cast<const PowerGroup&>(level(n - 1)).pack(parts);
}

Element VertexPowerGroup::degeneracy(int n, int j, Element x) const {
    auto parts = levels_.at(static_cast<std::size_t>(n))->unpack(x);
    parts.insert(parts.begin() + j, parts[static_cast<std::size_t>(j)]);
    return static_cast<const PowerGroup&>(level(n + 1)).pack(parts);
}

Verdict check_simplicial_group(const SimplicialGroup& K, int max_degree) {
    Verdict v;
    v.map = "simplicial-group " + K.name();
    v.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        const auto& G = K.level(n);
        const auto count = static_cast<Element>(G.order());
        for (Element a = 0; a < count; ++a) {
            ++v.checked;
            const std::string where = " at " + K.describe(n, a) + " in degree " + std::to_string(n);
            for (Element b = 0; b < count; ++b) {
                const Element ab = G.multiply(a, b);
                for (int i = 0; i <= n && n > 0; ++i)
                    if (K.face(n, i, ab) != K.multiply(n - 1, K.face(n, i, a), K.face(n, i, b))) {
                        v.fail("d" + std::to_string(i) + " not a homomorphism" + where);
                        return v;
                    }
                for (int j = 0; j <= n; ++j)
                    if (K.degeneracy(n, j, ab) !=
                        K.multiply(n + 1, K.degeneracy(n, j, a), K.degeneracy(n, j, b))) {
                        v.fail("s" + std::to_string(j) + " not a homomorphism" + where);
                        return v;
                    }
            }
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n && n >= 2; ++j)
                    if (K.face(n - 1, i, K.face(n, j, a)) != K.face(n - 1, j - 1, K.face(n, i, a))) {
                        v.fail("d" + std::to_string(i) + "d" + std::to_string(j) + where);
                        return v;
                    }
            for (int j = 0; j <= n; ++j) {
                const Element s = K.degeneracy(n, j, a);
                for (int i = 0; i <= n + 1; ++i) {
                    const Element lhs = K.face(n + 1, i, s);
                    Element rhs;
                    if (i < j) rhs = K.degeneracy(n - 1, j - 1, K.face(n, i, a));
                    else if (i <= j + 1) rhs = a;
                    else rhs = K.degeneracy(n - 1, j, K.face(n, i - 1, a));
                    if (lhs != rhs) {
                        v.fail("d" + std::to_string(i) + "s" + std::to_string(j) + where);
                        return v;
                    }
                }
                for (int i = 0; i <= j; ++i)
                    if (K.degeneracy(n + 1, i, s) != K.degeneracy(n + 1, j + 1, K.degeneracy(n, i, a))) {
                        v.fail("s" + std::to_string(i) + "s" + std::to_string(j) + where);
                        return v;
                    }
            }
        }
    }
    return v;
}

}  // namespace wbar
