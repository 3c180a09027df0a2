#include "wbar/tau.hpp"

#include <functional>
#include <regex>

#include "wbar/errors.hpp"

namespace wbar {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_budget(const Group& G, int l, std::size_t budget) {
    double total = 1;
    for (int i = 0; i < l; ++i) total *= static_cast<double>(G.order());
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("|G|^" + std::to_string(l) + " exceeds enumeration budget");
}

}  // namespace

TauDescriptor TauDescriptor::lower_central(int q) {
    if (q < 2) throw InvalidInput("lower central quotient needs q >= 2");
    return {Kind::LowerCentral, 0, q, 0};
}

TauDescriptor TauDescriptor::mod_p_lower_central(int p, int q) {
    if (!is_prime(p)) throw InvalidInput("mod-p quotient needs a prime p");
    if (q < 2) throw InvalidInput("mod-p quotient needs q >= 2");
    return {Kind::ModPLowerCentral, p, q, 0};
}

TauDescriptor TauDescriptor::abelian_mod_pow(int p, int k) {
    if (!is_prime(p)) throw InvalidInput("abelian mod p^k quotient needs a prime p");
    if (k < 1) throw InvalidInput("abelian mod p^k quotient needs k >= 1");
    return {Kind::AbelianModPow, p, 0, k};
}

TauDescriptor TauDescriptor::parse(const std::string& text) {
    static const std::regex one(R"(gamma:(\d+))");
    static const std::regex two(R"((gammap|abmodpk):(\d+),(\d+))");
    std::smatch m;
    if (text == "free") return free_group();
    if (std::regex_match(text, m, one)) return lower_central(std::stoi(m[1]));
    if (std::regex_match(text, m, two)) {
        const int a = std::stoi(m[2]), b = std::stoi(m[3]);
        return m[1] == "gammap" ? mod_p_lower_central(a, b) : abelian_mod_pow(a, b);
    }
    throw InvalidInput("unrecognised tau '" + text + "'");
}

std::string TauDescriptor::str() const {
    switch (kind) {
        case Kind::Free: return "free";
        case Kind::LowerCentral: return "gamma:" + std::to_string(q);
        case Kind::ModPLowerCentral: return "gammap:" + std::to_string(p) + "," + std::to_string(q);
        case Kind::AbelianModPow: return "abmodpk:" + std::to_string(p) + "," + std::to_string(k);
    }
    return "?";
}

Subgroup verbal_stage(const Group& G, const Subgroup& H, int q, int p) {
    Subgroup N = H;
    for (int stage = 2; stage <= q && !N.trivial(); ++stage) {
        std::vector<Element> gens;
        for (Element a : N.generators)
            for (Element h : H.generators) gens.push_back(G.commutator(a, h));
        if (p > 0) {
            for (Element n : N.elements()) gens.push_back(G.power(n, p));
        }
        N = normal_closure(G, H, gens);
    }
    return N;
}

bool pairwise_commute(const Group& G, const std::vector<Element>& tuple) {
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (!G.commute(tuple[i], tuple[j])) return false;
    return true;
}

bool tuple_admissible(const TauDescriptor& tau, const Group& G, const std::vector<Element>& tuple) {
    if (tau.kind == TauDescriptor::Kind::Free) return true;
    const Subgroup H = subgroup_closure(G, tuple);
    if (H.size == 1) return true;
    switch (tau.kind) {
        case TauDescriptor::Kind::LowerCentral: return verbal_stage(G, H, tau.q).trivial();
        case TauDescriptor::Kind::ModPLowerCentral: return verbal_stage(G, H, tau.q, tau.p).trivial();
        case TauDescriptor::Kind::AbelianModPow: {
            long long e = 1;
            for (int i = 0; i < tau.k; ++i) e *= tau.p;
            for (Element g : H.generators)
                if (G.power(g, e) != 0) return false;
            return verbal_stage(G, H, 2).trivial();
        }
        case TauDescriptor::Kind::Free: break;
    }
    return true;
}

std::vector<std::vector<Element>> enumerate_admissible(const TauDescriptor& tau, const Group& G, int l,
                                                       std::size_t budget) {
    check_budget(G, l, budget);
    std::vector<std::vector<Element>> out;
    std::vector<Element> tuple;
    // Prefixes of admissible tuples are admissible, so failing prefixes prune.
    std::function<void()> extend = [&] {
        if (static_cast<int>(tuple.size()) == l) {
            out.push_back(tuple);
            return;
        }
        for (Element g = 0; g < G.order(); ++g) {
            tuple.push_back(g);
            if (tuple_admissible(tau, G, tuple)) extend();
            tuple.pop_back();
        }
    };
    extend();
    return out;
}

std::size_t count_admissible(const TauDescriptor& tau, const Group& G, int l, std::size_t budget) {
    check_budget(G, l, budget);
    std::size_t count = 0;
    std::vector<Element> tuple;
    std::function<void()> extend = [&] {
        if (static_cast<int>(tuple.size()) == l) {
            ++count;
            return;
        }
        for (Element g = 0; g < G.order(); ++g) {
            tuple.push_back(g);
            if (tuple_admissible(tau, G, tuple)) extend();
            tuple.pop_back();
        }
    };
    extend();
    return count;
}

}  // namespace wbar
