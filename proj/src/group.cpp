#include "wbar/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "wbar/errors.hpp"

namespace wbar {

Element Group::power(Element a, long long e) const {
    if (e < 0) {
        a = inverse(a);
        e = -e;
    }
    Element result = 0;
    Element base = a;
    while (e > 0) {
        if (e & 1) result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

Element Group::commutator(Element a, Element b) const {
    return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
    const std::size_t n = table_.size();
    if (n == 0) throw InvalidInput("group table is empty");
    for (const auto& row : table_) {
        if (row.size() != n) throw InvalidInput("group table is not square");
        for (Element x : row)
            if (x >= n) throw InvalidInput("group table entry out of range");
    }
    for (Element a = 0; a < n; ++a) {
        if (table_[0][a] != a || table_[a][0] != a)
            throw InvalidInput("group table: index 0 is not the identity");
    }
    inverse_.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        const auto& row = table_[a];
        const auto it = std::find(row.begin(), row.end(), Element{0});
        if (it == row.end()) throw InvalidInput("group table: element without inverse");
        inverse_[a] = static_cast<Element>(it - row.begin());
        if (table_[inverse_[a]][a] != 0) throw InvalidInput("group table: inverse not two-sided");
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) {
            const Element ab = table_[a][b];
            for (Element c = 0; c < n; ++c)
                if (table_[ab][c] != table_[a][table_[b][c]])
                    throw InvalidInput("group table is not associative");
        }
}

FiniteGroup FiniteGroup::from_rule(std::size_t n, const std::function<Element(Element, Element)>& mul,
                                   std::string name) {
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) table[a][b] = mul(a, b);
    return FiniteGroup(std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<int>>& generators,
                                           std::string name, std::size_t budget) {
    std::size_t degree = 0;
    for (const auto& g : generators) degree = std::max(degree, g.size());
    auto normalise = [&](std::vector<int> p) {
        if (p.size() > degree) throw InvalidInput("permutation of wrong degree");
        for (std::size_t i = p.size(); i < degree; ++i) p.push_back(static_cast<int>(i));
        std::vector<int> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < degree; ++i)
            if (sorted[i] != static_cast<int>(i)) throw InvalidInput("not a permutation");
        return p;
    };
    std::vector<std::vector<int>> gens;
    for (const auto& g : generators) gens.push_back(normalise(g));

    auto compose_perm = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> r(a.size());
        for (std::size_t x = 0; x < a.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
        return r;
    };

    std::vector<int> id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<std::vector<int>> elements{id};
    std::map<std::vector<int>, Element> index{{id, 0}};
    for (std::size_t next = 0; next < elements.size(); ++next) {
        for (const auto& g : gens) {
            auto p = compose_perm(elements[next], g);
            if (index.count(p)) continue;
            if (elements.size() >= budget)
                throw BudgetExceeded("permutation group exceeds order budget " + std::to_string(budget));
            index.emplace(p, static_cast<Element>(elements.size()));
            elements.push_back(std::move(p));
        }
    }
    const std::size_t n = elements.size();
    std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) table[a][b] = index.at(compose_perm(elements[a], elements[b]));
    FiniteGroup G(std::move(table), std::move(name));
    G.permutations_ = std::move(elements);
    return G;
}

FiniteGroup FiniteGroup::from_json(const nlohmann::json& j, std::size_t budget) {
    try {
        const std::string name = j.value("name", std::string("G"));
        if (j.contains("table")) {
            auto table = j.at("table").get<std::vector<std::vector<Element>>>();
            if (table.size() > budget)
                throw BudgetExceeded("group order " + std::to_string(table.size()) + " exceeds budget");
            return FiniteGroup(std::move(table), name);
        }
        if (j.contains("permutations"))
            return from_permutations(j.at("permutations").get<std::vector<std::vector<int>>>(), name,
                                     budget);
        throw InvalidInput("group JSON needs \"table\" or \"permutations\"");
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("group JSON: ") + e.what());
    }
}

nlohmann::json FiniteGroup::to_json() const { return {{"name", name_}, {"table", table_}}; }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0) throw InvalidInput("cyclic group of order 0");
    return from_rule(
        n, [n](Element a, Element b) { return static_cast<Element>((a + b) % n); },
        "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n < 2) throw InvalidInput("dihedral group needs n >= 2");
    std::vector<int> r(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        r[i] = static_cast<int>((i + 1) % n);
        s[i] = static_cast<int>((n - i) % n);
    }
    return from_permutations({r, s}, "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw InvalidInput("symmetric group supported for 1 <= n <= 5");
    if (n == 1) return from_permutations({{0}}, "S1");
    std::vector<int> swap(static_cast<std::size_t>(n)), cycle(static_cast<std::size_t>(n));
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (int i = 0; i < n; ++i) cycle[static_cast<std::size_t>(i)] = (i + 1) % n;
    return from_permutations({swap, cycle}, "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion() {
    // index = 2 * unit + sign, units 1, i, j, k
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    return from_rule(
        8,
        [](Element a, Element b) {
            const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
            const int s = (static_cast<int>(a % 2) + static_cast<int>(b % 2) + sign[ua][ub]) % 2;
            return static_cast<Element>(2 * unit[ua][ub] + s);
        },
        "Q8");
}

FiniteGroup FiniteGroup::extraspecial32() {
    // element = a | (c << 4); (a, c)(b, d) = (a + b, c + d + a1 b2 + a3 b4)
    return from_rule(
        32,
        [](Element x, Element y) {
            const Element a = x & 15u, b = y & 15u;
            const Element beta = ((a & 1u) & ((b >> 1) & 1u)) ^ (((a >> 2) & 1u) & ((b >> 3) & 1u));
            const Element c = ((x >> 4) ^ (y >> 4) ^ beta) & 1u;
            return static_cast<Element>((a ^ b) | (c << 4));
        },
        "extraspecial32");
}

FiniteGroup FiniteGroup::builtin(const std::string& label) {
    std::smatch m;
    static const std::regex with_arg(R"((cyclic|dihedral|symmetric):(\d+))");
    static const std::regex short_form(R"(([ZDS])(\d+))");
    if (std::regex_match(label, m, with_arg)) {
        const std::size_t n = std::stoul(m[2]);
        if (m[1] == "cyclic") return cyclic(n);
        if (m[1] == "dihedral") return dihedral(n);
        return symmetric(static_cast<int>(n));
    }
    if (std::regex_match(label, m, short_form)) {
        const std::size_t n = std::stoul(m[2]);
        if (m[1] == "Z") return cyclic(n);
        if (m[1] == "D") return dihedral(n);
        return symmetric(static_cast<int>(n));
    }
    if (label == "Q8" || label == "quaternion") return quaternion();
    if (label == "extraspecial32" || label == "E32") return extraspecial32();
    throw InvalidInput("unknown builtin group '" + label + "'");
}

std::string FiniteGroup::element_name(Element a) const {
    if (permutations_.empty()) return std::to_string(a);
    const auto& p = permutations_[a];
    std::string out;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t start = 0; start < p.size(); ++start) {
        if (seen[start] || p[start] == static_cast<int>(start)) continue;
        out += '(';
        std::size_t x = start;
        bool first = true;
        while (!seen[x]) {
            seen[x] = true;
            if (!first) out += ' ';
            out += std::to_string(x + 1);
            first = false;
            x = static_cast<std::size_t>(p[x]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

bool FiniteGroup::is_abelian() const {
    for (Element a = 0; a < order(); ++a)
        for (Element b = a + 1; b < order(); ++b)
            if (table_[a][b] != table_[b][a]) return false;
    return true;
}

std::optional<Element> FiniteGroup::find_permutation(const std::vector<int>& perm) const {
    for (std::size_t i = 0; i < permutations_.size(); ++i) {
        auto p = permutations_[i];
        if (p.size() < perm.size()) continue;
        bool match = true;
        for (std::size_t x = 0; x < p.size(); ++x) {
            const int want = x < perm.size() ? perm[x] : static_cast<int>(x);
            if (p[x] != want) {
                match = false;
                break;
            }
        }
        if (match) return static_cast<Element>(i);
    }
    return std::nullopt;
}

PowerGroup::PowerGroup(std::shared_ptr<const Group> base, int exponent)
    : base_(std::move(base)), exponent_(exponent), order_(1) {
    if (exponent_ < 0) throw InvalidInput("negative power");
    for (int i = 0; i < exponent_; ++i) {
        order_ *= base_->order();
        if (order_ > (std::size_t{1} << 31)) throw BudgetExceeded("power group too large");
    }
}

std::vector<Element> PowerGroup::unpack(Element a) const {
    std::vector<Element> parts(static_cast<std::size_t>(exponent_));
    const auto q = static_cast<Element>(base_->order());
    for (auto& p : parts) {
        p = a % q;
        a /= q;
    }
    return parts;
}

Element PowerGroup::pack(const std::vector<Element>& parts) const {
    const auto q = static_cast<Element>(base_->order());
    Element a = 0;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) a = a * q + *it;
    return a;
}

Element PowerGroup::multiply(Element a, Element b) const {
    const auto q = static_cast<Element>(base_->order());
    Element result = 0, scale = 1;
    for (int i = 0; i < exponent_; ++i) {
        result += base_->multiply(a % q, b % q) * scale;
        a /= q;
        b /= q;
        scale *= q;
    }
    return result;
}

Element PowerGroup::inverse(Element a) const {
    const auto q = static_cast<Element>(base_->order());
    Element result = 0, scale = 1;
    for (int i = 0; i < exponent_; ++i) {
        result += base_->inverse(a % q) * scale;
        a /= q;
        scale *= q;
    }
    return result;
}

std::string PowerGroup::element_name(Element a) const {
    std::string out = "<";
    const auto parts = unpack(a);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ",";
        out += base_->element_name(parts[i]);
    }
    return out + ">";
}

std::vector<Element> Subgroup::elements() const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < member.size(); ++i)
        if (member[i]) out.push_back(static_cast<Element>(i));
    return out;
}

Subgroup subgroup_closure(const Group& G, const std::vector<Element>& gens) {
    Subgroup H;
    H.member.assign(G.order(), false);
    H.member[0] = true;
    std::vector<Element> frontier{0};
    for (Element g : gens)
        if (g != 0) H.generators.push_back(g);
    // Right multiplication by generators reaches every element of a finite group.
    for (std::size_t next = 0; next < frontier.size(); ++next) {
        for (Element g : H.generators) {
            const Element x = G.multiply(frontier[next], g);
            if (!H.member[x]) {
                H.member[x] = true;
                frontier.push_back(x);
            }
        }
    }
    H.size = frontier.size();
    return H;
}

Subgroup normal_closure(const Group& G, const Subgroup& H, const std::vector<Element>& gens) {
    Subgroup N = subgroup_closure(G, gens);
    while (true) {
        std::vector<Element> extra;
        for (Element n : N.generators)
            for (Element h : H.generators) {
                const Element c = G.multiply(G.multiply(G.inverse(h), n), h);
                if (!N.member[c]) extra.push_back(c);
            }
        if (extra.empty()) return N;
        auto grown = N.generators;
        grown.insert(grown.end(), extra.begin(), extra.end());
        N = subgroup_closure(G, grown);
    }
}

}  // namespace wbar
