#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace wbar {

/// Elements are indices; the identity is always 0.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultOrderBudget = 512;

class Group {
public:
    virtual ~Group() = default;
    virtual std::size_t order() const = 0;
    virtual Element multiply(Element a, Element b) const = 0;
    virtual Element inverse(Element a) const = 0;
    virtual std::string element_name(Element a) const { return std::to_string(a); }

    Element power(Element a, long long e) const;
    /// a^-1 b^-1 a b
    Element commutator(Element a, Element b) const;
    bool commute(Element a, Element b) const { return multiply(a, b) == multiply(b, a); }
};

/// A group given by its Cayley table.
class FiniteGroup : public Group {
public:
    /// Validates closure, identity at index 0, associativity and inverses.
    FiniteGroup(std::vector<std::vector<Element>> table, std::string name = "G");

    /// Builds a group from a multiplication rule on [0, n) with identity 0.
    static FiniteGroup from_rule(std::size_t n, const std::function<Element(Element, Element)>& mul,
                                 std::string name);
    /// Closure of permutations of {0..d-1}. Product is composition: (ab)(x) = a(b(x)).
    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& generators,
                                         std::string name = "G",
                                         std::size_t budget = kDefaultOrderBudget);
    /// {"name":..., "table":[[...]]} or {"permutations":[[...]]}.
    static FiniteGroup from_json(const nlohmann::json& j, std::size_t budget = kDefaultOrderBudget);
    nlohmann::json to_json() const;

    static FiniteGroup cyclic(std::size_t n);
    /// The dihedral group of order 2n.
    static FiniteGroup dihedral(std::size_t n);
    static FiniteGroup symmetric(int n);
    static FiniteGroup quaternion();
    /// Extraspecial group of order 32: pairs (a in F2^4, c in F2).
    static FiniteGroup extraspecial32();
    /// Names: cyclic:N, dihedral:N, symmetric:N, S3, D4, Q8, Z2, Z4, extraspecial32 ...
    static FiniteGroup builtin(const std::string& label);

    std::size_t order() const override { return table_.size(); }
    Element multiply(Element a, Element b) const override { return table_[a][b]; }
    Element inverse(Element a) const override { return inverse_[a]; }
    std::string element_name(Element a) const override;

    const std::string& name() const { return name_; }
    const std::vector<std::vector<Element>>& table() const { return table_; }
    bool is_abelian() const;

    /// Element index of a permutation, for groups built from permutations.
    std::optional<Element> find_permutation(const std::vector<int>& perm) const;

private:
    std::vector<std::vector<Element>> table_;
    std::vector<Element> inverse_;
    std::string name_;
    std::vector<std::vector<int>> permutations_;
};

/// G^r with componentwise product; element index is sum g_t |G|^t.
class PowerGroup : public Group {
public:
    PowerGroup(std::shared_ptr<const Group> base, int exponent);

    std::size_t order() const override { return order_; }
    Element multiply(Element a, Element b) const override;
    Element inverse(Element a) const override;
    std::string element_name(Element a) const override;

    int exponent() const { return exponent_; }
    const Group& base() const { return *base_; }
    std::vector<Element> unpack(Element a) const;
    Element pack(const std::vector<Element>& parts) const;

private:
    std::shared_ptr<const Group> base_;
    int exponent_;
    std::size_t order_;
};

/// Membership bitmap plus a generating set.
struct Subgroup {
    std::vector<bool> member;
    std::vector<Element> generators;
    std::size_t size = 1;

    bool contains(Element a) const { return member[a]; }
    bool trivial() const { return size == 1; }
    std::vector<Element> elements() const;
};

/// Smallest subgroup containing gens.
Subgroup subgroup_closure(const Group& G, const std::vector<Element>& gens);
/// Smallest subgroup of H containing gens and normal in H.
Subgroup normal_closure(const Group& G, const Subgroup& H, const std::vector<Element>& gens);

}  // namespace wbar
