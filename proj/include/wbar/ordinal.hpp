#pragma once

// Monotone maps between finite ordinals [m] = {0 < 1 < ... < m}.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wbar {

/// A weakly monotone map [m] -> [n]. Never empty: the empty ordinal [-1]
/// is represented separately by EmptyOrdinal.
class OrdinalMap {
public:
    OrdinalMap() = default;
    /// Validates monotonicity and range; throws InvalidInput.
    OrdinalMap(std::vector<int> values, int codomain_size);

    static OrdinalMap identity(int n);
    /// The constant map [m] -> [n] with value v.
    static OrdinalMap constant(int m, int n, int v);

    int domain_size() const { return static_cast<int>(values_.size()); }
    int codomain_size() const { return codomain_size_; }
    /// m for a map [m] -> [n].
    int source_dim() const { return domain_size() - 1; }
    /// n for a map [m] -> [n].
    int target_dim() const { return codomain_size_ - 1; }

    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return values_; }

    bool is_identity() const;
    bool is_injective() const;
    bool is_surjective() const;

    std::string str() const;

    friend auto operator<=>(const OrdinalMap&, const OrdinalMap&) = default;
    friend bool operator==(const OrdinalMap&, const OrdinalMap&) = default;

private:
    std::vector<int> values_{0};
    int codomain_size_ = 1;
};

std::ostream& operator<<(std::ostream& os, const OrdinalMap& f);

/// The unique map from the empty ordinal [-1] into [codomain_size - 1].
/// With codomain_size == 0 it is the identity of [-1], the monoidal unit.
struct EmptyOrdinal {
    int codomain_size = 0;
    friend bool operator==(const EmptyOrdinal&, const EmptyOrdinal&) = default;
};

/// A morphism of the augmented simplex category.
using AugmentedMap = std::variant<EmptyOrdinal, OrdinalMap>;

/// Returns g o f for f: [k] -> [m], g: [m] -> [n]. Throws CompositionError.
OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g);

/// The coface d^i : [n-1] -> [n], skipping i. Requires n >= 1, 0 <= i <= n.
OrdinalMap coface(int i, int n);
/// The codegeneracy s^i : [n+1] -> [n], repeating i. Requires 0 <= i <= n.
OrdinalMap codegeneracy(int i, int n);

/// The iterated coface (d^0)^p : [n] -> [n + p], t -> t + p.
OrdinalMap shift(int n, int p);

struct EpiMono {
    OrdinalMap epi;
    OrdinalMap mono;
};

/// Unique factorisation f = mono o epi with epi surjective, mono injective.
EpiMono epi_mono_factor(const OrdinalMap& f);

/// Indices c_1 < ... < c_r missing from the image of an injective map;
/// mono = d^{c_r} o ... o d^{c_1}.
std::vector<int> coface_word(const OrdinalMap& mono);
/// Indices j_1 < ... < j_t with epi(j) == epi(j + 1);
/// epi = s^{j_1} o ... o s^{j_t}.
std::vector<int> codegeneracy_word(const OrdinalMap& epi);

/// All monotone maps [m] -> [n] in lexicographic order of their values.
std::vector<OrdinalMap> enumerate_maps(int m, int n);
/// Surjections [m] -> [n], lexicographic.
std::vector<OrdinalMap> enumerate_surjections(int m, int n);
/// Injections [m] -> [n], lexicographic.
std::vector<OrdinalMap> enumerate_injections(int m, int n);

/// Number of monotone maps [m] -> [n], i.e. C(n + m + 1, m + 1).
std::uint64_t count_maps(int m, int n);

/// phi + theta in the augmented simplex category.
AugmentedMap monoidal_sum(const AugmentedMap& phi, const AugmentedMap& theta);

}  // namespace wbar
