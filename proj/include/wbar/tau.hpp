#pragma once

// Quotient functors tau of free groups and the admissibility test for
// tuples in a finite group.

#include <cstddef>
#include <string>
#include <vector>

#include "wbar/group.hpp"

namespace wbar {

struct TauDescriptor {
    enum class Kind { Free, LowerCentral, ModPLowerCentral, AbelianModPow };

    Kind kind = Kind::Free;
    int p = 0;
    int q = 0;
    int k = 0;

    static TauDescriptor free_group() { return {}; }
    static TauDescriptor lower_central(int q);
    static TauDescriptor mod_p_lower_central(int p, int q);
    static TauDescriptor abelian_mod_pow(int p, int k);

    /// free | gamma:q | gammap:p,q | abmodpk:p,k
    static TauDescriptor parse(const std::string& text);
    std::string str() const;

    friend bool operator==(const TauDescriptor&, const TauDescriptor&) = default;
};

/// Stage q of the lower central series of H (stage 1 is H itself); with
/// p > 0, the mod-p series [N, H] N^p instead.
Subgroup verbal_stage(const Group& G, const Subgroup& H, int q, int p = 0);

/// True iff e_j -> tuple[j] factors through tau F^l. Decided on the finite
/// side: the verbal subgroup of the generated subgroup must vanish.
bool tuple_admissible(const TauDescriptor& tau, const Group& G, const std::vector<Element>& tuple);

/// Independent test used as a cross-check for the abelian quotient.
bool pairwise_commute(const Group& G, const std::vector<Element>& tuple);

/// Admissible l-tuples in lexicographic order. Throws BudgetExceeded when
/// |G|^l exceeds the budget.
std::vector<std::vector<Element>> enumerate_admissible(const TauDescriptor& tau, const Group& G, int l,
                                                       std::size_t budget = 1u << 22);
std::size_t count_admissible(const TauDescriptor& tau, const Group& G, int l,
                             std::size_t budget = 1u << 26);

}  // namespace wbar
