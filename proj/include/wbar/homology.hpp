#pragma once

// Normalized chains of truncated complexes and integral homology through
// Smith normal form over arbitrary-precision integers.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "wbar/simplicial.hpp"
#include "wbar/verdict.hpp"

namespace wbar {

using Integer = boost::multiprecision::cpp_int;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit IntMatrix(const std::vector<std::vector<long long>>& rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

/// Bareiss fraction-free elimination.
Integer determinant(const IntMatrix& M);

/// U M V = D with D diagonal, nonnegative, each diagonal entry dividing the
/// next, and U, V unimodular. Pivots are chosen by least absolute value.
struct SmithForm {
    IntMatrix U, D, V;
    std::size_t rank = 0;

    /// The nonzero diagonal entries in order.
    std::vector<Integer> divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& M, bool with_transforms = true);

/// Boundary matrices on nondegenerate cells: boundary[d] maps C_d to
/// C_{d-1} (rows index (d-1)-cells), with boundary[0] of shape 0 x |C_0|.
struct ChainComplex {
    std::vector<std::size_t> basis;
    std::vector<IntMatrix> boundary;

    int top() const { return static_cast<int>(basis.size()) - 1; }
};

/// The boundary of a cell is sum (-1)^i d_i c, degenerate faces dropped.
ChainComplex normalized_chains(const TruncatedComplex& X);

/// d_{d-1} d_d = 0 for every computed d.
Verdict check_boundary_squared(const ChainComplex& C);

struct HomologyGroup {
    std::size_t betti = 0;
    std::vector<Integer> torsion;

    bool trivial() const { return betti == 0 && torsion.empty(); }
    /// "0", "Z", "Z^2 + Z/2 + Z/6".
    std::string str() const;
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// H_i = ker d_i / im d_{i+1}; needs i < top(), else InsufficientTruncation.
HomologyGroup homology(const ChainComplex& C, int i);
/// H_0 .. H_{i_max}, one Smith form per boundary matrix, degrees in parallel.
std::vector<HomologyGroup> homology_range(const ChainComplex& C, int i_max);

/// dim H_i(X; F_p) by universal coefficients from H_i and H_{i-1}.
std::size_t mod_p_dimension(const std::vector<HomologyGroup>& H, int i, unsigned p);

/// [{"degree", "betti", "torsion", "truncation"}, ...]
nlohmann::json homology_report(const std::vector<HomologyGroup>& H, int truncation);

/// Homology of a model through its Eilenberg-Zilber truncation.
template <SimplicialModel M>
std::vector<HomologyGroup> model_homology(const M& model, int N, int i_max) {
    return homology_range(normalized_chains(materialize(model, N).complex), i_max);
}

}  // namespace wbar
