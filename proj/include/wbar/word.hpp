#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "wbar/group.hpp"

namespace wbar {

struct Letter {
    std::size_t gen = 0;
    long long exp = 1;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A freely reduced word in syllable form: adjacent letters have distinct
/// generators and no exponent is zero.
class Word {
public:
    Word() = default;
    /// Reduces the given letters.
    explicit Word(const std::vector<Letter>& letters);

    static Word generator(std::size_t gen, long long exp = 1) {
        return Word(std::vector<Letter>{Letter{gen, exp}});
    }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Sum of |exponent| over letters.
    std::size_t length() const;

    Word inverse() const;
    Word pow(long long e) const;
    Word& operator*=(const Word& rhs);
    friend Word operator*(Word lhs, const Word& rhs) { return lhs *= rhs; }

    /// Renders with the given generator names, e.g. "x1^2 x3^-1"; "1" if empty.
    std::string str(const std::function<std::string(std::size_t)>& name = {}) const;

    friend auto operator<=>(const Word&, const Word&) = default;
    friend bool operator==(const Word&, const Word&) = default;

private:
    void push(Letter l);
    std::vector<Letter> letters_;
};

/// The homomorphism sending generator g to images(g).
Word substitute(const Word& w, const std::function<Word(std::size_t)>& images);
/// Evaluates w in a finite group with generator images.
Element evaluate(const Word& w, const Group& G, const std::vector<Element>& images);

struct FpPresentation {
    std::size_t generator_count = 0;
    std::vector<Word> relators;
};

/// Every assignment of generators to G that kills all relators, in
/// lexicographic order. Throws BudgetExceeded if |G|^gens > budget.
std::vector<std::vector<Element>> hom_enumeration(const FpPresentation& P, const Group& G,
                                                  std::size_t budget = 1u << 24);

}  // namespace wbar
