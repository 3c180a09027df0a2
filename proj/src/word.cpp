#include "wbar/word.hpp"

#include <algorithm>
#include <cmath>

#include "wbar/errors.hpp"

namespace wbar {

Word::Word(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
}

void Word::push(Letter l) {
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

std::size_t Word::length() const {
    std::size_t n = 0;
    for (const auto& l : letters_) n += static_cast<std::size_t>(std::llabs(l.exp));
    return n;
}

Word Word::inverse() const {
    Word out;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.letters_.push_back({it->gen, -it->exp});
    return out;
}

Word Word::pow(long long e) const {
    Word base = e < 0 ? inverse() : *this;
    Word out;
    for (long long i = 0; i < std::llabs(e); ++i) out *= base;
    return out;
}

Word& Word::operator*=(const Word& rhs) {
    for (const auto& l : rhs.letters_) push(l);
    return *this;
}

std::string Word::str(const std::function<std::string(std::size_t)>& name) const {
    if (letters_.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        if (i) out += ' ';
        out += name ? name(letters_[i].gen) : "x" + std::to_string(letters_[i].gen);
        if (letters_[i].exp != 1) out += "^" + std::to_string(letters_[i].exp);
    }
    return out;
}

Word substitute(const Word& w, const std::function<Word(std::size_t)>& images) {
    Word out;
    for (const auto& l : w.letters()) out *= images(l.gen).pow(l.exp);
    return out;
}

Element evaluate(const Word& w, const Group& G, const std::vector<Element>& images) {
    Element out = 0;
    for (const auto& l : w.letters()) {
        if (l.gen >= images.size()) throw IndexError("evaluate: generator without image");
        out = G.multiply(out, G.power(images[l.gen], l.exp));
    }
    return out;
}

std::vector<std::vector<Element>> hom_enumeration(const FpPresentation& P, const Group& G,
                                                  std::size_t budget) {
    double total = 1;
    for (std::size_t i = 0; i < P.generator_count; ++i) total *= static_cast<double>(G.order());
    if (total > static_cast<double>(budget))
        throw BudgetExceeded("hom enumeration: |G|^" + std::to_string(P.generator_count) + " exceeds budget");

    // Each relator is checked as soon as its largest generator is assigned.
    std::vector<std::vector<const Word*>> due(P.generator_count + 1);
    for (const auto& r : P.relators) {
        std::size_t top = 0;
        for (const auto& l : r.letters()) {
            if (l.gen >= P.generator_count) throw InvalidInput("relator uses unknown generator");
            top = std::max(top, l.gen + 1);
        }
        due[top].push_back(&r);
    }
    std::vector<std::vector<Element>> out;
    std::vector<Element> images(P.generator_count, 0);
    auto holds = [&](std::size_t depth) {
        for (const Word* r : due[depth])
            if (evaluate(*r, G, images) != 0) return false;
        return true;
    };
    if (!holds(0)) return out;

    std::function<void(std::size_t)> assign = [&](std::size_t depth) {
        if (depth == P.generator_count) {
            out.push_back(images);
            return;
        }
        for (Element g = 0; g < G.order(); ++g) {
            images[depth] = g;
            if (holds(depth + 1)) assign(depth + 1);
        }
        images[depth] = 0;
    };
    assign(0);
    return out;
}

}  // namespace wbar
