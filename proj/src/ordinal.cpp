#include "wbar/ordinal.hpp"

#include <ostream>
#include <sstream>

#include "wbar/errors.hpp"

namespace wbar {

OrdinalMap::OrdinalMap(std::vector<int> values, int codomain_size)
    : values_(std::move(values)), codomain_size_(codomain_size) {
    if (values_.empty()) {
        throw InvalidInput("OrdinalMap: empty domain, use EmptyOrdinal");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 0 || values_[i] >= codomain_size_) {
            throw InvalidInput("OrdinalMap: value out of range in " + str());
        }
        if (i > 0 && values_[i] < values_[i - 1]) {
            throw InvalidInput("OrdinalMap: not monotone: " + str());
        }
    }
}

OrdinalMap OrdinalMap::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
    return OrdinalMap(std::move(v), n + 1);
}

OrdinalMap OrdinalMap::constant(int m, int n, int v) {
    return OrdinalMap(std::vector<int>(static_cast<std::size_t>(m + 1), v), n + 1);
}

bool OrdinalMap::is_identity() const {
    if (domain_size() != codomain_size_) return false;
    for (int i = 0; i < domain_size(); ++i)
        if ((*this)(i) != i) return false;
    return true;
}

bool OrdinalMap::is_injective() const {
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] == values_[i - 1]) return false;
    return true;
}

bool OrdinalMap::is_surjective() const {
    if (values_.front() != 0 || values_.back() != codomain_size_ - 1) return false;
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] - values_[i - 1] > 1) return false;
    return true;
}

std::string OrdinalMap::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) os << ',';
        os << values_[i];
    }
    os << "):[" << values_.size() - 1 << "]->[" << codomain_size_ - 1 << ']';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const OrdinalMap& f) { return os << f.str(); }

OrdinalMap compose(const OrdinalMap& f, const OrdinalMap& g) {
    if (f.codomain_size() != g.domain_size()) {
        throw CompositionError("compose: " + f.str() + " then " + g.str());
    }
    std::vector<int> v(static_cast<std::size_t>(f.domain_size()));
    for (int i = 0; i < f.domain_size(); ++i) v[static_cast<std::size_t>(i)] = g(f(i));
    return OrdinalMap(std::move(v), g.codomain_size());
}

OrdinalMap coface(int i, int n) {
    if (n < 1 || i < 0 || i > n) {
        throw IndexError("coface d^" + std::to_string(i) + " into [" + std::to_string(n) + "]");
    }
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) v.push_back(t < i ? t : t + 1);
    return OrdinalMap(std::move(v), n + 1);
}

OrdinalMap codegeneracy(int i, int n) {
    if (n < 0 || i < 0 || i > n) {
        throw IndexError("codegeneracy s^" + std::to_string(i) + " onto [" + std::to_string(n) +
                         "]");
    }
    std::vector<int> v;
    v.reserve(static_cast<std::size_t>(n + 2));
    for (int t = 0; t <= n + 1; ++t) v.push_back(t <= i ? t : t - 1);
    return OrdinalMap(std::move(v), n + 1);
}

OrdinalMap shift(int n, int p) {
    std::vector<int> v(static_cast<std::size_t>(n + 1));
    for (int t = 0; t <= n; ++t) v[static_cast<std::size_t>(t)] = t + p;
    return OrdinalMap(std::move(v), n + p + 1);
}

EpiMono epi_mono_factor(const OrdinalMap& f) {
    std::vector<int> epi;
    std::vector<int> image;
    epi.reserve(static_cast<std::size_t>(f.domain_size()));
    for (int i = 0; i < f.domain_size(); ++i) {
        if (image.empty() || image.back() != f(i)) image.push_back(f(i));
        epi.push_back(static_cast<int>(image.size()) - 1);
    }
    const int middle = static_cast<int>(image.size());
    return {OrdinalMap(std::move(epi), middle), OrdinalMap(std::move(image), f.codomain_size())};
}

std::vector<int> coface_word(const OrdinalMap& mono) {
    std::vector<int> missing;
    int next = 0;
    for (int t = 0; t < mono.codomain_size(); ++t) {
        if (next < mono.domain_size() && mono(next) == t) {
            ++next;
        } else {
            missing.push_back(t);
        }
    }
    return missing;
}

std::vector<int> codegeneracy_word(const OrdinalMap& epi) {
    std::vector<int> repeats;
    for (int j = 0; j + 1 < epi.domain_size(); ++j)
        if (epi(j) == epi(j + 1)) repeats.push_back(j);
    return repeats;
}

namespace {

template <class Keep>
std::vector<OrdinalMap> enumerate_filtered(int m, int n, Keep keep) {
    std::vector<OrdinalMap> out;
    if (m < 0 || n < 0) return out;
    std::vector<int> v(static_cast<std::size_t>(m + 1), 0);
    while (true) {
        OrdinalMap f(v, n + 1);
        if (keep(f)) out.push_back(std::move(f));
        // Advance to the next weakly increasing sequence in lex order.
        int pos = m;
        while (pos >= 0 && v[static_cast<std::size_t>(pos)] == n) --pos;
        if (pos < 0) break;
        const int value = v[static_cast<std::size_t>(pos)] + 1;
        for (int t = pos; t <= m; ++t) v[static_cast<std::size_t>(t)] = value;
    }
    return out;
}

}  // namespace

std::vector<OrdinalMap> enumerate_maps(int m, int n) {
    return enumerate_filtered(m, n, [](const OrdinalMap&) { return true; });
}

std::vector<OrdinalMap> enumerate_surjections(int m, int n) {
    return enumerate_filtered(m, n, [](const OrdinalMap& f) { return f.is_surjective(); });
}

std::vector<OrdinalMap> enumerate_injections(int m, int n) {
    return enumerate_filtered(m, n, [](const OrdinalMap& f) { return f.is_injective(); });
}

std::uint64_t count_maps(int m, int n) {
    // C(n + m + 1, m + 1)
    const std::uint64_t top = static_cast<std::uint64_t>(n + m + 1);
    const std::uint64_t k = static_cast<std::uint64_t>(m + 1);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

AugmentedMap monoidal_sum(const AugmentedMap& phi, const AugmentedMap& theta) {
    const int left_cod = std::holds_alternative<EmptyOrdinal>(phi)
                             ? std::get<EmptyOrdinal>(phi).codomain_size
                             : std::get<OrdinalMap>(phi).codomain_size();
    const int right_cod = std::holds_alternative<EmptyOrdinal>(theta)
                              ? std::get<EmptyOrdinal>(theta).codomain_size
                              : std::get<OrdinalMap>(theta).codomain_size();
    std::vector<int> v;
    if (const auto* f = std::get_if<OrdinalMap>(&phi)) v = f->values();
    if (const auto* g = std::get_if<OrdinalMap>(&theta)) {
        for (int x : g->values()) v.push_back(x + left_cod);
    }
    if (v.empty()) return EmptyOrdinal{left_cod + right_cod};
    return OrdinalMap(std::move(v), left_cod + right_cod);
}

}  // namespace wbar
