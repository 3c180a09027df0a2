#include "wbar/simplicial.hpp"

#include <sstream>

namespace wbar {

std::vector<std::size_t> TruncatedComplex::cell_counts() const {
    std::vector<std::size_t> out;
    for (const auto& level : cells_) out.push_back(level.size());
    return out;
}

std::size_t TruncatedComplex::add_cell(int d, std::vector<SimplexRef> faces) {
    if (d < 0 || d > dim()) throw IndexError("add_cell: degree " + std::to_string(d) + " outside truncation");
    const std::size_t expected = d == 0 ? 0 : static_cast<std::size_t>(d + 1);
    if (faces.size() != expected) throw InvalidInput("add_cell: wrong number of faces");
    for (const auto& f : faces) {
        if (f.degree() != d - 1) throw InvalidInput("add_cell: face of wrong degree");
        if (!f.degeneracy.is_surjective()) throw InvalidInput("add_cell: face degeneracy not surjective");
        if (f.cell >= cell_count(f.cell_degree())) throw InvalidInput("add_cell: face refers to missing cell");
    }
    auto& level = cells_[static_cast<std::size_t>(d)];
    level.push_back(std::move(faces));
    return level.size() - 1;
}

SimplexRef TruncatedComplex::act(const OrdinalMap& theta, const SimplexRef& s) const {
    const OrdinalMap phi = compose(theta, s.degeneracy);
    const auto [epi, mono] = epi_mono_factor(phi);
    if (mono.is_identity()) return {epi, s.cell};

    // mono = d^i o mono' with i the first index missing from the image.
    const int d = mono.target_dim();
    const int i = coface_word(mono).front();
    std::vector<int> reduced;
    reduced.reserve(mono.values().size());
    for (int v : mono.values()) reduced.push_back(v < i ? v : v - 1);
    const OrdinalMap rest(std::move(reduced), d);
    const SimplexRef& f = cell_faces(d, s.cell)[static_cast<std::size_t>(i)];
    const SimplexRef g = act(rest, f);
    return {compose(epi, g.degeneracy), g.cell};
}

SimplexRef TruncatedComplex::face(int n, int i, const SimplexRef& s) const {
    if (s.degree() != n) throw IndexError("face: simplex has degree " + std::to_string(s.degree()));
    return act(coface(i, n), s);
}

SimplexRef TruncatedComplex::degeneracy(int n, int j, const SimplexRef& s) const {
    if (s.degree() != n) throw IndexError("degeneracy: simplex has degree " + std::to_string(s.degree()));
    return act(codegeneracy(j, n), s);
}

std::vector<SimplexRef> TruncatedComplex::simplices(int n) const {
    if (n > dim()) throw InsufficientTruncation("simplices: degree " + std::to_string(n) + " > truncation " + std::to_string(dim()));
    std::vector<SimplexRef> out;
    for (int d = 0; d <= n; ++d) {
        for (const auto& sigma : enumerate_surjections(n, d))
            for (std::size_t c = 0; c < cell_count(d); ++c) out.push_back({sigma, c});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string TruncatedComplex::describe(const SimplexRef& s) const {
    std::ostringstream os;
    os << "c" << s.cell << "@" << s.cell_degree();
    if (!s.nondegenerate()) os << " via " << s.degeneracy.str();
    return os.str();
}

Verdict TruncatedComplex::validate() const {
    Verdict v;
    v.map = "truncated-complex";
    v.max_degree = dim();
    for (int d = 2; d <= dim(); ++d) {
        for (std::size_t c = 0; c < cell_count(d); ++c) {
            ++v.checked;
            const auto& f = cell_faces(d, c);
            for (int i = 0; i <= d; ++i)
                for (int j = i + 1; j <= d; ++j) {
                    if (face(d - 1, i, f[static_cast<std::size_t>(j)]) !=
                        face(d - 1, j - 1, f[static_cast<std::size_t>(i)])) {
                        v.fail("d" + std::to_string(i) + "d" + std::to_string(j) + " on cell " +
                               std::to_string(c) + " of degree " + std::to_string(d));
                        return v;
                    }
                }
        }
    }
    return v;
}

nlohmann::json TruncatedComplex::to_json() const {
    nlohmann::json faces = nlohmann::json::array();
    for (int d = 0; d <= dim(); ++d) {
        nlohmann::json level = nlohmann::json::array();
        for (std::size_t c = 0; c < cell_count(d); ++c) {
            nlohmann::json cell = nlohmann::json::array();
            for (const auto& f : cell_faces(d, c))
                cell.push_back({f.cell_degree(), f.cell, f.degeneracy.values()});
            level.push_back(std::move(cell));
        }
        faces.push_back(std::move(level));
    }
    return {{"dim", dim()}, {"cells", cell_counts()}, {"faces", faces}};
}

TruncatedComplex TruncatedComplex::from_json(const nlohmann::json& j) {
    try {
        const int N = j.at("dim").get<int>();
        if (N < 0) throw InvalidInput("complex: negative dim");
        TruncatedComplex out(N);
        const auto counts = j.at("cells").get<std::vector<std::size_t>>();
        if (counts.size() != static_cast<std::size_t>(N + 1))
            throw InvalidInput("complex: cells must list one count per degree");
        const auto& faces = j.at("faces");
        for (int d = 0; d <= N; ++d) {
            const auto ud = static_cast<std::size_t>(d);
            for (std::size_t c = 0; c < counts[ud]; ++c) {
                std::vector<SimplexRef> fs;
                if (d > 0) {
                    for (const auto& f : faces.at(ud).at(c)) {
                        const int deg = f.at(0).get<int>();
                        auto epi = f.at(2).get<std::vector<int>>();
                        fs.push_back({OrdinalMap(std::move(epi), deg + 1), f.at(1).get<std::size_t>()});
                    }
                }
                out.add_cell(d, std::move(fs));
            }
        }
        const auto v = out.validate();
        if (!v.passed) throw NotSimplicial("complex: " + v.counterexample.value_or(""));
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("complex JSON: ") + e.what());
    }
}

}  // namespace wbar
