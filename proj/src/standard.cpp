#include "wbar/standard.hpp"

#include "wbar/errors.hpp"

namespace wbar {

StandardSimplex::StandardSimplex(int k) : k_(k) {
    if (k < 0) throw InvalidInput("standard simplex needs k >= 0");
}

TruncatedComplex circle_model(int N) {
    TruncatedComplex X(std::max(N, 1));
    X.add_vertex();
    const auto v = TruncatedComplex::cell_ref(0, 0);
    X.add_cell(1, {v, v});
    return X;
}

TruncatedComplex point_model(int N) {
    TruncatedComplex X(N);
    X.add_vertex();
    return X;
}

}  // namespace wbar
