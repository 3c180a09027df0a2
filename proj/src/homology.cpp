#include "wbar/homology.hpp"

#include <future>
#include <sstream>
#include <utility>

#include "wbar/errors.hpp"
#include "wbar/parallel.hpp"

namespace wbar {

IntMatrix::IntMatrix(const std::vector<std::vector<long long>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), data_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i) {
        if (rows[i].size() != cols_) throw InvalidInput("matrix rows have different lengths");
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = rows[i][j];
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool IntMatrix::is_zero() const {
    for (const auto& x : data_)
        if (x != 0) return false;
    return true;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product: shapes do not match");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a.at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

Integer determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A.at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && A.at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(r, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                A.at(i, j) = (A.at(i, j) * A.at(k, k) - A.at(i, k) * A.at(k, j)) / prev;
            A.at(i, k) = 0;
        }
        prev = A.at(k, k);
    }
    return sign * A.at(n - 1, n - 1);
}

namespace {

class SmithWorker {
public:
    SmithWorker(const IntMatrix& M, bool transforms)
        : D(M), track(transforms) {
        if (track) {
            U = IntMatrix::identity(M.rows());
            V = IntMatrix::identity(M.cols());
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < D.cols(); ++j) std::swap(D.at(a, j), D.at(b, j));
        if (track)
            for (std::size_t j = 0; j < U.cols(); ++j) std::swap(U.at(a, j), U.at(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < D.rows(); ++i) std::swap(D.at(i, a), D.at(i, b));
        if (track)
            for (std::size_t i = 0; i < V.rows(); ++i) std::swap(V.at(i, a), V.at(i, b));
    }
    // row_a += q row_b
    void add_row(std::size_t a, std::size_t b, const Integer& q) {
        for (std::size_t j = 0; j < D.cols(); ++j)
            if (D.at(b, j) != 0) D.at(a, j) += q * D.at(b, j);
        if (track)
            for (std::size_t j = 0; j < U.cols(); ++j)
                if (U.at(b, j) != 0) U.at(a, j) += q * U.at(b, j);
    }
    // col_a += q col_b
    void add_col(std::size_t a, std::size_t b, const Integer& q) {
        for (std::size_t i = 0; i < D.rows(); ++i)
            if (D.at(i, b) != 0) D.at(i, a) += q * D.at(i, b);
        if (track)
            for (std::size_t i = 0; i < V.rows(); ++i)
                if (V.at(i, b) != 0) V.at(i, a) += q * V.at(i, b);
    }
    void negate_row(std::size_t a) {
        for (std::size_t j = 0; j < D.cols(); ++j) D.at(a, j) = -D.at(a, j);
        if (track)
            for (std::size_t j = 0; j < U.cols(); ++j) U.at(a, j) = -U.at(a, j);
    }

    std::size_t run() {
        const std::size_t r = D.rows(), c = D.cols();
        std::size_t t = 0;
        for (; t < std::min(r, c); ++t) {
            if (!move_smallest(t, t, r, t, c)) break;
            for (;;) {
                bool clean = true;
                for (std::size_t i = t + 1; i < r; ++i) {
                    if (D.at(i, t) == 0) continue;
                    add_row(i, t, -Integer(D.at(i, t) / D.at(t, t)));
                    clean = clean && D.at(i, t) == 0;
                }
                for (std::size_t j = t + 1; j < c; ++j) {
                    if (D.at(t, j) == 0) continue;
                    add_col(j, t, -Integer(D.at(t, j) / D.at(t, t)));
                    clean = clean && D.at(t, j) == 0;
                }
                if (!clean) {
                    move_smallest_cross(t);
                    continue;
                }
                // Divisibility: fold an offending row into the pivot row.
                bool divides = true;
                for (std::size_t i = t + 1; i < r && divides; ++i)
                    for (std::size_t j = t + 1; j < c; ++j)
                        if (D.at(i, j) % D.at(t, t) != 0) {
                            add_row(t, i, 1);
                            divides = false;
                            break;
                        }
                if (divides) break;
            }
            if (D.at(t, t) < 0) negate_row(t);
        }
        return t;
    }

    IntMatrix D, U, V;
    bool track;

private:
    bool move_smallest(std::size_t t, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
        std::size_t bi = r1, bj = c1;
        Integer best;
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) {
                const Integer& x = D.at(i, j);
                if (x == 0) continue;
                const Integer a = abs(x);
                if (bi == r1 || a < best) {
                    best = a;
                    bi = i;
                    bj = j;
                    if (best == 1) break;
                }
            }
        if (bi == r1) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void move_smallest_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        Integer best = abs(D.at(t, t));
        for (std::size_t i = t + 1; i < D.rows(); ++i)
            if (D.at(i, t) != 0 && abs(D.at(i, t)) < best) {
                best = abs(D.at(i, t));
                bi = i;
                bj = t;
            }
        for (std::size_t j = t + 1; j < D.cols(); ++j)
            if (D.at(t, j) != 0 && abs(D.at(t, j)) < best) {
                best = abs(D.at(t, j));
                bi = t;
                bj = j;
            }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }
};

}  // namespace

std::vector<Integer> SmithForm::divisors() const {
    std::vector<Integer> out;
    for (std::size_t t = 0; t < rank; ++t) out.push_back(D.at(t, t));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& M, bool with_transforms) {
    SmithWorker w(M, with_transforms);
    const std::size_t rank = w.run();
    return {std::move(w.U), std::move(w.D), std::move(w.V), rank};
}

ChainComplex normalized_chains(const TruncatedComplex& X) {
    ChainComplex C;
    for (int d = 0; d <= X.dim(); ++d) C.basis.push_back(X.cell_count(d));
    C.boundary.emplace_back(0, C.basis[0]);
    for (int d = 1; d <= X.dim(); ++d) {
        const auto ud = static_cast<std::size_t>(d);
        IntMatrix B(C.basis[ud - 1], C.basis[ud]);
        for (std::size_t c = 0; c < C.basis[ud]; ++c) {
            const auto& faces = X.cell_faces(d, c);
            for (int i = 0; i <= d; ++i) {
                const auto& f = faces[static_cast<std::size_t>(i)];
                if (!f.nondegenerate()) continue;
                B.at(f.cell, c) += (i % 2 == 0) ? 1 : -1;
            }
        }
        C.boundary.push_back(std::move(B));
    }
    return C;
}

Verdict check_boundary_squared(const ChainComplex& C) {
    Verdict v;
    v.map = "boundary squared";
    v.max_degree = C.top();
    for (int d = 2; d <= C.top(); ++d) {
        const auto ud = static_cast<std::size_t>(d);
        ++v.checked;
        if (!(C.boundary[ud - 1] * C.boundary[ud]).is_zero()) {
            v.fail("d_" + std::to_string(d - 1) + " d_" + std::to_string(d) + " != 0");
            return v;
        }
    }
    return v;
}

std::string HomologyGroup::str() const {
    if (trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << "Z";
        if (betti > 1) os << "^" << betti;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t;
        first = false;
    }
    return os.str();
}

namespace {

struct BoundaryData {
    std::size_t rank = 0;
    std::vector<Integer> divisors;
};

BoundaryData analyse(const IntMatrix& M) {
    if (M.rows() == 0 || M.cols() == 0) return {};
    const auto S = smith_normal_form(M, false);
    return {S.rank, S.divisors()};
}

}  // namespace

std::vector<HomologyGroup> homology_range(const ChainComplex& C, int i_max) {
    if (i_max < 0) return {};
    if (i_max >= C.top())
        throw InsufficientTruncation("homology in degree " + std::to_string(i_max) + " needs chains through degree " +
                                     std::to_string(i_max + 1) + "; truncation is " + std::to_string(C.top()));
    const auto count = static_cast<std::size_t>(i_max + 2);
    std::vector<BoundaryData> data(count);
    if (worker_count() > 1) {
        std::vector<std::future<BoundaryData>> jobs;
        for (std::size_t d = 0; d < count; ++d)
            jobs.push_back(std::async(std::launch::async, analyse, std::cref(C.boundary[d])));
        for (std::size_t d = 0; d < count; ++d) data[d] = jobs[d].get();
    } else {
        for (std::size_t d = 0; d < count; ++d) data[d] = analyse(C.boundary[d]);
    }

    std::vector<HomologyGroup> out;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        HomologyGroup H;
        H.betti = C.basis[i] - data[i].rank - data[i + 1].rank;
        for (const auto& d : data[i + 1].divisors)
            if (d > 1) H.torsion.push_back(d);
        out.push_back(std::move(H));
    }
    return out;
}

HomologyGroup homology(const ChainComplex& C, int i) {
    if (i < 0) throw IndexError("homology: negative degree");
    return homology_range(C, i).back();
}

std::size_t mod_p_dimension(const std::vector<HomologyGroup>& H, int i, unsigned p) {
    if (i < 0 || static_cast<std::size_t>(i) >= H.size()) throw IndexError("mod_p_dimension: degree not computed");
    auto divisible = [p](const HomologyGroup& G) {
        std::size_t n = 0;
        for (const auto& t : G.torsion) n += (t % p) == 0;
        return n;
    };
    std::size_t dim = H[static_cast<std::size_t>(i)].betti + divisible(H[static_cast<std::size_t>(i)]);
    if (i > 0) dim += divisible(H[static_cast<std::size_t>(i - 1)]);
    return dim;
}

nlohmann::json homology_report(const std::vector<HomologyGroup>& H, int truncation) {
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t i = 0; i < H.size(); ++i) {
        nlohmann::json torsion = nlohmann::json::array();
        for (const auto& t : H[i].torsion) {
            if (t <= std::numeric_limits<long long>::max()) torsion.push_back(t.convert_to<long long>());
            else torsion.push_back(t.str());
        }
        out.push_back({{"degree", i}, {"betti", H[i].betti}, {"torsion", torsion}, {"truncation", truncation}});
    }
    return out;
}

}  // namespace wbar
