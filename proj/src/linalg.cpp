#include "umbral/linalg.hpp"

#include <algorithm>

namespace umbral {

void rref(RatMatrix& m) {
    if (m.empty()) return;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        Rational inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rational factor = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        ++r;
    }
}

int rank(RatMatrix m) {
    rref(m);
    int rk = 0;
    for (const auto& row : m)
        if (std::any_of(row.begin(), row.end(), [](const Rational& x) { return !x.is_zero(); })) ++rk;
    return rk;
}

RatMatrix nullspace(const RatMatrix& m, std::size_t ncols) {
    RatMatrix a = m;
    for (auto& row : a) row.resize(ncols, Rational(0));
    rref(a);

    std::vector<long> pivot_of_col(ncols, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        if (!a[r][c].is_zero()) {
            pivot_of_col[c] = static_cast<long>(r);
            ++r;
        }
    }

    RatMatrix basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        RatRow v(ncols, Rational(0));
        v[f] = Rational(1);
        for (std::size_t c = 0; c < ncols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = -a[static_cast<std::size_t>(pivot_of_col[c])][f];
        basis.push_back(std::move(v));
    }
    // normalize to the unique RREF spanning set
    rref(basis);
    return basis;
}

} // namespace umbral
