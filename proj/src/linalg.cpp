#include "bck/linalg.hpp"

#include <utility>

namespace bck {

Rational determinant(Mat a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

namespace {

// Reduced row echelon form in place, pivoting only within the first `cols`
// columns (later columns are carried along); returns the pivot columns.
std::vector<std::size_t> rref(Mat& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        Rational inv = 1 / a[r][c];
        for (std::size_t k = c; k < a[r].size(); ++k) a[r][k] *= inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (std::size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat a) {
    if (a.empty()) return 0;
    return static_cast<int>(rref(a, a[0].size()).size());
}

std::optional<Vec> solve(Mat a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = rref(a, n);
    if (pivots.size() != n) return std::nullopt;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::vector<Vec> null_space(Mat a, std::size_t cols) {
    auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vec x = zeros(cols);
        x[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
        basis.push_back(std::move(x));
    }
    return basis;
}

}  // namespace bck
