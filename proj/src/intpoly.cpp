#include "nfvaaler/intpoly.hpp"

#include <cstddef>

namespace nfv {

Rat poly_resultant(const RatPoly& f, const RatPoly& g) {
    int m = poly_deg(f), n = poly_deg(g);
    if (m < 0 || n < 0) return 0;
    if (n == 0) return rat_pow(g[0], m);
    if (m == 0) return rat_pow(f[0], n);

    size_t dim = (size_t)(m + n);
    std::vector<std::vector<Rat>> a(dim, std::vector<Rat>(dim, Rat(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) a[row][row + (m - j)] = f[j];
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) a[n + row][row + (n - j)] = g[j];

    // Exact Gaussian elimination; determinant of the Sylvester matrix.
    Rat det = 1;
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && a[piv][col] == 0) ++piv;
        if (piv == dim) return 0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rat inv = 1 / a[col][col];
        for (size_t r = col + 1; r < dim; ++r) {
            if (a[r][col] == 0) continue;
            Rat factor = a[r][col] * inv;
            for (size_t c = col; c < dim; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

} // namespace nfv
