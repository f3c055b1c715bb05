#include "nfvaaler/hnf.hpp"

#include "nfvaaler/errors.hpp"

namespace nfv {

IntMat hnf(IntMat rows, int cols) {
    size_t m = rows.size();
    size_t pivot = 0;
    for (int col = 0; col < cols && pivot < m; ++col) {
        // Clear the column below the pivot by repeated remainder steps.
        while (true) {
            size_t best = m;
            for (size_t r = pivot; r < m; ++r) {
                if (rows[r][(size_t)col] == 0) continue;
                if (best == m || mpz_cmpabs(rows[r][(size_t)col].get_mpz_t(),
                                            rows[best][(size_t)col].get_mpz_t()) < 0)
                    best = r;
            }
            if (best == m) break;
            std::swap(rows[pivot], rows[best]);
            bool cleared = true;
            for (size_t r = pivot + 1; r < m; ++r) {
                if (rows[r][(size_t)col] == 0) continue;
                Int q = floor_div(rows[r][(size_t)col], rows[pivot][(size_t)col]);
                for (int c = col; c < cols; ++c) rows[r][(size_t)c] -= q * rows[pivot][(size_t)c];
                if (rows[r][(size_t)col] != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (rows[pivot][(size_t)col] == 0) continue;   // rank-deficient column
        if (rows[pivot][(size_t)col] < 0)
            for (int c = col; c < cols; ++c) rows[pivot][(size_t)c] = -rows[pivot][(size_t)c];
        ++pivot;
    }
    if ((int)pivot != cols) fail(errc::computation, "module does not have full rank");
    rows.resize((size_t)cols);
    // Reduce entries above each pivot.
    for (int i = 0; i < cols; ++i) {
        for (int j = 0; j < i; ++j) {
            Int q = floor_div(rows[(size_t)j][(size_t)i], rows[(size_t)i][(size_t)i]);
            if (q == 0) continue;
            for (int c = i; c < cols; ++c) rows[(size_t)j][(size_t)c] -= q * rows[(size_t)i][(size_t)c];
        }
    }
    return rows;
}

Int hnf_det(const IntMat& h) {
    Int d = 1;
    for (size_t i = 0; i < h.size(); ++i) d *= h[i][i];
    return d;
}

bool hnf_contains(const IntMat& h, const std::vector<Int>& x) {
    size_t n = h.size();
    std::vector<Int> rem = x;
    for (size_t i = 0; i < n; ++i) {
        if (rem[i] % h[i][i] != 0) return false;
        Int y = rem[i] / h[i][i];
        if (y != 0)
            for (size_t c = i; c < n; ++c) rem[c] -= y * h[i][c];
    }
    return true;
}

std::vector<Int> hnf_reduce(const IntMat& h, std::vector<Int> x) {
    size_t n = h.size();
    for (size_t i = 0; i < n; ++i) {
        Int q = floor_div(x[i], h[i][i]);
        if (q != 0)
            for (size_t c = i; c < n; ++c) x[c] -= q * h[i][c];
    }
    return x;
}

} // namespace nfv
