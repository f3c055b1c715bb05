#ifndef NFV_HNF_HPP
#define NFV_HNF_HPP

#include <vector>

#include "nfvaaler/rat.hpp"

namespace nfv {

// Integer matrices as row vectors. Ideals are Z-modules with rows as
// generators over the power basis.
using IntMat = std::vector<std::vector<Int>>;

// Row-style Hermite normal form of a full-column-rank m x n matrix:
// n x n upper triangular, positive diagonal, entries above each pivot
// reduced into [0, pivot). Unique, so usable as a canonical form.
IntMat hnf(IntMat rows, int cols);

Int hnf_det(const IntMat& h);

// Is x in the Z-row span of an HNF matrix?
bool hnf_contains(const IntMat& h, const std::vector<Int>& x);

// Reduce x into the fundamental box prod [0, h[i][i]) modulo the row span.
std::vector<Int> hnf_reduce(const IntMat& h, std::vector<Int> x);

} // namespace nfv

#endif
