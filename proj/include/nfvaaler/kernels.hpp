#ifndef NFV_KERNELS_HPP
#define NFV_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include <omp.h>

#include "nfvaaler/rat.hpp"

namespace nfv {

// Serial runs the plain reference loop; block_parallel splits the index
// range into fixed-size blocks, reduces each block sequentially, and
// combines partials in block order, so its result does not depend on the
// number of OpenMP workers.
enum class Exec { serial, block_parallel };

namespace kernels {

constexpr size_t kBlockSize = 2048;

template <class Term>
double block_sum_double(size_t n, Exec mode, Term&& term) {
    if (mode == Exec::serial) {
        double s = 0;
        for (size_t i = 0; i < n; ++i) s += term(i);
        return s;
    }
    size_t nblocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<double> partial(nblocks, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < (long)nblocks; ++b) {
        size_t lo = (size_t)b * kBlockSize;
        size_t hi = std::min(n, lo + kBlockSize);
        double s = 0;
        for (size_t i = lo; i < hi; ++i) s += term(i);
        partial[(size_t)b] = s;
    }
    double total = 0;
    for (double p : partial) total += p;
    return total;
}

// Exact rational reduction; associativity makes serial and parallel results
// identical, not merely close.
template <class Term>
Rat block_sum_rat(size_t n, Exec mode, Term&& term) {
    if (mode == Exec::serial) {
        Rat s = 0;
        for (size_t i = 0; i < n; ++i) s += term(i);
        return s;
    }
    size_t nblocks = (n + kBlockSize - 1) / kBlockSize;
    std::vector<Rat> partial(nblocks, Rat(0));
#pragma omp parallel for schedule(dynamic)
    for (long b = 0; b < (long)nblocks; ++b) {
        size_t lo = (size_t)b * kBlockSize;
        size_t hi = std::min(n, lo + kBlockSize);
        Rat s = 0;
        for (size_t i = lo; i < hi; ++i) s += term(i);
        partial[(size_t)b] = s;
    }
    Rat total = 0;
    for (const Rat& p : partial) total += p;
    return total;
}

template <class Pred>
uint64_t block_count(size_t n, Exec mode, Pred&& pred) {
    if (mode == Exec::serial) {
        uint64_t c = 0;
        for (size_t i = 0; i < n; ++i) c += pred(i) ? 1 : 0;
        return c;
    }
    uint64_t total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (long b = 0; b < (long)((n + kBlockSize - 1) / kBlockSize); ++b) {
        size_t lo = (size_t)b * kBlockSize;
        size_t hi = std::min(n, lo + kBlockSize);
        uint64_t c = 0;
        for (size_t i = lo; i < hi; ++i) c += pred(i) ? 1 : 0;
        total += c;
    }
    return total;
}

// Fill out[i] = fn(i); parallel order does not matter because slots are
// disjoint.
template <class T, class Fn>
void block_map(std::vector<T>& out, Exec mode, Fn&& fn) {
    if (mode == Exec::serial) {
        for (size_t i = 0; i < out.size(); ++i) out[i] = fn(i);
        return;
    }
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < (long)out.size(); ++i) out[(size_t)i] = fn((size_t)i);
}

} // namespace kernels
} // namespace nfv

#endif
