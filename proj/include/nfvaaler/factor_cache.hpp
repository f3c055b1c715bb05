#ifndef NFV_FACTOR_CACHE_HPP
#define NFV_FACTOR_CACHE_HPP

#include <string>
#include <vector>

#include "nfvaaler/ideal.hpp"

namespace nfv {

// Line-oriented factorization cache:
//   poly: c0,c1,...,cn
//   p: e1,f1,[g coeffs]; e2,f2,[g coeffs]; ...
// The header keys the file to the defining polynomial; a file with a
// different header is ignored and later rewritten.

// Loads cached factorizations into the factory; returns the number of primes
// loaded (0 for a missing or mismatched file).
size_t load_factor_cache(PrimeFactory& factory, const std::string& path);

// Appends factorizations the factory learned beyond `already_present`;
// creates the file (with header) when missing or mismatched.
void append_factor_cache(PrimeFactory& factory, const std::string& path,
                         const std::vector<long>& already_present);

// Load on construction, append new primes on destruction.
class ScopedFactorCache {
  public:
    ScopedFactorCache(PrimeFactory& factory, std::string path);
    ~ScopedFactorCache();

    ScopedFactorCache(const ScopedFactorCache&) = delete;
    ScopedFactorCache& operator=(const ScopedFactorCache&) = delete;

    size_t warm_count() const { return warm_; }

  private:
    PrimeFactory* factory_;
    std::string path_;
    std::vector<long> initial_;
    size_t warm_ = 0;
};

} // namespace nfv

#endif
