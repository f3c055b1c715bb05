#include "nfvaaler/factor_cache.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace nfv {

namespace {

std::string poly_header(const NumberField& field) {
    std::ostringstream os;
    os << "poly: ";
    for (size_t i = 0; i < field.poly.size(); ++i) {
        if (i) os << ",";
        os << field.poly[i].get_str();
    }
    return os.str();
}

std::string format_prime_line(long p, const std::vector<PrimeIdeal>& primes) {
    std::ostringstream os;
    os << p << ": ";
    for (size_t i = 0; i < primes.size(); ++i) {
        if (i) os << "; ";
        os << primes[i].e << "," << primes[i].f << ",[";
        for (size_t j = 0; j < primes[i].local_factor.size(); ++j) {
            if (j) os << ",";
            os << primes[i].local_factor[j];
        }
        os << "]";
    }
    return os.str();
}

bool parse_prime_line(const std::string& line, long& p, std::vector<PrimeIdeal>& primes) {
    size_t colon = line.find(':');
    if (colon == std::string::npos) return false;
    try {
        p = std::stol(line.substr(0, colon));
    } catch (...) {
        return false;
    }
    primes.clear();
    std::string rest = line.substr(colon + 1);
    std::stringstream parts(rest);
    std::string item;
    while (std::getline(parts, item, ';')) {
        size_t lb = item.find('[');
        size_t rb = item.find(']');
        if (lb == std::string::npos || rb == std::string::npos || rb < lb) return false;
        PrimeIdeal q;
        q.p = p;
        if (sscanf(item.c_str(), " %d,%d,", &q.e, &q.f) != 2) return false;
        std::stringstream coeffs(item.substr(lb + 1, rb - lb - 1));
        std::string c;
        while (std::getline(coeffs, c, ','))
            if (!c.empty()) q.local_factor.push_back(std::stol(c));
        if ((int)q.local_factor.size() != q.f + 1) return false;
        primes.push_back(std::move(q));
    }
    if (primes.empty()) return false;
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size(); ++i) primes[i].index = (int)i;
    return true;
}

} // namespace

size_t load_factor_cache(PrimeFactory& factory, const std::string& path) {
    std::ifstream in(path);
    if (!in) return 0;
    std::string header;
    if (!std::getline(in, header) || header != poly_header(factory.field())) return 0;
    size_t loaded = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        long p = 0;
        std::vector<PrimeIdeal> primes;
        if (!parse_prime_line(line, p, primes)) continue;
        factory.preload(p, std::move(primes));
        ++loaded;
    }
    return loaded;
}

void append_factor_cache(PrimeFactory& factory, const std::string& path,
                         const std::vector<long>& already_present) {
    std::vector<long> known = factory.known_primes();
    std::vector<long> fresh;
    for (long p : known)
        if (!std::binary_search(already_present.begin(), already_present.end(), p))
            fresh.push_back(p);

    bool need_header = true;
    {
        std::ifstream in(path);
        std::string header;
        if (in && std::getline(in, header) && header == poly_header(factory.field()))
            need_header = false;
    }
    if (need_header) {
        std::ofstream out(path, std::ios::trunc);
        if (!out) return;
        out << poly_header(factory.field()) << "\n";
        for (long p : known) out << format_prime_line(p, factory.primes_above(p)) << "\n";
        return;
    }
    if (fresh.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) return;
    for (long p : fresh) out << format_prime_line(p, factory.primes_above(p)) << "\n";
}

ScopedFactorCache::ScopedFactorCache(PrimeFactory& factory, std::string path)
    : factory_(&factory), path_(std::move(path)) {
    warm_ = load_factor_cache(factory, path_);
    initial_ = factory.known_primes();
    std::sort(initial_.begin(), initial_.end());
}

ScopedFactorCache::~ScopedFactorCache() {
    try {
        append_factor_cache(*factory_, path_, initial_);
    } catch (...) {
        // cache write failures never fail the run
    }
}

} // namespace nfv
