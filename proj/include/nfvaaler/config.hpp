#ifndef NFV_CONFIG_HPP
#define NFV_CONFIG_HPP

#include <string>
#include <vector>

#include "nfvaaler/ideal.hpp"
#include "nfvaaler/psi.hpp"

namespace nfv {

// Raw psi override entry; the ideal is addressed by (norm, index) in the
// canonical enumeration order and resolved once the field exists.
struct RawPsiOverride {
    long norm = 0;
    int index = 0;
    std::vector<double> values;
};

enum class OutputFormat { csv, json };

struct RunConfig {
    NumberFieldSpec field_spec;
    bool has_psi = false;
    std::vector<PsiRule> psi_rules;
    std::vector<RawPsiOverride> psi_overrides;
    PsiSupport psi_support;
    uint64_t mc_samples = 100000;
    uint64_t seed = 0;
    long enumeration_cap = 100000;
    std::string cache_path;
    OutputFormat output = OutputFormat::csv;
};

// Parses the JSON config; unknown keys are rejected. `overrides` holds
// key=value pairs from --set; env_cache (NFVAALER_CACHE) wins over the
// config's cache_path when non-null.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                      const char* env_cache);

// Same validation for an in-memory JSON document (used by tests).
RunConfig parse_config_text(const std::string& text, const std::vector<std::string>& overrides,
                            const char* env_cache);

PsiSystem build_psi(const RunConfig& config, PrimeFactory& factory);

} // namespace nfv

#endif
