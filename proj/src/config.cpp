#include "nfvaaler/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "nfvaaler/errors.hpp"

namespace nfv {

namespace {

using nlohmann::json;

[[noreturn]] void bad_config(const std::string& what) { fail(errc::config_invalid, what); }

void check_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) bad_config("unknown key \"" + it.key() + "\" in " + where);
}

RunConfig parse(const json& j, const std::vector<std::string>& overrides, const char* env_cache) {
    if (!j.is_object()) bad_config("config root must be an object");
    check_keys(j,
               {"poly", "monogenic_asserted", "psi", "overrides", "support", "mc_samples", "seed",
                "enumeration_cap", "cache_path", "output"},
               "config");

    RunConfig cfg;
    if (!j.contains("poly") || !j["poly"].is_array() || j["poly"].size() < 2)
        bad_config("\"poly\" must list the coefficients c0..cn of a monic polynomial");
    for (const auto& c : j["poly"]) {
        if (!c.is_number_integer()) bad_config("\"poly\" coefficients must be integers");
        cfg.field_spec.coefficients.emplace_back((long)c.get<long long>());
    }
    cfg.field_spec.monogenic_asserted = j.value("monogenic_asserted", false);

    if (j.contains("psi")) {
        cfg.has_psi = true;
        if (!j["psi"].is_array()) bad_config("\"psi\" must be an array of per-embedding rules");
        std::vector<std::pair<int, PsiRule>> rules;
        for (const auto& r : j["psi"]) {
            check_keys(r, {"embedding", "c", "e"}, "psi rule");
            if (!r.contains("embedding") || !r.contains("c") || !r.contains("e"))
                bad_config("psi rules need \"embedding\", \"c\" and \"e\"");
            double c = r["c"].get<double>();
            if (c < 0) bad_config("psi coefficients must be nonnegative");
            rules.emplace_back(r["embedding"].get<int>(), PsiRule{c, r["e"].get<double>()});
        }
        int max_idx = -1;
        for (auto& [idx, rule] : rules) max_idx = std::max(max_idx, idx);
        cfg.psi_rules.assign((size_t)max_idx + 1, PsiRule{});
        std::vector<bool> seen((size_t)max_idx + 1, false);
        for (auto& [idx, rule] : rules) {
            if (idx < 0) bad_config("psi embedding index must be >= 0");
            if (seen[(size_t)idx]) bad_config("duplicate psi rule for embedding " + std::to_string(idx));
            seen[(size_t)idx] = true;
            cfg.psi_rules[(size_t)idx] = rule;
        }
        for (size_t i = 0; i < seen.size(); ++i)
            if (!seen[i]) bad_config("missing psi rule for embedding " + std::to_string(i));
    }
    if (j.contains("overrides")) {
        if (!j["overrides"].is_array()) bad_config("\"overrides\" must be an array");
        for (const auto& o : j["overrides"]) {
            check_keys(o, {"norm", "index", "values"}, "psi override");
            RawPsiOverride ov;
            if (!o.contains("norm") || !o.contains("values"))
                bad_config("psi overrides need \"norm\" and \"values\"");
            ov.norm = o["norm"].get<long>();
            ov.index = o.value("index", 0);
            for (const auto& v : o["values"]) {
                double value = v.get<double>();
                if (value < 0) bad_config("psi override values must be nonnegative");
                ov.values.push_back(value);
            }
            cfg.psi_overrides.push_back(std::move(ov));
        }
    }
    if (j.contains("support")) {
        const auto& s = j["support"];
        if (s.is_string()) {
            if (s.get<std::string>() != "all") bad_config("\"support\" string must be \"all\"");
        } else if (s.is_object()) {
            check_keys(s, {"norm_min", "norm_max"}, "support");
            cfg.psi_support.all = false;
            cfg.psi_support.norm_min = s.value("norm_min", 1.0);
            cfg.psi_support.norm_max = s.value("norm_max", 1e300);
        } else {
            bad_config("\"support\" must be \"all\" or {norm_min, norm_max}");
        }
    }

    cfg.mc_samples = j.value("mc_samples", (uint64_t)100000);
    cfg.seed = j.value("seed", (uint64_t)0);
    cfg.enumeration_cap = j.value("enumeration_cap", (long)100000);
    cfg.cache_path = j.value("cache_path", std::string{});
    if (j.contains("output")) {
        std::string fmt = j["output"].get<std::string>();
        if (fmt == "csv")
            cfg.output = OutputFormat::csv;
        else if (fmt == "json")
            cfg.output = OutputFormat::json;
        else
            bad_config("\"output\" must be \"csv\" or \"json\"");
    }

    for (const std::string& kv : overrides) {
        size_t eq = kv.find('=');
        if (eq == std::string::npos) bad_config("--set expects key=value, got \"" + kv + "\"");
        std::string key = kv.substr(0, eq), value = kv.substr(eq + 1);
        try {
            if (key == "mc_samples")
                cfg.mc_samples = std::stoull(value);
            else if (key == "seed")
                cfg.seed = std::stoull(value);
            else if (key == "enumeration_cap")
                cfg.enumeration_cap = std::stol(value);
            else if (key == "cache_path")
                cfg.cache_path = value;
            else if (key == "output") {
                if (value == "csv")
                    cfg.output = OutputFormat::csv;
                else if (value == "json")
                    cfg.output = OutputFormat::json;
                else
                    bad_config("--set output must be csv or json");
            } else
                bad_config("--set does not know key \"" + key + "\"");
        } catch (const error&) {
            throw;
        } catch (...) {
            bad_config("could not parse --set value for \"" + key + "\"");
        }
    }

    if (env_cache && *env_cache) cfg.cache_path = env_cache;
    if (cfg.enumeration_cap <= 0) bad_config("enumeration_cap must be positive");
    if (cfg.mc_samples == 0) bad_config("mc_samples must be positive");
    return cfg;
}

} // namespace

RunConfig parse_config_text(const std::string& text, const std::vector<std::string>& overrides,
                            const char* env_cache) {
    json j;
    try {
        j = json::parse(text);
    } catch (const std::exception& e) {
        bad_config(std::string("config is not valid JSON: ") + e.what());
    }
    return parse(j, overrides, env_cache);
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides,
                      const char* env_cache) {
    std::ifstream in(path);
    if (!in) bad_config("cannot open config file " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), overrides, env_cache);
}

PsiSystem build_psi(const RunConfig& config, PrimeFactory& factory) {
    const NumberField& field = factory.field();
    if (!config.has_psi) fail(errc::config_invalid, "this command needs a \"psi\" config section");
    if ((int)config.psi_rules.size() != field.embedding_count())
        fail(errc::config_invalid,
             "psi needs exactly one rule per embedding (" +
                 std::to_string(field.embedding_count()) + " expected, " +
                 std::to_string(config.psi_rules.size()) + " given)");
    PsiSystem sys;
    sys.rules = config.psi_rules;
    sys.support = config.psi_support;
    for (const auto& raw : config.psi_overrides) {
        if ((int)raw.values.size() != field.embedding_count())
            fail(errc::config_invalid, "psi override needs one value per embedding");
        auto ideals = enumerate_ideals(factory, (double)raw.norm, false);
        int seen = 0;
        bool placed = false;
        for (const auto& a : ideals) {
            if (a.norm() != raw.norm) continue;
            if (seen++ == raw.index) {
                sys.overrides.push_back({a, raw.values});
                placed = true;
                break;
            }
        }
        if (!placed)
            fail(errc::config_invalid, "psi override addresses no ideal: norm " +
                                           std::to_string(raw.norm) + ", index " +
                                           std::to_string(raw.index));
    }
    return sys;
}

} // namespace nfv
