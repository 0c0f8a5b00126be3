#include "relopt/run_config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "relopt/errors.hpp"

namespace relopt {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

/// Tracks which keys of the raw map were consumed so leftovers can be
/// reported as unknown.
class KeyReader {
public:
    explicit KeyReader(const KeyValueMap& kv) : kv_(kv) {}

    bool has(const std::string& key) const { return kv_.count(key) != 0; }

    std::string require_raw(const std::string& key) {
        auto it = kv_.find(key);
        if (it == kv_.end()) throw ParameterError("config: missing required key '" + key + "'");
        used_.insert(key);
        return it->second;
    }

    double number(const std::string& key, double fallback) {
        return has(key) ? to_number(key, require_raw(key)) : fallback;
    }

    double require_number(const std::string& key) { return to_number(key, require_raw(key)); }

    std::uint64_t integer(const std::string& key, std::uint64_t fallback) {
        if (!has(key)) return fallback;
        const std::string raw = require_raw(key);
        try {
            std::size_t used = 0;
            const auto v = std::stoull(raw, &used);
            if (used != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw ParameterError("config: key '" + key + "' needs a non-negative integer, got '" +
                                 raw + "'");
        }
    }

    bool boolean(const std::string& key, bool fallback) {
        if (!has(key)) return fallback;
        const std::string raw = require_raw(key);
        if (raw == "true") return true;
        if (raw == "false") return false;
        throw ParameterError("config: key '" + key + "' needs true or false, got '" + raw + "'");
    }

    std::string text(const std::string& key, const std::string& fallback) {
        return has(key) ? require_raw(key) : fallback;
    }

    void finish() const {
        std::vector<std::string> unknown;
        for (const auto& [key, value] : kv_)
            if (!used_.count(key)) unknown.push_back(key);
        if (!unknown.empty()) {
            std::string msg = "config: unknown key(s):";
            for (const auto& k : unknown) msg += " '" + k + "'";
            throw ParameterError(msg);
        }
    }

private:
    double to_number(const std::string& key, const std::string& raw) const {
        try {
            std::size_t used = 0;
            const double v = std::stod(raw, &used);
            if (used != raw.size()) throw std::invalid_argument(raw);
            return v;
        } catch (const std::exception&) {
            throw ParameterError("config: key '" + key + "' needs a number, got '" + raw + "'");
        }
    }

    const KeyValueMap& kv_;
    std::set<std::string> used_;
};

SeasonalityParams read_seasonality(KeyReader& r, const std::string& prefix) {
    SeasonalityParams s;
    s.alpha = r.number(prefix + ".alpha", 0.0);
    for (int m = 2; m <= 12; ++m)
        s.month[static_cast<std::size_t>(m - 1)] =
            r.number(prefix + ".month_" + std::to_string(m), 0.0);
    s.day[static_cast<int>(DayCategory::Weekend)] = r.number(prefix + ".weekend", 0.0);
    s.day[static_cast<int>(DayCategory::Monday)] = r.number(prefix + ".monday", 0.0);
    s.day[static_cast<int>(DayCategory::OtherWorking)] = r.number(prefix + ".working_day", 0.0);
    for (int h = 2; h <= 24; ++h)
        s.hour[static_cast<std::size_t>(h - 1)] =
            r.number(prefix + ".hour_" + std::to_string(h), 0.0);
    return s;
}

OuParams read_ou(KeyReader& r, const std::string& prefix) {
    OuParams p;
    p.x0 = r.number(prefix + ".x0", 0.0);
    p.lambda = r.require_number(prefix + ".lambda");
    p.sigma = r.require_number(prefix + ".sigma");
    p.mu_slope = r.number(prefix + ".mu_slope", 0.0);
    const std::string anchor = r.text(prefix + ".anchor", "2016-01-01T00:00");
    p.anchor = parse_timestamp(anchor);
    p.seasonality = read_seasonality(r, prefix + ".seasonality");
    return p;
}

void write_seasonality(std::vector<std::pair<std::string, std::string>>& out,
                       const std::string& prefix, const SeasonalityParams& s) {
    out.emplace_back(prefix + ".alpha", format_double(s.alpha));
    for (int m = 2; m <= 12; ++m)
        out.emplace_back(prefix + ".month_" + std::to_string(m),
                         format_double(s.month[static_cast<std::size_t>(m - 1)]));
    out.emplace_back(prefix + ".weekend",
                     format_double(s.day[static_cast<int>(DayCategory::Weekend)]));
    out.emplace_back(prefix + ".monday",
                     format_double(s.day[static_cast<int>(DayCategory::Monday)]));
    out.emplace_back(prefix + ".working_day",
                     format_double(s.day[static_cast<int>(DayCategory::OtherWorking)]));
    for (int h = 2; h <= 24; ++h)
        out.emplace_back(prefix + ".hour_" + std::to_string(h),
                         format_double(s.hour[static_cast<std::size_t>(h - 1)]));
}

void write_ou(std::vector<std::pair<std::string, std::string>>& out, const std::string& prefix,
              const OuParams& p) {
    out.emplace_back(prefix + ".x0", format_double(p.x0));
    out.emplace_back(prefix + ".lambda", format_double(p.lambda));
    out.emplace_back(prefix + ".sigma", format_double(p.sigma));
    out.emplace_back(prefix + ".mu_slope", format_double(p.mu_slope));
    out.emplace_back(prefix + ".anchor", format_timestamp(p.anchor));
    write_seasonality(out, prefix + ".seasonality", p.seasonality);
}

} // namespace

KeyValueMap parse_key_values(const std::string& text, const std::string& source_name) {
    KeyValueMap kv;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string row = strip(line);
        if (row.empty()) continue;
        const auto eq = row.find('=');
        if (eq == std::string::npos)
            throw ParameterError(source_name + ":" + std::to_string(line_no) +
                                 ": expected 'key = value'");
        const std::string key = strip(row.substr(0, eq));
        const std::string value = strip(row.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ParameterError(source_name + ":" + std::to_string(line_no) +
                                 ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ParameterError(source_name + ":" + std::to_string(line_no) +
                                 ": duplicate key '" + key + "'");
    }
    return kv;
}

RunConfig build_run_config(const KeyValueMap& kv) {
    KeyReader r(kv);
    RunConfig cfg;

    cfg.model = r.require_raw("model");

    cfg.contract.q = r.number("contract.q", 1.0);
    cfg.contract.t1 = r.number("contract.t1", 4.0);
    cfg.contract.t2 = r.number("contract.t2", 7.0);
    cfg.contract.r = r.number("contract.r", 0.01);

    const bool fixed_strike_model = cfg.model == "gbm" || cfg.model == "ou";
    if (fixed_strike_model) {
        cfg.contract.fixed_strike = r.number("contract.strike", 40.0);
    } else {
        if (r.has("contract.strike"))
            throw ParameterError("config: model '" + cfg.model +
                                 "' carries its own strike dynamics; remove contract.strike");
        cfg.contract.fixed_strike.reset();
    }

    if (cfg.model == "gbm") {
        GbmParams p{};
        p.p0 = r.require_number("gbm.p0");
        p.sigma = r.require_number("gbm.sigma");
        p.q = r.number("gbm.q", 0.0);
        cfg.model_spec = p;
    } else if (cfg.model == "two_gbm") {
        TwoGbmParams p{};
        p.p0 = r.require_number("two_gbm.p0");
        p.k0 = r.require_number("two_gbm.k0");
        p.sigma_p = r.require_number("two_gbm.sigma_p");
        p.sigma_k = r.require_number("two_gbm.sigma_k");
        p.q_p = r.number("two_gbm.q_p", 0.0);
        p.q_k = r.number("two_gbm.q_k", 0.0);
        p.rho = r.number("two_gbm.rho", 0.0);
        cfg.model_spec = p;
    } else if (cfg.model == "ou") {
        cfg.model_spec = read_ou(r, "ou");
    } else if (cfg.model == "two_ou" || cfg.model == "shifted_two_ou") {
        TwoOuParams base{};
        base.p = read_ou(r, "two_ou.p");
        base.k = read_ou(r, "two_ou.k");
        base.rho = r.number("two_ou.rho", 0.0);
        if (cfg.model == "two_ou") {
            cfg.model_spec = base;
        } else {
            ShiftedTwoOuParams p{};
            p.base = base;
            p.p_floor = r.number("shifted.p_floor", 0.0);
            p.k_floor = r.number("shifted.k_floor", 0.0);
            cfg.model_spec = p;
        }
    } else {
        throw ParameterError("config: unknown model '" + cfg.model +
                             "' (expected gbm, two_gbm, ou, two_ou or shifted_two_ou)");
    }

    cfg.mc.n_paths = r.integer("mc.n_paths", 10000);
    cfg.mc.steps_per_year = static_cast<unsigned>(r.integer("mc.steps_per_year", 8760));
    cfg.mc.seed = r.integer("mc.seed", 0);
    cfg.mc.antithetic = r.boolean("mc.antithetic", false);

    cfg.quad.abs_tol = r.number("quad.abs_tol", 0.0);
    cfg.quad.max_subdivisions = r.integer("quad.max_subdivisions", 20000);

    r.finish();
    validate_pairing(cfg.model_spec, cfg.contract);
    return cfg;
}

RunConfig parse_run_config(const std::string& text, const std::string& source_name) {
    return build_run_config(parse_key_values(text, source_name));
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open config '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_run_config(text.str(), path);
}

std::vector<std::pair<std::string, std::string>> to_key_values(const RunConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> out;
    out.emplace_back("model", cfg.model);
    out.emplace_back("contract.q", format_double(cfg.contract.q));
    out.emplace_back("contract.t1", format_double(cfg.contract.t1));
    out.emplace_back("contract.t2", format_double(cfg.contract.t2));
    out.emplace_back("contract.r", format_double(cfg.contract.r));
    if (cfg.contract.fixed_strike)
        out.emplace_back("contract.strike", format_double(*cfg.contract.fixed_strike));

    if (const auto* p = std::get_if<GbmParams>(&cfg.model_spec)) {
        out.emplace_back("gbm.p0", format_double(p->p0));
        out.emplace_back("gbm.sigma", format_double(p->sigma));
        out.emplace_back("gbm.q", format_double(p->q));
    } else if (const auto* p = std::get_if<TwoGbmParams>(&cfg.model_spec)) {
        out.emplace_back("two_gbm.p0", format_double(p->p0));
        out.emplace_back("two_gbm.k0", format_double(p->k0));
        out.emplace_back("two_gbm.sigma_p", format_double(p->sigma_p));
        out.emplace_back("two_gbm.sigma_k", format_double(p->sigma_k));
        out.emplace_back("two_gbm.q_p", format_double(p->q_p));
        out.emplace_back("two_gbm.q_k", format_double(p->q_k));
        out.emplace_back("two_gbm.rho", format_double(p->rho));
    } else if (const auto* p = std::get_if<OuParams>(&cfg.model_spec)) {
        write_ou(out, "ou", *p);
    } else if (const auto* p = std::get_if<TwoOuParams>(&cfg.model_spec)) {
        write_ou(out, "two_ou.p", p->p);
        write_ou(out, "two_ou.k", p->k);
        out.emplace_back("two_ou.rho", format_double(p->rho));
    } else if (const auto* p = std::get_if<ShiftedTwoOuParams>(&cfg.model_spec)) {
        write_ou(out, "two_ou.p", p->base.p);
        write_ou(out, "two_ou.k", p->base.k);
        out.emplace_back("two_ou.rho", format_double(p->base.rho));
        out.emplace_back("shifted.p_floor", format_double(p->p_floor));
        out.emplace_back("shifted.k_floor", format_double(p->k_floor));
    }

    out.emplace_back("mc.n_paths", std::to_string(cfg.mc.n_paths));
    out.emplace_back("mc.steps_per_year", std::to_string(cfg.mc.steps_per_year));
    out.emplace_back("mc.seed", std::to_string(cfg.mc.seed));
    out.emplace_back("mc.antithetic", cfg.mc.antithetic ? "true" : "false");
    out.emplace_back("quad.abs_tol", format_double(cfg.quad.abs_tol));
    out.emplace_back("quad.max_subdivisions", std::to_string(cfg.quad.max_subdivisions));
    return out;
}

std::string serialize_run_config(const RunConfig& cfg) {
    std::string text;
    for (const auto& [key, value] : to_key_values(cfg)) {
        text += key;
        text += " = ";
        text += value;
        text += "\n";
    }
    return text;
}

RunConfig with_override(const RunConfig& base, const std::string& key, double value) {
    KeyValueMap kv;
    for (const auto& [k, v] : to_key_values(base)) kv[k] = v;
    if (!kv.count(key))
        throw ParameterError("sweep axis '" + key + "' is not a parameter of model '" +
                             base.model + "'");
    kv[key] = format_double(value);
    return build_run_config(kv);
}

} // namespace relopt
