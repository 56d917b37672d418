#include "config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <stdexcept>

#include "hff/parse.hpp"

namespace hff::cli {

namespace {

using nlohmann::json;

std::vector<std::int64_t> int_list(const json& v, const std::string& key) {
    std::vector<std::int64_t> out;
    if (v.is_number_integer()) {
        out.push_back(v.get<std::int64_t>());
        return out;
    }
    if (!v.is_array()) throw std::invalid_argument("config field '" + key + "' must be an integer or array");
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw std::invalid_argument("config field '" + key + "' must contain integers");
        out.push_back(e.get<std::int64_t>());
    }
    return out;
}

std::vector<cdouble> complex_list(const json& v, const std::string& key) {
    std::vector<cdouble> out;
    const auto one = [&](const json& e) {
        if (e.is_number()) return cdouble{e.get<double>(), 0.0};
        if (e.is_string()) return parse_complex(e.get<std::string>());
        throw std::invalid_argument("config field '" + key + "' must contain numbers or strings");
    };
    if (v.is_array())
        for (const auto& e : v) out.push_back(one(e));
    else
        out.push_back(one(v));
    return out;
}

}  // namespace

Config load_config(const std::string& path, const Config& base) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open config file: " + path);
    json j;
    try {
        f >> j;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config root must be a JSON object");

    static const std::set<std::string> known = {
        "H",   "Hprime", "mode",  "xi",        "m",    "s",     "generators", "K",
        "depth", "zmax",   "trials", "tolerance", "seed", "sweep", "out",        "format"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw std::invalid_argument("unknown config field: '" + key + "'");

    Config c = base;
    if (j.contains("H")) c.H = int_list(j["H"], "H");
    if (j.contains("Hprime")) c.Hprime = int_list(j["Hprime"], "Hprime");
    if (j.contains("mode")) c.mode = j["mode"].get<std::string>();
    if (j.contains("xi")) c.xi = complex_list(j["xi"], "xi");
    if (j.contains("m")) c.m = int_list(j["m"], "m");
    if (j.contains("s")) c.s = int_list(j["s"], "s");
    if (j.contains("generators")) c.generators = int_list(j["generators"], "generators");
    if (j.contains("K")) c.K = int_list(j["K"], "K");
    if (j.contains("depth")) c.depth = j["depth"].get<std::int64_t>();
    if (j.contains("zmax")) c.zmax = j["zmax"].get<std::int64_t>();
    if (j.contains("trials")) c.trials = j["trials"].get<std::int64_t>();
    if (j.contains("tolerance")) c.tolerance = j["tolerance"].get<double>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("sweep")) c.sweep = j["sweep"].get<bool>();
    if (j.contains("out")) c.out_dir = j["out"].get<std::string>();
    if (j.contains("format")) c.format = j["format"].get<std::string>();
    return c;
}

void validate(const Config& c) {
    for (const std::int64_t h : c.H)
        if (h < 2 || h % 2 != 0) throw std::invalid_argument("H must be even");
    for (const std::int64_t hp : c.Hprime)
        if (hp < 2 || hp % 2 != 0) throw std::invalid_argument("H' must be even");
    if (c.mode != "plain" && c.mode != "epsilon" && c.mode != "both")
        throw std::invalid_argument("mode must be plain, epsilon or both");
    if (c.format != "csv" && c.format != "json")
        throw std::invalid_argument("format must be csv or json");
    for (const cdouble xi : c.xi)
        if (!(xi.real() > 0.0)) throw std::invalid_argument("every xi needs Re(xi) > 0");
    if (c.depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (c.zmax < 1) throw std::invalid_argument("zmax must be >= 1");
    for (const std::int64_t k : c.K)
        if (k < 1) throw std::invalid_argument("every K must be >= 1");
    if (c.tolerance < 0) throw std::invalid_argument("tolerance must be nonnegative");
}

}  // namespace hff::cli
