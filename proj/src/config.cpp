#include "wisp/harness/config.hpp"

#include "wisp/errors.hpp"

#include <fstream>
#include <set>

namespace wisp {

using nlohmann::json;

namespace {

const json& section(const json& doc, const char* key)
{
    static const json empty = json::object();
    if (!doc.contains(key))
        return empty;
    const json& s = doc.at(key);
    if (!s.is_object())
        throw ConfigError(std::string("config: section '") + key + "' must be an object");
    return s;
}

void reject_unknown(const json& obj, const char* where, std::initializer_list<const char*> known)
{
    const std::set<std::string> allowed(known.begin(), known.end());
    for (const auto& [key, value] : obj.items()) {
        if (!allowed.count(key))
            throw ConfigError(std::string("config: unknown key '") + key + "' in " + where);
    }
}

template <typename T>
T get_or(const json& obj, const char* where, const char* key, T fallback)
{
    if (!obj.contains(key) || obj.at(key).is_null())
        return fallback;
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError(std::string("config: '") + where + "." + key + "' has the wrong type");
    }
}

std::optional<double> get_optional(const json& obj, const char* where, const char* key)
{
    if (!obj.contains(key) || obj.at(key).is_null())
        return std::nullopt;
    return get_or<double>(obj, where, key, 0.0);
}

FunctionSpec get_function(const json& obj, const char* where, const char* key, const char* fallback)
{
    if (!obj.contains(key) || obj.at(key).is_null()) {
        if (!fallback)
            throw ConfigError(std::string("config: missing '") + where + "." + key + "'");
        return FunctionSpec::parse(fallback);
    }
    const json& v = obj.at(key);
    if (v.is_number())
        return FunctionSpec::constant(v.get<double>());
    if (v.is_string())
        return FunctionSpec::parse(v.get<std::string>());
    throw ConfigError(std::string("config: '") + where + "." + key + "' must be a string or a number");
}

} // namespace

GridSpec ExperimentConfig::grid() const
{
    return build_grid(dim, nodes, tau, final_time);
}

ObservationRegion ExperimentConfig::region(const GridSpec& g) const
{
    return removed_box ? ObservationRegion(g, *removed_box) : ObservationRegion::whole(g);
}

double default_epsilon(double delta0)
{
    return delta0 > 0.0 ? 0.01 * delta0 : 1e-6;
}

double default_alpha(double delta0, double delta)
{
    return delta0 > 0.0 ? 1e-3 * delta : 1e-12;
}

ExperimentConfig config_from_json(const json& doc)
{
    if (!doc.is_object())
        throw ConfigError("config: top level must be an object");
    reject_unknown(doc, "config", {"name", "grid", "problem", "noise", "reconstruction", "scheme", "output"});

    ExperimentConfig c;
    c.name = get_or<std::string>(doc, "config", "name", c.name);

    const json& g = section(doc, "grid");
    reject_unknown(g, "grid", {"dim", "nodes", "tau", "T"});
    c.dim = get_or<int>(g, "grid", "dim", c.dim);
    c.nodes = get_or<int>(g, "grid", "nodes", c.nodes);
    c.tau = get_or<double>(g, "grid", "tau", c.tau);
    c.final_time = get_or<double>(g, "grid", "T", c.final_time);

    const json& p = section(doc, "problem");
    reject_unknown(p, "problem", {"f_true", "R", "removed_box"});
    c.f_true = get_function(p, "problem", "f_true", nullptr);
    c.R = get_function(p, "problem", "R", nullptr);
    if (p.contains("removed_box") && !p.at("removed_box").is_null()) {
        const json& box = p.at("removed_box");
        if (!box.is_array() || static_cast<int>(box.size()) != c.dim)
            throw ConfigError("config: 'problem.removed_box' must list one [lower, upper] pair per axis");
        Box b;
        for (int a = 0; a < c.dim; ++a) {
            const json& iv = box.at(a);
            if (!iv.is_array() || iv.size() != 2 || !iv.at(0).is_number() || !iv.at(1).is_number())
                throw ConfigError("config: 'problem.removed_box' entries must be [lower, upper] numbers");
            b.lower[a] = iv.at(0).get<double>();
            b.upper[a] = iv.at(1).get<double>();
        }
        c.removed_box = b;
    }

    const json& n = section(doc, "noise");
    reject_unknown(n, "noise", {"delta0", "seed"});
    c.noise.delta0 = get_or<double>(n, "noise", "delta0", c.noise.delta0);
    c.noise.seed = get_or<std::uint64_t>(n, "noise", "seed", c.noise.seed);

    const json& r = section(doc, "reconstruction");
    reject_unknown(r, "reconstruction", {"K", "f0", "epsilon", "alpha", "max_iterations"});
    if (!r.contains("K"))
        throw ConfigError("config: missing 'reconstruction.K'");
    c.K = get_or<double>(r, "reconstruction", "K", c.K);
    c.f0 = get_function(r, "reconstruction", "f0", "1");
    c.epsilon = get_optional(r, "reconstruction", "epsilon");
    c.alpha = get_optional(r, "reconstruction", "alpha");
    c.max_iterations = get_or<int>(r, "reconstruction", "max_iterations", c.max_iterations);

    const json& s = section(doc, "scheme");
    reject_unknown(s, "scheme", {"theta"});
    c.theta = get_or<double>(s, "scheme", "theta", c.theta);

    const json& o = section(doc, "output");
    reject_unknown(o, "output", {"dir", "write_fields"});
    if (o.contains("dir") && !o.at("dir").is_null())
        c.output_dir = std::filesystem::path(get_or<std::string>(o, "output", "dir", ""));
    c.write_fields = get_or<bool>(o, "output", "write_fields", c.write_fields);

    return c;
}

json config_to_json(const ExperimentConfig& c)
{
    json box = nullptr;
    if (c.removed_box) {
        box = json::array();
        for (int a = 0; a < c.dim; ++a)
            box.push_back({c.removed_box->lower[a], c.removed_box->upper[a]});
    }
    json doc = {
        {"name", c.name},
        {"grid", {{"dim", c.dim}, {"nodes", c.nodes}, {"tau", c.tau}, {"T", c.final_time}}},
        {"problem", {{"f_true", c.f_true.text()}, {"R", c.R.text()}, {"removed_box", box}}},
        {"noise", {{"delta0", c.noise.delta0}, {"seed", c.noise.seed}}},
        {"reconstruction",
         {{"K", c.K},
          {"f0", c.f0.text()},
          {"epsilon", c.epsilon ? json(*c.epsilon) : json(nullptr)},
          {"alpha", c.alpha ? json(*c.alpha) : json(nullptr)},
          {"max_iterations", c.max_iterations}}},
        {"scheme", {{"theta", c.theta}}},
    };
    json out = {{"write_fields", c.write_fields}};
    out["dir"] = c.output_dir ? json(c.output_dir->string()) : json(nullptr);
    doc["output"] = out;
    return doc;
}

ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: " + path.string() + ": " + e.what());
    }
    return config_from_json(doc);
}

} // namespace wisp
