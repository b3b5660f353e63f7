#include "wisp/harness/output.hpp"

#include "wisp/errors.hpp"
#include "wisp/harness/noise.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace wisp {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::ofstream open_for_write(const fs::path& path)
{
    if (path.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw ConfigError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    }
    std::ofstream out(path);
    if (!out)
        throw ConfigError("cannot open " + path.string() + " for writing");
    return out;
}

void finish(std::ofstream& out, const fs::path& path)
{
    out.flush();
    if (!out)
        throw ConfigError("write failed: " + path.string());
}

double parse_double(const std::string& s, const fs::path& path)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError(path.string() + ": malformed number '" + s + "'");
    }
}

} // namespace

std::string format_exact(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_convergence_csv(const fs::path& path, const IterationLog& log)
{
    auto out = open_for_write(path);
    out << "iter,J,rel_change,err,seconds\n";
    for (const auto& r : log.records) {
        out << r.index << ',' << format_exact(r.objective) << ',' << format_exact(r.relative_change) << ','
            << (r.relative_error ? format_exact(*r.relative_error) : std::string()) << ',' << format_exact(r.seconds)
            << '\n';
    }
    finish(out, path);
}

IterationLog read_convergence_csv(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != "iter,J,rel_change,err,seconds")
        throw ConfigError(path.string() + ": unexpected CSV header");
    IterationLog log;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ','))
            cells.push_back(cell);
        if (cells.size() == 4)
            cells.emplace_back();
        if (cells.size() != 5)
            throw ConfigError(path.string() + ": expected 5 columns in '" + line + "'");
        IterationRecord r;
        r.index = static_cast<int>(parse_double(cells[0], path));
        r.objective = parse_double(cells[1], path);
        r.relative_change = parse_double(cells[2], path);
        if (!cells[3].empty())
            r.relative_error = parse_double(cells[3], path);
        r.seconds = parse_double(cells[4], path);
        log.records.push_back(r);
    }
    return log;
}

void write_field_dump(const fs::path& path, const ScalarField& field)
{
    auto out = open_for_write(path);
    const GridSpec& g = field.grid();
    out << "dim " << g.dim() << " nodes " << g.nodes_per_axis() << " h " << format_exact(g.h()) << '\n';
    for (Eigen::Index i = 0; i < field.size(); ++i)
        out << format_exact(field[i]) << '\n';
    finish(out, path);
}

FieldDump read_field_dump(const fs::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line))
        throw ConfigError(path.string() + ": empty field dump");

    FieldDump d;
    {
        std::istringstream hs(line);
        std::string k_dim, k_nodes, k_h, h_text;
        if (!(hs >> k_dim >> d.dim >> k_nodes >> d.nodes >> k_h >> h_text) || k_dim != "dim" || k_nodes != "nodes"
            || k_h != "h")
            throw ConfigError(path.string() + ": malformed header '" + line + "'");
        d.h = parse_double(h_text, path);
    }
    while (std::getline(in, line)) {
        if (!line.empty())
            d.values.push_back(parse_double(line, path));
    }
    std::size_t expected = 1;
    for (int a = 0; a < d.dim; ++a)
        expected *= static_cast<std::size_t>(d.nodes);
    if (d.values.size() != expected)
        throw ConfigError(path.string() + ": expected " + std::to_string(expected) + " values, found "
                          + std::to_string(d.values.size()));
    return d;
}

ScalarField to_field(const FieldDump& dump, const GridSpec& grid)
{
    if (dump.dim != grid.dim() || dump.nodes != grid.nodes_per_axis())
        throw ConfigError("field dump does not match the grid");
    return ScalarField(grid, Eigen::Map<const Eigen::VectorXd>(dump.values.data(),
                                                              static_cast<Eigen::Index>(dump.values.size())));
}

void write_summary_json(const fs::path& path, const ExperimentConfig& config, const ExperimentResult& r)
{
    std::vector<std::string> artifacts;
    for (const auto& p : r.artifacts)
        artifacts.push_back(p.string());
    json doc = {
        {"config", config_to_json(config)},
        {"result",
         {{"name", r.name},
          {"M", r.iterations},
          {"err", r.error},
          {"seconds", r.seconds},
          {"final_J", r.final_objective},
          {"stop_reason", to_string(r.stop)},
          {"delta", r.delta},
          {"alpha", r.alpha},
          {"epsilon", r.epsilon},
          {"K", r.K},
          {"norm_bound", r.norm_bound ? json(*r.norm_bound) : json(nullptr)},
          {"observability_relaxed",
           {{"passed", r.geometry.passed}, {"T", r.geometry.final_time}, {"diameter", r.geometry.required_time}}},
          {"artifacts", artifacts}}},
        {"rng", noise_generator_name},
    };
    auto out = open_for_write(path);
    out << doc.dump(2) << '\n';
    finish(out, path);
}

std::vector<fs::path> write_outputs(const fs::path& dir, const ExperimentConfig& config, ExperimentResult& result,
                                    const IterationLog& log, const ScalarField* f_recovered, const ScalarField* f_true)
{
    std::vector<fs::path> written;
    written.push_back(dir / "convergence.csv");
    write_convergence_csv(written.back(), log);
    if (f_recovered) {
        written.push_back(dir / "f_recovered.txt");
        write_field_dump(written.back(), *f_recovered);
    }
    if (f_true) {
        written.push_back(dir / "f_true.txt");
        write_field_dump(written.back(), *f_true);
    }
    written.push_back(dir / "summary.json");
    result.artifacts = written;
    write_summary_json(written.back(), config, result);
    return written;
}

} // namespace wisp
