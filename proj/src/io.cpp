#include "abfold/io.hpp"

#include "abfold/errors.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include <fmt/core.h>
#include <fmt/ostream.h>
#include <json.hpp>

namespace abfold {

namespace {

bool is_separator(char ch)
{
    return ch == ',' || ch == '{' || ch == '}' || ch == '\\' || ch == ';'
        || std::isspace(static_cast<unsigned char>(ch));
}

} // namespace

Conformation parse_conformation(std::string_view text, std::size_t expected_dimension)
{
    std::vector<double> degrees;
    std::size_t i = 0;
    bool line_start = true;
    while (i < text.size()) {
        const char ch = text[i];
        if (ch == '\n') {
            line_start = true;
            ++i;
            continue;
        }
        if (line_start && ch == '#') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
            continue;
        }
        if (is_separator(ch)) {
            if (ch != ' ' && ch != '\t' && ch != '\r') {
                line_start = false;
            }
            ++i;
            continue;
        }
        line_start = false;
        std::size_t end = i;
        while (end < text.size() && !is_separator(text[end])) {
            ++end;
        }
        const std::string_view token = text.substr(i, end - i);
        const char* first = token.data();
        if (!token.empty() && token.front() == '+') {
            ++first;
        }
        double value = 0.0;
        const auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
            throw ParseError(fmt::format("invalid number '{}' at offset {}", token, i + 1), i + 1);
        }
        degrees.push_back(value);
        i = end;
    }
    if (degrees.size() != expected_dimension) {
        throw ParseError(fmt::format("conformation has {} values, expected {}", degrees.size(),
                                     expected_dimension),
                         text.size());
    }
    Conformation conf;
    conf.angles.reserve(degrees.size());
    for (double d : degrees) {
        conf.angles.push_back(wrap_angle(degrees_to_radians(d)));
    }
    return conf;
}

Conformation parse_conformation(std::string_view text, const AbSequence& seq)
{
    return parse_conformation(text, seq.dimension());
}

std::string serialize_conformation(const Conformation& conf)
{
    std::string out;
    for (std::size_t k = 0; k < conf.dimension(); ++k) {
        if (k > 0) {
            out += ", ";
        }
        out += fmt::format("{:.10f}", radians_to_degrees(conf.angles[k]));
    }
    out += '\n';
    return out;
}

std::string export_xyz(const AbSequence& seq, const PositionChain& chain,
                       std::optional<double> score)
{
    std::string out = fmt::format("{}\n", chain.size());
    std::string comment = seq.label().empty() ? std::string("AB chain") : seq.label();
    comment += " " + seq.to_string();
    if (score) {
        comment += fmt::format(" score={:.6f}", *score);
    }
    out += comment + "\n";
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const char element = seq[i] == MonomerClass::A ? 'C' : 'N';
        out += fmt::format("{} {:.6f} {:.6f} {:.6f}\n", element, chain[i].x, chain[i].y,
                           chain[i].z);
    }
    return out;
}

void write_trace(std::span<const TraceEvent> trace, std::ostream& out)
{
    out << kTraceHeader << '\n';
    for (const TraceEvent& ev : trace) {
        fmt::print(out, "{},{},{:.10f},", ev.nse, ev.phase, ev.best_fitness);
        if (ev.best_score) {
            fmt::print(out, "{:.10f}", *ev.best_score);
        }
        out << '\n';
    }
}

void write_results_csv(std::span<const RunRecord> records, std::ostream& out, bool timing)
{
    out << kResultsHeader << '\n';
    for (const RunRecord& r : records) {
        fmt::print(out, "{},{},{:.10f},{},{:.6f},{},{},{}\n", r.label, r.seed, r.score, r.nse,
                   timing ? r.time : 0.0, r.success ? 1 : 0, r.nse_phase1, r.nse_phase2);
    }
}

namespace {

using nlohmann::json;

json optional_value(const std::optional<double>& v)
{
    return v ? json(*v) : json(nullptr);
}

json aggregate_json(const AggregateStats& s)
{
    json j;
    j["n_runs"] = s.n_runs;
    j["n_success"] = s.n_success;
    j["success_ratio"] = s.success_ratio;
    j["target"] = optional_value(s.target);
    j["e_mean"] = s.e_mean;
    j["e_std"] = optional_value(s.e_std);
    j["e_best"] = s.e_best;
    j["nse_mean"] = optional_value(s.nse_mean);
    j["nse_std"] = optional_value(s.nse_std);
    j["t_mean"] = s.t_mean;
    j["ci_lo"] = optional_value(s.ci_lo);
    j["ci_hi"] = optional_value(s.ci_hi);
    j["nse_coef1"] = optional_value(s.nse_coef1);
    j["t_coef1"] = optional_value(s.t_coef1);
    return j;
}

} // namespace

std::string aggregate_to_json(const AggregateStats& stats, int indent)
{
    return aggregate_json(stats).dump(indent);
}

std::string results_to_json(std::span<const RunRecord> records, const AggregateStats& stats,
                            bool timing, int indent)
{
    json runs = json::array();
    for (const RunRecord& r : records) {
        runs.push_back({{"label", r.label},
                        {"seed", r.seed},
                        {"score", r.score},
                        {"nse", r.nse},
                        {"time_s", timing ? r.time : 0.0},
                        {"success", r.success},
                        {"nse_phase1", r.nse_phase1},
                        {"nse_phase2", r.nse_phase2}});
    }
    AggregateStats shown = stats;
    if (!timing) {
        shown.t_mean = 0.0;
        shown.t_coef1.reset();
    }
    json doc;
    doc["runs"] = std::move(runs);
    doc["aggregate"] = aggregate_json(shown);
    return doc.dump(indent);
}

void apply_config_json(std::string_view json_text, OptimizerConfig& cfg)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ParseError(fmt::format("invalid configuration JSON: {}", e.what()), e.byte);
    }
    if (!j.is_object()) {
        throw ConfigError("configuration must be a JSON object");
    }
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "np") {
                cfg.np = value.get<std::size_t>();
            } else if (key == "p_b") {
                cfg.p_b = value.get<double>();
            } else if (key == "l_b") {
                cfg.l_b = value.get<double>();
            } else if (key == "c") {
                cfg.c = value.get<std::size_t>();
            } else if (key == "h_c") {
                cfg.h_c = value.get<double>();
            } else if (key == "lambda") {
                cfg.lambda = value.get<double>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "target_score") {
                cfg.stopping.target_score = value.get<double>();
            } else if (key == "nse_limit") {
                cfg.stopping.nse_limit = value.get<std::uint64_t>();
            } else if (key == "time_limit") {
                cfg.stopping.time_limit = value.get<double>();
            } else if (key == "base") {
                const auto name = value.get<std::string>();
                if (name == "population") {
                    cfg.base = BaseVector::PopulationBest;
                } else if (name == "global") {
                    cfg.base = BaseVector::GlobalBest;
                } else {
                    throw ConfigError(
                        fmt::format("base must be \"population\" or \"global\", got \"{}\"", name));
                }
            } else {
                throw ConfigError(fmt::format("unknown configuration key \"{}\"", key));
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(fmt::format("bad configuration value: {}", e.what()));
    }
}

std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(fmt::format("cannot open {}", path.string()));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(fmt::format("cannot write {}", path.string()));
    }
    out << text;
    if (!out) {
        throw Error(fmt::format("failed writing {}", path.string()));
    }
}

} // namespace abfold
