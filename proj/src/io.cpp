#include "maoea/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace maoea {

std::string fmt_g(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw IoError("cannot parse number from '" + s + "'");
    return v;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string() + " for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw IoError("failed writing " + path.string());
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------
namespace {

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void csv_append_row(std::string& out, const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(row[i]);
    }
    out += '\n';
}

std::vector<std::string> csv_parse_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

}  // namespace

std::string csv_to_string(const CsvTable& table) {
    std::string out;
    csv_append_row(out, table.header);
    for (const auto& row : table.rows) csv_append_row(out, row);
    return out;
}

CsvTable csv_from_string(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            table.header = csv_parse_line(line);
            first = false;
        } else {
            table.rows.push_back(csv_parse_line(line));
        }
    }
    if (first) throw IoError("CSV has no header row");
    return table;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
    write_text_file(path, csv_to_string(table));
}

CsvTable read_csv(const std::filesystem::path& path) {
    return csv_from_string(read_text_file(path));
}

Matrix read_point_matrix(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    Matrix out;
    std::istringstream in(text);
    std::string line;
    std::vector<double> row;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        row.clear();
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, ',')) row.push_back(parse_double(field));
        out.push_row(row);
    }
    if (out.rows == 0) throw IoError("no points in " + path.string());
    return out;
}

void write_point_matrix(const std::filesystem::path& path, const Matrix& points, int digits) {
    std::string out;
    for (std::size_t i = 0; i < points.rows; ++i) {
        for (std::size_t j = 0; j < points.cols; ++j) {
            if (j) out += ',';
            out += fmt_g(points.at(i, j), digits);
        }
        out += '\n';
    }
    write_text_file(path, out);
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------
void to_json(json& j, const LayerConfig& v) {
    j = json{{"outer_divisions", v.outer_divisions},
             {"inner_divisions", v.inner_divisions},
             {"shrink", v.shrink}};
}

void from_json(const json& j, LayerConfig& v) {
    v.outer_divisions = j.value("outer_divisions", v.outer_divisions);
    v.inner_divisions = j.value("inner_divisions", v.inner_divisions);
    v.shrink = j.value("shrink", v.shrink);
}

void to_json(json& j, const DnpeConfig& v) {
    j = json{{"lambda", v.lambda},
             {"population", v.population},
             {"per_extreme_eval_budget", v.per_extreme_eval_budget},
             {"per_extreme_tolerance", v.per_extreme_tolerance},
             {"crossover_prob", v.crossover_prob},
             {"mutation_prob", v.mutation_prob},
             {"crossover_eta", v.crossover_eta},
             {"mutation_eta", v.mutation_eta}};
}

void from_json(const json& j, DnpeConfig& v) {
    v.lambda = j.value("lambda", v.lambda);
    v.population = j.value("population", v.population);
    v.per_extreme_eval_budget = j.value("per_extreme_eval_budget", v.per_extreme_eval_budget);
    v.per_extreme_tolerance = j.value("per_extreme_tolerance", v.per_extreme_tolerance);
    v.crossover_prob = j.value("crossover_prob", v.crossover_prob);
    v.mutation_prob = j.value("mutation_prob", v.mutation_prob);
    v.crossover_eta = j.value("crossover_eta", v.crossover_eta);
    v.mutation_eta = j.value("mutation_eta", v.mutation_eta);
}

void to_json(json& j, const VariationConfig& v) {
    j = json{{"crossover_prob", v.crossover_prob},
             {"mutation_prob", v.mutation_prob},
             {"sbx_eta", v.sbx_eta},
             {"mutation_eta", v.mutation_eta},
             {"gene_pool_size", v.gene_pool_size},
             {"children_per_pair", v.children_per_pair}};
}

void from_json(const json& j, VariationConfig& v) {
    v.crossover_prob = j.value("crossover_prob", v.crossover_prob);
    v.mutation_prob = j.value("mutation_prob", v.mutation_prob);
    v.sbx_eta = j.value("sbx_eta", v.sbx_eta);
    v.mutation_eta = j.value("mutation_eta", v.mutation_eta);
    v.gene_pool_size = j.value("gene_pool_size", v.gene_pool_size);
    v.children_per_pair = j.value("children_per_pair", v.children_per_pair);
}

void to_json(json& j, const EngineConfig& v) {
    j = json{{"problem", v.problem_id},
             {"m", v.m},
             {"layers", v.layers},
             {"population", v.population},
             {"budget", v.total_eval_budget},
             {"dnpe_budget_fraction", v.dnpe_budget_fraction},
             {"dnpe", v.dnpe},
             {"variation", v.variation},
             {"seed", v.seed},
             {"track_igd", v.track_igd},
             {"igd_front_samples", v.igd_front_samples}};
}

void from_json(const json& j, EngineConfig& v) {
    v.problem_id = j.value("problem", v.problem_id);
    v.m = j.value("m", v.m);
    if (j.contains("layers")) j.at("layers").get_to(v.layers);
    v.population = j.value("population", v.population);
    v.total_eval_budget = j.value("budget", v.total_eval_budget);
    v.dnpe_budget_fraction = j.value("dnpe_budget_fraction", v.dnpe_budget_fraction);
    if (j.contains("dnpe")) j.at("dnpe").get_to(v.dnpe);
    if (j.contains("variation")) j.at("variation").get_to(v.variation);
    v.seed = j.value("seed", v.seed);
    v.track_igd = j.value("track_igd", v.track_igd);
    v.igd_front_samples = j.value("igd_front_samples", v.igd_front_samples);
}

void apply_engine_overrides(EngineConfig& config, const json& overrides) {
    from_json(overrides, config);
}

void to_json(json& j, const NadirReport& v) {
    json extremes = json::array();
    for (const auto& e : v.extremes) extremes.push_back(e.f);
    j = json{{"extreme_points", extremes},
             {"nadir", v.nadir},
             {"ideal", v.ideal},
             {"evaluations", v.evaluations},
             {"error", v.error ? json(*v.error) : json(nullptr)},
             {"axes_converged", v.axes_converged}};
}

void to_json(json& j, const GenerationStats& v) {
    j = json{{"evaluations", v.evaluations},
             {"best_min_proximity", v.best_min_proximity},
             {"mean_min_proximity", v.mean_min_proximity},
             {"r1", v.r1},
             {"r2", v.r2},
             {"r3", v.r3},
             {"igd", v.igd_value ? json(*v.igd_value) : json(nullptr)}};
}

void to_json(json& j, const RunRecord& v) {
    json decisions = json::array();
    json objectives = json::array();
    for (const auto& ind : v.final_population) {
        decisions.push_back(ind.x);
        objectives.push_back(ind.f);
    }
    j = json{{"algorithm", v.algorithm},
             {"config", v.config},
             {"nadir", v.nadir ? json(*v.nadir) : json(nullptr)},
             {"generations", v.generations},
             {"final_population", json{{"x", decisions}, {"f", objectives}}},
             {"total_evaluations", v.total_evaluations}};
}

}  // namespace maoea
