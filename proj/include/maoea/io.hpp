#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "maoea/engine.hpp"

namespace maoea {

using json = nlohmann::json;

/// printf-style %.{digits}g rendering (deterministic for a given double).
std::string fmt_g(double v, int digits);
double parse_double(const std::string& s);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& content);

// ---------------------------------------------------------------------------
// CSV: RFC-4180, header row, '.' decimal separator, UTF-8, LF line endings.
// ---------------------------------------------------------------------------
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_to_string(const CsvTable& table);
CsvTable csv_from_string(const std::string& text);
void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);

/// Plain numeric point files: one point per line, comma-separated values.
Matrix read_point_matrix(const std::filesystem::path& path);
void write_point_matrix(const std::filesystem::path& path, const Matrix& points,
                        int digits = 17);

// ---------------------------------------------------------------------------
// JSON serialization (nlohmann ADL). Keys are emitted sorted, so dumping the
// same record twice is byte-identical.
// ---------------------------------------------------------------------------
void to_json(json& j, const LayerConfig& v);
void from_json(const json& j, LayerConfig& v);
void to_json(json& j, const DnpeConfig& v);
void from_json(const json& j, DnpeConfig& v);
void to_json(json& j, const VariationConfig& v);
void from_json(const json& j, VariationConfig& v);
void to_json(json& j, const EngineConfig& v);
void from_json(const json& j, EngineConfig& v);
void to_json(json& j, const NadirReport& v);
void to_json(json& j, const GenerationStats& v);
void to_json(json& j, const RunRecord& v);

/// Apply partial overrides (same keys as the EngineConfig JSON) onto a base.
void apply_engine_overrides(EngineConfig& config, const json& overrides);

}  // namespace maoea
