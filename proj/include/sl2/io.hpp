#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace sl2 {

using Json = nlohmann::ordered_json;

/// Library version string.
const char* version();

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);

/// 16 hex digits of the FNV-1a hash of the compact dump of `config`.
std::string config_hash(const Json& config);

/// Column-major-agnostic CSV table; every cell is already formatted.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    void add_row(std::vector<std::string> row);
};

/// Quoted when the cell holds a comma, quote or newline.
std::string csv_cell(const std::string& cell);

/// Header row then data rows, each with a trailing config_hash column.
void write_csv(std::ostream& os, const Table& table, const std::string& hash);

/// Table rows as a list of objects keyed by column name (plus config_hash when given).
Json table_json(const Table& table, const std::string& hash = {});

/// {config, results, margins, version}
Json envelope(const Json& config, const Json& results, const Json& margins);

} // namespace sl2
