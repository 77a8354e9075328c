#include "sl2/io.hpp"

#include <cstdio>

#include "sl2/errors.hpp"

#ifndef SL2_VERSION
#define SL2_VERSION "0.0.0"
#endif

namespace sl2 {

const char* version() { return SL2_VERSION; }

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash(const Json& config) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(config.dump())));
    return buf;
}

void Table::add_row(std::vector<std::string> row) {
    if (row.size() != columns.size()) throw DomainError("table row width does not match the header");
    rows.push_back(std::move(row));
}

std::string csv_cell(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string q = "\"";
    for (char c : cell) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

void write_csv(std::ostream& os, const Table& table, const std::string& hash) {
    for (size_t i = 0; i < table.columns.size(); ++i) os << csv_cell(table.columns[i]) << ',';
    os << "config_hash\n";
    for (const auto& row : table.rows) {
        for (const auto& cell : row) os << csv_cell(cell) << ',';
        os << hash << '\n';
    }
}

Json table_json(const Table& table, const std::string& hash) {
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json r = Json::object();
        for (size_t i = 0; i < row.size(); ++i) r[table.columns[i]] = row[i];
        if (!hash.empty()) r["config_hash"] = hash;
        rows.push_back(std::move(r));
    }
    return rows;
}

Json envelope(const Json& config, const Json& results, const Json& margins) {
    Json e = Json::object();
    e["config"] = config;
    e["results"] = results;
    e["margins"] = margins;
    e["version"] = version();
    return e;
}

} // namespace sl2
