#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace picard {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;  // the witness on failure
};

// One command's output. The JSON, table and CSV forms are all rendered from
// this value.
struct Report {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;  // scalars, one per column
    nlohmann::json results = nlohmann::json::object();
    std::vector<Check> checks;
    double seconds = 0;

    void add_row(std::vector<nlohmann::json> row);
    void check(std::string name, bool pass, std::string detail = {});
    bool pass() const;  // every check passes

    nlohmann::json to_json() const;
    std::string to_table() const;
    // Header row of columns, one line per row; checks are not included.
    std::string to_csv() const;
};

// Strings as-is, other scalars in their JSON spelling.
std::string cell_text(const nlohmann::json& v);

}  // namespace picard
