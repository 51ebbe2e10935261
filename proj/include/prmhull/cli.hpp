#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "prmhull/eaqecc.hpp"

namespace prmhull::cli {

// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kMismatch = 1;
inline constexpr int kUsage = 2;

// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Directory holding table1.csv and the example goldens.
std::string default_goldens_dir();

// The worked q=4 and q=3 examples as one JSON document, keyed by example.
nlohmann::json examples_record();
// examples_record() in the byte layout of the golden file.
std::string examples_text();

nlohmann::json to_json(const EaqeccParams& p);

struct TableRow {
    std::uint32_t q, d1, d2;
    std::uint64_t n;
    std::int64_t kappa;
    std::uint64_t delta_x, delta_z;
    std::int64_t c;
    bool operator==(const TableRow&) const = default;
};

// Rows of a CSV with header q,d1,d2,n,kappa,delta_x,delta_z,c[,...].  Lines
// starting with '#' are skipped.
std::vector<TableRow> read_table_csv(const std::string& text);

}  // namespace prmhull::cli
