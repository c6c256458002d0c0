#ifndef RLAB_CLI_HPP
#define RLAB_CLI_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rlab::cli {

using Cell = std::variant<std::int64_t, double, std::string, bool>;
using Row = std::map<std::string, Cell>;

/// Output table with a fixed column order; rows may leave columns empty.
struct Table {
    std::vector<std::string> columns;
    std::vector<Row> rows;
};

/// First line "#schema=1", then a header and one line per row; doubles as %.17g, LF endings.
std::string to_csv(const Table& t);
/// Array of flat records; empty cells are omitted.
std::string to_json(const Table& t);

/// Result of one experiment: the table plus any violated assertions.
struct Outcome {
    Table table;
    std::vector<std::string> violations;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

/// Entry point shared by the executable and the tests. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b", "a,b,c" or a single integer.
std::vector<std::int64_t> parse_int_list(const std::string& text);
std::vector<double> parse_double_list(const std::string& text);

}  // namespace rlab::cli

#endif  // RLAB_CLI_HPP
