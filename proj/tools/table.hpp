#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace gsws_cli {

using Cell = std::variant<double, long long, std::string>;

/// One output table: a parameter echo block, a header row, typed cells.
/// CSV renders the echo as leading '#' comment lines; JSON as a "params"
/// object. Numbers are written with full double precision so identical
/// configurations produce byte-identical files.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

std::string format_g17(double v);

void write_csv(const Table& t, std::ostream& os);

/// tables after the first become arrays under their own key (wavefunction
/// dumps); the whole document stays one JSON object
void write_json(const Table& t, const std::vector<Table>& extra,
                std::ostream& os);

}  // namespace gsws_cli
