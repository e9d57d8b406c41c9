#include "table.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace gsws_cli {

std::string format_g17(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string cell_to_csv(const Cell& c) {
  if (std::holds_alternative<double>(c))
    return format_g17(std::get<double>(c));
  if (std::holds_alternative<long long>(c))
    return std::to_string(std::get<long long>(c));
  return std::get<std::string>(c);
}

nlohmann::ordered_json cell_to_json(const Cell& c) {
  if (std::holds_alternative<double>(c)) {
    const double v = std::get<double>(c);
    if (std::isnan(v)) return nullptr;
    return v;
  }
  if (std::holds_alternative<long long>(c)) return std::get<long long>(c);
  return std::get<std::string>(c);
}

nlohmann::ordered_json table_to_json(const Table& t) {
  nlohmann::ordered_json j;
  j["command"] = t.command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : t.params) params[k] = v;
  j["params"] = params;
  j["columns"] = t.columns;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& c : row) r.push_back(cell_to_json(c));
    rows.push_back(std::move(r));
  }
  j["rows"] = rows;
  return j;
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  os << "# command=" << t.command << "\n";
  for (const auto& [k, v] : t.params)
    os << "# " << k << "=" << format_g17(v) << "\n";
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << cell_to_csv(row[i]);
    os << "\n";
  }
}

void write_json(const Table& t, const std::vector<Table>& extra,
                std::ostream& os) {
  nlohmann::ordered_json j = table_to_json(t);
  if (!extra.empty()) {
    nlohmann::ordered_json wfs = nlohmann::ordered_json::array();
    for (const auto& e : extra) wfs.push_back(table_to_json(e));
    j["wavefunctions"] = wfs;
  }
  os << j.dump(2) << "\n";
}

}  // namespace gsws_cli
