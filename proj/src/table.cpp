#include "dgmzv/table.hpp"

#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace dgmzv {

namespace {

using ojson = nlohmann::ordered_json;

bool looks_integral(const std::string& s) {
  std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i == s.size() || s.size() - i > 18) return false;
  if (s[i] == '0' && s.size() > i + 1) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return s != "-0";
}

void check_cell(const std::string& s) {
  if (s.find_first_of("\t\n\r") != std::string::npos)
    throw std::invalid_argument("table cell contains a tab or newline: " + s);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find('\t', start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string cell_of(const ojson& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  throw std::invalid_argument("table json: unsupported cell value " + v.dump());
}

}  // namespace

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("Table: row width does not match columns");
  rows.push_back(std::move(row));
}

std::string to_tsv(const Table& t) {
  std::ostringstream os;
  check_cell(t.command);
  os << "# " << t.command;
  for (const auto& [k, v] : t.params) {
    check_cell(k);
    check_cell(v);
    if (k.find('=') != std::string::npos) throw std::invalid_argument("table param key contains '='");
    os << '\t' << k << '=' << v;
  }
  os << "\n#";
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "\t" : " ") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      check_cell(row[i]);
      os << (i ? "\t" : "") << row[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string to_json(const Table& t) {
  ojson j;
  j["command"] = t.command;
  j["params"] = ojson::object();
  for (const auto& [k, v] : t.params) j["params"][k] = v;
  j["columns"] = t.columns;
  j["rows"] = ojson::array();
  for (const auto& row : t.rows) {
    ojson r = ojson::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (looks_integral(row[i]))
        r[t.columns[i]] = std::stoll(row[i]);
      else
        r[t.columns[i]] = row[i];
    }
    j["rows"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

std::string render(const Table& t, const std::string& format) {
  if (format == "tsv") return to_tsv(t);
  if (format == "json") return to_json(t);
  throw std::invalid_argument("unknown output format: " + format);
}

Table parse_tsv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  Table t;
  if (!std::getline(is, line) || line.rfind("# ", 0) != 0) throw std::invalid_argument("tsv: missing command header");
  auto head = split_tabs(line.substr(2));
  t.command = head[0];
  for (std::size_t i = 1; i < head.size(); ++i) {
    const auto eq = head[i].find('=');
    if (eq == std::string::npos) throw std::invalid_argument("tsv: malformed parameter " + head[i]);
    t.params.emplace_back(head[i].substr(0, eq), head[i].substr(eq + 1));
  }
  if (!std::getline(is, line) || line.empty() || line[0] != '#') throw std::invalid_argument("tsv: missing column header");
  if (line.size() > 1) {
    if (line[1] != ' ') throw std::invalid_argument("tsv: malformed column header");
    t.columns = split_tabs(line.substr(2));
  }
  while (std::getline(is, line)) {
    auto row = split_tabs(line);
    if (row.size() != t.columns.size()) throw std::invalid_argument("tsv: row width mismatch: " + line);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table parse_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("command") || !j.contains("params") || !j.contains("rows"))
    throw std::invalid_argument("json: expected {command, params, rows}");
  Table t;
  t.command = j["command"].get<std::string>();
  for (const auto& [k, v] : j["params"].items()) t.params.emplace_back(k, cell_of(v));
  if (j.contains("columns")) t.columns = j["columns"].get<std::vector<std::string>>();
  for (const auto& r : j["rows"]) {
    if (t.columns.empty())
      for (const auto& [k, v] : r.items()) t.columns.push_back(k);
    std::vector<std::string> row;
    for (const auto& c : t.columns) {
      if (!r.contains(c)) throw std::invalid_argument("json: row lacks column " + c);
      row.push_back(cell_of(r[c]));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace dgmzv
