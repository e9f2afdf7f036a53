#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dgmzv {

/// A command result: ordered parameters, named columns, string cells.
struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  friend bool operator==(const Table&, const Table&) = default;
};

/// "# command k=v ..." then "# col<TAB>col..." then one line per row; LF only.
std::string to_tsv(const Table& t);
/// {"command": ..., "params": {...}, "columns": [...], "rows": [{col: cell}]};
/// cells that look like integers are emitted as JSON numbers.
std::string to_json(const Table& t);
std::string render(const Table& t, const std::string& format);

/// Inverses of the writers; throw std::invalid_argument on malformed input.
Table parse_tsv(const std::string& text);
Table parse_json(const std::string& text);

}  // namespace dgmzv
