#include "alcove/table_io.hpp"

#include <sstream>

#include "json.hpp"

#include "alcove/errors.hpp"

namespace alcove {

namespace {

using ordered_json = nlohmann::ordered_json;

Int int_from_decimal(const std::string& s) {
  try {
    return Int(s);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Validation, "malformed integer literal: " + s);
  }
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

i64 i64_from_field(const std::string& s) {
  try {
    size_t used = 0;
    i64 v = std::stoll(s, &used);
    require(used == s.size(), ErrorKind::Validation, "malformed integer field: " + s);
    return v;
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Validation, "malformed integer field: " + s);
  } catch (const std::out_of_range&) {
    fail(ErrorKind::Validation, "integer field out of range: " + s);
  }
}

}  // namespace

std::string table_to_json(const FusionTable& table) {
  ordered_json j;
  j["family"] = table.family;
  j["rank"] = table.rank;
  j["l"] = table.l;
  j["kind"] = to_string(table.kind);
  ordered_json basis = ordered_json::array();
  for (const Weight& w : table.basis) basis.push_back(w.c);
  j["basis"] = std::move(basis);
  ordered_json constants = ordered_json::array();
  for (const auto& [key, v] : table.constants) {
    ordered_json entry;
    entry["i"] = key[0];
    entry["j"] = key[1];
    entry["k"] = key[2];
    entry["n"] = to_decimal(v);
    constants.push_back(std::move(entry));
  }
  j["constants"] = std::move(constants);
  return j.dump(2) + "\n";
}

FusionTable table_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Validation, std::string("malformed table JSON: ") + e.what());
  }
  FusionTable table;
  try {
    table.family = j.at("family").get<std::string>();
    table.rank = j.at("rank").get<int>();
    table.l = j.at("l").get<i64>();
    table.kind = table_kind_from_string(j.at("kind").get<std::string>());
    for (const auto& row : j.at("basis"))
      table.basis.push_back(Weight(row.get<std::vector<i64>>()));
    for (const auto& entry : j.at("constants"))
      table.constants[std::array<int, 3>{entry.at("i").get<int>(),
                                         entry.at("j").get<int>(),
                                         entry.at("k").get<int>()}] =
          int_from_decimal(entry.at("n").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Validation, std::string("table JSON missing fields: ") + e.what());
  }
  return table;
}

std::string table_to_csv(const FusionTable& table) {
  std::ostringstream out;
  out << "i,j,k,n\n";
  for (const auto& [key, v] : table.constants)
    out << key[0] << ',' << key[1] << ',' << key[2] << ',' << to_decimal(v) << '\n';
  return out.str();
}

std::string basis_to_csv(const FusionTable& table) {
  std::ostringstream out;
  out << "index";
  for (int i = 0; i < table.rank; ++i) out << ",c" << i;
  out << '\n';
  for (size_t idx = 0; idx < table.basis.size(); ++idx) {
    out << idx;
    for (i64 x : table.basis[idx].c) out << ',' << x;
    out << '\n';
  }
  return out.str();
}

FusionTable table_from_csv(TableKind kind, const std::string& family, int rank,
                           i64 l, const std::string& table_csv,
                           const std::string& basis_csv) {
  FusionTable table;
  table.kind = kind;
  table.family = family;
  table.rank = rank;
  table.l = l;

  std::istringstream basis_in(basis_csv);
  std::string line;
  bool header = true;
  while (std::getline(basis_in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    auto parts = split_line(line);
    require(parts.size() == static_cast<size_t>(rank) + 1, ErrorKind::Validation,
            "basis CSV row has the wrong number of fields");
    require(i64_from_field(parts[0]) == static_cast<i64>(table.basis.size()),
            ErrorKind::Validation, "basis CSV rows out of order");
    std::vector<i64> coords;
    for (size_t t = 1; t < parts.size(); ++t) coords.push_back(i64_from_field(parts[t]));
    table.basis.push_back(Weight(std::move(coords)));
  }

  std::istringstream table_in(table_csv);
  header = true;
  while (std::getline(table_in, line)) {
    if (line.empty()) continue;
    if (header) {
      require(split_line(line) == std::vector<std::string>{"i", "j", "k", "n"},
              ErrorKind::Validation, "table CSV header must be i,j,k,n");
      header = false;
      continue;
    }
    auto parts = split_line(line);
    require(parts.size() == 4, ErrorKind::Validation,
            "table CSV row has the wrong number of fields");
    table.constants[std::array<int, 3>{static_cast<int>(i64_from_field(parts[0])),
                                       static_cast<int>(i64_from_field(parts[1])),
                                       static_cast<int>(i64_from_field(parts[2]))}] =
        int_from_decimal(parts[3]);
  }
  return table;
}

}  // namespace alcove
