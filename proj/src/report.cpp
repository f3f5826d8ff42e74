#include "lucaslp/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace lucaslp {

using nlohmann::json;

namespace {

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

// Flattens one verdict into column -> cell text.
void flatten(const json& value, const std::string& prefix, std::map<std::string, std::string>& row,
             bool strict) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) {
      flatten(child, prefix.empty() ? key : prefix + "." + key, row, strict);
    }
    return;
  }
  if (value.is_array()) {
    const bool scalars = std::all_of(value.begin(), value.end(),
                                     [](const json& e) { return e.is_primitive(); });
    if (!scalars) {
      if (strict) throw CsvUnrepresentable("column '" + prefix + "' holds nested records");
      row[prefix] = value.dump();
      return;
    }
    std::string joined;
    for (const auto& e : value) {
      if (!joined.empty()) joined += ' ';
      joined += scalar_text(e);
    }
    row[prefix] = joined;
    return;
  }
  row[prefix.empty() ? "value" : prefix] = scalar_text(value);
}

std::vector<std::map<std::string, std::string>> flatten_rows(const json& verdicts, bool strict) {
  std::vector<std::map<std::string, std::string>> rows;
  for (const auto& v : verdicts) {
    std::map<std::string, std::string> row;
    flatten(v, "", row, strict);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> columns_of(const std::vector<std::map<std::string, std::string>>& rows) {
  std::set<std::string> cols;
  for (const auto& row : rows) {
    for (const auto& [k, _] : row) cols.insert(k);
  }
  return {cols.begin(), cols.end()};
}

std::string csv_cell(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string to_csv(const Report& r) {
  const auto rows = flatten_rows(r.verdicts, true);
  const auto cols = columns_of(rows);
  std::ostringstream os;
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_cell(cols[i]);
  os << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const auto it = row.find(cols[i]);
      os << (i ? "," : "") << (it == row.end() ? "" : csv_cell(it->second));
    }
    os << '\n';
  }
  return os.str();
}

void write_table(std::ostream& os, const std::vector<std::map<std::string, std::string>>& rows) {
  const auto cols = columns_of(rows);
  std::vector<std::size_t> width;
  for (const auto& c : cols) {
    std::size_t w = c.size();
    for (const auto& row : rows) {
      const auto it = row.find(c);
      if (it != row.end()) w = std::max(w, it->second.size());
    }
    width.push_back(w);
  }
  auto line = [&](auto&& cell_of) {
    std::string text = " ";
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string cell = cell_of(i);
      text += ' ' + cell + std::string(width[i] - cell.size(), ' ');
    }
    text.erase(text.find_last_not_of(' ') + 1);
    os << text << '\n';
  };
  line([&](std::size_t i) { return cols[i]; });
  line([&](std::size_t i) { return std::string(width[i], '-'); });
  for (const auto& row : rows) {
    line([&](std::size_t i) {
      const auto it = row.find(cols[i]);
      return it == row.end() ? std::string() : it->second;
    });
  }
}

std::string to_plain(const Report& r) {
  std::ostringstream os;
  os << "command: " << r.command << '\n';
  if (!r.inputs.empty()) {
    os << "inputs:\n";
    for (const auto& [k, v] : r.inputs) os << "  " << k << " = " << v << '\n';
  }
  os << "verdicts:\n";
  if (r.verdicts.empty()) {
    os << "  (none)\n";
  } else {
    write_table(os, flatten_rows(r.verdicts, false));
  }
  if (r.agreement) {
    os << "agreement:\n";
    for (const auto& [k, v] : r.agreement->items()) {
      if (v.is_array() && !v.empty() && v.front().is_object()) {
        os << "  " << k << ":\n";
        write_table(os, flatten_rows(v, false));
      } else if (v.is_array()) {
        std::map<std::string, std::string> row;
        flatten(v, k, row, false);
        os << "  " << k << ": " << (v.empty() ? "(none)" : row[k]) << '\n';
      } else {
        os << "  " << k << ": " << (v.is_primitive() ? scalar_text(v) : v.dump()) << '\n';
      }
    }
  }
  return os.str();
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "plain") return Format::plain;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

json to_json(const Counterexample& c) {
  return json{{"n", c.n}, {"lhs", c.lhs}, {"digits", c.digits}, {"rhs", c.rhs}};
}

json to_json(const LPVerdict& v) {
  json out{{"holds", v.holds}, {"prime", v.prime.value()}, {"digit_bound", v.digit_bound}};
  if (v.counterexample) out["counterexample"] = to_json(*v.counterexample);
  return out;
}

json to_json(const Report& r) {
  json out{{"command", r.command}, {"inputs", r.inputs}, {"verdicts", r.verdicts}};
  if (r.agreement) out["agreement"] = *r.agreement;
  return out;
}

std::string format_report(const Report& r, Format format) {
  switch (format) {
    case Format::json:
      return to_json(r).dump(2) + "\n";
    case Format::csv:
      return to_csv(r);
    case Format::plain:
      return to_plain(r);
  }
  return {};
}

}  // namespace lucaslp
