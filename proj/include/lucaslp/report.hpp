#pragma once

// Machine-readable reports emitted by the command-line tool.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "json.hpp"
#include "lucaslp/lp.hpp"

namespace lucaslp {

enum class Format { json, csv, plain };

/// Throws std::invalid_argument for anything but json, csv or plain.
[[nodiscard]] Format parse_format(std::string_view name);

struct Report {
  Report() = default;
  Report(std::string cmd, std::map<std::string, std::string> in)
      : command(std::move(cmd)), inputs(std::move(in)) {}

  std::string command;
  std::map<std::string, std::string> inputs;
  nlohmann::json verdicts = nlohmann::json::array();
  std::optional<nlohmann::json> agreement;
  int exit_code = 0;  // not serialized
};

[[nodiscard]] nlohmann::json to_json(const Counterexample& c);
[[nodiscard]] nlohmann::json to_json(const LPVerdict& v);
[[nodiscard]] nlohmann::json to_json(const Report& r);

/// json: one key-sorted document. csv: one row per verdict, nested objects
/// flattened to dotted columns and scalar arrays space-joined; the agreement
/// block is not part of the csv form, and a verdict holding a list of
/// objects raises CsvUnrepresentable. plain: aligned tables for people.
[[nodiscard]] std::string format_report(const Report& r, Format format);

}  // namespace lucaslp
