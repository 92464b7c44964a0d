#pragma once

#include "shardfan/fan.hpp"

namespace shardfan {

/// JSON syntax error; carries the parser's position message.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally invalid document; names the offending field.
struct SchemaError : std::runtime_error {
  std::string field;
  SchemaError(std::string field_name, const std::string& what)
      : std::runtime_error(what), field(std::move(field_name)) {}
};

// Document format: a single JSON object
//   { "dim": n, "rays": [[...]], "chambers": [[...]], "name": optional }
// with integer entries only. Round-trips losslessly, order preserved.
Fan fan_from_json(const std::string& text);
std::string fan_to_json(const Fan& fan);

Fan load_fan(const std::string& path);
void save_fan(const Fan& fan, const std::string& path);

}  // namespace shardfan
