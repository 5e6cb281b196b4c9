#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "pbfa/function_table.hpp"

namespace pbfa {

/// Text format: first token is the arity n, followed by 2^n whitespace
/// separated rational values ("p/q", integer, or decimal), in table index
/// order (x_1 is the least significant index bit).
FunctionTable read_table_text(std::istream& in);
FunctionTable read_table_text(const std::string& text);
std::string write_table_text(const FunctionTable& f);

/// JSON form: {"arity": n, "values": ["1", "2", "4", "3"]}. Values are
/// strings to preserve exactness; integer JSON numbers are also accepted.
FunctionTable table_from_json(const nlohmann::json& j);
nlohmann::json table_to_json(const FunctionTable& f);

}  // namespace pbfa
