#include "pbfa/table_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace pbfa {

FunctionTable read_table_text(std::istream& in) {
  int arity = -1;
  if (!(in >> arity)) throw std::invalid_argument("truth table: missing arity");
  detail::check_arity(arity);
  const std::size_t count = std::size_t{1} << arity;
  std::vector<Rational> values;
  values.reserve(count);
  std::string token;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(in >> token)) {
      throw std::invalid_argument("truth table: expected " + std::to_string(count) + " values, got " +
                                  std::to_string(i));
    }
    values.push_back(Rational::from_string(token));
  }
  if (in >> token) throw std::invalid_argument("truth table: trailing content \"" + token + "\"");
  return FunctionTable(arity, std::move(values));
}

FunctionTable read_table_text(const std::string& text) {
  std::istringstream in(text);
  return read_table_text(in);
}

std::string write_table_text(const FunctionTable& f) {
  std::string out = std::to_string(f.arity());
  out += '\n';
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (x > 0) out += ' ';
    out += f[x].str();
  }
  out += '\n';
  return out;
}

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Rational::from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  throw std::invalid_argument("table value must be a string or integer, got " + v.dump() +
                              " (use strings for non-integer rationals)");
}

}  // namespace

FunctionTable table_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("values")) {
    throw std::invalid_argument("table JSON must be an object with \"arity\" and \"values\"");
  }
  const int arity = j.at("arity").get<int>();
  detail::check_arity(arity);
  const auto& values = j.at("values");
  if (!values.is_array() || values.size() != (std::size_t{1} << arity)) {
    throw std::invalid_argument("table JSON: \"values\" must hold exactly 2^arity entries");
  }
  std::vector<Rational> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(rational_from_json(v));
  return FunctionTable(arity, std::move(out));
}

nlohmann::json table_to_json(const FunctionTable& f) {
  nlohmann::json values = nlohmann::json::array();
  for (std::uint32_t x = 0; x < f.size(); ++x) values.push_back(f[x].str());
  return nlohmann::json{{"arity", f.arity()}, {"values", std::move(values)}};
}

}  // namespace pbfa
