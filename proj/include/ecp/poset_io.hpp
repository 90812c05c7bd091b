#pragma once

#include "ecp/error.hpp"
#include "ecp/poset.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ecp {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline int parse_label(const std::string& token, const std::string& line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (token.empty() || used != token.size()) fail(ErrorCode::ParseError, "malformed line '" + line + "'");
  return v;
}

inline PosetInput parse_poset_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    fail(ErrorCode::ParseError, "expected {\"n\": int, \"covers\": [[a, b], ...]}");
  std::vector<std::pair<int, int>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) fail(ErrorCode::ParseError, "covers must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
        fail(ErrorCode::ParseError, "cover must be a pair of integers: " + c.dump());
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  return poset_from_covers(j["n"].get<int>(), covers);
}

}  // namespace detail

/// Text form: the element count on the first line, then one relation
/// `a < b` per line; `#` starts a comment. A leading `{` selects the JSON
/// form {"n": 3, "covers": [[1, 3], [2, 3]]}.
inline PosetInput parse_poset(const std::string& text) {
  const std::string body = detail::trim(text);
  if (!body.empty() && body.front() == '{') return detail::parse_poset_json(body);
  std::istringstream in(text);
  std::string raw;
  int n = -1;
  std::vector<std::pair<int, int>> covers;
  while (std::getline(in, raw)) {
    std::string line = raw.substr(0, raw.find('#'));
    line = detail::trim(line);
    if (line.empty()) continue;
    if (n < 0) {
      n = detail::parse_label(line, raw);
      continue;
    }
    const auto lt = line.find('<');
    if (lt == std::string::npos) fail(ErrorCode::ParseError, "malformed line '" + raw + "'");
    const int a = detail::parse_label(detail::trim(line.substr(0, lt)), raw);
    const int b = detail::parse_label(detail::trim(line.substr(lt + 1)), raw);
    covers.emplace_back(a, b);
  }
  if (n < 0) fail(ErrorCode::ParseError, "missing element count");
  return poset_from_covers(n, covers);
}

inline PosetInput read_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_poset(ss.str());
}

}  // namespace ecp
