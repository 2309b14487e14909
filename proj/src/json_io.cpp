#include "knotalg/json_io.hpp"

#include <fstream>
#include <sstream>

namespace knotalg::io {

json error_object(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", error_name(kind)}, {"message", message}}}};
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  check(static_cast<bool>(in), ErrorKind::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

std::string dump(const json& j) { return j.dump(2); }

const json& field(const json& j, const char* key) {
  check(j.is_object() && j.contains(key), ErrorKind::ParseError,
        std::string("missing field '") + key + "'");
  return j.at(key);
}

long as_long(const json& j, const char* what) {
  if (j.is_number_integer()) return j.get<long>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      const long v = std::stol(s, &pos);
      if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
  }
  fail(ErrorKind::ParseError, std::string("field '") + what + "' must be an integer");
}

int as_eta(const json& j) {
  long v = 0;
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "+1" || s == "1") v = 1;
    else if (s == "-1") v = -1;
  } else if (j.is_number_integer()) {
    v = j.get<long>();
  }
  check(v == 1 || v == -1, ErrorKind::ParseError, "eta must be +1 or -1");
  return static_cast<int>(v);
}

}  // namespace knotalg::io
