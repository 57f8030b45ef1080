#include "rhmap/rational.hpp"

#include <cctype>

#include "rhmap/error.hpp"

namespace rhmap {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error("bad-rational", "empty rational literal");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false, digit_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw Error("bad-rational", "malformed rational literal '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw Error("bad-rational", "malformed rational literal '" + s + "'");
  if (s[0] == '+') s = s.substr(1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error("bad-rational", "malformed rational literal '" + s + "'");
  if (q.get_den() == 0) throw Error("bad-rational", "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace rhmap
