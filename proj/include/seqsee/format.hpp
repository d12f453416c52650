#pragma once

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace seqsee {

/// Shortest decimal that round-trips to `v`, never in exponent notation.
/// Negative zero prints as "0".
inline std::string format_number(double v) {
  if (!std::isfinite(v)) throw std::domain_error("cannot format a non-finite number");
  if (v == 0) return "0";
  // Fixed notation of a finite double needs at most ~330 characters.
  char buf[400];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, end);
}

/// Escapes text for use in XML/HTML character data and double-quoted attributes.
inline std::string xml_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c; break;
    }
  }
  return out;
}

}  // namespace seqsee
