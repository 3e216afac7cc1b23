#include "spectra/rational.hpp"

#include <cctype>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

Int parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad rational literal '" + std::string(whole) + "'");
    }
  }
  return Int(std::string(digits), 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  Int num = parse_integer(body.substr(0, slash), text);
  Int den = 1;
  if (slash != std::string_view::npos) {
    den = parse_integer(body.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  Rat out(num, den);
  out.canonicalize();
  return out;
}

std::string to_string(const Rat& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace spectra
