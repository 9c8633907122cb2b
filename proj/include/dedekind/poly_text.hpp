#pragma once

// Text format shared by every univariate polynomial in the library:
// "t^3 - t^2 - 2*t - 8". Whitespace is ignored on input, "*" between a
// coefficient and the variable is optional, and the printer emits the
// canonical spelling so that print(parse(s)) == s for canonical s.

#include <cctype>
#include <string>
#include <string_view>

#include "dedekind/error.hpp"
#include "dedekind/integer.hpp"

namespace dedekind {

inline void trim_trailing_zeros(IntVector& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

// Returns the single variable letter used in `text`, or `fallback` when the
// text is a constant. More than one distinct letter is a parse error.
inline char detect_variable(std::string_view text, char fallback = 't') {
  char found = 0;
  for (char ch : text) {
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      if (found != 0 && ch != found)
        throw ParseError("polynomial uses more than one variable: '" + std::string(1, found) +
                         "' and '" + std::string(1, ch) + "'");
      found = ch;
    }
  }
  return found != 0 ? found : fallback;
}

inline IntVector parse_coefficients(std::string_view text, char var) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty polynomial");

  IntVector coeffs;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw ParseError("cannot parse '" + std::string(text) + "': " + why);
  };
  auto read_digits = [&]() {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(start, i - start);
  };

  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail("expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;

    Integer coeff = 1;
    bool have_coeff = false;
    std::string digits = read_digits();
    if (!digits.empty()) {
      coeff = Integer(digits);
      have_coeff = true;
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != var) fail("'*' must be followed by the variable");
      }
    }
    std::size_t exponent = 0;
    if (i < s.size() && s[i] == var) {
      ++i;
      exponent = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e = read_digits();
        if (e.empty()) fail("missing exponent after '^'");
        if (e.size() > 6) fail("exponent too large");
        exponent = std::stoul(e);
      }
    } else if (!have_coeff) {
      fail("expected a coefficient or '" + std::string(1, var) + "' at position " + std::to_string(i));
    }
    if (i < s.size() && s[i] != '+' && s[i] != '-')
      fail("unexpected character '" + std::string(1, s[i]) + "'");

    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1);
    coeffs[exponent] += sign * coeff;
  }
  trim_trailing_zeros(coeffs);
  return coeffs;
}

inline std::string format_coefficients(const IntVector& coeffs, char var) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const Integer& c = coeffs[k];
    if (c == 0) continue;
    Integer mag = iabs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace dedekind
