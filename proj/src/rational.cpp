#include "weylbraid/rational.hpp"

#include <cstdlib>
#include <sstream>

#include "weylbraid/errors.hpp"

namespace weylbraid {

Rat mod_one(const Rat& x) {
  // boost::rational keeps the denominator positive, so floor division of
  // the numerator gives the integer part rounded towards -inf.
  long long num = x.numerator();
  long long den = x.denominator();
  long long q = num / den;
  if (num % den != 0 && num < 0) --q;
  return x - Rat(q);
}

Rat parse_rational(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos)
    throw InvalidArgumentError("empty rational literal");
  s = s.substr(first, last - first + 1);

  const auto slash = s.find('/');
  const std::string num_part = slash == std::string::npos ? s : s.substr(0, slash);
  const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);

  auto parse_ll = [&](const std::string& part, bool allow_sign) -> long long {
    if (part.empty())
      throw InvalidArgumentError("malformed rational literal: " + text);
    std::size_t i = 0;
    if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
    if (i == part.size())
      throw InvalidArgumentError("malformed rational literal: " + text);
    for (; i < part.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(part[i])))
        throw InvalidArgumentError("malformed rational literal: " + text);
    return std::strtoll(part.c_str(), nullptr, 10);
  };

  const long long num = parse_ll(num_part, true);
  const long long den = parse_ll(den_part, false);
  if (den == 0) throw InvalidArgumentError("zero denominator: " + text);
  return Rat(num, den);
}

RatVec parse_rational_vector(const std::string& text) {
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw InvalidArgumentError("empty rational vector");
  return out;
}

std::string rational_to_string(const Rat& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace weylbraid
