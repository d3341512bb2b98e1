#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace weylbraid {

using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

// Representative of x in [0, 1).
Rat mod_one(const Rat& x);

// Parse "p/q" or "p" (optional sign, q > 0 after normalisation).
Rat parse_rational(const std::string& text);

// Comma-separated list of rationals, e.g. "1/2,0,-3".
RatVec parse_rational_vector(const std::string& text);

// Render as "p" or "p/q" with q > 1.
std::string rational_to_string(const Rat& x);

}  // namespace weylbraid
