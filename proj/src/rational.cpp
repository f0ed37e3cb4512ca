#include "sympoly/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace sympoly {

std::string rat_to_string(const Rat& r) {
  Int n = rat_num(r), d = rat_den(r);
  if (d == 1) return n.str();
  return n.str() + "/" + d.str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("bad rational literal: " + s);
  try {
    return Rat(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

Int common_denominator(const QVector& a) {
  Int l = 1;
  for (const Rat& r : a) l = boost::multiprecision::lcm(l, rat_den(r));
  return l;
}

Rat coord_sum(const QVector& a) {
  Rat s = 0;
  for (const Rat& r : a) s += r;
  return s;
}

bool lex_less(const QVector& a, const QVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace sympoly
