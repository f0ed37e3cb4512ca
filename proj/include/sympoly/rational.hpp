#ifndef SYMPOLY_RATIONAL_HPP
#define SYMPOLY_RATIONAL_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sympoly {

// All arithmetic in the library is exact: unbounded integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Coordinate vector with exact rational entries.  Size carries the ambient
// dimension; entries are kept canonical by the underlying type.
using QVector = std::vector<Rat>;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

/// Renders "p/q" in lowest terms, or just "p" for integers.
std::string rat_to_string(const Rat& r);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
Rat rat_from_string(const std::string& s);

/// Least common denominator of the coordinates (1 for the empty vector).
Int common_denominator(const QVector& a);

Rat coord_sum(const QVector& a);

/// Strict lexicographic order by exact rational comparison.
bool lex_less(const QVector& a, const QVector& b);

}  // namespace sympoly

#endif
