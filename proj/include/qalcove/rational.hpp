#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

// Exact-match equality against int. Under C++20 rewritten comparisons the
// mixed-type templates in boost/rational.hpp recurse forever for int vs
// rational<int64_t>; these non-templates win overload resolution instead.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int a, const rational<std::int64_t>& b) { return rational<std::int64_t>(a) == b; }
inline bool operator!=(const rational<std::int64_t>& a, int b) { return !(a == b); }
inline bool operator!=(int a, const rational<std::int64_t>& b) { return !(a == b); }
}  // namespace boost

namespace qalcove {

using Rational = boost::rational<std::int64_t>;

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

/// Accepts "p/q" or an integer literal. Throws InvalidInput.
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

/// Weight with exact rational coordinates in the fundamental-weight basis.
struct RationalWeight {
  std::vector<Rational> coords;

  RationalWeight() = default;
  explicit RationalWeight(std::size_t rank) : coords(rank, Rational(0)) {}
  explicit RationalWeight(std::vector<Rational> c) : coords(std::move(c)) {}

  std::size_t size() const { return coords.size(); }
  bool operator==(const RationalWeight&) const = default;

  RationalWeight& operator+=(const RationalWeight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  RationalWeight& operator-=(const RationalWeight& o) {
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend RationalWeight operator+(RationalWeight a, const RationalWeight& b) { return a += b; }
  friend RationalWeight operator-(RationalWeight a, const RationalWeight& b) { return a -= b; }
  friend RationalWeight operator*(const Rational& s, RationalWeight a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
};

}  // namespace qalcove
