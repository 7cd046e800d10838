#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace hypercover {

// All correctness-bearing arithmetic runs on these types. Floating point is
// reserved for asymptotic bound reports.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Default cap on enumeration sizes (subsets, supports). Overridable per call
// and, in the CLI, via --budget or HYPERCOVER_BUDGET.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

Int binomial(std::size_t n, std::size_t k);

Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

// Divides out the common factor and flips signs so the first nonzero entry is
// positive. Returns false when v is all zero (v is left untouched).
bool canonicalize_primitive(std::vector<Int>& v);

} // namespace hypercover
