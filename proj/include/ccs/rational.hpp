#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "ccs/errors.hpp"

namespace ccs {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

BigInt binomial(const BigInt& n, const BigInt& k);

// C(sum; parts[0], parts[1], ...) with sum = parts total.
BigInt multinomial(const std::vector<BigInt>& parts);

// base^exp for exp >= 0, with an optional bit budget on the result
// (0 = unlimited). Throws resource_error when the budget would be exceeded.
BigInt checked_pow(const BigInt& base, std::uint64_t exp, std::uint64_t max_bits = 0);

// Smallest integer >= q.
BigInt ceil_rat(const Rat& q);

// "p/q" (or just "p" for integers), the canonical exact encoding used in
// reports and golden files.
std::string rat_to_string(const Rat& q);

// Accepts "p", "p/q", and plain decimals like "0.25".
Rat rat_from_string(const std::string& s);

double rat_to_double(const Rat& q);

}  // namespace ccs
