#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unisample {

using BigInt = boost::multiprecision::cpp_int;

BigInt big_binomial(std::int64_t n, std::int64_t k);
BigInt big_pow(const BigInt& base, std::uint64_t exponent);

/// Natural logarithm of a positive integer of any size.
double natural_log(const BigInt& value);

std::string to_decimal(const BigInt& value);

std::int64_t euler_phi(std::int64_t n);

}  // namespace unisample
