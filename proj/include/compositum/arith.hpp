#pragma once

#include <cstdint>
#include <vector>

namespace compositum {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// All positive divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace compositum
