#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace fibdim {

/// Fixed-length binary string. Bit i is coordinate i; when printed,
/// coordinate 0 is the leftmost character.
using BitString = boost::dynamic_bitset<std::uint64_t>;

/// Renders coordinate 0 first.
std::string to_string(const BitString& bits);

/// Inverse of to_string. Throws ValidationError on characters other than 0/1.
BitString bits_from_string(std::string_view text);

inline std::size_t hamming(const BitString& a, const BitString& b) {
  return (a ^ b).count();
}

/// True iff no two consecutive coordinates are both 1.
bool is_fibonacci_string(const BitString& bits);

}  // namespace fibdim
