#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "symplobs/error.hpp"

namespace symplobs {

// Coefficient vector over Z/2 in a declared basis; every entry is 0 or 1.
using BitVec = std::vector<std::uint8_t>;

inline BitVec zero_bits(std::size_t n) { return BitVec(n, 0); }

inline bool is_zero(const BitVec& v)
{
    return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

inline BitVec add_bits(const BitVec& a, const BitVec& b)
{
    if (a.size() != b.size())
        throw InputError("bit vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    BitVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = static_cast<std::uint8_t>((a[i] ^ b[i]) & 1u);
    return out;
}

// m·v over Z/2, for an arbitrary integer multiplier m.
inline BitVec scale_bits(long long m, const BitVec& v)
{
    if (m % 2 == 0)
        return zero_bits(v.size());
    return v;
}

inline BitVec concat_bits(const BitVec& a, const BitVec& b)
{
    BitVec out(a);
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

inline std::string bits_to_string(const BitVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i] ? '1' : '0';
    }
    return s + ")";
}

} // namespace symplobs
