#pragma once

// Random valid inputs for property tests.

#include <random>

#include "symplobs/topology.hpp"

namespace gen {

inline symplobs::BitVec bits(std::size_t n, std::mt19937_64& rng)
{
    symplobs::BitVec v(n);
    for (auto& b : v)
        b = static_cast<std::uint8_t>(rng() & 1);
    return v;
}

// Symmetric with zero diagonal, as degree-1 squares vanish without 2-torsion.
inline symplobs::CupTable alternating_cup(std::size_t h1, std::size_t h2, std::mt19937_64& rng)
{
    symplobs::CupTable t(h1, std::vector<symplobs::BitVec>(h1, symplobs::BitVec(h2, 0)));
    for (std::size_t i = 0; i < h1; ++i)
        for (std::size_t j = i + 1; j < h1; ++j)
            t[i][j] = t[j][i] = bits(h2, rng);
    return t;
}

// Random symmetric table, diagonal included.
inline symplobs::CupTable symmetric_cup(std::size_t h1, std::size_t h2, std::mt19937_64& rng)
{
    symplobs::CupTable t(h1, std::vector<symplobs::BitVec>(h1));
    for (std::size_t i = 0; i < h1; ++i)
        for (std::size_t j = i; j < h1; ++j)
            t[i][j] = t[j][i] = bits(h2, rng);
    return t;
}

// Arbitrary class data on a possibly non-orientable 4-manifold; only the
// pieces sw_classes reads are meaningful.
inline symplobs::LogPairData random_sw_instance(std::mt19937_64& rng)
{
    const std::size_t h1 = rng() % 5, rank = rng() % 5;
    symplobs::Manifold4 m;
    m.name = "random";
    m.b1 = static_cast<std::int64_t>(h1);
    m.h1_dim = h1;
    m.q = symplobs::BilinearForm::diagonal(std::vector<std::int64_t>(rank, 1));
    m.w1_tx = bits(h1, rng);
    m.orientable = symplobs::is_zero(m.w1_tx);
    m.w2_tx = bits(rank, rng);
    m.cup11 = alternating_cup(h1, rank, rng);
    symplobs::LogPairData p;
    p.manifold = m;
    p.pd_z = bits(h1, rng);
    p.k = 1 + static_cast<std::int64_t>(rng() % 6);
    return p;
}

} // namespace gen
