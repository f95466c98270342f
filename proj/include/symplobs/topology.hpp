#pragma once

// Invariant packages for closed 4-manifolds and surfaces, pair data and the
// catalog.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symplobs/bits.hpp"
#include "symplobs/forms.hpp"

namespace symplobs {

// H¹⊗H¹ → H² over Z/2: cup11[i][j] is the product of the i-th and j-th degree-1 basis classes.
using CupTable = std::vector<std::vector<BitVec>>;

struct Manifold4 {
    std::string name;
    bool orientable = true;
    std::int64_t b1 = 0;
    BilinearForm q;
    std::size_t h1_dim = 0;
    BitVec w1_tx;
    BitVec w2_tx;
    CupTable cup11;

    std::int64_t euler_characteristic() const
    {
        return 2 - 2 * b1 + static_cast<std::int64_t>(q.rank());
    }
    friend bool operator==(const Manifold4&, const Manifold4&) = default;
};

struct Surface2 {
    std::string name;
    bool orientable = true;
    std::size_t h1_dim = 0;
    BitVec w1_tx;

    friend bool operator==(const Surface2&, const Surface2&) = default;
};

using Manifold = std::variant<Manifold4, Surface2>;

// Positive scalar curvature flag; nullopt means undeclared.
using PscFlag = std::optional<bool>;

struct ZComponent {
    std::string name;
    PscFlag psc;
    friend bool operator==(const ZComponent&, const ZComponent&) = default;
};

struct Decomposition {
    std::int64_t chi_plus = 0;
    std::int64_t chi_minus = 0;
    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

struct SplitData {
    std::int64_t b2plus_x1 = 0;
    bool x2_empty = false;
    std::optional<std::int64_t> b2plus_x2;
    std::vector<PscFlag> z_components_psc;
    bool oriented = true;
    friend bool operator==(const SplitData&, const SplitData&) = default;
};

struct LogPairData {
    Manifold manifold;
    // Catalog expression the manifold was built from ("3CP2#CP2bar"); empty when inline.
    std::string manifold_ref;
    BitVec pd_z;
    std::int64_t k = 1;
    std::vector<ZComponent> z_components;
    std::optional<Decomposition> decomposition;
    std::optional<bool> d_coorientable;
    std::optional<bool> elliptic_residue_zero;
    std::optional<SplitData> split;

    bool z_empty() const { return z_components.empty(); }
    friend bool operator==(const LogPairData&, const LogPairData&) = default;
};

struct DerivedInvariants {
    std::int64_t chi = 0;
    std::int64_t sigma = 0;
    std::int64_t b2plus = 0;
    std::int64_t b2minus = 0;
};

DerivedInvariants derive_invariants(const Manifold4& m);

// Degree-1 cup product x ∪ y in the manifold's bases.
BitVec cup11_product(const CupTable& cup11, const BitVec& x, const BitVec& y,
                     std::size_t h2_dim);

Manifold4 connected_sum(const Manifold4& a, const Manifold4& b);

enum class Side { Plus, Minus };

// Sums M_add into X₊ or X₋; Z stays in the original summand.
LogPairData connected_sum_in_piece(const LogPairData& p, const Manifold4& m_add, Side side);

// Exact base names: S4 CP2 CP2bar S2xS2 S1xS3 T4 K3, and surfaces S2 T2 Sigma<g> Klein RP2.
Manifold catalog_lookup(const std::string& name);
std::vector<std::string> catalog_names();

// Connected-sum expressions over catalog 4-manifolds, e.g. "3CP2#CP2bar".
Manifold4 manifold_from_expression(const std::string& expr);

std::vector<std::string> validate(const Manifold4& m);
std::vector<std::string> validate(const Surface2& s);
std::vector<std::string> validate(const LogPairData& p);
std::vector<std::string> validate(const SplitData& s);

// Declared psc flag with S1xS2 components recognized as psc.
PscFlag effective_psc(const ZComponent& c);

std::size_t h1_dim_of(const Manifold& m);
const std::string& name_of(const Manifold& m);

} // namespace symplobs
