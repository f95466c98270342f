#pragma once

// Characteristic classes of the modified tangent bundles of a pair (X, Z)
// and the Euler-number discrepancies.

#include <optional>
#include <string>
#include <variant>

#include "symplobs/topology.hpp"

namespace symplobs {

struct KindBk {
    std::int64_t k = 1;
    friend bool operator==(const KindBk&, const KindBk&) = default;
};
struct KindZero {
    friend bool operator==(const KindZero&, const KindZero&) = default;
};
struct KindScattering {
    friend bool operator==(const KindScattering&, const KindScattering&) = default;
};
struct KindElliptic {
    friend bool operator==(const KindElliptic&, const KindElliptic&) = default;
};
struct KindEllipticLog {
    friend bool operator==(const KindEllipticLog&, const KindEllipticLog&) = default;
};

// KindBk{1} is the log-tangent bundle.
using AlgebroidKind = std::variant<KindBk, KindZero, KindScattering, KindElliptic, KindEllipticLog>;

// Parses "bk", "bk:K", "log", "zero", "scattering", "elliptic", "elliptic-log".
// Plain "bk" takes its order from `default_k`.
AlgebroidKind parse_kind(const std::string& text, std::int64_t default_k = 1);
std::string kind_to_string(const AlgebroidKind& kind);

// Truncated total Stiefel-Whitney class 1 + w1 + w2.
struct TotalClass {
    BitVec w1;
    std::optional<BitVec> w2;
    friend bool operator==(const TotalClass&, const TotalClass&) = default;
};

struct SWClasses {
    BitVec w1;
    // Absent for surfaces and for the elliptic kinds.
    std::optional<BitVec> w2;

    TotalClass total() const { return {w1, w2}; }
};

SWClasses sw_classes(const LogPairData& p, const AlgebroidKind& kind);

// Total class of a corank-k rescaling along Z:
// w1 + k·wL and w2 + k·(wL ∪ w1) + C(k,2)·(wL ∪ wL).
TotalClass sw_rescaling(const TotalClass& w, const BitVec& wl, std::int64_t k,
                        const CupTable& cup11);

// ⟨p1(A), [X]⟩ = 3σ(X) for the bᵏ and scattering kinds; UnsupportedKind otherwise.
std::int64_t pontryagin_number(const Manifold4& m, const AlgebroidKind& kind);

// f(X,Z) = -χ(X₋); Z = ∅ gives 0. Throws PreconditionError without a decomposition.
std::int64_t discrepancy_f1(const LogPairData& p);

// f_k = f₁ for odd k and 0 for even k.
std::int64_t discrepancy_fk(const LogPairData& p, std::int64_t k);

// Scattering discrepancy, using the same X₋ convention as f₁.
std::int64_t discrepancy_sc(const LogPairData& p);

// ⟨e(A), [X]⟩ = χ(X) + 2·f for KindBk and KindScattering.
std::int64_t euler_number_algebroid(const LogPairData& p, const AlgebroidKind& kind);

} // namespace symplobs
