#pragma once

// Necessary conditions for symplectic Lie algebroid structures as
// three-valued checks, and their aggregation into a report.

#include <string>
#include <vector>

#include "symplobs/algebroids.hpp"
#include "symplobs/rings.hpp"

namespace symplobs {

enum class Status { NotObstructed, Obstructed, Inconclusive };

struct Verdict {
    Status status = Status::Inconclusive;
    std::string test;
    // Witness for Obstructed (the violated relation with values substituted),
    // reason for Inconclusive, optional evidence for NotObstructed.
    std::string detail;

    static Verdict obstructed(std::string test, std::string witness)
    {
        return {Status::Obstructed, std::move(test), std::move(witness)};
    }
    static Verdict passed(std::string test, std::string evidence = {})
    {
        return {Status::NotObstructed, std::move(test), std::move(evidence)};
    }
    static Verdict inconclusive(std::string test, std::string reason)
    {
        return {Status::Inconclusive, std::move(test), std::move(reason)};
    }
    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ObstructionReport {
    std::string subject;
    std::string kind;
    std::vector<Verdict> verdicts;
    Status overall = Status::NotObstructed;
    // Annotations that are not verdicts (skipped tests, label sensitivity, Wu witnesses).
    std::vector<std::string> notes;
};

enum class SurfaceVerdict { Admits, DoesNotAdmit };

struct ConsistencyResult {
    bool ok = true;
    std::string violation;
};

constexpr std::int64_t kDefaultWuBound = 8;

Verdict check_orientability(const LogPairData& p, const AlgebroidKind& kind);
SurfaceVerdict check_surface(const LogPairData& p, const AlgebroidKind& kind);
Verdict check_zero_tangent(const LogPairData& p);
Verdict check_indefinite_form(const LogPairData& p);
Verdict check_parity_bk(const LogPairData& p, std::int64_t k);
Verdict check_parity_scattering(const LogPairData& p);
Verdict check_wu(const LogPairData& p, const AlgebroidKind& kind,
                 std::int64_t bound = kDefaultWuBound);
Verdict check_sw_filling(const SplitData& s);
ConsistencyResult check_separating_consistency(const LogPairData& p, const AlgebroidKind& kind);
Verdict check_cup_certificate(const GradedRing& r, const RingClass& a, const RingClass& b,
                              std::size_t n);

Status aggregate(const std::vector<Verdict>& verdicts);

// Runs consistency, orientability, zero-tangent, indefinite form, parity, Wu and
// SW filling, in that order, keeping those that apply to the pair and kind.
ObstructionReport full_report(const LogPairData& p, const AlgebroidKind& kind,
                              std::int64_t bound = kDefaultWuBound);

// Report for a bare splitting description (log-symplectic kind).
ObstructionReport split_report(const SplitData& s, const std::string& subject);

std::string to_string(Status s);
int exit_code(Status s);

} // namespace symplobs
