#include "symplobs/obstructions.hpp"

#include <sstream>

#include "symplobs/error.hpp"

namespace symplobs {

namespace {

std::int64_t mod2(std::int64_t x) { return ((x % 2) + 2) % 2; }

std::string factor(std::int64_t x)
{
    return x < 0 ? "(" + std::to_string(x) + ")" : std::to_string(x);
}

const Manifold4* oriented4(const LogPairData& p)
{
    const auto* m = std::get_if<Manifold4>(&p.manifold);
    return (m && m->orientable) ? m : nullptr;
}

// The degree-1 relation of the orientability theorem, spelled for the kind.
std::string w1_relation(const AlgebroidKind& kind, std::int64_t dim)
{
    if (const auto* b = std::get_if<KindBk>(&kind))
        return "w1(TX) + " + std::to_string(b->k) + " PD[Z]";
    if (std::holds_alternative<KindZero>(kind))
        return "w1(TX) + " + std::to_string(dim) + " PD[Z]";
    if (std::holds_alternative<KindScattering>(kind))
        return "w1(TX) + " + std::to_string(dim + 1) + " PD[Z]";
    if (std::holds_alternative<KindElliptic>(kind))
        return "w1(TX)";
    return "w1(TX) + PD[Z]";
}

std::int64_t dimension(const LogPairData& p)
{
    return std::holds_alternative<Manifold4>(p.manifold) ? 4 : 2;
}

const BitVec& w1_tx(const LogPairData& p)
{
    return std::visit([](const auto& m) -> const BitVec& { return m.w1_tx; }, p.manifold);
}

std::string subject_of(const LogPairData& p)
{
    std::string s = p.manifold_ref.empty() ? name_of(p.manifold) : p.manifold_ref;
    s += ", Z = ";
    if (p.z_components.empty())
        return s + "empty";
    for (std::size_t i = 0; i < p.z_components.size(); ++i) {
        if (i)
            s += " u ";
        s += p.z_components[i].name;
    }
    return s;
}

// f(X,Z) as used by the parity statements, or nullopt when it cannot be determined.
std::optional<std::int64_t> declared_f1(const LogPairData& p)
{
    if (p.z_empty())
        return 0;
    if (!p.decomposition)
        return std::nullopt;
    return discrepancy_f1(p);
}

Verdict parity_verdict(const std::string& test, const LogPairData& p, std::int64_t coeff,
                       const std::string& coeff_label)
{
    const Manifold4* m = oriented4(p);
    if (!m)
        return Verdict::inconclusive(test, "requires a closed oriented 4-manifold");
    const DerivedInvariants inv = derive_invariants(*m);

    std::int64_t kf = 0;
    std::string f_text;
    if (coeff % 2 == 0 || p.z_empty()) {
        f_text = p.z_empty() ? "Z empty, f(X,Z)=0" : coeff_label + " even";
    } else {
        const auto f = declared_f1(p);
        if (!f)
            return Verdict::inconclusive(
                test, "parity of f(X,Z) unknown: Z is nonempty and no decomposition X+ u X- is declared");
        kf = coeff * *f;
        f_text = "f(X,Z)=" + std::to_string(*f);
    }
    const std::int64_t total = inv.b2plus + m->b1 + kf;
    std::ostringstream os;
    os << "b2+(X) + b1(X) + " << coeff_label << " f(X,Z) ≡ " << inv.b2plus << " + " << m->b1
       << " + " << mod2(kf) << " ≡ " << mod2(total) << " (mod 2) [" << f_text << "]";
    if (mod2(total) == 0)
        return Verdict::obstructed(test, os.str() + ", but it must be odd");
    return Verdict::passed(test, os.str());
}

} // namespace

Verdict check_orientability(const LogPairData& p, const AlgebroidKind& kind)
{
    const std::string test = "orientability";
    const SWClasses w = sw_classes(p, kind);
    std::ostringstream os;
    os << w1_relation(kind, dimension(p)) << " = " << bits_to_string(w.w1);
    if (!is_zero(w.w1)) {
        os << " ≠ 0 in H^1(X;Z2) [w1(TX)=" << bits_to_string(w1_tx(p))
           << ", PD[Z]=" << bits_to_string(p.pd_z) << "]";
        return Verdict::obstructed(test, os.str());
    }
    os << " = 0";
    return Verdict::passed(test, os.str());
}

SurfaceVerdict check_surface(const LogPairData& p, const AlgebroidKind& kind)
{
    if (!std::holds_alternative<Surface2>(p.manifold))
        throw PreconditionError("check_surface needs a surface pair");
    return is_zero(sw_classes(p, kind).w1) ? SurfaceVerdict::Admits : SurfaceVerdict::DoesNotAdmit;
}

Verdict check_zero_tangent(const LogPairData& p)
{
    const std::string test = "zero-tangent";
    const std::int64_t dim = dimension(p);
    if (dim >= 4)
        return Verdict::obstructed(test, "the zero-tangent algebroid B_Z carries no symplectic "
                                         "structure when dim X = " + std::to_string(dim) + " ≥ 4");
    return Verdict::passed(test, "dim X = 2 < 4");
}

Verdict check_indefinite_form(const LogPairData& p)
{
    const std::string test = "indefinite-form";
    const Manifold4* m = oriented4(p);
    if (!m)
        return Verdict::inconclusive(test, "requires a closed oriented 4-manifold");
    if (p.z_empty())
        return Verdict::inconclusive(test, "Z empty: not applicable");
    const SignatureTriple s = signature(m->q);
    const Definiteness d = definiteness(m->q);
    std::ostringstream os;
    os << "Q has signature (b+,b-,b0) = (" << s.b_plus << "," << s.b_minus << "," << s.b_zero
       << ")";
    if (d == Definiteness::Definite && m->q.rank() > 0)
        return Verdict::obstructed(test, "Z ≠ ∅ but " + os.str() + " and is definite");
    os << (m->q.rank() == 0 ? ", rank 0" : ", " + to_string(d));
    return Verdict::passed(test, os.str());
}

Verdict check_parity_bk(const LogPairData& p, std::int64_t k)
{
    if (k < 1)
        throw InputError("jet order must be positive");
    return parity_verdict("parity", p, k, std::to_string(k));
}

Verdict check_parity_scattering(const LogPairData& p)
{
    return parity_verdict("parity", p, 1, "1");
}

Verdict check_wu(const LogPairData& p, const AlgebroidKind& kind, std::int64_t bound)
{
    const std::string test = "wu";
    const Manifold4* m = oriented4(p);
    if (!m)
        return Verdict::inconclusive(test, "requires a closed oriented 4-manifold");
    const auto* bk = std::get_if<KindBk>(&kind);
    if (!bk && !std::holds_alternative<KindScattering>(kind))
        return Verdict::inconclusive(test, "not applicable to kind " + kind_to_string(kind));

    const SWClasses w = sw_classes(p, kind);
    if (!is_zero(w.w1))
        return Verdict::inconclusive(test, "A is not orientable; Wu's criterion needs an oriented bundle");

    std::int64_t f = 0;
    const bool needs_decomposition = !p.z_empty() && (!bk || bk->k % 2 == 1);
    if (needs_decomposition && !p.decomposition)
        return Verdict::inconclusive(test, "discrepancy unknown: Z is nonempty and no decomposition is declared");
    if (!p.z_empty())
        f = bk ? discrepancy_fk(p, bk->k) : discrepancy_sc(p);

    const DerivedInvariants inv = derive_invariants(*m);
    const std::int64_t target = 3 * inv.sigma + 2 * inv.chi + 4 * f;
    std::ostringstream eq;
    eq << "c^2 = 3σ + 2χ + 4f = 3·" << factor(inv.sigma) << " + 2·" << factor(inv.chi) << " + 4·" << factor(f) << " = "
       << target << ", c ≡ w2(A) = " << bits_to_string(*w.w2) << " (mod 2)";

    CharVecResult r;
    try {
        r = find_characteristic_with_square(m->q, target, bound, *w.w2);
    } catch (const PreconditionError& e) {
        return Verdict::inconclusive(test, e.what());
    }
    if (const auto* found = std::get_if<CharFound>(&r))
        return Verdict::passed(test, eq.str() + "; c = " + vec_to_string(found->vector));
    if (const auto* imp = std::get_if<CharImpossible>(&r))
        return Verdict::obstructed(test, "no class with " + eq.str() + ": " + imp->reason);
    const auto& ex = std::get<CharExhausted>(r);
    return Verdict::inconclusive(test, eq.str() + ": " + ex.reason);
}

Verdict check_sw_filling(const SplitData& s)
{
    const std::string test = "sw-filling";
    if (!s.oriented)
        return Verdict::inconclusive(test, "requires an oriented log pair");
    bool any_false = false, any_unknown = false;
    for (const auto& f : s.z_components_psc) {
        if (!f)
            any_unknown = true;
        else if (!*f)
            any_false = true;
    }
    std::ostringstream os;
    os << "b2+(X1) = " << s.b2plus_x1 << ", " << s.z_components_psc.size() << " component(s) of Z";
    if (s.b2plus_x1 <= 0)
        return Verdict::passed(test, os.str() + ": hypothesis b2+(X1) > 0 fails");
    if (any_false)
        return Verdict::passed(test, os.str() + ": some component of Z is declared non-psc");
    if (any_unknown)
        return Verdict::inconclusive(test, os.str() + ": psc status of some component is unknown");
    return Verdict::obstructed(test, os.str() + ", every component psc: the splitting cannot be log-symplectic");
}

ConsistencyResult check_separating_consistency(const LogPairData& p, const AlgebroidKind& kind)
{
    const bool x_orientable =
        std::visit([](const auto& m) { return m.orientable; }, p.manifold);
    if (!x_orientable)
        return {};
    const std::int64_t dim = dimension(p);
    bool needs_null = false;
    std::string rule;
    if (const auto* b = std::get_if<KindBk>(&kind)) {
        needs_null = b->k % 2 == 1;
        rule = "k = " + std::to_string(b->k) + " is odd";
    } else if (std::holds_alternative<KindScattering>(kind)) {
        needs_null = dim % 2 == 0;
        rule = "n = " + std::to_string(dim) + " is even";
    }
    if (needs_null && !is_zero(p.pd_z))
        return {false, rule + " and PD[Z] = " + bits_to_string(p.pd_z) +
                           " ≠ 0: X and A cannot both be orientable unless [Z] = 0"};
    return {};
}

Verdict check_cup_certificate(const GradedRing& r, const RingClass& a, const RingClass& b,
                              std::size_t n)
{
    const std::string test = "cup-certificate";
    if (verify_symplectic_cup_certificate(r, a, b, n)) {
        const RingClass an1 = power(r, a, n - 1);
        const RingClass prod = cup(r, an1, b);
        std::string coeffs;
        for (std::size_t i = 0; i < prod.coeffs.size(); ++i)
            coeffs += (i ? "," : "") + coeff_to_string(prod.coeffs[i]);
        return Verdict::passed(test, "a^(n-1) ≠ 0, b^2 = 0, a^(n-1)·b = (" + coeffs + ") ≠ 0");
    }
    return Verdict::inconclusive(test, "certificate failed; existence of other classes is not excluded");
}

Status aggregate(const std::vector<Verdict>& verdicts)
{
    bool inconclusive = false;
    for (const auto& v : verdicts) {
        if (v.status == Status::Obstructed)
            return Status::Obstructed;
        inconclusive = inconclusive || v.status == Status::Inconclusive;
    }
    return inconclusive ? Status::Inconclusive : Status::NotObstructed;
}

ObstructionReport full_report(const LogPairData& p, const AlgebroidKind& kind, std::int64_t bound)
{
    ObstructionReport report;
    report.subject = subject_of(p);
    report.kind = kind_to_string(kind);
    auto& out = report.verdicts;

    const ConsistencyResult cons = check_separating_consistency(p, kind);
    out.push_back(cons.ok ? Verdict::passed("consistency")
                          : Verdict::obstructed("consistency", cons.violation));

    const bool surface = std::holds_alternative<Surface2>(p.manifold);
    if (surface) {
        const bool admits = check_surface(p, kind) == SurfaceVerdict::Admits;
        Verdict v = check_orientability(p, kind);
        v.test = "surface";
        out.push_back(v);
        report.notes.push_back(std::string("dimension 2: orientability is the complete obstruction, so the "
                                           "surface ") +
                               (admits ? "admits" : "does not admit") + " an A-symplectic structure");
    } else {
        out.push_back(check_orientability(p, kind));
    }

    if (std::holds_alternative<KindZero>(kind))
        out.push_back(check_zero_tangent(p));

    const auto* bk = std::get_if<KindBk>(&kind);
    const bool scattering = std::holds_alternative<KindScattering>(kind);
    const bool oriented = oriented4(p) != nullptr;
    auto skip = [&](const std::string& test, const std::string& why) {
        report.notes.push_back("skipped " + test + ": " + why);
    };

    if (bk && bk->k == 1) {
        if (!oriented)
            skip("indefinite-form", surface ? "dimension 2" : "X is not oriented");
        else if (p.z_empty())
            skip("indefinite-form", "Z is empty");
        else
            out.push_back(check_indefinite_form(p));
    }

    if (bk || scattering) {
        if (!oriented) {
            const std::string why = surface ? "dimension 2" : "X is not oriented";
            skip("parity", why);
            skip("wu", why);
        } else {
            out.push_back(bk ? check_parity_bk(p, bk->k) : check_parity_scattering(p));
            const Verdict wu = check_wu(p, kind, bound);
            if (wu.status == Status::NotObstructed)
                report.notes.push_back("wu: a characteristic class with the required square exists, so "
                                       "A admits an almost-complex structure as a bundle (no symplectic "
                                       "conclusion)");
            out.push_back(wu);

            const std::int64_t coeff = bk ? bk->k : 1;
            if (!p.z_empty() && p.decomposition && coeff % 2 == 1) {
                const std::int64_t chi = oriented4(p)->euler_characteristic();
                if (chi % 2 != 0)
                    report.notes.push_back("chi(X) = " + std::to_string(chi) +
                                           " is odd: swapping the X+/X- labels flips the parity of "
                                           "f(X,Z) (f = " + std::to_string(-p.decomposition->chi_minus) +
                                           " as declared, " + std::to_string(-p.decomposition->chi_plus) +
                                           " if swapped)");
            }
            if (scattering && !p.z_empty())
                report.notes.push_back("f_sc uses the declared X- convention; only its parity is "
                                       "convention-independent");
        }
    }

    if (p.split) {
        if (bk && bk->k == 1)
            out.push_back(check_sw_filling(*p.split));
        else
            skip("sw-filling", "applies to log-symplectic structures (bk:1)");
    }

    report.overall = aggregate(out);
    return report;
}

ObstructionReport split_report(const SplitData& s, const std::string& subject)
{
    ObstructionReport report;
    report.subject = subject;
    report.kind = kind_to_string(KindBk{1});
    report.verdicts.push_back(check_sw_filling(s));
    report.overall = aggregate(report.verdicts);
    return report;
}

std::string to_string(Status s)
{
    switch (s) {
    case Status::NotObstructed:
        return "not-obstructed";
    case Status::Obstructed:
        return "obstructed";
    case Status::Inconclusive:
        return "inconclusive";
    }
    return "?";
}

int exit_code(Status s)
{
    switch (s) {
    case Status::NotObstructed:
        return 0;
    case Status::Obstructed:
        return 1;
    case Status::Inconclusive:
        return 2;
    }
    return 2;
}

} // namespace symplobs
