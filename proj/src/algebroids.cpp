#include "symplobs/algebroids.hpp"

#include <cctype>

#include "symplobs/error.hpp"

namespace symplobs {

AlgebroidKind parse_kind(const std::string& text, std::int64_t default_k)
{
    if (text == "bk" || text == "log")
        return KindBk{text == "log" ? 1 : default_k};
    if (text.rfind("bk:", 0) == 0) {
        const std::string num = text.substr(3);
        if (num.empty() || num.size() > 9 ||
            !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(c); }))
            throw InputError("bad jet order in kind '" + text + "'");
        const std::int64_t k = std::stoll(num);
        if (k < 1)
            throw InputError("jet order must be positive in kind '" + text + "'");
        return KindBk{k};
    }
    if (text == "zero")
        return KindZero{};
    if (text == "scattering")
        return KindScattering{};
    if (text == "elliptic")
        return KindElliptic{};
    if (text == "elliptic-log")
        return KindEllipticLog{};
    throw InputError("unknown algebroid kind '" + text +
                     "' (expected bk:K, zero, scattering, elliptic, elliptic-log)");
}

std::string kind_to_string(const AlgebroidKind& kind)
{
    struct {
        std::string operator()(const KindBk& b) const { return "bk:" + std::to_string(b.k); }
        std::string operator()(const KindZero&) const { return "zero"; }
        std::string operator()(const KindScattering&) const { return "scattering"; }
        std::string operator()(const KindElliptic&) const { return "elliptic"; }
        std::string operator()(const KindEllipticLog&) const { return "elliptic-log"; }
    } v;
    return std::visit(v, kind);
}

namespace {

bool needs_pd_z(const AlgebroidKind& kind)
{
    return !std::holds_alternative<KindElliptic>(kind);
}

} // namespace

SWClasses sw_classes(const LogPairData& p, const AlgebroidKind& kind)
{
    const std::size_t h1 = h1_dim_of(p.manifold);
    if (needs_pd_z(kind) && p.pd_z.size() != h1)
        throw InputError("pd_z is required for kind " + kind_to_string(kind));
    const BitVec& l = p.pd_z;

    if (const auto* s = std::get_if<Surface2>(&p.manifold)) {
        const std::int64_t n = 2;
        SWClasses out;
        std::visit(
            [&](const auto& k) {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, KindBk>)
                    out.w1 = add_bits(s->w1_tx, scale_bits(k.k, l));
                else if constexpr (std::is_same_v<K, KindZero>)
                    out.w1 = add_bits(s->w1_tx, scale_bits(n, l));
                else if constexpr (std::is_same_v<K, KindScattering>)
                    out.w1 = add_bits(s->w1_tx, scale_bits(n + 1, l));
                else if constexpr (std::is_same_v<K, KindElliptic>)
                    out.w1 = s->w1_tx;
                else
                    out.w1 = add_bits(s->w1_tx, l);
            },
            kind);
        return out;
    }

    const auto& m = std::get<Manifold4>(p.manifold);
    const std::int64_t n = 4;
    const std::size_t r = m.q.rank();
    SWClasses out;
    std::visit(
        [&](const auto& k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, KindBk>) {
                out.w1 = add_bits(m.w1_tx, scale_bits(k.k, l));
                out.w2 = add_bits(m.w2_tx, scale_bits(k.k, cup11_product(m.cup11, l, m.w1_tx, r)));
            } else if constexpr (std::is_same_v<K, KindZero>) {
                out.w1 = add_bits(m.w1_tx, scale_bits(n, l));
                out.w2 = add_bits(m.w2_tx, cup11_product(m.cup11, l, m.w1_tx, r));
            } else if constexpr (std::is_same_v<K, KindScattering>) {
                out.w1 = add_bits(m.w1_tx, scale_bits(n + 1, l));
                out.w2 = m.w2_tx;
            } else if constexpr (std::is_same_v<K, KindElliptic>) {
                out.w1 = m.w1_tx;
            } else {
                out.w1 = add_bits(m.w1_tx, l);
            }
        },
        kind);
    return out;
}

TotalClass sw_rescaling(const TotalClass& w, const BitVec& wl, std::int64_t k,
                        const CupTable& cup11)
{
    if (k < 0)
        throw InputError("rescaling corank must be nonnegative");
    TotalClass out;
    out.w1 = add_bits(w.w1, scale_bits(k, wl));
    if (w.w2) {
        const std::size_t r = w.w2->size();
        BitVec w2 = add_bits(*w.w2, scale_bits(k, cup11_product(cup11, wl, w.w1, r)));
        w2 = add_bits(w2, scale_bits((k * (k - 1) / 2), cup11_product(cup11, wl, wl, r)));
        out.w2 = std::move(w2);
    }
    return out;
}

std::int64_t pontryagin_number(const Manifold4& m, const AlgebroidKind& kind)
{
    if (!m.orientable)
        throw PreconditionError("p1 is evaluated on oriented 4-manifolds");
    if (!std::holds_alternative<KindBk>(kind) && !std::holds_alternative<KindScattering>(kind))
        throw UnsupportedKind("p1 is not determined for kind " + kind_to_string(kind));
    return 3 * signature(m.q).sigma();
}

std::int64_t discrepancy_f1(const LogPairData& p)
{
    if (p.z_empty())
        return 0;
    if (!p.decomposition)
        throw PreconditionError("discrepancy needs the decomposition X \\ Z = X+ u X-");
    return -p.decomposition->chi_minus;
}

std::int64_t discrepancy_fk(const LogPairData& p, std::int64_t k)
{
    if (k < 1)
        throw InputError("jet order must be positive");
    if (k % 2 == 0)
        return 0;
    return discrepancy_f1(p);
}

std::int64_t discrepancy_sc(const LogPairData& p) { return discrepancy_f1(p); }

std::int64_t euler_number_algebroid(const LogPairData& p, const AlgebroidKind& kind)
{
    const auto* m = std::get_if<Manifold4>(&p.manifold);
    if (!m || !m->orientable)
        throw PreconditionError("Euler numbers are evaluated on oriented 4-manifolds");
    const std::int64_t chi = m->euler_characteristic();
    if (const auto* b = std::get_if<KindBk>(&kind))
        return chi + 2 * discrepancy_fk(p, b->k);
    if (std::holds_alternative<KindScattering>(kind))
        return chi + 2 * discrepancy_sc(p);
    throw UnsupportedKind("Euler number is not determined for kind " + kind_to_string(kind));
}

} // namespace symplobs
