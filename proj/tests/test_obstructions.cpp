#include <doctest.h>

#include <map>
#include <random>

#include "generators.hpp"
#include "symplobs/error.hpp"
#include "symplobs/obstructions.hpp"

using namespace symplobs;

namespace {

LogPairData closed(const std::string& expr)
{
    LogPairData p;
    if (expr.find('#') != std::string::npos || std::isdigit(static_cast<unsigned char>(expr[0])))
        p.manifold = manifold_from_expression(expr);
    else
        p.manifold = catalog_lookup(expr);
    p.manifold_ref = expr;
    p.pd_z = zero_bits(h1_dim_of(p.manifold));
    return p;
}

LogPairData with_z(const std::string& expr, std::optional<std::int64_t> chi_minus)
{
    LogPairData p = closed(expr);
    p.z_components = {{"S1xS2", std::nullopt}};
    if (chi_minus) {
        const auto chi = std::get<Manifold4>(p.manifold).euler_characteristic();
        p.decomposition = Decomposition{chi - *chi_minus, *chi_minus};
    }
    return p;
}

const Verdict* find(const ObstructionReport& r, const std::string& test)
{
    for (const auto& v : r.verdicts)
        if (v.test == test)
            return &v;
    return nullptr;
}

std::vector<std::string> four_manifolds()
{
    std::vector<std::string> out;
    for (const auto& n : catalog_names())
        if (std::holds_alternative<Manifold4>(catalog_lookup(n)))
            out.push_back(n);
    return out;
}

} // namespace

TEST_CASE("orientability")
{
    auto t4 = closed("T4");
    t4.pd_z = {1, 0, 0, 0};
    t4.z_components = {{"T3", std::nullopt}};
    const auto v = check_orientability(t4, KindBk{1});
    CHECK(v.status == Status::Obstructed);
    CHECK(v.detail.find("w1(TX) + 1 PD[Z]") != std::string::npos);
    CHECK(v.detail.find("≠ 0") != std::string::npos);
    CHECK(check_orientability(t4, KindBk{2}).status == Status::NotObstructed);
    CHECK(check_orientability(t4, KindElliptic{}).status == Status::NotObstructed);
    CHECK(check_orientability(t4, KindZero{}).status == Status::NotObstructed);
    CHECK(check_orientability(t4, KindScattering{}).status == Status::Obstructed);
    CHECK(check_orientability(t4, KindEllipticLog{}).status == Status::Obstructed);
}

TEST_CASE("surfaces")
{
    auto t2 = closed("T2");
    CHECK(check_surface(t2, KindBk{1}) == SurfaceVerdict::Admits);
    t2.pd_z = {1, 0};
    CHECK(check_surface(t2, KindBk{1}) == SurfaceVerdict::DoesNotAdmit);
    CHECK(check_surface(t2, KindBk{2}) == SurfaceVerdict::Admits);
    CHECK(check_surface(closed("Klein"), KindBk{1}) == SurfaceVerdict::DoesNotAdmit);
    CHECK_THROWS_AS(check_surface(closed("CP2"), KindBk{1}), PreconditionError);

    // Klein bottle with Z dual to w1: the log bundle is orientable
    auto klein = closed("Klein");
    klein.pd_z = std::get<Surface2>(klein.manifold).w1_tx;
    CHECK(check_surface(klein, KindBk{1}) == SurfaceVerdict::Admits);

    const auto r = full_report(t2, KindBk{1});
    CHECK(r.overall == Status::Obstructed);
    REQUIRE(find(r, "surface"));
}

TEST_CASE("zero tangent")
{
    CHECK(check_zero_tangent(closed("CP2")).status == Status::Obstructed);
    CHECK(check_zero_tangent(with_z("CP2", 1)).status == Status::Obstructed);
    CHECK(check_zero_tangent(closed("T2")).status == Status::NotObstructed);
    const auto r = full_report(closed("K3"), KindZero{});
    CHECK(r.overall == Status::Obstructed);
    CHECK(find(r, "zero-tangent")->status == Status::Obstructed);
}

TEST_CASE("indefinite form")
{
    CHECK(check_indefinite_form(with_z("CP2", 1)).status == Status::Obstructed);
    CHECK(check_indefinite_form(with_z("2CP2#CP2bar", 1)).status == Status::NotObstructed);
    CHECK(check_indefinite_form(closed("CP2")).status == Status::Inconclusive);
    CHECK(check_indefinite_form(with_z("S4", 0)).status == Status::NotObstructed);
    CHECK(check_indefinite_form(closed("T2")).status == Status::Inconclusive);
}

TEST_CASE("parity examples")
{
    auto v = check_parity_bk(with_z("2CP2#CP2bar", 1), 1);
    CHECK(v.status == Status::NotObstructed);
    v = check_parity_bk(with_z("3CP2#CP2bar", 1), 1);
    CHECK(v.status == Status::Obstructed);
    CHECK(v.detail.find("3 + 0 + 1 ≡ 0 (mod 2)") != std::string::npos);
    for (std::int64_t k = 1; k <= 4; ++k)
        CHECK(check_parity_bk(closed("CP2"), k).status == Status::NotObstructed);

    CHECK(check_parity_scattering(with_z("2CP2#CP2bar", 1)).status == Status::NotObstructed);
    CHECK(check_parity_scattering(with_z("3CP2#CP2bar", 1)).status == Status::Obstructed);
    CHECK(check_parity_scattering(with_z("S4", 0)).status == Status::Obstructed);
    CHECK(check_parity_scattering(with_z("CP2", std::nullopt)).status == Status::Inconclusive);

    // even k does not need the decomposition
    CHECK(check_parity_bk(with_z("CP2", std::nullopt), 2).status == Status::NotObstructed);
    CHECK(check_parity_bk(with_z("CP2", std::nullopt), 3).status == Status::Inconclusive);
    CHECK_THROWS_AS(check_parity_bk(closed("CP2"), 0), InputError);
}

TEST_CASE("classical almost-complex parity with Z empty")
{
    for (const auto& n : four_manifolds()) {
        const auto m = std::get<Manifold4>(catalog_lookup(n));
        const auto inv = derive_invariants(m);
        const bool odd = (inv.b2plus + m.b1) % 2 == 1;
        CHECK(check_parity_bk(closed(n), 1).status == (odd ? Status::NotObstructed : Status::Obstructed));
    }
}

TEST_CASE("wu examples")
{
    auto v = check_wu(closed("CP2"), KindBk{1}, 5);
    CHECK(v.status == Status::NotObstructed);
    CHECK(v.detail.find("= 9") != std::string::npos);
    CHECK(v.detail.find("c = (-3)") != std::string::npos);

    v = check_wu(closed("S4"), KindBk{1});
    CHECK(v.status == Status::Obstructed);

    v = check_wu(closed("S2xS2"), KindBk{1}, 3);
    CHECK(v.status == Status::NotObstructed);
    CHECK(v.detail.find("c = (-2,-2)") != std::string::npos);

    v = check_wu(with_z("2CP2#CP2bar", 1), KindBk{1});
    CHECK(v.status == Status::NotObstructed);
    v = check_wu(with_z("3CP2#CP2bar", 1), KindBk{1});
    CHECK(v.status == Status::Obstructed);

    CHECK(check_wu(with_z("CP2", std::nullopt), KindBk{1}).status == Status::Inconclusive);
    CHECK(check_wu(closed("CP2"), KindZero{}).status == Status::Inconclusive);
    // a finite box never proves absence on its own
    CHECK(check_wu(closed("S1xS3"), KindBk{1}).status == Status::NotObstructed);
    CHECK(check_wu(with_z("S1xS3", -2), KindBk{1}).status == Status::Inconclusive);
    CHECK(check_wu(closed("CP2"), KindBk{1}, 1).status == Status::Inconclusive);
    CHECK(check_wu(closed("K3"), KindBk{1}, 1).status == Status::NotObstructed);
}

TEST_CASE("sw filling")
{
    SplitData s;
    s.b2plus_x1 = 2;
    s.x2_empty = true;
    s.z_components_psc = {true, true};
    CHECK(check_sw_filling(s).status == Status::Obstructed);
    s.z_components_psc = {true, std::nullopt};
    CHECK(check_sw_filling(s).status == Status::Inconclusive);
    s.z_components_psc = {false, std::nullopt};
    CHECK(check_sw_filling(s).status == Status::NotObstructed);
    s.b2plus_x1 = 0;
    s.z_components_psc = {true};
    CHECK(check_sw_filling(s).status == Status::NotObstructed);
    s.oriented = false;
    CHECK(check_sw_filling(s).status == Status::Inconclusive);
}

TEST_CASE("separating consistency")
{
    auto t4 = closed("T4");
    CHECK(check_separating_consistency(t4, KindBk{1}).ok);
    t4.pd_z = {0, 1, 0, 0};
    CHECK(check_separating_consistency(t4, KindBk{2}).ok);
    CHECK_FALSE(check_separating_consistency(t4, KindBk{1}).ok);
    CHECK_FALSE(check_separating_consistency(t4, KindScattering{}).ok);
    CHECK(check_separating_consistency(t4, KindElliptic{}).ok);
    const auto r = full_report(t4, KindBk{3});
    CHECK(find(r, "consistency")->status == Status::Obstructed);
}

TEST_CASE("cup certificate verdicts")
{
    const auto s2 = ring_fixture("S2xS2");
    const auto a = s2.add(s2.basis(2, 0), s2.basis(2, 1));
    auto v = check_cup_certificate(s2, a, s2.basis(2, 1), 2);
    CHECK(v.status == Status::NotObstructed);
    CHECK_FALSE(v.detail.empty());
    const auto cp2 = ring_fixture("CP2");
    v = check_cup_certificate(cp2, cp2.basis(2, 0), cp2.basis(2, 0), 2);
    CHECK(v.status == Status::Inconclusive);
    CHECK(check_cup_certificate(s2, a, s2.zero(2), 2).status == Status::Inconclusive);
}

TEST_CASE("aggregate")
{
    using V = Verdict;
    CHECK(aggregate({}) == Status::NotObstructed);
    CHECK(aggregate({V::passed("a"), V::inconclusive("b", "r")}) == Status::Inconclusive);
    CHECK(aggregate({V::inconclusive("b", "r"), V::obstructed("c", "w")}) == Status::Obstructed);
    CHECK(aggregate({V::passed("a"), V::passed("b")}) == Status::NotObstructed);
    CHECK(exit_code(Status::NotObstructed) == 0);
    CHECK(exit_code(Status::Obstructed) == 1);
    CHECK(exit_code(Status::Inconclusive) == 2);
}

TEST_CASE("full reports for the connected-sum examples")
{
    auto r = full_report(with_z("3CP2#CP2bar", 1), KindBk{1});
    CHECK(r.overall == Status::Obstructed);
    CHECK(find(r, "parity")->status == Status::Obstructed);

    r = full_report(with_z("2CP2#CP2bar", 1), KindBk{1});
    CHECK(find(r, "parity")->status == Status::NotObstructed);
    CHECK(find(r, "orientability")->status == Status::NotObstructed);
    CHECK(find(r, "indefinite-form")->status == Status::NotObstructed);
    CHECK(r.overall == Status::NotObstructed);
    // chi = 5 is odd, so the labels matter
    bool swap_note = false;
    for (const auto& n : r.notes)
        swap_note = swap_note || n.find("swapping") != std::string::npos;
    CHECK(swap_note);

    std::vector<std::string> order;
    for (const auto& v : r.verdicts)
        order.push_back(v.test);
    CHECK(order == std::vector<std::string>{"consistency", "orientability", "indefinite-form", "parity", "wu"});
}

TEST_CASE("report aggregation invariant on random pairs")
{
    std::mt19937_64 rng(4);
    const auto names = four_manifolds();
    const std::vector<AlgebroidKind> kinds = {KindBk{1}, KindBk{2}, KindBk{3}, KindZero{},
                                              KindScattering{}, KindElliptic{}, KindEllipticLog{}};
    for (int trial = 0; trial < 200; ++trial) {
        auto p = with_z(names[rng() % names.size()], static_cast<std::int64_t>(rng() % 5) - 2);
        if (rng() % 3 == 0)
            p.decomposition.reset();
        if (rng() % 4 == 0)
            p.z_components.clear(), p.decomposition.reset();
        const auto& kind = kinds[rng() % kinds.size()];
        const auto r = full_report(p, kind);
        CHECK(r.overall == aggregate(r.verdicts));
        bool any_obs = false, any_inc = false;
        for (const auto& v : r.verdicts) {
            any_obs = any_obs || v.status == Status::Obstructed;
            any_inc = any_inc || v.status == Status::Inconclusive;
            if (v.status == Status::Obstructed)
                CHECK_FALSE(v.detail.empty());
        }
        CHECK(r.overall == (any_obs ? Status::Obstructed : any_inc ? Status::Inconclusive : Status::NotObstructed));
    }
}

TEST_CASE("monotonicity: more data only resolves inconclusive verdicts")
{
    std::mt19937_64 rng(6);
    const auto names = four_manifolds();
    for (int trial = 0; trial < 300; ++trial) {
        const auto name = names[rng() % names.size()];
        const std::int64_t cm = static_cast<std::int64_t>(rng() % 7) - 3;
        const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
        auto full = with_z(name, cm);
        full.z_components = {{"S3", rng() % 2 == 0}, {"S1xS2", std::nullopt}};
        SplitData s;
        s.b2plus_x1 = static_cast<std::int64_t>(rng() % 3);
        s.x2_empty = rng() % 2 == 0;
        s.z_components_psc = {true, PscFlag(rng() % 2 == 0)};
        full.split = s;

        auto weak = full;
        weak.decomposition.reset();
        auto weak_split = s;
        weak_split.z_components_psc[1] = std::nullopt;
        weak.split = weak_split;

        for (const AlgebroidKind& kind : {AlgebroidKind{KindBk{k}}, AlgebroidKind{KindScattering{}}}) {
            const auto a = full_report(weak, kind), b = full_report(full, kind);
            REQUIRE(a.verdicts.size() == b.verdicts.size());
            for (std::size_t i = 0; i < a.verdicts.size(); ++i)
                if (a.verdicts[i].status != Status::Inconclusive)
                    CHECK(a.verdicts[i].status == b.verdicts[i].status);
            if (a.overall != Status::Inconclusive)
                CHECK(a.overall == b.overall);
        }
    }
}

TEST_CASE("scattering parity matches log parity")
{
    for (const auto& name : four_manifolds())
        for (std::int64_t cm = -3; cm <= 3; ++cm) {
            const auto p = with_z(name, cm);
            CHECK(check_parity_scattering(p).status == check_parity_bk(p, 1).status);
            CHECK(check_parity_scattering(closed(name)).status == check_parity_bk(closed(name), 1).status);
        }
}

TEST_CASE("even k ignores Z")
{
    for (const auto& name : four_manifolds()) {
        auto with = with_z(name, 1);
        auto without = closed(name);
        for (std::int64_t k : {2, 4}) {
            const auto a = full_report(with, KindBk{k}), b = full_report(without, KindBk{k});
            REQUIRE(a.verdicts.size() == b.verdicts.size());
            for (std::size_t i = 0; i < a.verdicts.size(); ++i)
                CHECK(a.verdicts[i].status == b.verdicts[i].status);
        }
    }
}

TEST_CASE("wu obstruction implies parity obstruction")
{
    for (const auto& name : four_manifolds())
        for (std::int64_t k = 1; k <= 4; ++k)
            for (std::int64_t f = -2; f <= 2; ++f) {
                const auto p = with_z(name, -f);
                const auto wu = check_wu(p, KindBk{k});
                if (wu.status == Status::Obstructed)
                    CHECK(check_parity_bk(p, k).status == Status::Obstructed);
            }
}
