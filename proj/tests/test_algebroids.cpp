#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "symplobs/algebroids.hpp"
#include "symplobs/error.hpp"

using namespace symplobs;

namespace {

LogPairData pair_on(const std::string& name, BitVec pd_z = {})
{
    LogPairData p;
    p.manifold = catalog_lookup(name);
    p.pd_z = pd_z.empty() ? zero_bits(h1_dim_of(p.manifold)) : pd_z;
    p.manifold_ref = name;
    return p;
}

LogPairData separated(const std::string& expr, std::int64_t chi_minus)
{
    LogPairData p;
    const auto m = manifold_from_expression(expr);
    p.manifold = m;
    p.pd_z = zero_bits(m.h1_dim);
    p.z_components = {{"S1xS2", std::nullopt}};
    p.decomposition = Decomposition{m.euler_characteristic() - chi_minus, chi_minus};
    return p;
}

// Direct evaluation of w1 + k·L and w2 + k·(L ∪ w1) + C(k,2)·(L ∪ L).
TotalClass rescale_reference(const TotalClass& w, const BitVec& l, std::int64_t k, const CupTable& t)
{
    TotalClass out{w.w1, w.w2};
    for (std::size_t i = 0; i < l.size(); ++i)
        out.w1[i] = static_cast<std::uint8_t>((out.w1[i] + k * l[i]) % 2);
    if (!out.w2)
        return out;
    const std::int64_t c2 = k * (k - 1) / 2;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j)
            for (std::size_t r = 0; r < out.w2->size(); ++r) {
                const std::int64_t term = k * l[i] * w.w1[j] * t[i][j][r] + c2 * l[i] * l[j] * t[i][j][r];
                (*out.w2)[r] = static_cast<std::uint8_t>(((*out.w2)[r] + term) % 2);
            }
    return out;
}

} // namespace

TEST_CASE("parse_kind")
{
    CHECK(parse_kind("bk:3") == AlgebroidKind{KindBk{3}});
    CHECK(parse_kind("bk", 4) == AlgebroidKind{KindBk{4}});
    CHECK(parse_kind("log") == AlgebroidKind{KindBk{1}});
    CHECK(parse_kind("scattering") == AlgebroidKind{KindScattering{}});
    CHECK(parse_kind("zero") == AlgebroidKind{KindZero{}});
    CHECK(parse_kind("elliptic") == AlgebroidKind{KindElliptic{}});
    CHECK(parse_kind("elliptic-log") == AlgebroidKind{KindEllipticLog{}});
    CHECK_THROWS_AS(parse_kind("bk:0"), InputError);
    CHECK_THROWS_AS(parse_kind("bk:x"), InputError);
    CHECK_THROWS_AS(parse_kind("b"), InputError);
    for (const auto& s : {"bk:2", "zero", "scattering", "elliptic", "elliptic-log"})
        CHECK(kind_to_string(parse_kind(s)) == s);
}

TEST_CASE("sw_classes examples")
{
    const auto t4 = pair_on("T4", {1, 0, 1, 0});
    CHECK(is_zero(sw_classes(t4, KindBk{2}).w1));
    CHECK(sw_classes(t4, KindBk{1}).w1 == t4.pd_z);
    CHECK(sw_classes(t4, KindScattering{}).w1 == t4.pd_z);
    CHECK(sw_classes(t4, KindScattering{}).w2 == std::get<Manifold4>(t4.manifold).w2_tx);
    CHECK(is_zero(sw_classes(t4, KindZero{}).w1));
    CHECK(is_zero(sw_classes(t4, KindElliptic{}).w1));
    CHECK_FALSE(sw_classes(t4, KindElliptic{}).w2.has_value());
    CHECK_FALSE(sw_classes(t4, KindEllipticLog{}).w2.has_value());
    CHECK(sw_classes(t4, KindEllipticLog{}).w1 == t4.pd_z);

    const auto t2 = pair_on("T2", {1, 0});
    CHECK(sw_classes(t2, KindBk{1}).w1 == BitVec{1, 0});
    CHECK(is_zero(sw_classes(t2, KindZero{}).w1));
    CHECK(sw_classes(t2, KindScattering{}).w1 == BitVec{1, 0});
    CHECK_FALSE(sw_classes(t2, KindBk{1}).w2.has_value());

    auto missing = pair_on("T4");
    missing.pd_z.clear();
    CHECK_THROWS_AS(sw_classes(missing, KindBk{1}), InputError);
    CHECK_NOTHROW(sw_classes(missing, KindElliptic{}));
}

TEST_CASE("w2 picks up L ∪ w1 on a non-orientable manifold")
{
    Manifold4 m;
    m.name = "model";
    m.orientable = false;
    m.b1 = 2;
    m.h1_dim = 2;
    m.q = BilinearForm::diagonal({1});
    m.w1_tx = {0, 1};
    m.w2_tx = {1};
    m.cup11 = {{{0}, {1}}, {{1}, {0}}};
    LogPairData p;
    p.manifold = m;
    p.pd_z = {1, 0};
    CHECK(sw_classes(p, KindBk{1}).w2 == BitVec{0});
    CHECK(sw_classes(p, KindBk{2}).w2 == BitVec{1});
    CHECK(sw_classes(p, KindZero{}).w2 == BitVec{0});
    CHECK(sw_classes(p, KindScattering{}).w2 == BitVec{1});
}

TEST_CASE("sw_rescaling examples")
{
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
        const std::size_t h1 = 1 + rng() % 4, h2 = rng() % 4;
        const auto table = gen::symmetric_cup(h1, h2, rng);
        const TotalClass w{gen::bits(h1, rng), gen::bits(h2, rng)};
        const auto l = gen::bits(h1, rng);
        CHECK(sw_rescaling(w, l, 0, table) == w);
        const auto two = sw_rescaling(w, l, 2, table);
        CHECK(two.w1 == w.w1);
        CHECK(*two.w2 == add_bits(*w.w2, cup11_product(table, l, l, h2)));
        for (std::int64_t k = 0; k <= 7; ++k)
            CHECK(sw_rescaling(w, l, k, table) == rescale_reference(w, l, k, table));
    }
    CHECK_THROWS_AS(sw_rescaling({{}, BitVec{}}, {}, -1, {}), InputError);
}

TEST_CASE("sw_classes for bk agrees with rescaling w(TX) on catalog manifolds")
{
    std::mt19937_64 rng(8);
    for (const auto& name : catalog_names()) {
        const Manifold man = catalog_lookup(name);
        const auto* m = std::get_if<Manifold4>(&man);
        if (!m)
            continue;
        for (int i = 0; i < 8; ++i) {
            auto p = pair_on(name, {});
            p.pd_z = gen::bits(m->h1_dim, rng);
            for (std::int64_t k = 1; k <= 6; ++k) {
                const auto got = sw_classes(p, KindBk{k}).total();
                const auto want = sw_rescaling({m->w1_tx, m->w2_tx}, p.pd_z, k, m->cup11);
                CHECK(got == want);
                if (k % 2 == 0)
                    CHECK(got.w1 == m->w1_tx);
            }
        }
    }
}

TEST_CASE("pontryagin_number")
{
    CHECK(pontryagin_number(std::get<Manifold4>(catalog_lookup("CP2")), KindBk{1}) == 3);
    CHECK(pontryagin_number(std::get<Manifold4>(catalog_lookup("S4")), KindBk{1}) == 0);
    const auto k3 = std::get<Manifold4>(catalog_lookup("K3"));
    CHECK(pontryagin_number(k3, KindBk{1}) == -48);
    for (std::int64_t k = 1; k <= 5; ++k)
        CHECK(pontryagin_number(k3, KindBk{k}) == pontryagin_number(k3, KindScattering{}));
    CHECK_THROWS_AS(pontryagin_number(k3, KindZero{}), UnsupportedKind);
    CHECK_THROWS_AS(pontryagin_number(k3, KindElliptic{}), UnsupportedKind);
    CHECK_THROWS_AS(pontryagin_number(k3, KindEllipticLog{}), UnsupportedKind);
}

TEST_CASE("discrepancies")
{
    CHECK(discrepancy_f1(separated("CP2", 0)) == 0);
    CHECK(discrepancy_f1(separated("CP2", 1)) == -1);
    CHECK(discrepancy_f1(separated("CP2", -2)) == 2);
    CHECK(discrepancy_fk(separated("CP2", 5), 2) == 0);
    CHECK(discrepancy_fk(separated("CP2", 1), 3) == -1);
    CHECK(discrepancy_fk(separated("CP2", 0), 1) == 0);
    CHECK(discrepancy_sc(separated("CP2", 1)) == -1);

    auto nodec = separated("CP2", 1);
    nodec.decomposition.reset();
    CHECK_THROWS_AS(discrepancy_f1(nodec), PreconditionError);
    CHECK(discrepancy_fk(nodec, 2) == 0);
    CHECK_THROWS_AS(discrepancy_fk(nodec, 0), InputError);

    auto empty = pair_on("CP2");
    CHECK(discrepancy_f1(empty) == 0);
}

TEST_CASE("Euler numbers")
{
    const auto cp2 = pair_on("CP2");
    CHECK(euler_number_algebroid(cp2, KindBk{1}) == 3);
    CHECK(euler_number_algebroid(separated("CP2", 1), KindBk{2}) == 3);
    CHECK(euler_number_algebroid(separated("CP2", 1), KindBk{1}) == 1);
    CHECK(euler_number_algebroid(separated("CP2", 1), KindScattering{}) == 1);
    CHECK_THROWS_AS(euler_number_algebroid(cp2, KindZero{}), UnsupportedKind);
    CHECK_THROWS_AS(euler_number_algebroid(pair_on("T2"), KindBk{1}), PreconditionError);
}

TEST_CASE("discrepancy laws over a grid")
{
    for (std::int64_t cm = -10; cm <= 10; ++cm) {
        const auto p = separated("2CP2#CP2bar", cm);
        const std::int64_t f1 = discrepancy_f1(p);
        const std::int64_t chi = std::get<Manifold4>(p.manifold).euler_characteristic();
        for (std::int64_t k = 1; k <= 10; ++k) {
            const std::int64_t fk = discrepancy_fk(p, k);
            CHECK(((fk - k * f1) % 2 + 2) % 2 == 0);
            if (k % 2 == 0)
                CHECK(fk == 0);
            CHECK(((euler_number_algebroid(p, KindBk{k}) - chi) % 2 + 2) % 2 == 0);
        }
        CHECK(((discrepancy_sc(p) - f1) % 2 + 2) % 2 == 0);
    }
}
