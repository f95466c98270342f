#include "symplobs/topology.hpp"

#include <cctype>
#include <cstdlib>

#include "symplobs/error.hpp"

namespace symplobs {

DerivedInvariants derive_invariants(const Manifold4& m)
{
    const SignatureTriple s = signature(m.q);
    return {m.euler_characteristic(), s.sigma(), static_cast<std::int64_t>(s.b_plus),
            static_cast<std::int64_t>(s.b_minus)};
}

BitVec cup11_product(const CupTable& cup11, const BitVec& x, const BitVec& y, std::size_t h2_dim)
{
    if (x.size() != cup11.size() || y.size() != cup11.size())
        throw InputError("degree-1 class length does not match dim H^1");
    BitVec out = zero_bits(h2_dim);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j])
                out = add_bits(out, cup11[i][j]);
    }
    return out;
}

Manifold4 connected_sum(const Manifold4& a, const Manifold4& b)
{
    Manifold4 m;
    m.name = a.name + "#" + b.name;
    m.orientable = a.orientable && b.orientable;
    m.b1 = a.b1 + b.b1;
    m.q = direct_sum(a.q, b.q);
    m.h1_dim = a.h1_dim + b.h1_dim;
    m.w1_tx = concat_bits(a.w1_tx, b.w1_tx);
    m.w2_tx = concat_bits(a.w2_tx, b.w2_tx);
    const std::size_t ra = a.q.rank(), rb = b.q.rank();
    m.cup11.assign(m.h1_dim, std::vector<BitVec>(m.h1_dim, zero_bits(ra + rb)));
    for (std::size_t i = 0; i < a.h1_dim; ++i)
        for (std::size_t j = 0; j < a.h1_dim; ++j)
            m.cup11[i][j] = concat_bits(a.cup11[i][j], zero_bits(rb));
    for (std::size_t i = 0; i < b.h1_dim; ++i)
        for (std::size_t j = 0; j < b.h1_dim; ++j)
            m.cup11[a.h1_dim + i][a.h1_dim + j] = concat_bits(zero_bits(ra), b.cup11[i][j]);
    return m;
}

LogPairData connected_sum_in_piece(const LogPairData& p, const Manifold4& m_add, Side side)
{
    if (!p.decomposition)
        throw PreconditionError("connected sum into X+ or X- needs the decomposition (chi_plus, chi_minus)");
    if (!m_add.orientable)
        throw PreconditionError("summand " + m_add.name + " must be orientable");
    const auto* base = std::get_if<Manifold4>(&p.manifold);
    if (!base)
        throw PreconditionError("connected sum into a piece needs a 4-manifold pair");

    LogPairData out = p;
    out.manifold = connected_sum(*base, m_add);
    if (!p.manifold_ref.empty())
        out.manifold_ref = p.manifold_ref + "#" + m_add.name;
    out.pd_z = concat_bits(p.pd_z, zero_bits(m_add.h1_dim));
    const std::int64_t shift = m_add.euler_characteristic() - 2;
    if (side == Side::Plus)
        out.decomposition->chi_plus += shift;
    else
        out.decomposition->chi_minus += shift;
    return out;
}

namespace {

CupTable empty_cup(std::size_t h1, std::size_t rank)
{
    return CupTable(h1, std::vector<BitVec>(h1, zero_bits(rank)));
}

Manifold4 simple4(std::string name, BilinearForm q, BitVec w2)
{
    Manifold4 m;
    m.name = std::move(name);
    m.q = std::move(q);
    m.w2_tx = std::move(w2);
    return m;
}

Manifold4 torus4()
{
    // H² basis: a1a2, a3a4, a1a3, a4a2, a1a4, a2a3, so that Q = H ⊕ H ⊕ H.
    BilinearForm h = BilinearForm::hyperbolic();
    Manifold4 m = simple4("T4", direct_sum(direct_sum(h, h), h), zero_bits(6));
    m.b1 = 4;
    m.h1_dim = 4;
    m.w1_tx = zero_bits(4);
    m.cup11 = empty_cup(4, 6);
    auto set = [&](std::size_t i, std::size_t j, std::size_t slot) {
        m.cup11[i][j][slot] = 1;
        m.cup11[j][i][slot] = 1;
    };
    set(0, 1, 0);
    set(2, 3, 1);
    set(0, 2, 2);
    set(1, 3, 3);
    set(0, 3, 4);
    set(1, 2, 5);
    return m;
}

Surface2 surface(std::string name, bool orientable, std::size_t h1, BitVec w1)
{
    return Surface2{std::move(name), orientable, h1, std::move(w1)};
}

} // namespace

Manifold catalog_lookup(const std::string& name)
{
    if (name == "S4")
        return simple4("S4", BilinearForm(), {});
    if (name == "CP2")
        return simple4("CP2", BilinearForm::diagonal({1}), {1});
    if (name == "CP2bar")
        return simple4("CP2bar", BilinearForm::diagonal({-1}), {1});
    if (name == "S2xS2")
        return simple4("S2xS2", BilinearForm::hyperbolic(), {0, 0});
    if (name == "S1xS3") {
        Manifold4 m = simple4("S1xS3", BilinearForm(), {});
        m.b1 = 1;
        m.h1_dim = 1;
        m.w1_tx = {0};
        m.cup11 = empty_cup(1, 0);
        return m;
    }
    if (name == "T4")
        return torus4();
    if (name == "K3") {
        const BilinearForm e8m = BilinearForm::e8().negated();
        const BilinearForm h = BilinearForm::hyperbolic();
        BilinearForm q = direct_sum(direct_sum(e8m, e8m), direct_sum(direct_sum(h, h), h));
        return simple4("K3", std::move(q), zero_bits(22));
    }
    if (name == "S2")
        return surface("S2", true, 0, {});
    if (name == "T2")
        return surface("T2", true, 2, {0, 0});
    if (name == "Klein")
        return surface("Klein", false, 2, {1, 0});
    if (name == "RP2")
        return surface("RP2", false, 1, {1});
    if (name.size() > 5 && name.rfind("Sigma", 0) == 0) {
        const std::string digits = name.substr(5);
        if (std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }) &&
            digits.size() < 5) {
            const std::size_t g = std::stoul(digits);
            return surface(name, true, 2 * g, zero_bits(2 * g));
        }
    }
    throw InputError("unknown catalog entry '" + name + "'");
}

std::vector<std::string> catalog_names()
{
    return {"S4", "CP2", "CP2bar", "S2xS2", "S1xS3", "T4", "K3", "S2", "T2", "Sigma2", "Klein", "RP2"};
}

Manifold4 manifold_from_expression(const std::string& expr)
{
    std::vector<std::string> terms;
    std::size_t start = 0;
    while (true) {
        const auto pos = expr.find('#', start);
        terms.push_back(expr.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos)
            break;
        start = pos + 1;
    }
    std::optional<Manifold4> acc;
    for (const auto& raw : terms) {
        std::size_t i = 0;
        while (i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i])))
            ++i;
        const std::string base = raw.substr(i);
        const long count = i ? std::stol(raw.substr(0, i)) : 1;
        if (base.empty() || count < 1 || count > 1000)
            throw InputError("bad connected-sum term '" + raw + "' in '" + expr + "'");
        const Manifold item = catalog_lookup(base);
        const auto* m4 = std::get_if<Manifold4>(&item);
        if (!m4)
            throw InputError("'" + base + "' is a surface; connected sums take 4-manifolds");
        for (long c = 0; c < count; ++c)
            acc = acc ? connected_sum(*acc, *m4) : *m4;
    }
    acc->name = expr;
    return *acc;
}

namespace {

void check_bits(const BitVec& v, const std::string& field, std::vector<std::string>& out)
{
    for (auto b : v)
        if (b > 1) {
            out.push_back(field + ": entries must be 0 or 1");
            return;
        }
}

} // namespace

std::vector<std::string> validate(const Manifold4& m)
{
    std::vector<std::string> out;
    const std::size_t r = m.q.rank();
    if (m.b1 < 0)
        out.push_back("b1: must be nonnegative");
    if (static_cast<std::int64_t>(m.h1_dim) != m.b1)
        out.push_back("h1_dim: must equal b1 (2-torsion in H_1 is not supported)");
    if (m.w1_tx.size() != m.h1_dim)
        out.push_back("w1_tx: length must equal h1_dim");
    if (m.w2_tx.size() != r)
        out.push_back("w2_tx: length must equal rank(Q)");
    check_bits(m.w1_tx, "w1_tx", out);
    check_bits(m.w2_tx, "w2_tx", out);

    if (m.orientable && !is_zero(m.w1_tx))
        out.push_back("w1_tx: orientable manifold must have w1 = 0");
    if (!m.orientable && is_zero(m.w1_tx))
        out.push_back("w1_tx: non-orientable manifold must have w1 != 0");

    const mpz_class det = m.q.determinant();
    if (det != 1 && det != -1)
        out.push_back("Q: intersection form must be unimodular (det = " + det.get_str() + ")");

    if (m.w2_tx.size() == r) {
        IntVec w(m.w2_tx.begin(), m.w2_tx.end());
        if (!is_characteristic(m.q, w))
            out.push_back("w2_tx: w2 not characteristic for Q (Wu condition)");
    }

    bool shape_ok = m.cup11.size() == m.h1_dim;
    for (const auto& row : m.cup11) {
        shape_ok = shape_ok && row.size() == m.h1_dim;
        for (const auto& v : row) {
            shape_ok = shape_ok && v.size() == r;
            check_bits(v, "cup11", out);
        }
    }
    if (!shape_ok) {
        out.push_back("cup11: must be an h1_dim x h1_dim table of length-rank(Q) vectors");
    } else {
        for (std::size_t i = 0; i < m.h1_dim; ++i) {
            if (!is_zero(m.cup11[i][i]))
                out.push_back("cup11: x^2 must vanish for degree-1 classes without 2-torsion (entry " +
                              std::to_string(i) + "," + std::to_string(i) + ")");
            for (std::size_t j = i + 1; j < m.h1_dim; ++j)
                if (m.cup11[i][j] != m.cup11[j][i])
                    out.push_back("cup11: table must be symmetric (entry " + std::to_string(i) +
                                  "," + std::to_string(j) + ")");
        }
    }
    return out;
}

std::vector<std::string> validate(const Surface2& s)
{
    std::vector<std::string> out;
    if (s.w1_tx.size() != s.h1_dim)
        out.push_back("w1_tx: length must equal h1_dim");
    check_bits(s.w1_tx, "w1_tx", out);
    if (s.orientable != is_zero(s.w1_tx))
        out.push_back("w1_tx: orientable iff w1 = 0");
    if (s.orientable && s.h1_dim % 2 != 0)
        out.push_back("h1_dim: an orientable closed surface has even first Betti number");
    return out;
}

std::vector<std::string> validate(const SplitData& s)
{
    std::vector<std::string> out;
    if (s.b2plus_x1 < 0)
        out.push_back("b2plus_x1: must be nonnegative");
    if (s.b2plus_x2 && *s.b2plus_x2 < 0)
        out.push_back("b2plus_x2: must be nonnegative");
    if (s.x2_empty && s.b2plus_x2 && *s.b2plus_x2 != 0)
        out.push_back("b2plus_x2: X2 is declared empty");
    if (s.z_components_psc.empty())
        out.push_back("z_components_psc: the splitting hypersurface has at least one component");
    return out;
}

PscFlag effective_psc(const ZComponent& c)
{
    if (!c.psc && c.name == "S1xS2")
        return true;
    return c.psc;
}

std::size_t h1_dim_of(const Manifold& m)
{
    return std::visit([](const auto& x) { return x.h1_dim; }, m);
}

const std::string& name_of(const Manifold& m)
{
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, m);
}

std::vector<std::string> validate(const LogPairData& p)
{
    std::vector<std::string> out;
    for (const auto& v : std::visit([](const auto& m) { return validate(m); }, p.manifold))
        out.push_back("manifold." + v);

    const std::size_t h1 = h1_dim_of(p.manifold);
    if (p.pd_z.size() != h1)
        out.push_back("pd_z: length must equal dim H^1(X;Z2) = " + std::to_string(h1));
    check_bits(p.pd_z, "pd_z", out);
    if (p.k < 1)
        out.push_back("k: jet order must be positive");
    if (p.z_empty() && !is_zero(p.pd_z))
        out.push_back("pd_z: must vanish when Z is empty");
    for (std::size_t i = 0; i < p.z_components.size(); ++i)
        if (p.z_components[i].name == "S1xS2" && p.z_components[i].psc == false)
            out.push_back("z_components[" + std::to_string(i) + "].psc: S1xS2 carries a psc metric");

    if (p.decomposition) {
        if (!is_zero(p.pd_z))
            out.push_back("decomposition: a separating Z has PD[Z] = 0 mod 2");
        const std::int64_t chi = std::visit(
            [](const auto& m) -> std::int64_t {
                if constexpr (std::is_same_v<std::decay_t<decltype(m)>, Manifold4>)
                    return m.euler_characteristic();
                else
                    return 2 - static_cast<std::int64_t>(m.h1_dim);
            },
            p.manifold);
        if (p.decomposition->chi_plus + p.decomposition->chi_minus != chi)
            out.push_back("decomposition: chi_plus + chi_minus = " +
                          std::to_string(p.decomposition->chi_plus + p.decomposition->chi_minus) +
                          " but chi(X) = " + std::to_string(chi));
    }
    if (p.split)
        for (const auto& v : validate(*p.split))
            out.push_back("split." + v);
    return out;
}

} // namespace symplobs
