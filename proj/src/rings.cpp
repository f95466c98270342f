#include "symplobs/rings.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "symplobs/error.hpp"

namespace symplobs {

bool RingClass::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const mpq_class& c) { return c == 0; });
}

namespace {

std::string basis_name(std::size_t p, std::size_t i)
{
    return "e" + std::to_string(p) + "_" + std::to_string(i);
}

} // namespace

GradedRing::GradedRing(Field field, std::vector<std::size_t> dims,
                       const std::vector<ProductEntry>& products, std::optional<Coeffs> unit)
    : field_(field), dims_(std::move(dims))
{
    if (dims_.empty())
        throw InputError("ring needs at least degree 0");
    const std::size_t n = top_degree();
    table_.resize(dims_.size() * dims_.size());
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; p + q <= n; ++q)
            table_[slot(p, q)].assign(dims_[p] * dims_[q], Coeffs(dims_[p + q], 0));

    bool degree_zero_listed = false;
    for (const auto& e : products) {
        if (e.p + e.q > n)
            throw InputError("product " + basis_name(e.p, e.i) + "*" + basis_name(e.q, e.j) +
                             " exceeds top degree " + std::to_string(n));
        if (e.i >= dims_[e.p] || e.j >= dims_[e.q])
            throw InputError("product " + basis_name(e.p, e.i) + "*" + basis_name(e.q, e.j) +
                             " refers to a missing basis element");
        if (e.coeffs.size() != dims_[e.p + e.q])
            throw InputError("product " + basis_name(e.p, e.i) + "*" + basis_name(e.q, e.j) +
                             ": expected " + std::to_string(dims_[e.p + e.q]) + " coefficients");
        Coeffs c = e.coeffs;
        normalize(c);
        table_[slot(e.p, e.q)][e.i * dims_[e.q] + e.j] = std::move(c);
        degree_zero_listed = degree_zero_listed || e.p == 0 || e.q == 0;
    }

    if (unit) {
        if (unit->size() != dims_[0])
            throw InputError("unit must have " + std::to_string(dims_[0]) + " coefficients");
        unit_ = RingClass{0, *unit};
        normalize(unit_.coeffs);
    } else {
        if (dims_[0] == 0)
            throw InputError("degree 0 is empty; a unit is required");
        unit_ = basis(0, 0);
        if (!degree_zero_listed && dims_[0] == 1) {
            for (std::size_t q = 0; q <= n; ++q)
                for (std::size_t j = 0; j < dims_[q]; ++j) {
                    Coeffs c(dims_[q], 0);
                    c[j] = 1;
                    table_[slot(0, q)][j] = c;
                    table_[slot(q, 0)][j] = c;
                }
        }
    }

    const auto bad = violations();
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid ring:";
        for (const auto& v : bad)
            os << "\n  " << v;
        throw InputError(os.str());
    }
}

void GradedRing::normalize(Coeffs& c) const
{
    for (auto& x : c) {
        x.canonicalize();
        if (field_ == Field::F2) {
            if (x.get_den() != 1)
                throw InputError("coefficients over F2 must be integers");
            mpz_class r = x.get_num() % 2;
            if (r < 0)
                r += 2;
            x = r;
        }
    }
}

const Coeffs& GradedRing::basis_product(std::size_t p, std::size_t i, std::size_t q,
                                        std::size_t j) const
{
    return table_[slot(p, q)][i * dims_[q] + j];
}

std::vector<ProductEntry> GradedRing::nonzero_products() const
{
    std::vector<ProductEntry> out;
    const std::size_t n = top_degree();
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; p + q <= n; ++q)
            for (std::size_t i = 0; i < dims_[p]; ++i)
                for (std::size_t j = 0; j < dims_[q]; ++j) {
                    const Coeffs& c = basis_product(p, i, q, j);
                    if (std::any_of(c.begin(), c.end(), [](const mpq_class& x) { return x != 0; }))
                        out.push_back({p, i, q, j, c});
                }
    return out;
}

RingClass GradedRing::basis(std::size_t degree, std::size_t index) const
{
    if (degree > top_degree() || index >= dims_[degree])
        throw InputError("no basis element " + basis_name(degree, index));
    RingClass x = zero(degree);
    x.coeffs[index] = 1;
    return x;
}

RingClass GradedRing::zero(std::size_t degree) const
{
    if (degree > top_degree())
        throw InputError("degree " + std::to_string(degree) + " exceeds top degree");
    return RingClass{degree, Coeffs(dims_[degree], 0)};
}

RingClass GradedRing::make(std::size_t degree, Coeffs coeffs) const
{
    if (degree > top_degree())
        throw InputError("degree " + std::to_string(degree) + " exceeds top degree");
    if (coeffs.size() != dims_[degree])
        throw InputError("class of degree " + std::to_string(degree) + " needs " +
                         std::to_string(dims_[degree]) + " coefficients, got " +
                         std::to_string(coeffs.size()));
    normalize(coeffs);
    return RingClass{degree, std::move(coeffs)};
}

RingClass GradedRing::add(const RingClass& x, const RingClass& y) const
{
    if (x.degree != y.degree || x.coeffs.size() != y.coeffs.size())
        throw InputError("cannot add classes of different degree");
    Coeffs c(x.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = x.coeffs[i] + y.coeffs[i];
    normalize(c);
    return RingClass{x.degree, std::move(c)};
}

RingClass GradedRing::scale(const mpq_class& s, const RingClass& x) const
{
    Coeffs c(x.coeffs.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = s * x.coeffs[i];
    normalize(c);
    return RingClass{x.degree, std::move(c)};
}

std::vector<std::string> GradedRing::violations() const
{
    std::vector<std::string> out;
    const std::size_t n = top_degree();
    auto label = [](std::size_t p, std::size_t i) { return basis_name(p, i); };

    for (std::size_t q = 0; q <= n; ++q)
        for (std::size_t j = 0; j < dims_[q]; ++j) {
            const RingClass x = basis(q, j);
            if (cup(*this, unit_, x) != x)
                out.push_back("unit law fails: 1*" + label(q, j));
            if (cup(*this, x, unit_) != x)
                out.push_back("unit law fails: " + label(q, j) + "*1");
        }

    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; p + q <= n; ++q)
            for (std::size_t i = 0; i < dims_[p]; ++i)
                for (std::size_t j = 0; j < dims_[q]; ++j) {
                    const Coeffs& xy = basis_product(p, i, q, j);
                    const Coeffs& yx = basis_product(q, j, p, i);
                    const bool odd = field_ == Field::Q && (p * q) % 2 == 1;
                    for (std::size_t k = 0; k < xy.size(); ++k)
                        if (yx[k] != (odd ? mpq_class(-xy[k]) : xy[k])) {
                            out.push_back("graded commutativity fails: " + label(p, i) + "*" +
                                          label(q, j));
                            break;
                        }
                }

    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; p + q <= n; ++q)
            for (std::size_t r = 0; p + q + r <= n; ++r)
                for (std::size_t i = 0; i < dims_[p]; ++i)
                    for (std::size_t j = 0; j < dims_[q]; ++j)
                        for (std::size_t l = 0; l < dims_[r]; ++l) {
                            const RingClass x = basis(p, i), y = basis(q, j), z = basis(r, l);
                            if (cup(*this, cup(*this, x, y), z) != cup(*this, x, cup(*this, y, z)))
                                out.push_back("associativity fails: " + label(p, i) + "," +
                                              label(q, j) + "," + label(r, l));
                        }
    return out;
}

RingClass cup(const GradedRing& r, const RingClass& x, const RingClass& y)
{
    const auto& dims = r.dims();
    if (x.degree > r.top_degree() || y.degree > r.top_degree() ||
        x.coeffs.size() != dims[x.degree] || y.coeffs.size() != dims[y.degree])
        throw InputError("class does not belong to this ring");
    const std::size_t d = x.degree + y.degree;
    if (d > r.top_degree())
        throw InputError("cup product of degree " + std::to_string(d) + " exceeds top degree " +
                         std::to_string(r.top_degree()));
    Coeffs out(dims[d], 0);
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
        if (x.coeffs[i] == 0)
            continue;
        for (std::size_t j = 0; j < y.coeffs.size(); ++j) {
            if (y.coeffs[j] == 0)
                continue;
            const mpq_class s = x.coeffs[i] * y.coeffs[j];
            const Coeffs& e = r.basis_product(x.degree, i, y.degree, j);
            for (std::size_t k = 0; k < out.size(); ++k)
                if (e[k] != 0)
                    out[k] += s * e[k];
        }
    }
    return r.make(d, std::move(out));
}

RingClass power(const GradedRing& r, const RingClass& x, std::size_t m)
{
    if (m * x.degree > r.top_degree())
        throw InputError("power " + std::to_string(m) + " of a degree-" +
                         std::to_string(x.degree) + " class exceeds top degree");
    RingClass acc = r.unit();
    for (std::size_t i = 0; i < m; ++i)
        acc = cup(r, acc, x);
    return acc;
}

bool verify_symplectic_cup_certificate(const GradedRing& r, const RingClass& a, const RingClass& b,
                                       std::size_t n)
{
    if (r.field() != Field::Q)
        throw InputError("symplectic certificates need a rational ring");
    if (n == 0 || r.top_degree() != 2 * n)
        throw InputError("ring top degree " + std::to_string(r.top_degree()) + " != 2n = " +
                         std::to_string(2 * n));
    if (a.degree != 2 || b.degree != 2)
        throw InputError("certificate classes must have degree 2");
    const RingClass an1 = power(r, a, n - 1);
    if (an1.is_zero())
        return false;
    if (4 <= 2 * n && !cup(r, b, b).is_zero())
        return false;
    return !cup(r, an1, b).is_zero();
}

bool verify_cosymplectic_certificate(const GradedRing& r, const std::vector<RingClass>& alphas,
                                     const RingClass& beta, std::size_t ell)
{
    for (const auto& a : alphas)
        if (a.degree != 1)
            throw InputError("cosymplectic one-form classes must have degree 1");
    if (beta.degree != 2)
        throw InputError("cosymplectic two-form class must have degree 2");
    if (alphas.size() + 2 * ell != r.top_degree())
        throw InputError("k + 2*ell = " + std::to_string(alphas.size() + 2 * ell) +
                         " does not match top degree " + std::to_string(r.top_degree()));
    RingClass acc = r.unit();
    for (const auto& a : alphas)
        acc = cup(r, acc, a);
    return !cup(r, acc, power(r, beta, ell)).is_zero();
}

namespace {

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t d)
{
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == d) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

GradedRing torus_ring(std::size_t n)
{
    std::vector<std::vector<std::vector<std::size_t>>> basis(n + 1);
    std::vector<std::size_t> dims(n + 1);
    for (std::size_t d = 0; d <= n; ++d) {
        basis[d] = subsets_of_size(n, d);
        dims[d] = basis[d].size();
    }
    std::vector<ProductEntry> products;
    for (std::size_t p = 0; p <= n; ++p)
        for (std::size_t q = 0; p + q <= n; ++q)
            for (std::size_t i = 0; i < dims[p]; ++i)
                for (std::size_t j = 0; j < dims[q]; ++j) {
                    const auto& s = basis[p][i];
                    const auto& t = basis[q][j];
                    std::vector<std::size_t> u;
                    std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(u));
                    if (u.size() != p + q)
                        continue;
                    // Sign of the shuffle sorting s ++ t.
                    std::size_t inversions = 0;
                    for (auto a : s)
                        for (auto b : t)
                            if (a > b)
                                ++inversions;
                    const auto idx = static_cast<std::size_t>(
                        std::find(basis[p + q].begin(), basis[p + q].end(), u) -
                        basis[p + q].begin());
                    Coeffs c(dims[p + q], 0);
                    c[idx] = inversions % 2 ? -1 : 1;
                    products.push_back({p, i, q, j, std::move(c)});
                }
    return GradedRing(Field::Q, dims, products);
}

GradedRing ring_fixture(const std::string& name)
{
    if (name == "CP2")
        return GradedRing(Field::Q, {1, 0, 1, 0, 1}, {{2, 0, 2, 0, {1}}});
    if (name == "S2xS2") {
        // alpha = e2_0, beta = e2_1; alpha·beta = beta·alpha = top, squares vanish.
        return GradedRing(Field::Q, {1, 0, 2, 0, 1}, {{2, 0, 2, 1, {1}}, {2, 1, 2, 0, {1}}});
    }
    if (name == "T2")
        return torus_ring(2);
    if (name == "T3")
        return torus_ring(3);
    if (name == "T4")
        return torus_ring(4);
    throw InputError("unknown ring fixture '" + name + "'");
}

std::vector<std::string> ring_fixture_names() { return {"CP2", "S2xS2", "T2", "T3", "T4"}; }

std::string coeff_to_string(const mpq_class& c)
{
    mpq_class x = c;
    x.canonicalize();
    return x.get_str();
}

mpq_class parse_coeff(const std::string& text)
{
    mpq_class x;
    std::string t = text;
    if (t.empty() || x.set_str(t, 10) != 0)
        throw InputError("bad rational coefficient '" + text + "'");
    if (x.get_den() == 0)
        throw InputError("zero denominator in '" + text + "'");
    x.canonicalize();
    return x;
}

} // namespace symplobs
