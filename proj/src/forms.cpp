#include "symplobs/forms.hpp"

#include <cstdlib>
#include <limits>
#include <sstream>

#include "symplobs/error.hpp"

namespace symplobs {

BilinearForm::BilinearForm(std::size_t rank, std::vector<std::int64_t> entries)
    : rank_(rank), entries_(std::move(entries))
{
    if (entries_.size() != rank_ * rank_)
        throw InputError("form entries: expected " + std::to_string(rank_ * rank_) + " values, got " +
                         std::to_string(entries_.size()));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = i + 1; j < rank_; ++j)
            if (at(i, j) != at(j, i))
                throw InputError("form is not symmetric at (" + std::to_string(i) + "," +
                                 std::to_string(j) + ")");
}

BilinearForm::BilinearForm(const std::vector<IntVec>& rows)
{
    rank_ = rows.size();
    entries_.reserve(rank_ * rank_);
    for (const auto& r : rows) {
        if (r.size() != rank_)
            throw InputError("form is not square");
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    *this = BilinearForm(rank_, std::move(entries_));
}

BilinearForm BilinearForm::diagonal(const IntVec& diag)
{
    const std::size_t n = diag.size();
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        e[i * n + i] = diag[i];
    return BilinearForm(n, std::move(e));
}

BilinearForm BilinearForm::hyperbolic() { return BilinearForm(2, {0, 1, 1, 0}); }

BilinearForm BilinearForm::e8()
{
    // Gram matrix of the E8 root lattice: chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
    std::vector<std::int64_t> e(64, 0);
    auto link = [&](int a, int b) {
        e[a * 8 + b] = -1;
        e[b * 8 + a] = -1;
    };
    for (int i = 0; i < 8; ++i)
        e[i * 8 + i] = 2;
    for (int i = 0; i < 6; ++i)
        link(i, i + 1);
    link(4, 7);
    return BilinearForm(8, std::move(e));
}

BilinearForm BilinearForm::negated() const
{
    auto e = entries_;
    for (auto& x : e)
        x = -x;
    return BilinearForm(rank_, std::move(e));
}

std::vector<IntVec> BilinearForm::rows() const
{
    std::vector<IntVec> out(rank_, IntVec(rank_));
    for (std::size_t i = 0; i < rank_; ++i)
        for (std::size_t j = 0; j < rank_; ++j)
            out[i][j] = at(i, j);
    return out;
}

mpz_class BilinearForm::determinant() const
{
    const std::size_t n = rank_;
    if (n == 0)
        return 1;
    // Fraction-free Bareiss elimination.
    std::vector<mpz_class> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        a[i] = static_cast<long>(entries_[i]);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a[swap * n + k] == 0)
                ++swap;
            if (swap == n)
                return 0;
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a[k * n + j], a[swap * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
            }
        }
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

bool BilinearForm::is_unimodular() const
{
    const mpz_class d = determinant();
    return d == 1 || d == -1;
}

BilinearForm BilinearForm::congruent(const std::vector<std::int64_t>& p) const
{
    const std::size_t n = rank_;
    if (p.size() != n * n)
        throw InputError("change of basis has wrong size");
    std::vector<std::int64_t> qp(n * n, 0), out(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                qp[i * n + j] += at(i, k) * p[k * n + j];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out[i * n + j] += p[k * n + i] * qp[k * n + j];
    return BilinearForm(n, std::move(out));
}

std::int64_t evaluate(const BilinearForm& q, std::span<const std::int64_t> x,
                      std::span<const std::int64_t> y)
{
    const std::size_t n = q.rank();
    if (x.size() != n || y.size() != n)
        throw InputError("evaluate: vectors must have length " + std::to_string(n));
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i] == 0)
            continue;
        std::int64_t row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += q.at(i, j) * y[j];
        total += x[i] * row;
    }
    return total;
}

SignatureTriple signature(const BilinearForm& q)
{
    const std::size_t n = q.rank();
    std::vector<mpq_class> a(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        a[i] = static_cast<long>(q.entries()[i]);
    auto el = [&](std::size_t i, std::size_t j) -> mpq_class& { return a[i * n + j]; };

    SignatureTriple out;
    std::vector<std::size_t> live(n);
    for (std::size_t i = 0; i < n; ++i)
        live[i] = i;

    while (!live.empty()) {
        std::optional<std::size_t> pivot;
        for (std::size_t idx = 0; idx < live.size(); ++idx)
            if (el(live[idx], live[idx]) != 0) {
                pivot = idx;
                break;
            }
        if (!pivot) {
            // Zero diagonal: look for a nonzero off-diagonal pair (i,j) and replace
            // e_i by e_i + e_j, which puts 2·a_ij on the diagonal.
            std::optional<std::pair<std::size_t, std::size_t>> pair;
            for (std::size_t x = 0; x < live.size() && !pair; ++x)
                for (std::size_t y = x + 1; y < live.size(); ++y)
                    if (el(live[x], live[y]) != 0) {
                        pair = {x, y};
                        break;
                    }
            if (!pair) {
                out.b_zero += live.size();
                break;
            }
            const std::size_t i = live[pair->first], j = live[pair->second];
            for (std::size_t k = 0; k < n; ++k)
                el(i, k) += el(j, k);
            for (std::size_t k = 0; k < n; ++k)
                el(k, i) += el(k, j);
            pivot = pair->first;
        }
        const std::size_t p = live[*pivot];
        const mpq_class d = el(p, p);
        if (d > 0)
            ++out.b_plus;
        else
            ++out.b_minus;
        live.erase(live.begin() + static_cast<std::ptrdiff_t>(*pivot));
        for (std::size_t r : live) {
            if (el(r, p) == 0)
                continue;
            const mpq_class factor = el(r, p) / d;
            for (std::size_t c : live)
                el(r, c) -= factor * el(p, c);
        }
    }
    return out;
}

Parity parity(const BilinearForm& q)
{
    for (std::size_t i = 0; i < q.rank(); ++i)
        if (q.at(i, i) % 2 != 0)
            return Parity::Odd;
    return Parity::Even;
}

bool is_characteristic(const BilinearForm& q, std::span<const std::int64_t> c)
{
    const std::size_t n = q.rank();
    if (c.size() != n)
        throw InputError("is_characteristic: vector must have length " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < n; ++j)
            s += q.at(i, j) * c[j];
        if (((s - q.at(i, i)) % 2) != 0)
            return false;
    }
    return true;
}

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t m)
{
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

// Unique solution of (Q mod 2)·w = diag(Q) mod 2 when Q mod 2 is invertible.
std::optional<BitVec> characteristic_coset(const BilinearForm& q)
{
    const std::size_t n = q.rank();
    std::vector<BitVec> m(n, BitVec(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = static_cast<std::uint8_t>(mod_floor(q.at(i, j), 2));
        m[i][n] = static_cast<std::uint8_t>(mod_floor(q.at(i, i), 2));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t r = col;
        while (r < n && !m[r][col])
            ++r;
        if (r == n)
            return std::nullopt;
        std::swap(m[r], m[col]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != col && m[i][col])
                for (std::size_t j = col; j <= n; ++j)
                    m[i][j] ^= m[col][j];
    }
    BitVec w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = m[i][n];
    return w;
}

class CharSearch {
public:
    CharSearch(const BilinearForm& q, std::int64_t target, std::vector<IntVec> values,
               bool leaf_check)
        : q_(q), n_(q.rank()), target_(target), values_(std::move(values)), leaf_check_(leaf_check),
          linear_(n_, 0), current_(n_, 0), off_suffix_(n_ + 1, 0)
    {
        for (std::size_t d = n_; d-- > 0;) {
            std::int64_t extra = 0;
            for (std::size_t k = d + 1; k < n_; ++k)
                extra += 2 * static_cast<std::int64_t>(std::llabs(q_.at(d, k))) * max_abs(d) * max_abs(k);
            off_suffix_[d] = off_suffix_[d + 1] + extra;
        }
    }

    std::optional<IntVec> run()
    {
        if (descend(0, 0))
            return current_;
        return std::nullopt;
    }

private:
    std::int64_t max_abs(std::size_t j) const
    {
        std::int64_t m = 0;
        for (auto v : values_[j])
            m = std::max<std::int64_t>(m, std::llabs(v));
        return m;
    }

    bool descend(std::size_t depth, std::int64_t partial)
    {
        if (depth == n_) {
            if (partial != target_)
                return false;
            return !leaf_check_ || is_characteristic(q_, current_);
        }
        // Interval bound on the contribution of the unassigned coordinates.
        std::int64_t lo = partial - off_suffix_[depth];
        std::int64_t hi = partial + off_suffix_[depth];
        for (std::size_t j = depth; j < n_; ++j) {
            std::int64_t mn = std::numeric_limits<std::int64_t>::max();
            std::int64_t mx = std::numeric_limits<std::int64_t>::min();
            for (auto v : values_[j]) {
                const std::int64_t t = 2 * linear_[j] * v + q_.at(j, j) * v * v;
                mn = std::min(mn, t);
                mx = std::max(mx, t);
            }
            lo += mn;
            hi += mx;
        }
        if (target_ < lo || target_ > hi)
            return false;

        for (auto v : values_[depth]) {
            const std::int64_t next =
                partial + 2 * linear_[depth] * v + q_.at(depth, depth) * v * v;
            current_[depth] = v;
            for (std::size_t j = depth + 1; j < n_; ++j)
                linear_[j] += q_.at(depth, j) * v;
            const bool hit = descend(depth + 1, next);
            for (std::size_t j = depth + 1; j < n_; ++j)
                linear_[j] -= q_.at(depth, j) * v;
            if (hit)
                return true;
        }
        current_[depth] = 0;
        return false;
    }

    const BilinearForm& q_;
    std::size_t n_;
    std::int64_t target_;
    std::vector<IntVec> values_;
    bool leaf_check_;
    IntVec linear_;
    IntVec current_;
    std::vector<std::int64_t> off_suffix_;
};

IntVec box_values(std::int64_t bound, std::optional<std::uint8_t> parity)
{
    IntVec vals;
    for (std::int64_t v = -bound; v <= bound; ++v)
        if (!parity || mod_floor(v, 2) == *parity)
            vals.push_back(v);
    return vals;
}

} // namespace

CharVecResult find_characteristic_with_square(const BilinearForm& q, std::int64_t target,
                                              std::int64_t bound,
                                              const std::optional<BitVec>& coset)
{
    if (bound < 0)
        throw InputError("search bound must be nonnegative");
    const std::size_t n = q.rank();
    if (coset && coset->size() != n)
        throw InputError("coset vector must have length " + std::to_string(n));
    const SignatureTriple sig = signature(q);
    if (sig.b_zero > 0)
        throw PreconditionError("characteristic search requires a nondegenerate form");

    const mpz_class det = q.determinant();
    const bool unimodular = (det == 1 || det == -1);
    if (unimodular && mod_floor(target - sig.sigma(), 8) != 0) {
        std::ostringstream os;
        os << "c.c = " << target << " but sigma = " << sig.sigma() << " and "
           << mod_floor(target, 8) << " != " << mod_floor(sig.sigma(), 8)
           << " (mod 8) for every characteristic c of a unimodular form";
        return CharImpossible{os.str()};
    }

    std::int64_t weight = 0;
    for (auto e : q.entries())
        weight += std::llabs(e);
    if (bound > 0 && weight > 0 &&
        static_cast<long double>(weight) * bound * bound * 4 > 4.0e18L)
        throw InputError("search bound too large for exact 64-bit evaluation");

    const auto forced = characteristic_coset(q);
    std::vector<IntVec> values(n);
    bool leaf_check = true;
    std::string note;
    if (forced) {
        // Q mod 2 invertible: characteristic vectors are exactly the coset forced + 2Z^n.
        if (coset && *coset != *forced) {
            return CharExhausted{bound, "requested coset " + bits_to_string(*coset) +
                                            " is not characteristic (characteristic coset is " +
                                            bits_to_string(*forced) + ")"};
        }
        for (std::size_t j = 0; j < n; ++j)
            values[j] = box_values(bound, (*forced)[j]);
        leaf_check = false;
    } else {
        for (std::size_t j = 0; j < n; ++j)
            values[j] = box_values(bound, coset ? std::optional<std::uint8_t>((*coset)[j])
                                                : std::nullopt);
    }

    CharSearch search(q, target, std::move(values), leaf_check);
    if (auto c = search.run())
        return CharFound{std::move(*c)};

    std::ostringstream os;
    os << "no characteristic c with c.c = " << target << " in [-" << bound << "," << bound
       << "]^" << n;
    if (!unimodular)
        os << "; form is not unimodular (det = " << det.get_str() << "), mod-8 test disabled";
    return CharExhausted{bound, os.str()};
}

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b)
{
    const std::size_t n = a.rank() + b.rank();
    std::vector<std::int64_t> e(n * n, 0);
    for (std::size_t i = 0; i < a.rank(); ++i)
        for (std::size_t j = 0; j < a.rank(); ++j)
            e[i * n + j] = a.at(i, j);
    const std::size_t o = a.rank();
    for (std::size_t i = 0; i < b.rank(); ++i)
        for (std::size_t j = 0; j < b.rank(); ++j)
            e[(o + i) * n + o + j] = b.at(i, j);
    return BilinearForm(n, std::move(e));
}

Definiteness definiteness(const BilinearForm& q)
{
    const SignatureTriple s = signature(q);
    if (s.b_zero > 0)
        return Definiteness::Degenerate;
    if (s.b_plus == 0 || s.b_minus == 0)
        return Definiteness::Definite;
    return Definiteness::Indefinite;
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string to_string(Definiteness d)
{
    switch (d) {
    case Definiteness::Definite:
        return "definite";
    case Definiteness::Indefinite:
        return "indefinite";
    case Definiteness::Degenerate:
        return "degenerate";
    }
    return "?";
}

std::string vec_to_string(std::span<const std::int64_t> v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

} // namespace symplobs
