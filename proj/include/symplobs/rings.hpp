#pragma once

// Finite graded-commutative rings given by structure constants, over Z/2 or Q.

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symplobs {

enum class Field { F2, Q };

using Coeffs = std::vector<mpq_class>;

struct RingClass {
    std::size_t degree = 0;
    Coeffs coeffs;

    bool is_zero() const;
    friend bool operator==(const RingClass&, const RingClass&) = default;
};

// One structure constant: e^p_i · e^q_j = Σ coeffs[k] e^{p+q}_k.
struct ProductEntry {
    std::size_t p = 0, i = 0, q = 0, j = 0;
    Coeffs coeffs;
};

class GradedRing {
public:
    // Products not listed are zero. If no product involving degree 0 is listed
    // and dims[0] == 1, the degree-0 generator is installed as the unit.
    // Throws InputError listing every violated ring law.
    GradedRing(Field field, std::vector<std::size_t> dims, const std::vector<ProductEntry>& products,
               std::optional<Coeffs> unit = std::nullopt);

    Field field() const { return field_; }
    std::size_t top_degree() const { return dims_.size() - 1; }
    const std::vector<std::size_t>& dims() const { return dims_; }
    const RingClass& unit() const { return unit_; }

    // Product of two basis elements.
    const Coeffs& basis_product(std::size_t p, std::size_t i, std::size_t q, std::size_t j) const;
    // Every nonzero structure constant, in (p, i, q, j) order.
    std::vector<ProductEntry> nonzero_products() const;

    RingClass basis(std::size_t degree, std::size_t index) const;
    RingClass zero(std::size_t degree) const;
    RingClass make(std::size_t degree, Coeffs coeffs) const;
    RingClass add(const RingClass& x, const RingClass& y) const;
    RingClass scale(const mpq_class& s, const RingClass& x) const;

private:
    std::vector<std::string> violations() const;
    void normalize(Coeffs& c) const;
    std::size_t slot(std::size_t p, std::size_t q) const { return p * dims_.size() + q; }

    Field field_;
    std::vector<std::size_t> dims_;
    // table_[slot(p,q)][i * dims[q] + j]
    std::vector<std::vector<Coeffs>> table_;
    RingClass unit_;
};

// Bilinear product; throws InputError when deg x + deg y exceeds the top degree.
RingClass cup(const GradedRing& r, const RingClass& x, const RingClass& y);

// x^m with x^0 the unit.
RingClass power(const GradedRing& r, const RingClass& x, std::size_t m);

// a^{n-1} != 0, b^2 = 0 (when 4 <= 2n) and a^{n-1}·b != 0, over a rational ring of top degree 2n.
bool verify_symplectic_cup_certificate(const GradedRing& r, const RingClass& a, const RingClass& b,
                                       std::size_t n);

// α_1···α_k·β^ℓ != 0 with deg α_i = 1, deg β = 2 and k + 2ℓ equal to the top degree.
bool verify_cosymplectic_certificate(const GradedRing& r, const std::vector<RingClass>& alphas,
                                     const RingClass& beta, std::size_t ell);

// Fixture rings: "CP2", "S2xS2", "T2", "T3", "T4" (rational cohomology).
GradedRing ring_fixture(const std::string& name);
std::vector<std::string> ring_fixture_names();

// H^*(T^n; Q) as an exterior algebra; degree-d basis = d-subsets in lexicographic order.
GradedRing torus_ring(std::size_t n);

std::string coeff_to_string(const mpq_class& c);
mpq_class parse_coeff(const std::string& text);

} // namespace symplobs
