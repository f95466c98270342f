#pragma once

// Exact integer symmetric bilinear forms: inertia, parity, characteristic
// vectors and the bounded characteristic-square search.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "symplobs/bits.hpp"

namespace symplobs {

using IntVec = std::vector<std::int64_t>;

class BilinearForm {
public:
    BilinearForm() = default;
    // Row-major rank×rank entries; throws InputError unless square and symmetric.
    BilinearForm(std::size_t rank, std::vector<std::int64_t> entries);
    explicit BilinearForm(const std::vector<IntVec>& rows);

    static BilinearForm diagonal(const IntVec& diag);
    static BilinearForm hyperbolic();
    static BilinearForm e8();
    BilinearForm negated() const;

    std::size_t rank() const { return rank_; }
    std::int64_t at(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::vector<IntVec> rows() const;

    // Rank-0 form has determinant 1.
    mpz_class determinant() const;
    bool is_unimodular() const;

    // Q -> Pᵀ Q P for a square integer matrix P (row-major, rank×rank).
    BilinearForm congruent(const std::vector<std::int64_t>& p) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    std::size_t rank_ = 0;
    std::vector<std::int64_t> entries_;
};

struct SignatureTriple {
    std::size_t b_plus = 0;
    std::size_t b_minus = 0;
    std::size_t b_zero = 0;

    std::int64_t sigma() const
    {
        return static_cast<std::int64_t>(b_plus) - static_cast<std::int64_t>(b_minus);
    }
    friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

enum class Parity { Even, Odd };
enum class Definiteness { Definite, Indefinite, Degenerate };

struct CharFound {
    IntVec vector;
};
struct CharExhausted {
    std::int64_t bound = 0;
    std::string reason;
};
struct CharImpossible {
    std::string reason;
};
using CharVecResult = std::variant<CharFound, CharExhausted, CharImpossible>;

// xᵀ·Q·y. Throws InputError on dimension mismatch.
std::int64_t evaluate(const BilinearForm& q, std::span<const std::int64_t> x,
                      std::span<const std::int64_t> y);

// Inertia indices by exact rational congruence diagonalization.
SignatureTriple signature(const BilinearForm& q);

Parity parity(const BilinearForm& q);

bool is_characteristic(const BilinearForm& q, std::span<const std::int64_t> c);

// Lexicographically first characteristic c in [-bound, bound]^rank with
// Q(c,c) = target. For unimodular Q a target off σ mod 8 is Impossible.
// When `coset` is given the search is further restricted to c ≡ coset (mod 2).
// Throws PreconditionError when Q is degenerate.
CharVecResult find_characteristic_with_square(const BilinearForm& q, std::int64_t target,
                                              std::int64_t bound,
                                              const std::optional<BitVec>& coset = std::nullopt);

BilinearForm direct_sum(const BilinearForm& a, const BilinearForm& b);

Definiteness definiteness(const BilinearForm& q);

std::string to_string(Parity p);
std::string to_string(Definiteness d);
std::string vec_to_string(std::span<const std::int64_t> v);

} // namespace symplobs
