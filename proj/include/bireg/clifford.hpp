#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "bireg/rational.hpp"

namespace bireg {

/// Basis blade of R_{0,m}, encoded as a bitmask: bit (j-1) set means e_j
/// is a factor. The empty mask is the scalar unit. The set representation
/// fixes the canonical ascending index order.
using BladeMask = std::uint32_t;

constexpr int kMaxGenerators = 16;

int blade_grade(BladeMask mask);

/// Sign of the blade product e_A e_B in R_{0,m} (e_j^2 = -1): transposition
/// count to interleave the index sequences plus one factor -1 per
/// annihilated pair. The result blade is A xor B.
int blade_product_sign(BladeMask a, BladeMask b);

/// Sign of conjugation on a grade-k blade: (-1)^{k(k+1)/2}.
int blade_conjugation_sign(BladeMask mask);

/// "1", "e1", "e13", ... (concatenated ascending indices; unambiguous
/// for m <= 9, which is all the serialized formats support).
std::string blade_key(BladeMask mask);
BladeMask parse_blade_key(std::string_view key, int m);

/// Element of the real Clifford algebra R_{0,m} with exact rational
/// coefficients, stored as a sparse blade -> coefficient map. Zero
/// coefficients are never stored, so structural equality is algebraic
/// equality. Immutable in normal use; all operations are pure.
class Multivector {
public:
    explicit Multivector(int m);

    static Multivector scalar(int m, const Rational& value);
    static Multivector unit(int m, int j);  // e_j, 1 <= j <= m
    static Multivector blade(int m, BladeMask mask, const Rational& coef);

    int generators() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Rational scalar_part() const;
    Rational coefficient(BladeMask mask) const;
    const std::map<BladeMask, Rational>& terms() const { return terms_; }

    Multivector operator+(const Multivector& rhs) const;
    Multivector operator-(const Multivector& rhs) const;
    Multivector operator-() const;
    Multivector operator*(const Multivector& rhs) const;  // geometric product
    Multivector operator*(const Rational& s) const;

    Multivector conjugate() const;

    bool operator==(const Multivector& rhs) const = default;

    std::string str() const;

    /// Adds coef to the blade's coefficient, dropping the term if it
    /// cancels. Used by the polynomial layer during accumulation.
    void accumulate(BladeMask mask, const Rational& coef);

private:
    int m_;
    std::map<BladeMask, Rational> terms_;
};

inline Multivector operator*(const Rational& s, const Multivector& a) { return a * s; }

/// Throws on context mismatch; all binary operations call this.
void require_same_context(const Multivector& a, const Multivector& b);

}  // namespace bireg
