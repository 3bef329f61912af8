#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "umbral/rational.hpp"

namespace umbral {

/// Basis blade of Cl(0,n): a strictly increasing set of generator indices in
/// 1..n, the empty set being the scalar unit. Stored as a bitmask.
class Blade {
public:
    Blade() : bits_(0) {}

    static Blade unit(int j); // e_j
    static Blade from_indices(const std::vector<int>& indices, int n);
    static Blade from_bits(std::uint64_t bits) { return Blade(bits); }

    std::uint64_t bits() const { return bits_; }
    int grade() const;
    std::vector<int> indices() const;
    bool is_scalar() const { return bits_ == 0; }
    int max_index() const; // 0 for the scalar unit

    friend bool operator==(const Blade& a, const Blade& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Blade& a, const Blade& b) { return a.bits_ != b.bits_; }

    /// Canonical order: by grade, then lexicographic on the index list.
    friend bool operator<(const Blade& a, const Blade& b);

    std::string str() const; // "e[1,3]"; scalar unit prints "1"

private:
    explicit Blade(std::uint64_t bits) : bits_(bits) {}
    std::uint64_t bits_;
};

struct SignedBlade {
    int sign; // +1 or -1
    Blade blade;
};

/// Product of two basis blades in Cl(0,n): e_j e_k = -e_k e_j (j != k),
/// e_j^2 = -1. Sign by transposition counting on the concatenated index
/// sequence plus one -1 per annihilated pair.
SignedBlade blade_mul(const Blade& a, const Blade& b, int n);

/// Element of Cl(0,n) over Rational: sparse map blade -> coefficient with no
/// stored zeros. The dimension n travels with the value and every binary
/// operation checks it.
class Multivector {
public:
    explicit Multivector(int dim);
    static Multivector scalar(int dim, const Rational& c);
    static Multivector basis(int dim, const Blade& b, const Rational& c = Rational(1));

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Blade, Rational>& terms() const { return terms_; }
    Rational coeff(const Blade& b) const;
    Rational scalar_part() const { return coeff(Blade()); }

    Multivector& add_term(const Blade& b, const Rational& c); // accumulates, drops zeros

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& o);
    Multivector& operator-=(const Multivector& o);
    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(const Multivector& a, const Multivector& b);
    friend Multivector operator*(const Multivector& a, const Rational& c);
    friend Multivector operator*(const Rational& c, const Multivector& a) { return a * c; }

    friend bool operator==(const Multivector& a, const Multivector& b);
    friend bool operator!=(const Multivector& a, const Multivector& b) { return !(a == b); }

    Multivector grade_part(int g) const;

    /// Canonical text: terms sorted by (grade, lex blade), "<rational>" for the
    /// scalar term, "<rational>*e[i,j,...]" otherwise.
    std::string str() const;

private:
    int dim_;
    std::map<Blade, Rational> terms_;
};

} // namespace umbral
