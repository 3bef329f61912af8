#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "umbral/clifford.hpp"
#include "umbral/rational.hpp"

namespace umbral {

/// Exponent vector of a monomial x1^a1 ... xn^an.
class MultiIndex {
public:
    explicit MultiIndex(int n) : e_(static_cast<std::size_t>(n), 0) {}
    explicit MultiIndex(std::vector<int> exponents);

    int dim() const { return static_cast<int>(e_.size()); }
    int total() const; // |alpha|
    int exponent(int j) const { return e_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& exponents() const { return e_; }

    MultiIndex bumped(int j, int by) const; // exponent(j) += by, result must stay >= 0
    bool is_zero() const { return total() == 0; }

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.e_ == b.e_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.e_ != b.e_; }

private:
    std::vector<int> e_;
};

/// Canonical term order: total degree descending, then lexicographic
/// descending, so x1^3 sorts before x1^2 and x1 before x2.
struct GradedLexDesc {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Clifford-valued polynomial: sparse map multi-index -> Multivector with no
/// stored zero coefficients. Coefficients sit on the left of monomials.
class CliffPoly {
public:
    using TermMap = std::map<MultiIndex, Multivector, GradedLexDesc>;

    explicit CliffPoly(int dim) : dim_(dim) {}
    static CliffPoly scalar(int dim, const Rational& c);
    static CliffPoly monomial(int dim, const MultiIndex& a, const Multivector& c);
    static CliffPoly monomial(int dim, const MultiIndex& a, const Rational& c);
    static CliffPoly variable(int dim, int j); // x_j

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max |alpha| over stored terms; -1 stands in for the zero polynomial.
    int degree() const;
    const TermMap& terms() const { return terms_; }
    Multivector coeff(const MultiIndex& a) const;
    Multivector value_at_zero() const { return coeff(MultiIndex(dim_)); }

    CliffPoly& add_term(const MultiIndex& a, const Multivector& c);

    CliffPoly operator-() const;
    CliffPoly& operator+=(const CliffPoly& o);
    CliffPoly& operator-=(const CliffPoly& o);
    friend CliffPoly operator+(CliffPoly a, const CliffPoly& b) { return a += b; }
    friend CliffPoly operator-(CliffPoly a, const CliffPoly& b) { return a -= b; }
    friend CliffPoly operator*(const CliffPoly& a, const CliffPoly& b);
    friend CliffPoly operator*(const CliffPoly& a, const Rational& c);
    friend CliffPoly operator*(const Rational& c, const CliffPoly& a) { return a * c; }
    /// Left multiplication of every coefficient by m.
    CliffPoly left_mul(const Multivector& m) const;

    friend bool operator==(const CliffPoly& a, const CliffPoly& b);
    friend bool operator!=(const CliffPoly& a, const CliffPoly& b) { return !(a == b); }

    CliffPoly partial(int j) const; // d/dx_j, coefficient-wise
    CliffPoly mul_var(int j) const; // multiplication by x_j
    int max_exponent(int j) const;  // degree in x_j alone

    /// Nonzero homogeneous parts, ascending degree; they sum to the polynomial.
    std::vector<std::pair<int, CliffPoly>> homogeneous_parts() const;

    std::string str() const;

private:
    int dim_;
    TermMap terms_;
};

/// Parses the polynomial grammar (see README). Throws ParseError with 1-based
/// character position on rejection.
CliffPoly parse_poly(std::string_view text, int n);

} // namespace umbral
