#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/rational.hpp"

namespace umbral {

namespace detail {
class SeriesImpl;
}

/// Formal power series a_0 + a_1 t + a_2 t^2 + ... over Rational, exposed as a
/// total coefficient oracle. Every shift-invariant operator on polynomials is
/// one of these read in the partial derivative of a coordinate. Coefficients
/// are memoized; instances are immutable and cheap to copy.
class PowerSeries {
public:
    using Gen = std::function<Rational(std::int64_t)>;

    static PowerSeries from_oracle(Gen gen);
    /// Finite coefficient list, zero beyond the end.
    static PowerSeries from_coeffs(std::vector<Rational> coeffs);
    static PowerSeries constant(const Rational& c);
    static PowerSeries identity(); // the series t

    Rational coeff(std::int64_t k) const;
    std::vector<Rational> prefix(std::int64_t order) const; // a_0..a_order

    /// Indicator of the operator commutator [Q, x_j]: b_k = (k+1) a_{k+1}.
    PowerSeries pincherle() const;
    /// Multiplicative inverse; requires a_0 != 0.
    PowerSeries mult_inverse() const;
    /// Substitution F(G(t)); requires the inner constant term to vanish.
    PowerSeries compose(const PowerSeries& inner) const;
    /// Compositional inverse; requires a_0 = 0 and a_1 != 0.
    PowerSeries reversion() const;

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const Rational& c);

private:
    explicit PowerSeries(std::shared_ptr<const detail::SeriesImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::SeriesImpl> impl_;
};

/// A delta-operator indicator: a_0 = 0 and a_1 != 0, validated at construction.
class DeltaSeries {
public:
    explicit DeltaSeries(PowerSeries s);
    const PowerSeries& series() const { return s_; }
    const Rational& linear_coeff() const { return a1_; } // a_1

private:
    PowerSeries s_;
    Rational a1_;
};

enum class DeltaKind { derivative, forward, backward, central };

const char* delta_kind_name(DeltaKind k);

/// Indicators of the stock delta operators:
///   derivative  t
///   forward     (e^{ht}-1)/h
///   backward    (1-e^{-ht})/h
///   central     sinh(ht)/h
/// h must be positive (ignored for derivative).
PowerSeries catalog_series(DeltaKind kind, const Rational& h);

/// Indicator e^{ct} of the shift x_j -> x_j + c.
PowerSeries shift_series(const Rational& c);

/// Applies sum_k a_k d^k/dx_j^k to p; finite because high derivatives vanish.
CliffPoly apply_series(const PowerSeries& s, int j, const CliffPoly& p);

} // namespace umbral
