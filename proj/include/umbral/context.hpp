#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

/// Which raising operator represents the position side of the Weyl pair:
///   plain      x_j' = x_j (O')^{-1}
///   symmetric  x_j' = ( x_j (O')^{-1} + (O')^{-1} x_j ) / 2
enum class RaisingVariant { plain, symmetric };

const char* raising_variant_name(RaisingVariant v);

/// Fixes the operator semantics of the whole system: dimension n, step h, the
/// delta-operator indicator (applied per coordinate), and the raising variant.
/// Derived series (Pincherle derivative and its multiplicative inverse) and the
/// basic-polynomial cache are shared across copies; the context is immutable.
class UmbralContext {
public:
    UmbralContext(int n, Rational h, DeltaSeries delta, RaisingVariant variant,
                  std::string delta_name);
    static UmbralContext make(int n, DeltaKind kind, const Rational& h, RaisingVariant variant);
    static UmbralContext custom(int n, std::vector<Rational> coeffs, const Rational& h,
                                RaisingVariant variant);

    int dim() const;
    const Rational& step() const;
    RaisingVariant variant() const;
    const std::string& delta_name() const;
    const PowerSeries& delta() const;
    const PowerSeries& pincherle() const;         // O'
    const PowerSeries& pincherle_inverse() const; // (O')^{-1}
    const Rational& delta_linear_coeff() const;   // a_1 of the delta series

    /// Lowering operator O_{x_j}; drops degree by exactly one on nonconstants.
    CliffPoly apply_delta(int j, const CliffPoly& p) const;
    /// Raising operator x_j' in the chosen variant; raises degree by one.
    CliffPoly apply_raise(int j, const CliffPoly& p) const;

    /// V_alpha = (x')^alpha 1 (Rodrigues recursion, cached).
    CliffPoly basic_polynomial(const MultiIndex& alpha) const;

    /// E'_s = s id + sum_j x_j' O_{x_j}; V_alpha is an eigenvector with
    /// eigenvalue s + |alpha|.
    CliffPoly euler_s(const Rational& s, const CliffPoly& p) const;

    /// Linear extension of x^alpha -> V_alpha and its inverse (triangular
    /// top-degree elimination). They compose to the identity.
    CliffPoly sheffer_map(const CliffPoly& p) const;
    CliffPoly sheffer_inverse(const CliffPoly& p) const;

private:
    struct State;
    std::shared_ptr<State> st_;
};

/// Coefficients c_alpha with p = sum over alpha of c_alpha * gen(alpha), for a
/// degree-graded basis whose degree-m member has leading monomial
/// a1^{-m} x^alpha. Used for the Sheffer inverse and the oscillator basis.
std::map<MultiIndex, Multivector, GradedLexDesc> expand_in_graded_basis(
    const CliffPoly& p, const std::function<CliffPoly(const MultiIndex&)>& gen, const Rational& a1);

/// Coefficients of exp(x . Orev(t)) (Orev the compositional inverse of the
/// delta indicator, taken per coordinate) jointly to total order N in t,
/// listed by ascending total degree of alpha.
std::vector<std::pair<MultiIndex, CliffPoly>> generating_table(const UmbralContext& ctx, int order);

/// generating_table plus the exactness assertion coefficient(alpha) ==
/// V_alpha / alpha!; throws PreconditionError naming the first mismatching
/// alpha. Holds for the plain raising variant, whose V form the basic
/// sequence of the delta operator.
std::vector<std::pair<MultiIndex, CliffPoly>> generating_check(const UmbralContext& ctx, int order);

/// All multi-indices of the given total degree / up to it, graded-lex order.
std::vector<MultiIndex> multi_indices_of_total(int n, int total);
std::vector<MultiIndex> multi_indices_up_to(int n, int max_total);

/// All 2^n blades of Cl(0,n) in canonical (grade, lex) order.
std::vector<Blade> all_blades(int n);

} // namespace umbral
