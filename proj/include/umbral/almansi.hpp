#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "umbral/context.hpp"
#include "umbral/poly.hpp"

namespace umbral {

/// Umbral Dirac operator D' = sum_j e_j O_{x_j} (left Clifford action).
CliffPoly dirac(const UmbralContext& ctx, const CliffPoly& f);

/// Umbral vector variable x' = sum_j e_j x_j'.
CliffPoly vector_var(const UmbralContext& ctx, const CliffPoly& f);

/// Umbral Laplacian -(D')^2 = sum_j O_{x_j}^2; scalar (grade-preserving).
CliffPoly laplacian(const UmbralContext& ctx, const CliffPoly& f);

/// I'_s, the exact inverse of E'_s = s id + E': scales each V-degree-m
/// component by 1/(s+m). Requires s > 0.
CliffPoly euler_s_inverse(const UmbralContext& ctx, const Rational& s, const CliffPoly& f);

/// Q'_k = (1/c_k) I'_{n/2} I'_{n/2+1} ... I'_{n/2+floor((k-1)/2)} with
/// c_k = (-2)^k floor(k/2)!; the inverse of (D')^k (x')^k on monogenics.
CliffPoly q_operator(const UmbralContext& ctx, int k, const CliffPoly& f);

struct AlmansiResult {
    std::vector<CliffPoly> components; // f_1 .. f_k, zero components kept
    int k() const { return static_cast<int>(components.size()); }
};

/// Splits a k-polymonogenic f as f = f_1 + x' f_2 + ... + (x')^{k-1} f_k with
/// every f_i monogenic. If k is omitted it is the smallest power with
/// (D')^k f = 0 (at most deg f + 1); if supplied, (D')^k f = 0 is verified.
AlmansiResult almansi_decompose(const UmbralContext& ctx, const CliffPoly& f,
                                std::optional<int> k = std::nullopt);

/// sum_i (x')^{i-1} parts[i-1]; k-polymonogenic whenever all parts are
/// monogenic.
CliffPoly almansi_reconstruct(const UmbralContext& ctx, const std::vector<CliffPoly>& parts);

/// Canonical exact basis of { p in span{V_alpha b : |alpha| = degree, b blade}
/// : D' p = 0 }, by rational nullspace elimination of the restricted Dirac
/// map. Basis vectors are RREF-normalized in graded-lex column order.
std::vector<CliffPoly> monogenic_basis(const UmbralContext& ctx, int degree);

/// Fischer decomposition of an E'-homogeneous p of degree k:
/// p = sum_j (x')^j m_j with m_j monogenic; returns m_0 .. m_k.
std::vector<CliffPoly> fischer_decompose(const UmbralContext& ctx, const CliffPoly& p);

/// Splits an umbral-harmonic f as f = f1 + x' f0 with f1, f0 monogenic:
/// f0 = Q'_1 D' f, f1 = f - x' f0. Returns (f1, f0).
std::pair<CliffPoly, CliffPoly> harmonic_split(const UmbralContext& ctx, const CliffPoly& f);

namespace detail {

/// The Almansi recursion over an abstract (lower, raise, weight) ladder; the
/// ordinary decomposition uses (D', x', Q'_k) and the oscillator one uses
/// (D', 2x'-D', rescaled resolvent products).
struct LadderOps {
    std::function<CliffPoly(const CliffPoly&)> lower;
    std::function<CliffPoly(const CliffPoly&)> raise;
    std::function<CliffPoly(int, const CliffPoly&)> weight;
};

AlmansiResult almansi_generic(const LadderOps& ops, const CliffPoly& f, std::optional<int> k);

} // namespace detail

} // namespace umbral
