#pragma once

#include <memory>
#include <optional>

#include "umbral/almansi.hpp"
#include "umbral/context.hpp"

namespace umbral {

/// Direct-model harmonic oscillator Hamiltonian H' = ((D')^2 - (x')^2)/2;
/// scalar (grade-preserving) operator.
CliffPoly hamiltonian_direct(const UmbralContext& ctx, const CliffPoly& f);

/// Unnormalized ladder pair d_pm = x' -/+ D' (sqrt(2) times the standard
/// D'_pm, which keeps every identity rational).
CliffPoly d_plus(const UmbralContext& ctx, const CliffPoly& f);  // x' - D'
CliffPoly d_minus(const UmbralContext& ctx, const CliffPoly& f); // x' + D'

/// Gaussian-gauge representation of the oscillator: the function p * (ground
/// state) is represented by its polynomial part p and every operator is
/// conjugated accordingly. Lowering becomes O_{x_j}, raising x_j' - O_{x_j}/2,
/// the Dirac pair (D', 2x' - D'), and the Hamiltonian E' + n/2 - Laplacian/2.
/// Everything stays polynomial with rational coefficients.
class GaugeContext {
public:
    explicit GaugeContext(UmbralContext base);

    const UmbralContext& base() const;
    int dim() const { return base().dim(); }

    CliffPoly lower(int j, const CliffPoly& f) const; // O_{x_j}
    CliffPoly raise(int j, const CliffPoly& f) const; // x_j' - O_{x_j}/2

    CliffPoly dirac_minus(const CliffPoly& f) const; // D'
    CliffPoly dirac_plus(const CliffPoly& f) const;  // 2x' - D'

    /// H^g = E' + (n/2) id - (1/2) sum_j O_{x_j}^2.
    CliffPoly hamiltonian(const CliffPoly& f) const;

    /// Umbral Clifford-Hermite polynomial W_alpha = (raise)^alpha 1 (cached);
    /// eigenvector of the Hamiltonian with eigenvalue |alpha| + n/2.
    CliffPoly hermite(const MultiIndex& alpha) const;
    Rational hermite_eigenvalue(const MultiIndex& alpha) const;

    /// Exact inverse of (s - n/2) id + H^g: scales the W-degree-m component by
    /// 1/(s+m). Requires s > 0.
    CliffPoly resolvent(const Rational& s, const CliffPoly& f) const;

    /// Rescaled oscillator weight: (1/(2^k c_k)) resolvent(n/2) ...
    /// resolvent(n/2 + floor((k-1)/2)); the exact inverse of
    /// (dirac_minus)^k (dirac_plus)^k on monogenics.
    CliffPoly q_operator(int k, const CliffPoly& f) const;

private:
    struct State;
    std::shared_ptr<State> st_;
};

/// Splits f with (D')^k f = 0 as f = g_1 + d+ g_2 + ... + (d+)^{k-1} g_k with
/// every g_i monogenic, where d+ = 2x' - D'. Auto-detects k like
/// almansi_decompose when omitted.
AlmansiResult oscillator_almansi(const GaugeContext& gctx, const CliffPoly& f,
                                 std::optional<int> k = std::nullopt);

/// sum_i (d+)^{i-1} parts[i-1].
CliffPoly oscillator_reconstruct(const GaugeContext& gctx, const std::vector<CliffPoly>& parts);

} // namespace umbral
