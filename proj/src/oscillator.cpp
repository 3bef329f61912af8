#include "umbral/oscillator.hpp"

#include <map>
#include <mutex>

#include "umbral/errors.hpp"

namespace umbral {

CliffPoly hamiltonian_direct(const UmbralContext& ctx, const CliffPoly& f) {
    CliffPoly dd = dirac(ctx, dirac(ctx, f));
    CliffPoly xx = vector_var(ctx, vector_var(ctx, f));
    return (dd - xx) * Rational(1, 2);
}

CliffPoly d_plus(const UmbralContext& ctx, const CliffPoly& f) {
    return vector_var(ctx, f) - dirac(ctx, f);
}

CliffPoly d_minus(const UmbralContext& ctx, const CliffPoly& f) {
    return vector_var(ctx, f) + dirac(ctx, f);
}

struct GaugeContext::State {
    UmbralContext base;
    std::mutex mu;
    std::map<std::vector<int>, CliffPoly> hermite_cache;

    explicit State(UmbralContext b) : base(std::move(b)) {}
};

GaugeContext::GaugeContext(UmbralContext base) : st_(std::make_shared<State>(std::move(base))) {}

const UmbralContext& GaugeContext::base() const { return st_->base; }

CliffPoly GaugeContext::lower(int j, const CliffPoly& f) const { return base().apply_delta(j, f); }

CliffPoly GaugeContext::raise(int j, const CliffPoly& f) const {
    return base().apply_raise(j, f) - base().apply_delta(j, f) * Rational(1, 2);
}

CliffPoly GaugeContext::dirac_minus(const CliffPoly& f) const { return dirac(base(), f); }

CliffPoly GaugeContext::dirac_plus(const CliffPoly& f) const {
    return vector_var(base(), f) * Rational(2) - dirac(base(), f);
}

CliffPoly GaugeContext::hamiltonian(const CliffPoly& f) const {
    const UmbralContext& ctx = base();
    CliffPoly acc = ctx.euler_s(Rational(ctx.dim(), 2), f);
    for (int j = 1; j <= ctx.dim(); ++j)
        acc -= ctx.apply_delta(j, ctx.apply_delta(j, f)) * Rational(1, 2);
    return acc;
}

CliffPoly GaugeContext::hermite(const MultiIndex& alpha) const {
    if (alpha.dim() != dim()) throw PreconditionError("multi-index length mismatch");
    {
        std::lock_guard<std::mutex> lock(st_->mu);
        auto it = st_->hermite_cache.find(alpha.exponents());
        if (it != st_->hermite_cache.end()) return it->second;
    }
    CliffPoly result(dim());
    if (alpha.is_zero()) {
        result = CliffPoly::scalar(dim(), Rational(1));
    } else {
        int j = dim();
        while (alpha.exponent(j) == 0) --j;
        result = raise(j, hermite(alpha.bumped(j, -1)));
    }
    std::lock_guard<std::mutex> lock(st_->mu);
    st_->hermite_cache.emplace(alpha.exponents(), result);
    return result;
}

Rational GaugeContext::hermite_eigenvalue(const MultiIndex& alpha) const {
    return Rational(alpha.total()) + Rational(dim(), 2);
}

CliffPoly GaugeContext::resolvent(const Rational& s, const CliffPoly& f) const {
    if (s.sign() <= 0) throw PreconditionError("resolvent requires s > 0");
    auto coeffs = expand_in_graded_basis(
        f, [this](const MultiIndex& a) { return hermite(a); }, base().delta_linear_coeff());
    CliffPoly out(dim());
    for (const auto& [alpha, c] : coeffs) {
        Rational scale = (s + Rational(alpha.total())).inverse();
        out += hermite(alpha).left_mul(c * scale);
    }
    return out;
}

CliffPoly GaugeContext::q_operator(int k, const CliffPoly& f) const {
    if (k < 1) throw PreconditionError("q_operator requires k >= 1");
    // 2^k c_k = (-4)^k floor(k/2)!
    Rational c_k = Rational(-4).pow(k) * Rational::factorial(static_cast<unsigned long>(k / 2));
    Rational half_n(dim(), 2);
    auto coeffs = expand_in_graded_basis(
        f, [this](const MultiIndex& a) { return hermite(a); }, base().delta_linear_coeff());
    CliffPoly out(dim());
    for (const auto& [alpha, c] : coeffs) {
        Rational denom = c_k;
        for (int i = 0; i <= (k - 1) / 2; ++i)
            denom *= half_n + Rational(i) + Rational(alpha.total());
        out += hermite(alpha).left_mul(c * denom.inverse());
    }
    return out;
}

AlmansiResult oscillator_almansi(const GaugeContext& gctx, const CliffPoly& f,
                                 std::optional<int> k) {
    detail::LadderOps ops{
        [&gctx](const CliffPoly& p) { return gctx.dirac_minus(p); },
        [&gctx](const CliffPoly& p) { return gctx.dirac_plus(p); },
        [&gctx](int kk, const CliffPoly& p) { return gctx.q_operator(kk, p); },
    };
    return detail::almansi_generic(ops, f, k);
}

CliffPoly oscillator_reconstruct(const GaugeContext& gctx, const std::vector<CliffPoly>& parts) {
    CliffPoly acc(gctx.dim());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CliffPoly lifted = parts[i];
        for (std::size_t t = 0; t < i; ++t) lifted = gctx.dirac_plus(lifted);
        acc += lifted;
    }
    return acc;
}

} // namespace umbral
