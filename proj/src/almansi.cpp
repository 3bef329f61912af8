#include "umbral/almansi.hpp"

#include <algorithm>
#include <map>

#include "umbral/errors.hpp"
#include "umbral/linalg.hpp"

namespace umbral {

CliffPoly dirac(const UmbralContext& ctx, const CliffPoly& f) {
    int n = ctx.dim();
    if (f.dim() != n) throw PreconditionError("dimension mismatch");
    CliffPoly acc(n);
    for (int j = 1; j <= n; ++j)
        acc += ctx.apply_delta(j, f).left_mul(Multivector::basis(n, Blade::unit(j)));
    return acc;
}

CliffPoly vector_var(const UmbralContext& ctx, const CliffPoly& f) {
    int n = ctx.dim();
    if (f.dim() != n) throw PreconditionError("dimension mismatch");
    CliffPoly acc(n);
    for (int j = 1; j <= n; ++j)
        acc += ctx.apply_raise(j, f).left_mul(Multivector::basis(n, Blade::unit(j)));
    return acc;
}

CliffPoly laplacian(const UmbralContext& ctx, const CliffPoly& f) {
    return -dirac(ctx, dirac(ctx, f));
}

CliffPoly euler_s_inverse(const UmbralContext& ctx, const Rational& s, const CliffPoly& f) {
    if (s.sign() <= 0) throw PreconditionError("euler_s_inverse requires s > 0");
    auto coeffs = expand_in_graded_basis(
        f, [&ctx](const MultiIndex& a) { return ctx.basic_polynomial(a); },
        ctx.delta_linear_coeff());
    CliffPoly out(ctx.dim());
    for (const auto& [alpha, c] : coeffs) {
        Rational scale = (s + Rational(alpha.total())).inverse();
        out += ctx.basic_polynomial(alpha).left_mul(c * scale);
    }
    return out;
}

CliffPoly q_operator(const UmbralContext& ctx, int k, const CliffPoly& f) {
    if (k < 1) throw PreconditionError("q_operator requires k >= 1");
    Rational c_k = Rational(-2).pow(k) * Rational::factorial(static_cast<unsigned long>(k / 2));
    Rational half_n(ctx.dim(), 2);
    auto coeffs = expand_in_graded_basis(
        f, [&ctx](const MultiIndex& a) { return ctx.basic_polynomial(a); },
        ctx.delta_linear_coeff());
    CliffPoly out(ctx.dim());
    for (const auto& [alpha, c] : coeffs) {
        Rational denom = c_k;
        for (int i = 0; i <= (k - 1) / 2; ++i)
            denom *= half_n + Rational(i) + Rational(alpha.total());
        out += ctx.basic_polynomial(alpha).left_mul(c * denom.inverse());
    }
    return out;
}

namespace detail {

AlmansiResult almansi_generic(const LadderOps& ops, const CliffPoly& f, std::optional<int> k_opt) {
    int k;
    if (k_opt) {
        k = *k_opt;
        if (k < 0) throw PreconditionError("k must be >= 0");
        CliffPoly d = f;
        for (int i = 0; i < k && !d.is_zero(); ++i) d = ops.lower(d);
        if (!d.is_zero())
            throw PreconditionError("input is not polymonogenic of the supplied degree k");
    } else {
        // delta operators lower degree by exactly one, so k <= deg f + 1
        int bound = f.degree() + 1;
        CliffPoly d = f;
        k = 0;
        while (!d.is_zero()) {
            d = ops.lower(d);
            ++k;
            if (k > bound) throw PreconditionError("lowering operator failed to annihilate input");
        }
    }

    AlmansiResult res;
    res.components.assign(static_cast<std::size_t>(k), CliffPoly(f.dim()));
    CliffPoly g = f;
    for (int i = k; i >= 1; --i) {
        CliffPoly d = g;
        for (int t = 0; t < i - 1; ++t) d = ops.lower(d);
        CliffPoly part = (i == 1) ? d : ops.weight(i - 1, d);
        CliffPoly lifted = part;
        for (int t = 0; t < i - 1; ++t) lifted = ops.raise(lifted);
        g -= lifted;
        res.components[static_cast<std::size_t>(i - 1)] = std::move(part);
    }
    return res;
}

} // namespace detail

AlmansiResult almansi_decompose(const UmbralContext& ctx, const CliffPoly& f,
                                std::optional<int> k) {
    detail::LadderOps ops{
        [&ctx](const CliffPoly& p) { return dirac(ctx, p); },
        [&ctx](const CliffPoly& p) { return vector_var(ctx, p); },
        [&ctx](int kk, const CliffPoly& p) { return q_operator(ctx, kk, p); },
    };
    return detail::almansi_generic(ops, f, k);
}

CliffPoly almansi_reconstruct(const UmbralContext& ctx, const std::vector<CliffPoly>& parts) {
    CliffPoly acc(ctx.dim());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CliffPoly lifted = parts[i];
        for (std::size_t t = 0; t < i; ++t) lifted = vector_var(ctx, lifted);
        acc += lifted;
    }
    return acc;
}

std::vector<CliffPoly> monogenic_basis(const UmbralContext& ctx, int degree) {
    if (degree < 0) throw PreconditionError("degree must be >= 0");
    int n = ctx.dim();
    const auto alphas = multi_indices_of_total(n, degree);
    const auto blades = all_blades(n);

    std::vector<CliffPoly> col_polys;
    col_polys.reserve(alphas.size() * blades.size());
    for (const auto& alpha : alphas) {
        CliffPoly v = ctx.basic_polynomial(alpha);
        for (const auto& b : blades) col_polys.push_back(v.left_mul(Multivector::basis(n, b)));
    }

    // image coordinates: monomial (alpha, blade) pairs discovered on the fly
    std::map<std::pair<std::vector<int>, std::uint64_t>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> col_entries(col_polys.size());
    for (std::size_t c = 0; c < col_polys.size(); ++c) {
        CliffPoly image = dirac(ctx, col_polys[c]);
        for (const auto& [a, mv] : image.terms())
            for (const auto& [b, coeff] : mv.terms()) {
                auto key = std::make_pair(a.exponents(), b.bits());
                auto [it, inserted] = row_of.emplace(key, row_of.size());
                col_entries[c].emplace_back(it->second, coeff);
            }
    }

    RatMatrix m(row_of.size(), RatRow(col_polys.size(), Rational(0)));
    for (std::size_t c = 0; c < col_polys.size(); ++c)
        for (const auto& [r, coeff] : col_entries[c]) m[r][c] = coeff;

    RatMatrix kernel = nullspace(m, col_polys.size());
    std::vector<CliffPoly> basis;
    basis.reserve(kernel.size());
    for (const auto& v : kernel) {
        CliffPoly p(n);
        for (std::size_t c = 0; c < col_polys.size(); ++c)
            if (!v[c].is_zero()) p += col_polys[c] * v[c];
        basis.push_back(std::move(p));
    }
    return basis;
}

std::vector<CliffPoly> fischer_decompose(const UmbralContext& ctx, const CliffPoly& p) {
    if (p.dim() != ctx.dim()) throw PreconditionError("dimension mismatch");
    if (p.is_zero()) return {p};
    auto coeffs = expand_in_graded_basis(
        p, [&ctx](const MultiIndex& a) { return ctx.basic_polynomial(a); },
        ctx.delta_linear_coeff());
    int k = coeffs.begin()->first.total();
    for (const auto& [alpha, c] : coeffs)
        if (alpha.total() != k) throw PreconditionError("input is not E'-homogeneous");
    if (ctx.euler_s(Rational(0), p) != p * Rational(k))
        throw PreconditionError("input is not E'-homogeneous");
    AlmansiResult res = almansi_decompose(ctx, p, k + 1);
    return res.components; // m_0 .. m_k
}

std::pair<CliffPoly, CliffPoly> harmonic_split(const UmbralContext& ctx, const CliffPoly& f) {
    if (!laplacian(ctx, f).is_zero()) throw PreconditionError("input is not umbral-harmonic");
    CliffPoly df = dirac(ctx, f);
    CliffPoly f0 = df.is_zero() ? df : q_operator(ctx, 1, df);
    CliffPoly f1 = f - vector_var(ctx, f0);
    return {f1, f0};
}

} // namespace umbral
