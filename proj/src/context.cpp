#include "umbral/context.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "umbral/errors.hpp"

namespace umbral {

const char* raising_variant_name(RaisingVariant v) {
    return v == RaisingVariant::plain ? "plain" : "symmetric";
}

struct UmbralContext::State {
    int n;
    Rational h;
    DeltaSeries delta;
    RaisingVariant variant;
    std::string delta_name;
    PowerSeries pincherle;
    PowerSeries pincherle_inv;

    std::mutex cache_mu;
    std::map<std::vector<int>, CliffPoly> basic_cache;

    State(int n_, Rational h_, DeltaSeries d, RaisingVariant v, std::string name)
        : n(n_), h(std::move(h_)), delta(std::move(d)), variant(v), delta_name(std::move(name)),
          pincherle(delta.series().pincherle()), pincherle_inv(pincherle.mult_inverse()) {}
};

UmbralContext::UmbralContext(int n, Rational h, DeltaSeries delta, RaisingVariant variant,
                             std::string delta_name) {
    if (n < 1) throw PreconditionError("dimension must be >= 1");
    st_ = std::make_shared<State>(n, std::move(h), std::move(delta), variant, std::move(delta_name));
}

UmbralContext UmbralContext::make(int n, DeltaKind kind, const Rational& h, RaisingVariant variant) {
    return UmbralContext(n, h, DeltaSeries(catalog_series(kind, h)), variant, delta_kind_name(kind));
}

UmbralContext UmbralContext::custom(int n, std::vector<Rational> coeffs, const Rational& h,
                                    RaisingVariant variant) {
    std::ostringstream name;
    name << "custom:[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) name << (i ? "," : "") << coeffs[i].str();
    name << "]";
    return UmbralContext(n, h, DeltaSeries(PowerSeries::from_coeffs(std::move(coeffs))), variant,
                         name.str());
}

int UmbralContext::dim() const { return st_->n; }
const Rational& UmbralContext::step() const { return st_->h; }
RaisingVariant UmbralContext::variant() const { return st_->variant; }
const std::string& UmbralContext::delta_name() const { return st_->delta_name; }
const PowerSeries& UmbralContext::delta() const { return st_->delta.series(); }
const PowerSeries& UmbralContext::pincherle() const { return st_->pincherle; }
const PowerSeries& UmbralContext::pincherle_inverse() const { return st_->pincherle_inv; }
const Rational& UmbralContext::delta_linear_coeff() const { return st_->delta.linear_coeff(); }

CliffPoly UmbralContext::apply_delta(int j, const CliffPoly& p) const {
    return apply_series(delta(), j, p);
}

CliffPoly UmbralContext::apply_raise(int j, const CliffPoly& p) const {
    CliffPoly first = apply_series(pincherle_inverse(), j, p).mul_var(j);
    if (st_->variant == RaisingVariant::plain) return first;
    CliffPoly second = apply_series(pincherle_inverse(), j, p.mul_var(j));
    return (first + second) * Rational(1, 2);
}

CliffPoly UmbralContext::basic_polynomial(const MultiIndex& alpha) const {
    if (alpha.dim() != st_->n) throw PreconditionError("multi-index length mismatch");
    {
        std::lock_guard<std::mutex> lock(st_->cache_mu);
        auto it = st_->basic_cache.find(alpha.exponents());
        if (it != st_->basic_cache.end()) return it->second;
    }
    CliffPoly result(st_->n);
    if (alpha.is_zero()) {
        result = CliffPoly::scalar(st_->n, Rational(1));
    } else {
        int j = st_->n;
        while (alpha.exponent(j) == 0) --j;
        result = apply_raise(j, basic_polynomial(alpha.bumped(j, -1)));
    }
    std::lock_guard<std::mutex> lock(st_->cache_mu);
    st_->basic_cache.emplace(alpha.exponents(), result);
    return result;
}

CliffPoly UmbralContext::euler_s(const Rational& s, const CliffPoly& p) const {
    CliffPoly acc = p * s;
    for (int j = 1; j <= st_->n; ++j) acc += apply_raise(j, apply_delta(j, p));
    return acc;
}

CliffPoly UmbralContext::sheffer_map(const CliffPoly& p) const {
    if (p.dim() != st_->n) throw PreconditionError("dimension mismatch");
    CliffPoly out(st_->n);
    for (const auto& [alpha, c] : p.terms()) out += basic_polynomial(alpha).left_mul(c);
    return out;
}

CliffPoly UmbralContext::sheffer_inverse(const CliffPoly& p) const {
    if (p.dim() != st_->n) throw PreconditionError("dimension mismatch");
    auto coeffs = expand_in_graded_basis(
        p, [this](const MultiIndex& a) { return basic_polynomial(a); }, delta_linear_coeff());
    CliffPoly out(st_->n);
    for (const auto& [alpha, c] : coeffs) out.add_term(alpha, c);
    return out;
}

std::map<MultiIndex, Multivector, GradedLexDesc> expand_in_graded_basis(
    const CliffPoly& p, const std::function<CliffPoly(const MultiIndex&)>& gen, const Rational& a1) {
    std::map<MultiIndex, Multivector, GradedLexDesc> out;
    CliffPoly rest = p;
    while (!rest.is_zero()) {
        int m = rest.degree();
        Rational scale = a1.pow(m);
        // collect the top-degree layer before mutating `rest`
        std::vector<std::pair<MultiIndex, Multivector>> top;
        for (const auto& [alpha, c] : rest.terms()) {
            if (alpha.total() != m) break; // terms are sorted by descending degree
            top.emplace_back(alpha, c * scale);
        }
        for (const auto& [alpha, c] : top) {
            out.emplace(alpha, c);
            rest -= gen(alpha).left_mul(c);
        }
    }
    return out;
}

std::vector<std::pair<MultiIndex, CliffPoly>> generating_table(const UmbralContext& ctx, int order) {
    if (order < 0) throw PreconditionError("order must be >= 0");
    int n = ctx.dim();
    PowerSeries rev = ctx.delta().reversion();

    // Powers of the reverted indicator, dense to `order`.
    std::vector<std::vector<Rational>> pw;
    pw.push_back([&] {
        std::vector<Rational> one(static_cast<std::size_t>(order) + 1, Rational(0));
        one[0] = Rational(1);
        return one;
    }());
    std::vector<Rational> rev_prefix = rev.prefix(order);
    for (int m = 1; m <= order; ++m) {
        const auto& prev = pw.back();
        std::vector<Rational> cur(static_cast<std::size_t>(order) + 1, Rational(0));
        for (std::size_t i = 0; i <= static_cast<std::size_t>(order); ++i) {
            if (prev[i].is_zero()) continue;
            for (std::size_t jj = 1; i + jj <= static_cast<std::size_t>(order); ++jj)
                cur[i + jj] += prev[i] * rev_prefix[jj];
        }
        pw.push_back(std::move(cur));
    }

    // univariate[j-1][a](x_j) = sum_m x_j^m/m! * [t^a] rev^m
    std::vector<std::vector<CliffPoly>> univariate(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        for (int a = 0; a <= order; ++a) {
            CliffPoly q(n);
            for (int m = 0; m <= a; ++m) {
                Rational c = pw[static_cast<std::size_t>(m)][static_cast<std::size_t>(a)];
                if (c.is_zero()) continue;
                c /= Rational::factorial(static_cast<unsigned long>(m));
                q.add_term(MultiIndex(n).bumped(j, m), Multivector::scalar(n, c));
            }
            univariate[static_cast<std::size_t>(j - 1)].push_back(q);
        }
    }

    std::vector<std::pair<MultiIndex, CliffPoly>> table;
    for (const MultiIndex& alpha : multi_indices_up_to(n, order)) {
        CliffPoly prod = CliffPoly::scalar(n, Rational(1));
        for (int j = 1; j <= n; ++j)
            prod = prod * univariate[static_cast<std::size_t>(j - 1)]
                                    [static_cast<std::size_t>(alpha.exponent(j))];
        table.emplace_back(alpha, std::move(prod));
    }
    return table;
}

std::vector<std::pair<MultiIndex, CliffPoly>> generating_check(const UmbralContext& ctx, int order) {
    auto table = generating_table(ctx, order);
    for (const auto& [alpha, coeff] : table) {
        Rational fact(1);
        for (int j = 1; j <= ctx.dim(); ++j)
            fact *= Rational::factorial(static_cast<unsigned long>(alpha.exponent(j)));
        if (coeff != ctx.basic_polynomial(alpha) * fact.inverse()) {
            std::ostringstream os;
            os << "generating function mismatch at alpha=(";
            for (int j = 1; j <= ctx.dim(); ++j) os << (j > 1 ? "," : "") << alpha.exponent(j);
            os << ")";
            throw PreconditionError(os.str());
        }
    }
    return table;
}

namespace {
void enumerate_exact(int n, int total, std::vector<int>& cur, std::vector<MultiIndex>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(total);
        out.push_back(MultiIndex(cur));
        cur.pop_back();
        return;
    }
    for (int v = total; v >= 0; --v) {
        cur.push_back(v);
        enumerate_exact(n, total - v, cur, out);
        cur.pop_back();
    }
}
} // namespace

std::vector<MultiIndex> multi_indices_of_total(int n, int total) {
    std::vector<MultiIndex> out;
    std::vector<int> cur;
    enumerate_exact(n, total, cur, out);
    return out;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int max_total) {
    std::vector<MultiIndex> out;
    for (int t = 0; t <= max_total; ++t) {
        auto layer = multi_indices_of_total(n, t);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<Blade> all_blades(int n) {
    std::vector<Blade> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits)
        out.push_back(Blade::from_bits(bits));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace umbral
