#include "umbral/series.hpp"

#include <mutex>

#include "umbral/errors.hpp"

namespace umbral {

namespace detail {

class SeriesImpl {
public:
    virtual ~SeriesImpl() = default;

    Rational coeff(std::int64_t k) const {
        if (k < 0) return Rational(0);
        std::lock_guard<std::mutex> lock(mu_);
        if (static_cast<std::int64_t>(memo_.size()) <= k) extend(memo_, k);
        return memo_[static_cast<std::size_t>(k)];
    }

protected:
    /// Appends coefficients so memo covers 0..upto. Called under the lock.
    virtual void extend(std::vector<Rational>& memo, std::int64_t upto) const = 0;

private:
    mutable std::mutex mu_;
    mutable std::vector<Rational> memo_;
};

namespace {

// Truncated product, result indices 0..order.
std::vector<Rational> conv_trunc(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

// F(G) truncated at `order`; g[0] must be zero.
std::vector<Rational> compose_dense(const std::vector<Rational>& f, const std::vector<Rational>& g,
                                    std::size_t order) {
    std::vector<Rational> out(order + 1, Rational(0));
    std::vector<Rational> gpow(order + 1, Rational(0));
    gpow[0] = Rational(1); // G^0
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) gpow = conv_trunc(gpow, g, order);
        if (m < f.size() && !f[m].is_zero())
            for (std::size_t k = m; k <= order; ++k) out[k] += f[m] * gpow[k];
    }
    return out;
}

class OracleImpl final : public SeriesImpl {
public:
    explicit OracleImpl(PowerSeries::Gen gen) : gen_(std::move(gen)) {}

protected:
    void extend(std::vector<Rational>& memo, std::int64_t upto) const override {
        for (std::int64_t k = static_cast<std::int64_t>(memo.size()); k <= upto; ++k)
            memo.push_back(gen_(k));
    }

private:
    PowerSeries::Gen gen_;
};

class CoeffListImpl final : public SeriesImpl {
public:
    explicit CoeffListImpl(std::vector<Rational> c) : c_(std::move(c)) {}

protected:
    void extend(std::vector<Rational>& memo, std::int64_t upto) const override {
        for (std::int64_t k = static_cast<std::int64_t>(memo.size()); k <= upto; ++k)
            memo.push_back(k < static_cast<std::int64_t>(c_.size()) ? c_[static_cast<std::size_t>(k)]
                                                                    : Rational(0));
    }

private:
    std::vector<Rational> c_;
};

class InverseImpl final : public SeriesImpl {
public:
    InverseImpl(PowerSeries src, Rational inv_a0) : src_(std::move(src)), inv_a0_(std::move(inv_a0)) {}

protected:
    void extend(std::vector<Rational>& memo, std::int64_t upto) const override {
        if (memo.empty()) memo.push_back(inv_a0_);
        for (std::int64_t k = static_cast<std::int64_t>(memo.size()); k <= upto; ++k) {
            Rational s(0);
            for (std::int64_t i = 1; i <= k; ++i)
                s += src_.coeff(i) * memo[static_cast<std::size_t>(k - i)];
            memo.push_back(-(inv_a0_ * s));
        }
    }

private:
    PowerSeries src_;
    Rational inv_a0_;
};

class ComposeImpl final : public SeriesImpl {
public:
    ComposeImpl(PowerSeries outer, PowerSeries inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {}

protected:
    void extend(std::vector<Rational>& memo, std::int64_t upto) const override {
        auto full = compose_dense(outer_.prefix(upto), inner_.prefix(upto),
                                  static_cast<std::size_t>(upto));
        for (std::size_t k = memo.size(); k <= static_cast<std::size_t>(upto); ++k)
            memo.push_back(full[k]);
    }

private:
    PowerSeries outer_;
    PowerSeries inner_;
};

class ReversionImpl final : public SeriesImpl {
public:
    explicit ReversionImpl(PowerSeries src) : src_(std::move(src)) {}

protected:
    // Order-by-order solve of F(G(t)) = t: the coefficient of t^k in F(G) is
    // (everything from g_1..g_{k-1}) + f_1 g_k.
    void extend(std::vector<Rational>& memo, std::int64_t upto) const override {
        auto f = src_.prefix(upto);
        Rational inv_f1 = f.size() > 1 ? f[1].inverse() : Rational(0);
        std::vector<Rational> g(static_cast<std::size_t>(upto) + 1, Rational(0));
        if (upto >= 1) g[1] = inv_f1;
        for (std::size_t k = 2; k <= static_cast<std::size_t>(upto); ++k) {
            auto fg = compose_dense(f, g, k);
            g[k] = -(fg[k] * inv_f1);
        }
        for (std::size_t k = memo.size(); k <= static_cast<std::size_t>(upto); ++k)
            memo.push_back(g[k]);
    }

private:
    PowerSeries src_;
};

} // namespace

} // namespace detail

PowerSeries PowerSeries::from_oracle(Gen gen) {
    return PowerSeries(std::make_shared<detail::OracleImpl>(std::move(gen)));
}

PowerSeries PowerSeries::from_coeffs(std::vector<Rational> coeffs) {
    return PowerSeries(std::make_shared<detail::CoeffListImpl>(std::move(coeffs)));
}

PowerSeries PowerSeries::constant(const Rational& c) { return from_coeffs({c}); }

PowerSeries PowerSeries::identity() { return from_coeffs({Rational(0), Rational(1)}); }

Rational PowerSeries::coeff(std::int64_t k) const { return impl_->coeff(k); }

std::vector<Rational> PowerSeries::prefix(std::int64_t order) const {
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(order + 1));
    for (std::int64_t k = 0; k <= order; ++k) out.push_back(coeff(k));
    return out;
}

PowerSeries PowerSeries::pincherle() const {
    PowerSeries self = *this;
    return from_oracle([self](std::int64_t k) { return self.coeff(k + 1) * Rational(k + 1); });
}

PowerSeries PowerSeries::mult_inverse() const {
    Rational a0 = coeff(0);
    if (a0.is_zero()) throw PreconditionError("series with zero constant term has no multiplicative inverse");
    return PowerSeries(std::make_shared<detail::InverseImpl>(*this, a0.inverse()));
}

PowerSeries PowerSeries::compose(const PowerSeries& inner) const {
    if (!inner.coeff(0).is_zero())
        throw PreconditionError("composition requires inner series with zero constant term");
    return PowerSeries(std::make_shared<detail::ComposeImpl>(*this, inner));
}

PowerSeries PowerSeries::reversion() const {
    if (!coeff(0).is_zero()) throw PreconditionError("reversion requires zero constant term");
    if (coeff(1).is_zero()) throw PreconditionError("reversion requires nonzero linear term");
    return PowerSeries(std::make_shared<detail::ReversionImpl>(*this));
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    return PowerSeries::from_oracle([a, b](std::int64_t k) { return a.coeff(k) + b.coeff(k); });
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    return PowerSeries::from_oracle([a, b](std::int64_t k) { return a.coeff(k) - b.coeff(k); });
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    return PowerSeries::from_oracle([a, b](std::int64_t k) {
        Rational s(0);
        for (std::int64_t i = 0; i <= k; ++i) s += a.coeff(i) * b.coeff(k - i);
        return s;
    });
}

PowerSeries operator*(const PowerSeries& a, const Rational& c) {
    return PowerSeries::from_oracle([a, c](std::int64_t k) { return a.coeff(k) * c; });
}

DeltaSeries::DeltaSeries(PowerSeries s) : s_(std::move(s)), a1_(s_.coeff(1)) {
    if (!s_.coeff(0).is_zero()) throw PreconditionError("delta operator requires zero constant term");
    if (a1_.is_zero()) throw PreconditionError("delta operator requires nonzero linear term");
}

const char* delta_kind_name(DeltaKind k) {
    switch (k) {
        case DeltaKind::derivative: return "derivative";
        case DeltaKind::forward: return "forward";
        case DeltaKind::backward: return "backward";
        case DeltaKind::central: return "central";
    }
    return "?";
}

PowerSeries catalog_series(DeltaKind kind, const Rational& h) {
    if (kind == DeltaKind::derivative) return PowerSeries::identity();
    if (h.sign() <= 0) throw PreconditionError("step h must be positive");
    switch (kind) {
        case DeltaKind::forward:
            return PowerSeries::from_oracle([h](std::int64_t k) {
                if (k < 1) return Rational(0);
                return h.pow(k - 1) / Rational::factorial(static_cast<unsigned long>(k));
            });
        case DeltaKind::backward:
            return PowerSeries::from_oracle([h](std::int64_t k) {
                if (k < 1) return Rational(0);
                Rational c = h.pow(k - 1) / Rational::factorial(static_cast<unsigned long>(k));
                return k % 2 == 0 ? -c : c;
            });
        case DeltaKind::central:
            return PowerSeries::from_oracle([h](std::int64_t k) {
                if (k < 1 || k % 2 == 0) return Rational(0);
                return h.pow(k - 1) / Rational::factorial(static_cast<unsigned long>(k));
            });
        default: break;
    }
    throw PreconditionError("unknown delta kind");
}

PowerSeries shift_series(const Rational& c) {
    return PowerSeries::from_oracle(
        [c](std::int64_t k) { return c.pow(k) / Rational::factorial(static_cast<unsigned long>(k)); });
}

CliffPoly apply_series(const PowerSeries& s, int j, const CliffPoly& p) {
    if (j < 1 || j > p.dim())
        throw PreconditionError("coordinate " + std::to_string(j) + " out of range 1.." +
                                std::to_string(p.dim()));
    CliffPoly acc(p.dim());
    CliffPoly d = p;
    std::int64_t k = 0;
    while (!d.is_zero()) {
        Rational a = s.coeff(k);
        if (!a.is_zero()) acc += d * a;
        d = d.partial(j);
        ++k;
    }
    return acc;
}

} // namespace umbral
