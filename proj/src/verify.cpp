#include "umbral/verify.hpp"

#include <algorithm>
#include <map>

#include "umbral/errors.hpp"

namespace umbral {

CliffPoly random_poly(Rng& rng, int n, int max_degree) {
    CliffPoly p(n);
    long terms = rng.range(1, 8);
    for (long t = 0; t < terms; ++t) {
        long num = rng.range(-9, 8);
        if (num >= 0) ++num; // uniform over [-9,9] minus 0
        long den = rng.range(1, 3);
        Rational c(num, den);
        std::uint64_t bits = rng.below(std::uint64_t{1} << n);
        MultiIndex alpha(n);
        long total = rng.range(0, max_degree);
        for (long i = 0; i < total; ++i) alpha = alpha.bumped(static_cast<int>(rng.range(1, n)), 1);
        p += CliffPoly::monomial(n, alpha, Multivector::basis(n, Blade::from_bits(bits), c));
    }
    return p;
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::heisenberg: return "heisenberg";
        case Suite::dirac_euler: return "dirac_euler";
        case Suite::sl2: return "sl2";
        case Suite::osp: return "osp";
    }
    return "?";
}

const char* model_name(Model m) { return m == Model::direct ? "direct" : "gauge"; }

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const IdentityCheck& c) { return c.passed || c.informational; });
}

namespace {

class Recorder {
public:
    explicit Recorder(VerifyReport& report) : report_(report) {}

    void record(const std::string& name, const CliffPoly& input, const CliffPoly& residual,
                bool informational = false) {
        auto [it, inserted] = index_.emplace(name, report_.checks.size());
        if (inserted) {
            IdentityCheck c;
            c.name = name;
            c.informational = informational;
            report_.checks.push_back(std::move(c));
        }
        IdentityCheck& c = report_.checks[it->second];
        ++c.trials;
        if (!residual.is_zero() && c.passed) {
            c.passed = false;
            c.witness = input.str();
            c.residual = residual.str();
        }
    }

private:
    VerifyReport& report_;
    std::map<std::string, std::size_t> index_;
};

void heisenberg_trial(const UmbralContext& ctx, const CliffPoly& f, Recorder& rec) {
    int n = ctx.dim();
    std::vector<CliffPoly> of, xf;
    of.reserve(static_cast<std::size_t>(n));
    xf.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        of.push_back(ctx.apply_delta(j, f));
        xf.push_back(ctx.apply_raise(j, f));
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            rec.record("[O_" + std::to_string(j) + ", O_" + std::to_string(k) + "] = 0", f,
                       ctx.apply_delta(j, of[static_cast<std::size_t>(k - 1)]) -
                           ctx.apply_delta(k, of[static_cast<std::size_t>(j - 1)]));
            rec.record("[x'_" + std::to_string(j) + ", x'_" + std::to_string(k) + "] = 0", f,
                       ctx.apply_raise(j, xf[static_cast<std::size_t>(k - 1)]) -
                           ctx.apply_raise(k, xf[static_cast<std::size_t>(j - 1)]));
        }
        for (int k = 1; k <= n; ++k) {
            CliffPoly comm = ctx.apply_delta(j, xf[static_cast<std::size_t>(k - 1)]) -
                             ctx.apply_raise(k, of[static_cast<std::size_t>(j - 1)]);
            if (j == k) comm -= f;
            rec.record("[O_" + std::to_string(j) + ", x'_" + std::to_string(k) + "] = " +
                           (j == k ? "id" : "0"),
                       f, comm);
        }
    }
}

void dirac_euler_trial(const UmbralContext& ctx, const CliffPoly& f, Recorder& rec) {
    int n = ctx.dim();
    Rational half_n(n, 2);
    CliffPoly df = dirac(ctx, f);
    CliffPoly xv = vector_var(ctx, f);

    CliffPoly sum_o2(n), sum_x2(n);
    for (int j = 1; j <= n; ++j) {
        sum_o2 += ctx.apply_delta(j, ctx.apply_delta(j, f));
        sum_x2 += ctx.apply_raise(j, ctx.apply_raise(j, f));
    }
    rec.record("(D')^2 = -sum O_j^2", f, dirac(ctx, df) + sum_o2);
    rec.record("(x')^2 = -sum x_j'^2", f, vector_var(ctx, xv) + sum_x2);
    rec.record("x'D' + D'x' = -2 E'_{n/2}", f,
               vector_var(ctx, df) + dirac(ctx, xv) + ctx.euler_s(half_n, f) * Rational(2));

    const Rational svals[] = {Rational(1), Rational(1, 2), half_n};
    for (const Rational& s : svals) {
        std::string tag = " (s=" + s.str() + ")";
        rec.record("D' E'_s = E'_{s+1} D'" + tag, f,
                   dirac(ctx, ctx.euler_s(s, f)) - ctx.euler_s(s + Rational(1), df));
        rec.record("E'_s x' = x' E'_{s+1}" + tag, f,
                   ctx.euler_s(s, xv) - vector_var(ctx, ctx.euler_s(s + Rational(1), f)));
        rec.record("I'_s E'_s = id" + tag, f, euler_s_inverse(ctx, s, ctx.euler_s(s, f)) - f);
        rec.record("E'_s I'_s = id" + tag, f, ctx.euler_s(s, euler_s_inverse(ctx, s, f)) - f);
        rec.record("D' I'_s = I'_{s+1} D'" + tag, f,
                   dirac(ctx, euler_s_inverse(ctx, s, f)) -
                       euler_s_inverse(ctx, s + Rational(1), df));
    }
}

struct LadderModel {
    std::function<CliffPoly(const CliffPoly&)> ham, dp, dm;
};

void oscillator_trial(const LadderModel& m, Suite suite, const CliffPoly& f, Recorder& rec) {
    CliffPoly hf = m.ham(f);
    CliffPoly dpf = m.dp(f), dmf = m.dm(f);
    CliffPoly dp2f = m.dp(dpf), dm2f = m.dm(dmf);

    if (suite == Suite::osp) {
        rec.record("{d+, d-} = -4 H", f, m.dp(dmf) + m.dm(dpf) + hf * Rational(4));
        rec.record("[H, d-] = -d-", f, m.ham(dmf) - m.dm(hf) + dmf);
        rec.record("[H, d+] = d+", f, m.ham(dpf) - m.dp(hf) - dpf);
    }
    rec.record("[d+^2, d-^2] = 16 H", f,
               m.dp(m.dp(dm2f)) - m.dm(m.dm(dp2f)) - hf * Rational(16));
    rec.record("[H, d-^2] = -2 d-^2", f, m.ham(dm2f) - m.dm(m.dm(hf)) + dm2f * Rational(2));
    CliffPoly h_dp2 = m.ham(dp2f) - m.dp(m.dp(hf));
    rec.record("[H, d+^2] = 2 d+^2", f, h_dp2 - dp2f * Rational(2));
    if (suite == Suite::osp) {
        rec.record("[d+^2, d+] = 0", f, m.dp(m.dp(dpf)) - m.dp(dp2f));
        rec.record("[d-^2, d+] = 4 d-", f, m.dm(m.dm(dpf)) - m.dp(dm2f) - dmf * Rational(4));
        rec.record("[d-, d+^2] = -4 d+", f, m.dm(dp2f) - m.dp(m.dp(dmf)) + dpf * Rational(4));
        // The source relation table prints the third bracket of its (DH3) row
        // as [H, D+^2] = 2 D+ while its (DH2) row has [H, D+^2] = 2 D+^2; the
        // check below documents that the un-squared reading fails.
        rec.record("note: [H, d+^2] = 2 d+ (alternative reading; expected to fail)", f,
                   h_dp2 - dpf * Rational(2), /*informational=*/true);
    }
}

} // namespace

VerifyReport verify_relations(const UmbralContext& ctx, Suite suite, Model model, int max_degree,
                              int trials, std::uint64_t seed) {
    if (trials < 1) throw PreconditionError("trials must be >= 1");
    if (max_degree < 0) throw PreconditionError("degree must be >= 0");

    VerifyReport report;
    Recorder rec(report);
    Rng rng(seed);

    LadderModel lm;
    if (suite == Suite::sl2 || suite == Suite::osp) {
        if (model == Model::direct) {
            lm.ham = [&ctx](const CliffPoly& p) { return hamiltonian_direct(ctx, p); };
            lm.dp = [&ctx](const CliffPoly& p) { return d_plus(ctx, p); };
            lm.dm = [&ctx](const CliffPoly& p) { return d_minus(ctx, p); };
        } else {
            GaugeContext g(ctx);
            lm.ham = [g](const CliffPoly& p) { return g.hamiltonian(p); };
            lm.dp = [g](const CliffPoly& p) { return g.dirac_plus(p); };
            lm.dm = [g](const CliffPoly& p) { return g.dirac_minus(p); };
        }
    }

    for (int t = 0; t < trials; ++t) {
        CliffPoly f = random_poly(rng, ctx.dim(), max_degree);
        switch (suite) {
            case Suite::heisenberg: heisenberg_trial(ctx, f, rec); break;
            case Suite::dirac_euler: dirac_euler_trial(ctx, f, rec); break;
            case Suite::sl2:
            case Suite::osp: oscillator_trial(lm, suite, f, rec); break;
        }
    }
    return report;
}

} // namespace umbral
