#include "umbral/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "umbral/errors.hpp"
#include "umbral/verify.hpp"

namespace umbral::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ContextFlags {
    int n = 1;
    std::string delta = "derivative";
    std::string h = "1";
    std::string variant = "plain";
};

void add_context_flags(CLI::App* cmd, ContextFlags& cf) {
    cmd->add_option("--n", cf.n, "ambient dimension (>= 1)")->required();
    cmd->add_option("--delta", cf.delta,
                    "derivative|forward|backward|central|custom:[a0,a1,...] (default derivative)");
    cmd->add_option("--h", cf.h, "lattice step as a rational, e.g. 1/2 (default 1)");
    cmd->add_option("--variant", cf.variant, "raising variant: plain|symmetric (default plain)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

UmbralContext build_context(const ContextFlags& cf) {
    if (cf.n < 1) throw UsageError("--n must be >= 1");
    Rational h = Rational::parse(cf.h);
    RaisingVariant variant;
    if (cf.variant == "plain")
        variant = RaisingVariant::plain;
    else if (cf.variant == "symmetric")
        variant = RaisingVariant::symmetric;
    else
        throw UsageError("--variant must be plain or symmetric");

    if (cf.delta == "derivative") return UmbralContext::make(cf.n, DeltaKind::derivative, h, variant);
    if (cf.delta == "forward") return UmbralContext::make(cf.n, DeltaKind::forward, h, variant);
    if (cf.delta == "backward") return UmbralContext::make(cf.n, DeltaKind::backward, h, variant);
    if (cf.delta == "central") return UmbralContext::make(cf.n, DeltaKind::central, h, variant);
    if (cf.delta.rfind("custom:[", 0) == 0 && cf.delta.back() == ']') {
        std::string body = cf.delta.substr(8, cf.delta.size() - 9);
        std::vector<Rational> coeffs;
        for (const std::string& piece : split(body, ','))
            coeffs.push_back(Rational::parse(piece));
        return UmbralContext::custom(cf.n, std::move(coeffs), h, variant);
    }
    throw UsageError("--delta must be derivative|forward|backward|central|custom:[...]");
}

MultiIndex parse_alpha(const std::string& text, int n) {
    std::vector<int> exps;
    for (const std::string& piece : split(text, ',')) {
        Rational v = Rational::parse(piece);
        if (v.den_str() != "1" || v.sign() < 0) throw UsageError("--alpha entries must be integers >= 0");
        exps.push_back(static_cast<int>(std::stol(v.num_str())));
    }
    if (static_cast<int>(exps.size()) != n)
        throw UsageError("--alpha must list exactly n=" + std::to_string(n) + " exponents");
    return MultiIndex(std::move(exps));
}

struct InputFlags {
    std::string expr;
    std::string path;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
    cmd->add_option("--expr", in.expr, "inline polynomial expression");
    cmd->add_option("--input", in.path, "path of a UTF-8 file holding one polynomial");
}

CliffPoly read_poly(const InputFlags& in, int n) {
    if (in.expr.empty() == in.path.empty())
        throw UsageError("exactly one of --expr or --input is required");
    std::string text = in.expr;
    if (!in.path.empty()) {
        std::ifstream f(in.path);
        if (!f) throw UsageError("cannot read input file: " + in.path);
        std::ostringstream buf;
        buf << f.rdbuf();
        text = buf.str();
    }
    return parse_poly(text, n);
}

std::optional<int> parse_k(const std::string& kflag) {
    if (kflag == "auto") return std::nullopt;
    Rational v = Rational::parse(kflag);
    if (v.den_str() != "1" || v.sign() < 0) throw UsageError("--k must be auto or an integer >= 0");
    return static_cast<int>(std::stol(v.num_str()));
}

json context_json(const UmbralContext& ctx) {
    json j;
    j["delta"] = ctx.delta_name();
    j["h"] = ctx.step().str();
    j["variant"] = raising_variant_name(ctx.variant());
    j["n"] = ctx.dim();
    return j;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::string alpha_str(const MultiIndex& a) {
    std::string s = "(";
    for (int j = 1; j <= a.dim(); ++j) s += (j > 1 ? "," : "") + std::to_string(a.exponent(j));
    return s + ")";
}

json components_json(const std::vector<CliffPoly>& parts, int first_index) {
    json arr = json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        json c;
        c["index"] = first_index + static_cast<int>(i);
        c["poly"] = parts[i].str();
        arr.push_back(std::move(c));
    }
    return arr;
}

int cmd_basic_poly(std::ostream& out, const UmbralContext& ctx, const std::string& alpha_text,
                   const std::string& format) {
    MultiIndex alpha = parse_alpha(alpha_text, ctx.dim());
    CliffPoly v = ctx.basic_polynomial(alpha);
    if (format == "json") {
        json doc = context_json(ctx);
        doc["alpha"] = alpha.exponents();
        doc["poly"] = v.str();
        emit(out, doc);
    } else {
        out << v.str() << "\n";
    }
    return 0;
}

int cmd_decompose(std::ostream& out, const UmbralContext& ctx, const InputFlags& in,
                  const std::string& kflag, const std::string& format) {
    CliffPoly f = read_poly(in, ctx.dim());
    AlmansiResult res = almansi_decompose(ctx, f, parse_k(kflag));
    bool monogenic_ok = true;
    for (const CliffPoly& c : res.components)
        if (!dirac(ctx, c).is_zero()) monogenic_ok = false;
    bool reconstruction_ok = almansi_reconstruct(ctx, res.components) == f;
    if (format == "json") {
        json doc = context_json(ctx);
        doc["k"] = res.k();
        doc["components"] = components_json(res.components, 1);
        doc["monogenic_ok"] = monogenic_ok;
        doc["reconstruction_ok"] = reconstruction_ok;
        emit(out, doc);
    } else {
        out << "k: " << res.k() << "\n";
        for (int i = 0; i < res.k(); ++i)
            out << "f_" << (i + 1) << ": " << res.components[static_cast<std::size_t>(i)].str()
                << "\n";
        out << "monogenic_ok: " << (monogenic_ok ? "true" : "false") << "\n";
        out << "reconstruction_ok: " << (reconstruction_ok ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_fischer(std::ostream& out, const UmbralContext& ctx, const InputFlags& in,
                const std::string& format) {
    CliffPoly f = read_poly(in, ctx.dim());
    std::vector<CliffPoly> parts = fischer_decompose(ctx, f);
    bool monogenic_ok = true;
    for (const CliffPoly& c : parts)
        if (!dirac(ctx, c).is_zero()) monogenic_ok = false;
    bool reconstruction_ok = almansi_reconstruct(ctx, parts) == f;
    if (format == "json") {
        json doc = context_json(ctx);
        doc["k"] = static_cast<int>(parts.size()) - 1;
        doc["components"] = components_json(parts, 0);
        doc["monogenic_ok"] = monogenic_ok;
        doc["reconstruction_ok"] = reconstruction_ok;
        emit(out, doc);
    } else {
        out << "k: " << parts.size() - 1 << "\n";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out << "m_" << i << ": " << parts[i].str() << "\n";
        out << "monogenic_ok: " << (monogenic_ok ? "true" : "false") << "\n";
        out << "reconstruction_ok: " << (reconstruction_ok ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_kernel(std::ostream& out, const UmbralContext& ctx, int degree, const std::string& format) {
    std::vector<CliffPoly> basis = monogenic_basis(ctx, degree);
    if (format == "json") {
        json doc = context_json(ctx);
        doc["degree"] = degree;
        doc["dimension"] = basis.size();
        json arr = json::array();
        for (const CliffPoly& p : basis) arr.push_back(p.str());
        doc["basis"] = std::move(arr);
        emit(out, doc);
    } else {
        out << "dimension: " << basis.size() << "\n";
        for (const CliffPoly& p : basis) out << p.str() << "\n";
    }
    return 0;
}

int cmd_harmonic_split(std::ostream& out, const UmbralContext& ctx, const InputFlags& in,
                       const std::string& format) {
    CliffPoly f = read_poly(in, ctx.dim());
    auto [f1, f0] = harmonic_split(ctx, f);
    bool monogenic_ok = dirac(ctx, f1).is_zero() && dirac(ctx, f0).is_zero();
    bool reconstruction_ok = f1 + vector_var(ctx, f0) == f;
    if (format == "json") {
        json doc = context_json(ctx);
        doc["f1"] = f1.str();
        doc["f0"] = f0.str();
        doc["monogenic_ok"] = monogenic_ok;
        doc["reconstruction_ok"] = reconstruction_ok;
        emit(out, doc);
    } else {
        out << "f1: " << f1.str() << "\n";
        out << "f0: " << f0.str() << "\n";
        out << "monogenic_ok: " << (monogenic_ok ? "true" : "false") << "\n";
        out << "reconstruction_ok: " << (reconstruction_ok ? "true" : "false") << "\n";
    }
    return 0;
}

struct VerifyFlags {
    std::string suite = "heisenberg";
    std::string model = "direct";
    int degree = 5;
    int trials = 50;
    std::uint64_t seed = 0;
};

void add_verify_flags(CLI::App* cmd, VerifyFlags& vf) {
    cmd->add_option("--suite", vf.suite, "heisenberg|dirac_euler|sl2|osp");
    cmd->add_option("--model", vf.model, "direct|gauge (sl2/osp only; default direct)");
    cmd->add_option("--degree", vf.degree, "max degree of random polynomials (default 5)");
    cmd->add_option("--trials", vf.trials, "number of random polynomials (default 50)");
    cmd->add_option("--seed", vf.seed, "PRNG seed (default 0)");
}

int cmd_verify(std::ostream& out, const UmbralContext& ctx, const VerifyFlags& vf,
               const std::string& format) {
    Suite suite;
    if (vf.suite == "heisenberg")
        suite = Suite::heisenberg;
    else if (vf.suite == "dirac_euler")
        suite = Suite::dirac_euler;
    else if (vf.suite == "sl2")
        suite = Suite::sl2;
    else if (vf.suite == "osp")
        suite = Suite::osp;
    else
        throw UsageError("--suite must be heisenberg|dirac_euler|sl2|osp");
    Model model;
    if (vf.model == "direct")
        model = Model::direct;
    else if (vf.model == "gauge")
        model = Model::gauge;
    else
        throw UsageError("--model must be direct or gauge");

    VerifyReport report = verify_relations(ctx, suite, model, vf.degree, vf.trials, vf.seed);

    if (format == "json") {
        json doc = context_json(ctx);
        doc["suite"] = vf.suite;
        doc["model"] = vf.model;
        doc["degree"] = vf.degree;
        doc["trials"] = vf.trials;
        doc["seed"] = vf.seed;
        json arr = json::array();
        for (const IdentityCheck& c : report.checks) {
            json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["informational"] = c.informational;
            e["trials"] = c.trials;
            if (!c.passed) {
                e["witness"] = c.witness;
                e["residual"] = c.residual;
            }
            arr.push_back(std::move(e));
        }
        doc["checks"] = std::move(arr);
        doc["all_passed"] = report.all_passed();
        emit(out, doc);
    } else {
        out << "verify suite=" << vf.suite << " model=" << vf.model << " delta=" << ctx.delta_name()
            << " h=" << ctx.step().str() << " variant=" << raising_variant_name(ctx.variant())
            << " n=" << ctx.dim() << " degree=" << vf.degree << " trials=" << vf.trials
            << " seed=" << vf.seed << "\n";
        long passed = 0, failed = 0;
        for (const IdentityCheck& c : report.checks) {
            if (c.informational) {
                out << "NOTE  " << c.name << " -> " << (c.passed ? "holds" : "fails") << "\n";
                continue;
            }
            if (c.passed) {
                out << "PASS  " << c.name << "\n";
                ++passed;
            } else {
                out << "FAIL  " << c.name << "\n";
                out << "      witness:  " << c.witness << "\n";
                out << "      residual: " << c.residual << "\n";
                ++failed;
            }
        }
        out << "identities: " << passed << " passed, " << failed << " failed\n";
    }
    return report.all_passed() ? 0 : 3;
}

int cmd_osc_decompose(std::ostream& out, const UmbralContext& ctx, const InputFlags& in,
                      const std::string& kflag, const std::string& format) {
    GaugeContext g(ctx);
    CliffPoly f = read_poly(in, ctx.dim());
    AlmansiResult res = oscillator_almansi(g, f, parse_k(kflag));
    bool monogenic_ok = true;
    for (const CliffPoly& c : res.components)
        if (!g.dirac_minus(c).is_zero()) monogenic_ok = false;
    bool reconstruction_ok = oscillator_reconstruct(g, res.components) == f;
    if (format == "json") {
        json doc = context_json(ctx);
        doc["model"] = "gauge";
        doc["k"] = res.k();
        doc["components"] = components_json(res.components, 1);
        doc["monogenic_ok"] = monogenic_ok;
        doc["reconstruction_ok"] = reconstruction_ok;
        emit(out, doc);
    } else {
        out << "model: gauge\n";
        out << "k: " << res.k() << "\n";
        for (int i = 0; i < res.k(); ++i)
            out << "g_" << (i + 1) << ": " << res.components[static_cast<std::size_t>(i)].str()
                << "\n";
        out << "monogenic_ok: " << (monogenic_ok ? "true" : "false") << "\n";
        out << "reconstruction_ok: " << (reconstruction_ok ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_osc_hermite(std::ostream& out, const UmbralContext& ctx, const std::string& alpha_text,
                    const std::string& format) {
    GaugeContext g(ctx);
    MultiIndex alpha = parse_alpha(alpha_text, ctx.dim());
    CliffPoly w = g.hermite(alpha);
    Rational eigen = g.hermite_eigenvalue(alpha);
    if (format == "json") {
        json doc = context_json(ctx);
        doc["model"] = "gauge";
        doc["alpha"] = alpha.exponents();
        doc["poly"] = w.str();
        doc["eigenvalue"] = eigen.str();
        emit(out, doc);
    } else {
        out << w.str() << "\n";
        out << "eigenvalue: " << eigen.str() << "\n";
    }
    return 0;
}

int cmd_generating(std::ostream& out, const UmbralContext& ctx, int order,
                   const std::string& format) {
    auto table = generating_check(ctx, order);
    if (format == "json") {
        json doc = context_json(ctx);
        doc["order"] = order;
        json arr = json::array();
        for (const auto& [alpha, poly] : table) {
            json e;
            e["alpha"] = alpha.exponents();
            e["poly"] = poly.str();
            arr.push_back(std::move(e));
        }
        doc["entries"] = std::move(arr);
        doc["check"] = "ok";
        emit(out, doc);
    } else {
        for (const auto& [alpha, poly] : table)
            out << "alpha=" << alpha_str(alpha) << ": " << poly.str() << "\n";
        out << "check: coefficients match V_alpha/alpha! up to order " << order << "\n";
    }
    return 0;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact umbral Clifford analysis: basic sequences, Dirac operators, Almansi "
                 "decompositions, oscillator ladder algebra"};
    app.require_subcommand(1);

    ContextFlags cf;
    InputFlags in;
    std::string format_table = "table";
    std::string format_json = "json";
    std::string alpha_text = "0";
    std::string kflag = "auto";
    int degree = 0;
    int order = 3;
    VerifyFlags vf;

    int code = 0;

    auto* basic = app.add_subcommand("basic-poly", "basic polynomial V_alpha by Rodrigues recursion");
    add_context_flags(basic, cf);
    basic->add_option("--alpha", alpha_text, "multi-index, e.g. 3 or 2,1")->required();
    basic->add_option("--format", format_table, "table|json (default table)");
    basic->callback([&] { code = cmd_basic_poly(out, build_context(cf), alpha_text, format_table); });

    auto* dec = app.add_subcommand("decompose", "Almansi decomposition of a polymonogenic input");
    add_context_flags(dec, cf);
    add_input_flags(dec, in);
    dec->add_option("--k", kflag, "auto or the polymonogenicity degree (default auto)");
    dec->add_option("--format", format_json, "table|json (default json)");
    dec->callback([&] { code = cmd_decompose(out, build_context(cf), in, kflag, format_json); });

    auto* fis = app.add_subcommand("fischer", "Fischer decomposition of an E'-homogeneous input");
    add_context_flags(fis, cf);
    add_input_flags(fis, in);
    fis->add_option("--format", format_json, "table|json (default json)");
    fis->callback([&] { code = cmd_fischer(out, build_context(cf), in, format_json); });

    auto* ker = app.add_subcommand("kernel", "exact basis of degree-d monogenics");
    add_context_flags(ker, cf);
    ker->add_option("--degree", degree, "V-degree of the span")->required();
    ker->add_option("--format", format_table, "table|json (default table)");
    ker->callback([&] { code = cmd_kernel(out, build_context(cf), degree, format_table); });

    auto* har = app.add_subcommand("harmonic-split", "split an umbral-harmonic f as f1 + x' f0");
    add_context_flags(har, cf);
    add_input_flags(har, in);
    har->add_option("--format", format_json, "table|json (default json)");
    har->callback([&] { code = cmd_harmonic_split(out, build_context(cf), in, format_json); });

    auto* ver = app.add_subcommand("verify", "check operator identity suites on random inputs");
    add_context_flags(ver, cf);
    add_verify_flags(ver, vf);
    ver->add_option("--format", format_table, "table|json (default table)");
    ver->callback([&] { code = cmd_verify(out, build_context(cf), vf, format_table); });

    auto* osc = app.add_subcommand("oscillator", "harmonic-oscillator ladder algebra (gauge model)");
    osc->require_subcommand(1);

    VerifyFlags ovf;
    ovf.suite = "osp";
    auto* over = osc->add_subcommand("verify", "oscillator identity suites (sl2/osp)");
    add_context_flags(over, cf);
    add_verify_flags(over, ovf);
    over->add_option("--format", format_table, "table|json (default table)");
    over->callback([&] { code = cmd_verify(out, build_context(cf), ovf, format_table); });

    auto* odec = osc->add_subcommand("decompose", "oscillator Almansi decomposition (gauge model)");
    add_context_flags(odec, cf);
    add_input_flags(odec, in);
    odec->add_option("--k", kflag, "auto or the polymonogenicity degree (default auto)");
    odec->add_option("--format", format_json, "table|json (default json)");
    odec->callback([&] { code = cmd_osc_decompose(out, build_context(cf), in, kflag, format_json); });

    auto* oher = osc->add_subcommand("hermite", "umbral Clifford-Hermite polynomial W_alpha");
    add_context_flags(oher, cf);
    oher->add_option("--alpha", alpha_text, "multi-index, e.g. 2,1")->required();
    oher->add_option("--format", format_table, "table|json (default table)");
    oher->callback([&] { code = cmd_osc_hermite(out, build_context(cf), alpha_text, format_table); });

    auto* gen = app.add_subcommand("generating", "generating-function coefficients and exactness check");
    add_context_flags(gen, cf);
    gen->add_option("--order", order, "joint order in t (default 3)");
    gen->add_option("--format", format_table, "table|json (default table)");
    gen->callback([&] { code = cmd_generating(out, build_context(cf), order, format_table); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.get_name() << ": " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const PreconditionError& e) {
        err << "error: precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

} // namespace umbral::cli
