#include "hgc/cli.hpp"

#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "hgc/classify.hpp"
#include "hgc/errors.hpp"
#include "hgc/family.hpp"
#include "hgc/gamma.hpp"
#include "hgc/representations.hpp"
#include "hgc/serialize.hpp"
#include "hgc/series.hpp"
#include "hgc/suites.hpp"

namespace hgc {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// raw (sigma, kappa, omega) or a named classical type with a, b, c
struct ParamFlags {
    std::string type, a, b, c, sigma, kappa, omega;
    bool olver = false;

    void add(CLI::App* app, bool classical) {
        if (classical) {
            app->add_option("--type", type, "2F1, 1F1, 2F0, 0F1 or Hermite");
            app->add_option("--a", a, "parameter a (Hermite: a)");
            app->add_option("--b", b, "parameter b");
            app->add_option("--c", c, "parameter c");
            app->add_flag("--olver", olver, "divide by Gamma(c) (raw style: Gamma(1 + kappa(0)/sigma'(0)))");
        }
        app->add_option("--sigma", sigma, "sigma coefficients, lowest degree first");
        app->add_option("--kappa", kappa, "kappa coefficients, lowest degree first");
        app->add_option("--omega", omega, "omega");
    }
    bool raw() const { return !sigma.empty() || !kappa.empty() || !omega.empty(); }
    bool named() const { return !type.empty() || !a.empty() || !b.empty() || !c.empty(); }

    void require_one_style() const {
        if (raw() && named()) throw UsageError("--type/--a/--b/--c and --sigma/--kappa/--omega are mutually exclusive");
        if (!raw() && !named()) throw UsageError("give either --type with its parameters or --sigma/--kappa/--omega");
        if (named() && type.empty()) throw UsageError("--type is required with --a/--b/--c");
        if (raw() && (sigma.empty() || kappa.empty())) throw UsageError("--sigma and --kappa are both required");
    }
    ClassicalType classical() const {
        try {
            return classical_type_from_string(type);
        } catch (const Error&) {
            throw UsageError("unknown --type " + type);
        }
    }
    NamedParams named_params() const {
        NamedParams np;
        if (!a.empty()) np.a = parse_complex(a);
        if (!b.empty()) np.b = parse_complex(b);
        if (!c.empty()) np.c = parse_complex(c);
        return np;
    }
    EquationParams equation() const {
        return {parse_poly(sigma), parse_poly(kappa), omega.empty() ? cd(0) : parse_complex(omega)};
    }
    EvalResult eval(cd z) const {
        if (named()) return eval_classical(classical(), named_params(), z, olver);
        return olver ? olver_F(equation(), z) : unified_F(equation(), z);
    }
};

Json named_json(const NamedParams& np, ClassicalType t) {
    Json j;
    if (t != ClassicalType::ZeroF1) j["a"] = to_json(np.a);
    if (t == ClassicalType::Gauss2F1 || t == ClassicalType::TwoF0) j["b"] = to_json(np.b);
    if (t == ClassicalType::Gauss2F1 || t == ClassicalType::Kummer1F1 || t == ClassicalType::ZeroF1) j["c"] = to_json(np.c);
    return j;
}

// the integral representation paired with each classical type
ReprName cross_repr(ClassicalType t, const NamedParams& np) {
    switch (t) {
        case ClassicalType::Gauss2F1: return ReprName::Repr2F1Euler;
        case ClassicalType::Kummer1F1:
            return np.a.real() > 0 && (np.c - np.a).real() > 0 ? ReprName::Repr1F1Algebraic : ReprName::Repr1F1Hankel;
        case ClassicalType::TwoF0: return ReprName::Repr2F0;
        case ClassicalType::ZeroF1: return ReprName::Repr0F1Loop;
        case ClassicalType::Hermite: return np.a.real() > 0 ? ReprName::ReprHermiteLaplace : ReprName::ReprHermiteEuler;
    }
    return ReprName::Repr2F1Euler;
}

std::string csv_pair(cd v) { return fmt(v.real()) + "," + fmt(v.imag()); }

} // namespace

cd parse_complex(const std::string& s) {
    static const std::string num = R"((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)";
    static const std::regex re_only("^\\s*([+-]?" + num + ")\\s*$");
    static const std::regex im_only("^\\s*([+-]?" + num + "?)[ij]\\s*$");
    static const std::regex both("^\\s*([+-]?" + num + ")([+-]" + num + "?)[ij]\\s*$");
    std::smatch m;
    auto unit = [](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return std::stod(t);
    };
    if (std::regex_match(s, m, re_only)) return {std::stod(m[1]), 0.0};
    if (std::regex_match(s, m, im_only)) return {0.0, unit(m[1])};
    if (std::regex_match(s, m, both)) return {std::stod(m[1]), unit(m[2])};
    throw InvalidArgument("cannot read a complex number from '" + s + "'");
}

PolyC parse_poly(const std::string& s) {
    std::vector<cd> cs;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) cs.push_back(parse_complex(item));
    if (cs.empty()) throw InvalidArgument("empty coefficient list");
    return PolyC(cs);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hypergeometric class equations: evaluation, classification, verification suites"};
    app.require_subcommand(1);
    app.footer("Polynomials are comma-separated coefficients, lowest degree first (0,1,-1 is z - z^2).\n"
               "Complex values are written re, re+imj or imj.");

    ParamFlags ev;
    std::string z, cross, fmt_eval = "json";
    auto* eval = app.add_subcommand("eval", "evaluate a classical function or the unified F");
    ev.add(eval, true);
    eval->add_option("--z", z, "argument")->required();
    eval->add_option("--cross-check", cross, "append an integral representation")->check(CLI::IsMember({"integral"}));

    std::string c_sigma, c_tau, c_eta, c_xi;
    auto* cls = app.add_subcommand("classify", "normal form of sigma f'' + tau f' + (xi/sigma) f");
    cls->add_option("--sigma", c_sigma, "sigma coefficients")->required();
    cls->add_option("--tau", c_tau, "tau coefficients")->required();
    auto* eta_opt = cls->add_option("--eta", c_eta, "constant eta (xi = eta sigma)");
    cls->add_option("--xi", c_xi, "xi coefficients (Riemann class)")->excludes(eta_opt);

    std::string suite;
    ParamFlags vp;
    std::uint64_t seed = SuiteOptions{}.seed;
    auto* ver = app.add_subcommand("verify", "run verification suites");
    std::vector<std::string> choices = suite_names();
    choices.push_back("all");
    ver->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(choices));
    vp.add(ver, false);
    ver->add_option("--seed", seed, "generator seed");

    std::string family = "jacobi", p_format = "csv";
    double alpha = 0, beta = 0, theta = 0;
    int n_max = 5;
    auto* poly = app.add_subcommand("poly", "classical polynomial table");
    poly->add_option("--family", family)->check(CLI::IsMember({"jacobi", "laguerre", "bessel", "hermite"}));
    poly->add_option("--alpha", alpha);
    poly->add_option("--beta", beta);
    poly->add_option("--theta", theta);
    poly->add_option("--n-max", n_max)->check(CLI::Range(0, 60));
    poly->add_option("--format", p_format)->check(CLI::IsMember({"csv", "json"}));

    ParamFlags lp;
    double l_min = 0, l_max = 5, l_step = 1;
    std::string l_format = "json";
    auto* lad = app.add_subcommand("ladder", "kappa_n and omega_n over a range of n");
    lp.add(lad, false);
    lad->add_option("--n-min", l_min);
    lad->add_option("--n-max", l_max);
    lad->add_option("--n-step", l_step)->check(CLI::PositiveNumber);
    lad->add_option("--format", l_format)->check(CLI::IsMember({"csv", "json"}));

    ParamFlags pp;
    std::string from = "0", to = "0.9";
    int points = 101;
    auto* plot = app.add_subcommand("plot-data", "CSV of z against the value on a straight grid");
    pp.add(plot, true);
    plot->add_option("--from", from);
    plot->add_option("--to", to);
    plot->add_option("--points", points)->check(CLI::Range(2, 100000));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval->parsed()) {
            ev.require_one_style();
            cd zz = parse_complex(z);
            Json j;
            j["command"] = "eval";
            if (ev.named()) {
                ClassicalType t = ev.classical();
                NamedParams np = ev.named_params();
                j["type"] = to_string(t);
                j["params"] = named_json(np, t);
            } else {
                if (!cross.empty()) throw UsageError("--cross-check needs --type");
                j["params"] = to_json(ev.equation());
            }
            j["olver"] = ev.olver;
            j["z"] = to_json(zz);
            EvalResult r = ev.eval(zz);
            j.update(to_json(r));
            if (!cross.empty()) {
                ClassicalType t = ev.classical();
                NamedParams np = ev.named_params();
                ReprName rn = cross_repr(t, np);
                ReprResult rr = named_representation(rn, {np, {}, 0.0}, zz);
                cd v = rr.value;
                // the 2F1/1F1/0F1 representations produce the Olver-normalized value
                bool normalized = t == ClassicalType::Gauss2F1 || t == ClassicalType::Kummer1F1 || t == ClassicalType::ZeroF1;
                if (normalized && !ev.olver) v *= gamma(np.c);
                Json cj;
                cj["representation"] = to_string(rn);
                cj["value"] = to_json(v);
                cj["discrepancy"] = std::abs(v - r.value) / std::max(std::abs(r.value), 1e-300);
                cj["quadrature_error"] = rr.quad.err_estimate;
                j["cross_check"] = cj;
            }
            out << dump(j) << "\n";
            return 0;
        }
        if (cls->parsed()) {
            PolyC s = parse_poly(c_sigma), t = parse_poly(c_tau);
            PolyC xi = !c_xi.empty() ? parse_poly(c_xi) : (c_eta.empty() ? PolyC() : parse_complex(c_eta) * s);
            NormalFormReport r = classify_riemann(s, t, xi);
            Json j;
            j["command"] = "classify";
            j.update(to_json(r));
            out << dump(j) << "\n";
            return 0;
        }
        if (ver->parsed()) {
            SuiteOptions o;
            o.seed = seed;
            if (vp.raw()) {
                if (vp.sigma.empty() || vp.kappa.empty()) throw UsageError("--sigma and --kappa are both required");
                o.params = vp.equation();
            }
            Json j;
            j["command"] = "verify";
            Json arr = Json::array();
            bool ok = true;
            for (const auto& r : run_suites(suite, o)) {
                ok = ok && r.pass();
                arr.push_back(to_json(r));
            }
            j["pass"] = ok;
            j["suites"] = arr;
            out << dump(j) << "\n";
            return ok ? 0 : 1;
        }
        if (poly->parsed()) {
            FamilySpec f = FamilySpec::hermite();
            if (family == "jacobi") f = FamilySpec::jacobi(alpha, beta);
            if (family == "laguerre") f = FamilySpec::laguerre(alpha);
            if (family == "bessel") f = FamilySpec::bessel(theta);
            if (p_format == "csv") {
                out << poly_table_csv(f, n_max);
                return 0;
            }
            Json j;
            j["command"] = "poly";
            j["family"] = to_string(f.kind);
            j["description"] = f.describe();
            Json rows = Json::array();
            for (int n = 0; n <= n_max; ++n) {
                PolyC p = classical_poly(f, n);
                Json r;
                r["n"] = n;
                r["degree"] = p.degree();
                r["coefficients"] = to_json(p);
                rows.push_back(r);
            }
            j["polynomials"] = rows;
            out << dump(j) << "\n";
            return 0;
        }
        if (lad->parsed()) {
            if (lp.sigma.empty() || lp.kappa.empty()) throw UsageError("--sigma and --kappa are both required");
            EquationParams base = lp.equation();
            if (l_max < l_min) throw UsageError("--n-max below --n-min");
            Json rows = Json::array();
            std::string csv = "n,omega_re,omega_im";
            for (int k = 0; k <= base.kappa.degree(); ++k) csv += ",kappa" + std::to_string(k) + "_re,kappa" + std::to_string(k) + "_im";
            csv += "\n";
            for (int i = 0;; ++i) {
                double n = l_min + i * l_step;
                if (n > l_max + 1e-9 * l_step) break;
                EquationParams p = ladder_params(base, n);
                Json r;
                r["n"] = n;
                r["kappa"] = to_json(p.kappa);
                r["omega"] = to_json(p.omega);
                rows.push_back(r);
                csv += fmt(n) + "," + csv_pair(p.omega);
                for (int k = 0; k <= base.kappa.degree(); ++k) csv += "," + csv_pair(p.kappa[k]);
                csv += "\n";
            }
            if (l_format == "csv") {
                out << csv;
            } else {
                Json j;
                j["command"] = "ladder";
                j["base"] = to_json(base);
                j["ladder"] = rows;
                out << dump(j) << "\n";
            }
            return 0;
        }
        if (plot->parsed()) {
            pp.require_one_style();
            cd a = parse_complex(from), b = parse_complex(to);
            out << "z_re,z_im,value_re,value_im\n";
            for (int i = 0; i < points; ++i) {
                cd zz = a + (b - a) * (double(i) / (points - 1));
                out << csv_pair(zz) << "," << csv_pair(pp.eval(zz).value) << "\n";
            }
            return 0;
        }
    } catch (const UsageError& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        err << "usage: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        Json j;
        j["error"] = e.kind();
        j["message"] = e.what();
        err << dump(j) << "\n";
        return 1;
    }
    return 2;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace hgc
