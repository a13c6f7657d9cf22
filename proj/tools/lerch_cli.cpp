#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lerch/defaults.hpp"
#include "lerch/scalar_lerch.hpp"
#include "lerch/spectral.hpp"
#include "lerch/verify.hpp"
#include "lerch/weil_brezin.hpp"

using namespace lerch;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "2", "0.5+1.3i", "-1.3i", "0.5,1.3"
cplx parse_complex(const std::string& text) {
    static const std::regex pair(R"(^\s*([-+]?[0-9.eE+-]+)\s*,\s*([-+]?[0-9.eE+-]+)\s*$)");
    static const std::regex full(R"(^\s*([-+]?(?:[0-9]*\.?[0-9]+(?:[eE][-+]?[0-9]+)?))?\s*(?:([-+])\s*([0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\s*[ij])?\s*$)");
    static const std::regex pure(R"(^\s*([-+]?[0-9]*\.?[0-9]*(?:[eE][-+]?[0-9]+)?)\s*[ij]\s*$)");
    std::smatch m;
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) throw UsageError("cannot parse number '" + s + "'");
        return v;
    };
    try {
        if (std::regex_match(text, m, pair)) return {num(m[1]), num(m[2])};
        if (std::regex_match(text, m, pure)) {
            std::string im = m[1];
            if (im.empty() || im == "+") return {0.0, 1.0};
            if (im == "-") return {0.0, -1.0};
            return {0.0, num(im)};
        }
        if (std::regex_match(text, m, full) && m[1].matched) {
            double re = num(m[1]);
            if (!m[2].matched) return {re, 0.0};
            std::string mag = m[3];
            double im = mag.empty() ? 1.0 : num(mag);
            return {re, m[2] == "-" ? -im : im};
        }
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
    throw UsageError("cannot parse complex number '" + text + "'");
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "+1" || s == "1" || s == "plus") return 1;
    if (s == "-" || s == "-1" || s == "minus") return -1;
    throw UsageError("sign must be + or -");
}

void check_level(i64 N, i64 d) {
    if (N == 0) throw UsageError("N must be nonzero");
    if (d <= 0 || (N < 0 ? -N : N) % d != 0) throw UsageError("d must divide |N|");
}

std::size_t parse_chi(const std::string& text, i64 d) {
    if (text == "principal") return principal_character(d).index();
    std::size_t used = 0;
    long v = -1;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || v < 0) throw UsageError("chi must be 'principal' or a character index");
    if (static_cast<i64>(v) >= totient(d))
        throw UsageError("chi index " + text + " out of range: there are " + std::to_string(totient(d)) +
                         " characters mod " + std::to_string(d));
    return static_cast<std::size_t>(v);
}

// "a:b:step", or a single value.
std::vector<double> parse_range(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    auto num = [&](const std::string& s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw UsageError("bad range '" + text + "'");
        return v;
    };
    if (parts.size() == 1) return {num(parts[0])};
    if (parts.size() != 2 && parts.size() != 3) throw UsageError("range must be a:b or a:b:step");
    double a = num(parts[0]), b = num(parts[1]);
    double step = parts.size() == 3 ? num(parts[2]) : defaults::kSpectrumStep;
    if (!(step > 0.0)) throw UsageError("range step must be positive");
    std::vector<double> out;
    for (long i = 0;; ++i) {
        double t = a + static_cast<double>(i) * step;
        if (t > b + 1e-9 * step) break;
        out.push_back(t);
    }
    return out;
}

json num_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

struct Common {
    std::string format;  // empty: per-command default
    std::string out;
};

struct EvalArgs {
    i64 N = 1, d = 1;
    std::string chi = "principal", sign = "+", s = "2";
    double a = 0.0, c = 0.5, z = 0.0, tol = kDefaultTol;
};

int cmd_eval(const EvalArgs& args, const Common& common) {
    check_level(args.N, args.d);
    if (!(args.tol > 0.0)) throw UsageError("tolerance must be positive");
    LerchPoint p;
    p.sign = parse_sign(args.sign);
    p.N = args.N;
    p.d = args.d;
    p.chi = character_by_index(args.d, parse_chi(args.chi, args.d));
    p.s = parse_complex(args.s);
    p.a = args.a;
    p.c = args.c;
    p.z = args.z;
    EvalResult r = lerch_l(p, args.tol);
    Output out(common.out);
    std::ostream& os = out.stream();
    if (common.format == "csv") {
        os.precision(17);
        os << "s_re,s_im,a,c,z,re,im,est_error,pole_flag\n";
        os << p.s.real() << ',' << p.s.imag() << ',' << p.a << ',' << p.c << ',' << p.z << ',' << r.value.real()
           << ',' << r.value.imag() << ',' << r.est_error << ',' << (r.pole_flag ? "true" : "false") << '\n';
    } else {
        json j = {{"s", {p.s.real(), p.s.imag()}},
                  {"a", p.a},
                  {"c", p.c},
                  {"z", p.z},
                  {"N", p.N},
                  {"d", p.d},
                  {"chi", p.chi.index()},
                  {"sign", p.sign > 0 ? "+" : "-"},
                  {"re", num_or_null(r.value.real())},
                  {"im", num_or_null(r.value.imag())},
                  {"est_error", num_or_null(r.est_error)},
                  {"pole_flag", r.pole_flag}};
        os << j.dump(2) << '\n';
    }
    return 0;
}

struct VerifyArgs {
    std::string suite;
    std::optional<i64> N, d;
    std::string chi;
    std::vector<i64> ms;
    std::vector<std::string> s;
    std::string sign, form = "corrected", profile = "gaussian:1";
    double h = defaults::kDeltaStep;
    std::uint64_t seed = 12345;
};

int cmd_verify(const VerifyArgs& args, const Common& common) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end())
        throw UsageError("unknown suite '" + args.suite + "'");
    VerifyConfig cfg;
    cfg.N = args.N;
    if (cfg.N && *cfg.N == 0) throw UsageError("N must be nonzero");
    cfg.d = args.d;
    if (cfg.d) check_level(cfg.N.value_or(*cfg.d), *cfg.d);
    if (!args.chi.empty()) {
        if (!cfg.d) throw UsageError("--chi needs --d");
        cfg.chi_index = parse_chi(args.chi, *cfg.d);
    }
    cfg.ms = args.ms;
    for (const auto& s : args.s) cfg.s_values.push_back(parse_complex(s));
    if (!args.sign.empty()) cfg.sign = parse_sign(args.sign);
    if (args.form == "printed") cfg.form = IdentityForm::printed;
    else if (args.form != "corrected") throw UsageError("form must be printed or corrected");
    make_test_function(args.profile);
    cfg.profile = args.profile;
    if (!(args.h > 0.0)) throw UsageError("h must be positive");
    cfg.h = args.h;
    cfg.seed = args.seed;
    json report = run_suite(args.suite, cfg);
    Output out(common.out);
    std::ostream& os = out.stream();
    if (common.format == "csv") {
        os.precision(17);
        os << "identity,residual,tolerance,pass\n";
        for (const auto& c : report["checks"]) {
            bool witness = c.contains("lower_bound");
            os << c["identity"].get<std::string>() << ',' << (witness ? c["value"] : c["residual"]).dump() << ','
               << (witness ? c["lower_bound"] : c["tolerance"]).dump() << ',' << (c["pass"].get<bool>() ? "true" : "false")
               << '\n';
        }
    } else {
        os << report.dump(2) << '\n';
    }
    return report["all_pass"].get<bool>() ? 0 : kExitFail;
}

struct ZakArgs {
    std::string profile = "gaussian:1", chi = "principal";
    i64 N = 1, d = 1, k = 0;
    bool additive = false;
    int grid = 64;
};

int cmd_zak(const ZakArgs& args, const Common& common) {
    if (args.grid <= 0) throw UsageError("grid must be positive");
    const LineFunction f = make_test_function(args.profile);
    std::optional<NilFunction> F;
    if (args.additive) {
        if (args.N <= 0) throw UsageError("additive maps need N > 0");
        if (args.k < 0 || args.k >= args.N) throw UsageError("k must lie in [0, N)");
        F = additive_brezin(f, args.N, args.k);
    } else {
        check_level(args.N, args.d);
        F = wb_map(f, args.N, args.d, character_by_index(args.d, parse_chi(args.chi, args.d)));
    }
    Output out(common.out);
    std::ostream& os = out.stream();
    if (common.format == "json") {
        json rows = json::array();
        for (int i = 0; i < args.grid; ++i)
            for (int j = 0; j < args.grid; ++j) {
                double a = static_cast<double>(i) / args.grid, c = static_cast<double>(j) / args.grid;
                cplx v = F->base(a, c);
                rows.push_back({{"a", a}, {"c", c}, {"re", v.real()}, {"im", v.imag()}});
            }
        os << json({{"label", F->label()}, {"N", args.N}, {"grid", args.grid}, {"values", rows}}).dump(2) << '\n';
    } else {
        write_grid_csv(*F, args.grid, os);
    }
    return 0;
}

struct SpectrumArgs {
    std::string op = "D", profile = "gaussian:1", tau = "-5:5:0.5", chi, sign;
    i64 N = 1;
    std::optional<i64> d;
    double h = defaults::kDeltaStep;
};

int cmd_spectrum(const SpectrumArgs& args, const Common& common) {
    const std::vector<double> taus = parse_range(args.tau);
    Output out(common.out);
    std::ostream& os = out.stream();
    os.precision(17);
    json rows = json::array();
    if (args.op == "D") {
        const LineFunction f = make_test_function(args.profile);
        const LineFunction Df = line_D_apply(f);
        if (common.format == "csv") os << "k,tau,mellin_re,mellin_im,multiplier_residual\n";
        for (int k : {0, 1})
            for (double tau : taus) {
                const cplx s(0.5, tau);
                cplx m = mellin(f, k, s).value;
                double res = std::abs(mellin(Df, k, s).value + cplx(0.0, tau) * m);
                if (common.format == "csv")
                    os << k << ',' << tau << ',' << m.real() << ',' << m.imag() << ',' << res << '\n';
                else
                    rows.push_back({{"k", k}, {"tau", tau}, {"mellin", {m.real(), m.imag()}}, {"multiplier_residual", res}});
            }
    } else if (args.op == "deltaL") {
        const i64 d = args.d.value_or(args.N < 0 ? -args.N : args.N);
        check_level(args.N, d);
        DirichletCharacter chi = principal_character(d);
        if (!args.chi.empty()) {
            chi = character_by_index(d, parse_chi(args.chi, d));
        } else {
            for (const auto& c : enumerate_characters(d))
                if (c.is_primitive()) {
                    chi = c;
                    break;
                }
        }
        std::vector<int> signs = {1, -1};
        if (!args.sign.empty()) signs = {parse_sign(args.sign)};
        if (!(args.h > 0.0)) throw UsageError("h must be positive");
        const PointList pts = cell_centers(args.N, defaults::kDeltaGrid);
        if (common.format == "csv") os << "sign,tau,eigen_residual\n";
        for (int sign : signs)
            for (double tau : taus) {
                LerchPoint p;
                p.sign = sign;
                p.N = args.N;
                p.d = d;
                p.chi = chi;
                p.s = cplx(0.5, tau);
                double res = delta_L_eigen_residual(p, pts, args.h);
                if (common.format == "csv")
                    os << (sign > 0 ? "+" : "-") << ',' << tau << ',' << res << '\n';
                else
                    rows.push_back({{"sign", sign > 0 ? "+" : "-"}, {"tau", tau}, {"eigen_residual", res}});
            }
    } else {
        throw UsageError("op must be D or deltaL");
    }
    if (common.format == "json") os << json({{"op", args.op}, {"rows", rows}}).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lerch zeta and L-functions on the Heisenberg nilmanifold"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_option("--format", common.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--out", common.out, "write output to this file instead of stdout");

    EvalArgs ea;
    auto* eval = app.add_subcommand("eval", "evaluate L^±_{N,d}(chi, s, a, c, z)");
    eval->add_option("--N", ea.N, "central index");
    eval->add_option("--d", ea.d, "divisor of |N|");
    eval->add_option("--chi", ea.chi, "'principal' or index among the characters mod d");
    eval->add_option("--sign", ea.sign, "+ or -");
    eval->add_option("--s", ea.s, "complex s, e.g. 2, 0.5+1.3i or 0.5,1.3");
    eval->add_option("--a", ea.a);
    eval->add_option("--c", ea.c);
    eval->add_option("--z", ea.z);
    eval->add_option("--tol", ea.tol, "target tolerance");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "run an identity suite and report JSON");
    verify->add_option("suite", va.suite, "fe, hecke, intertwine, operators, decomposition, spectral, additive")
        ->required();
    verify->add_option("--N", va.N);
    verify->add_option("--d", va.d);
    verify->add_option("--chi", va.chi);
    verify->add_option("--m", va.ms, "Hecke indices")->delimiter(',');
    verify->add_option("--s", va.s, "values of s")->delimiter(';');
    verify->add_option("--sign", va.sign);
    verify->add_option("--form", va.form, "corrected (default) or printed");
    verify->add_option("--profile", va.profile);
    verify->add_option("--h", va.h, "finite-difference step");
    verify->add_option("--seed", va.seed);

    ZakArgs za;
    auto* zak = app.add_subcommand("zak", "dump a Weil-Brezin transform on a grid");
    zak->add_option("--profile", za.profile);
    zak->add_option("--N", za.N);
    zak->add_option("--d", za.d);
    zak->add_option("--chi", za.chi);
    zak->add_flag("--additive", za.additive, "additive Brezin map");
    zak->add_option("--k", za.k, "additive character index");
    zak->add_option("--grid", za.grid);

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "Mellin multiplier or Delta_L eigen-residual table");
    spectrum->add_option("--op", sa.op, "D or deltaL");
    spectrum->add_option("--profile", sa.profile);
    spectrum->add_option("--tau", sa.tau, "a:b:step or a single value");
    spectrum->add_option("--N", sa.N);
    spectrum->add_option("--d", sa.d);
    spectrum->add_option("--chi", sa.chi);
    spectrum->add_option("--sign", sa.sign);
    spectrum->add_option("--h", sa.h);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        auto with_default = [&](const char* fmt) {
            Common c = common;
            if (c.format.empty()) c.format = fmt;
            return c;
        };
        if (*eval) return cmd_eval(ea, with_default("json"));
        if (*verify) return cmd_verify(va, with_default("json"));
        if (*zak) return cmd_zak(za, with_default("csv"));
        if (*spectrum) return cmd_spectrum(sa, with_default("csv"));
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
