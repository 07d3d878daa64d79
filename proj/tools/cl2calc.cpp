// cl2calc: command-line calculator for the Clifford algebra generated by
// two anticommuting units squaring to +1 (basis 1, e1, e2, e3 = e1*e2).
//
// Subcommands: classify, eval, exp, pow, roots, verify.  Expressions are
// single shell-quoted arguments in the calculator grammar; `--json` emits
// machine output under the "cl2/1" schema.  Exit codes: 0 success, 1 parse
// error, 2 domain error, 3 usage error.

#include <cmath>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cl2/cl2.hpp"

namespace {

struct Options {
    bool json = false;
    bool verify = false;
    bool strict_empty = false;
    bool use_stdin = false;
    std::string mode = "complete";
    std::optional<double> tol_override;
    std::optional<std::string> eps_expr;
    cl2::Tolerances tol;
};

constexpr const char* schema_version = "cl2/1";

// Documented sample values used when a family variant is printed or
// verified without a user-supplied eps.  All are exact members of their
// class before normalization.
const std::vector<cl2::Multivector>& timelike_samples() {
    static const std::vector<cl2::Multivector> eps = {
        cl2::e3,
        {0.0, 2.0, 2.0, 3.0},
        {0.0, 0.0, 1.0, 2.0},
    };
    return eps;
}

const std::vector<cl2::Multivector>& spacelike_samples() {
    static const std::vector<cl2::Multivector> eps = {
        cl2::e1,
        cl2::e2,
        {0.0, 1.0, 1.0, 1.0},
    };
    return eps;
}

const std::vector<cl2::Multivector>& null_samples() {
    static const std::vector<cl2::Multivector> members = {
        {},
        {0.0, 3.0, 4.0, 5.0},
        {0.0, 0.0, 1.0, 1.0},
    };
    return members;
}

void emit(const cl2::json& payload) { std::cout << payload.dump(2) << "\n"; }

cl2::json envelope(cl2::json result) {
    cl2::json j;
    j["v"] = schema_version;
    j["result"] = std::move(result);
    return j;
}

cl2::json polar_json(const cl2::PolarForm& p) {
    cl2::json j;
    if (const auto* f = std::get_if<cl2::HyperbolicCosh>(&p)) {
        j["form"] = "hyperbolic_cosh";
        j["sign"] = f->sign;
        j["N"] = f->modulus;
        j["theta"] = f->theta;
        j["eps"] = cl2::to_json(f->eps);
    } else if (const auto* f = std::get_if<cl2::Circular>(&p)) {
        j["form"] = "circular";
        j["N"] = f->modulus;
        j["theta"] = f->theta;
        j["eps"] = cl2::to_json(f->eps);
    } else if (const auto* f = std::get_if<cl2::HyperbolicSinh>(&p)) {
        j["form"] = "hyperbolic_sinh";
        j["N"] = f->modulus;
        j["theta"] = f->theta;
        j["eps"] = cl2::to_json(f->eps);
    } else if (const auto* f = std::get_if<cl2::Parabolic>(&p)) {
        j["form"] = "parabolic";
        j["a0"] = f->scalar;
        j["im"] = cl2::to_json(f->im);
        j["null"] = f->sector == cl2::SectorLabel::S4Only   ? "I"
                    : f->sector == cl2::SectorLabel::S5Only ? "V"
                                                            : "both";
    }
    return j;
}

std::string polar_human(const cl2::PolarForm& p) {
    using cl2::format_double;
    std::string out;
    if (const auto* f = std::get_if<cl2::HyperbolicCosh>(&p)) {
        out = "sign*N*(cosh(theta) + eps*sinh(theta))\n";
        out += "  sign  = " + std::string(f->sign < 0 ? "-1" : "+1") + "\n";
        out += "  N     = " + format_double(f->modulus) + "\n";
        out += "  theta = " + format_double(f->theta) + "\n";
        out += "  eps   = " + cl2::format_mv(f->eps, cl2::Style::Human);
    } else if (const auto* f = std::get_if<cl2::Circular>(&p)) {
        out = "N*(cos(theta) + eps*sin(theta))\n";
        out += "  N     = " + format_double(f->modulus) + "\n";
        out += "  theta = " + format_double(f->theta) + "\n";
        out += "  eps   = " + cl2::format_mv(f->eps, cl2::Style::Human);
    } else if (const auto* f = std::get_if<cl2::HyperbolicSinh>(&p)) {
        out = "N*(sinh(theta) + eps*cosh(theta))\n";
        out += "  N     = " + format_double(f->modulus) + "\n";
        out += "  theta = " + format_double(f->theta) + "\n";
        out += "  eps   = " + cl2::format_mv(f->eps, cl2::Style::Human);
    } else if (const auto* f = std::get_if<cl2::Parabolic>(&p)) {
        const char* which = f->sector == cl2::SectorLabel::S4Only   ? "I = 0"
                            : f->sector == cl2::SectorLabel::S5Only ? "V = 0"
                                                                    : "I = V = 0";
        out = "a0 + im (parabolic, " + std::string(which) + ")\n";
        out += "  a0 = " + format_double(f->scalar) + "\n";
        out += "  im = " + cl2::format_mv(f->im, cl2::Style::Human);
    }
    return out;
}

std::string sector_human(cl2::SectorLabel label) {
    switch (label) {
        case cl2::SectorLabel::Zero: return "zero";
        case cl2::SectorLabel::NullImaginary: return "E0 (null imaginary)";
        case cl2::SectorLabel::S4Only: return "S4 (I = 0)";
        case cl2::SectorLabel::S5Only: return "S5 (V = 0)";
        default: return cl2::to_string(label);
    }
}

// Concrete members used for display and --verify: finite roots as they
// are; families sampled at the documented eps values (or the user's --eps).
std::vector<cl2::Multivector> sampled_members(const cl2::RootSet& set,
                                              const std::optional<cl2::Multivector>& eps,
                                              const cl2::Tolerances& tol) {
    std::vector<cl2::Multivector> out;
    for (const cl2::RootPart& part : set.parts) {
        if (const auto* f = std::get_if<cl2::FiniteRoots>(&part)) {
            out.insert(out.end(), f->roots.begin(), f->roots.end());
        } else if (const auto* f = std::get_if<cl2::CircularFamily>(&part)) {
            const auto choices =
                eps ? std::vector<cl2::Multivector>{*eps} : timelike_samples();
            for (std::size_t i = 0; i < f->angles.size(); ++i) {
                for (const cl2::Multivector& e : choices) {
                    out.push_back(cl2::family_member(*f, i, e, tol));
                }
            }
        } else if (const auto* f = std::get_if<cl2::HyperbolicUnitFamily>(&part)) {
            const auto choices =
                eps ? std::vector<cl2::Multivector>{*eps} : spacelike_samples();
            for (const cl2::Multivector& e : choices) {
                out.push_back(cl2::family_member(*f, e, tol));
            }
        } else {
            if (!eps) {
                out.insert(out.end(), null_samples().begin(), null_samples().end());
            } else {
                out.push_back(*eps);
            }
        }
    }
    return out;
}

int cmd_classify(const std::string& expr, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr, opt.tol);
    const cl2::SectorLabel label = cl2::classify(a, opt.tol);
    const cl2::QuadraticInvariants q = cl2::invariants(a);
    std::optional<cl2::PolarForm> form;
    if (label != cl2::SectorLabel::Zero) form = cl2::polar(a, opt.tol);

    double deviation = 0.0;
    if (opt.verify && form) {
        deviation = cl2::norm(cl2::reconstruct(*form) - a);
    }

    if (opt.json) {
        cl2::json result;
        result["sector"] = cl2::to_string(label);
        result["I"] = q.I;
        result["N"] = q.N;
        result["V"] = q.V;
        result["polar"] = form ? polar_json(*form) : cl2::json(nullptr);
        cl2::json j = envelope(std::move(result));
        if (opt.verify && form) {
            j["verify"] = {{"ok", true}, {"max_deviation", deviation}};
        }
        emit(j);
    } else {
        std::cout << "sector: " << sector_human(label) << "\n";
        std::cout << "I = " << cl2::format_double(q.I) << "\n";
        std::cout << "N = " << cl2::format_double(q.N) << "\n";
        std::cout << "V = " << cl2::format_double(q.V) << "\n";
        if (form) std::cout << "polar form: " << polar_human(*form) << "\n";
        if (opt.verify && form) {
            std::cout << "verified: reconstruction deviation = "
                      << cl2::format_double(deviation) << "\n";
        }
    }
    return 0;
}

int eval_one(const std::string& expr, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr, opt.tol);
    if (opt.verify) {
        // round-trip check: the machine rendering must re-parse to the
        // identical value
        const cl2::Multivector again =
            cl2::parse_eval(cl2::format_mv(a, cl2::Style::Machine), opt.tol);
        if (!(again == a)) throw cl2::Error("machine format round-trip mismatch");
    }
    if (opt.json) {
        emit(envelope(cl2::to_json(a)));
    } else {
        std::cout << cl2::format_mv(a, cl2::Style::Human) << "\n";
    }
    return 0;
}

int cmd_eval(const std::string& expr, const Options& opt) {
    if (!opt.use_stdin) return eval_one(expr, opt);
    std::string line;
    std::size_t line_no = 0;
    int exit_code = 0;
    while (std::getline(std::cin, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
        try {
            eval_one(line, opt);
        } catch (const cl2::ParseError& e) {
            std::cerr << "line " << line_no << ": " << cl2::to_string(e.kind)
                      << " error at position " << e.position << ": " << e.what() << "\n";
            const int code = (e.kind == cl2::ParseErrorKind::Lexical ||
                              e.kind == cl2::ParseErrorKind::Syntax)
                                 ? 1
                                 : 2;
            if (exit_code == 0) exit_code = code;
        } catch (const cl2::Error& e) {
            std::cerr << "line " << line_no << ": error: " << e.what() << "\n";
            if (exit_code == 0) exit_code = 2;
        }
    }
    return exit_code;
}

int cmd_exp(const std::string& expr, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr, opt.tol);
    const cl2::Multivector result = cl2::exp(a, opt.tol);
    double deviation = 0.0;
    if (opt.verify) deviation = cl2::norm(result - cl2::exp_series(a, 40));
    if (opt.json) {
        cl2::json j = envelope(cl2::to_json(result));
        if (opt.verify) j["verify"] = {{"ok", true}, {"max_deviation", deviation}};
        emit(j);
    } else {
        std::cout << cl2::format_mv(result, cl2::Style::Human) << "\n";
        if (opt.verify) {
            std::cout << "verified against series: max deviation = "
                      << cl2::format_double(deviation) << "\n";
        }
    }
    return 0;
}

int cmd_pow(long long n, const std::string& expr, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr, opt.tol);
    const cl2::Multivector result = cl2::pow_int(a, n, opt.tol);
    double deviation = 0.0;
    if (opt.verify) {
        const cl2::Multivector reference =
            n >= 0 ? cl2::pow_naive(a, n) : cl2::pow_naive(cl2::inverse(a, opt.tol), -n);
        deviation = cl2::norm(result - reference);
    }
    if (opt.json) {
        cl2::json j = envelope(cl2::to_json(result));
        if (opt.verify) j["verify"] = {{"ok", true}, {"max_deviation", deviation}};
        emit(j);
    } else {
        std::cout << cl2::format_mv(result, cl2::Style::Human) << "\n";
        if (opt.verify) {
            std::cout << "verified against repeated multiplication: max deviation = "
                      << cl2::format_double(deviation) << "\n";
        }
    }
    return 0;
}

void print_rootset_human(const cl2::RootSet& set, int n,
                         const std::optional<cl2::Multivector>& eps,
                         const cl2::Tolerances& tol) {
    using cl2::format_double;
    using cl2::format_mv;
    if (set.empty()) {
        std::cout << "no roots\n";
        if (!set.note.empty()) std::cout << "note: " << set.note << "\n";
        return;
    }
    for (const cl2::RootPart& part : set.parts) {
        if (const auto* f = std::get_if<cl2::FiniteRoots>(&part)) {
            std::cout << f->roots.size() << (f->roots.size() == 1 ? " root:\n" : " roots:\n");
            for (std::size_t i = 0; i < f->roots.size(); ++i) {
                std::cout << "  w[" << i << "] = " << format_mv(f->roots[i], cl2::Style::Human)
                          << "\n";
            }
        } else if (const auto* f = std::get_if<cl2::CircularFamily>(&part)) {
            std::cout << "family: scale*(cos(phi) + eps*sin(phi)) for every unit timelike eps "
                         "(E-1)\n";
            std::cout << "  scale  = " << format_double(f->scale) << "\n";
            std::cout << "  angles =";
            for (const double phi : f->angles) std::cout << " " << format_double(phi);
            std::cout << "\n";
            const auto choices = eps ? std::vector<cl2::Multivector>{*eps} : timelike_samples();
            std::cout << (eps ? "  members at the requested eps:\n" : "  sample members:\n");
            const std::size_t count = eps ? f->angles.size() : std::size_t{3};
            for (std::size_t k = 0; k < count; ++k) {
                const std::size_t angle = eps ? k : std::min(k, f->angles.size() - 1);
                const cl2::Multivector& e = choices[eps ? 0 : k % choices.size()];
                std::cout << "    " << format_mv(cl2::family_member(*f, angle, e, tol),
                                                 cl2::Style::Human)
                          << "   (phi = " << format_double(f->angles[angle])
                          << ", eps = " << format_mv(e, cl2::Style::Human) << ")\n";
            }
        } else if (const auto* f = std::get_if<cl2::HyperbolicUnitFamily>(&part)) {
            std::cout << "family: scale*eps for every unit spacelike eps (E1), degree " << n
                      << " being even\n";
            std::cout << "  scale = " << format_double(f->scale) << "\n";
            const auto choices = eps ? std::vector<cl2::Multivector>{*eps} : spacelike_samples();
            std::cout << (eps ? "  member at the requested eps:\n" : "  sample members:\n");
            for (const cl2::Multivector& e : choices) {
                std::cout << "    " << format_mv(cl2::family_member(*f, e, tol),
                                                 cl2::Style::Human)
                          << "\n";
            }
        } else {
            std::cout << "every null imaginary vector (zero scalar part, V = 0) is a root\n";
            std::cout << "  sample members:";
            for (const cl2::Multivector& w : null_samples()) {
                std::cout << "  " << format_mv(w, cl2::Style::Human) << ";";
            }
            std::cout << "\n";
        }
    }
    if (!set.note.empty()) std::cout << "note: " << set.note << "\n";
}

int cmd_roots(int n, const std::string& expr, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr, opt.tol);
    const cl2::RootMode mode =
        opt.mode == "paper" ? cl2::RootMode::PaperFaithful : cl2::RootMode::Complete;
    const cl2::RootSet set = cl2::nth_roots(a, n, mode, opt.tol);

    std::optional<cl2::Multivector> eps;
    if (opt.eps_expr) eps = cl2::parse_eval(*opt.eps_expr, opt.tol);

    bool ok = true;
    double max_deviation = 0.0;
    std::size_t checked = 0;
    if (opt.verify) {
        for (const cl2::Multivector& w : sampled_members(set, eps, opt.tol)) {
            const double dev = cl2::norm(cl2::pow_naive(w, n) - a);
            max_deviation = std::max(max_deviation, dev);
            ok = ok && cl2::verify_root(a, n, w, opt.tol);
            ++checked;
        }
    }

    if (opt.json) {
        cl2::json j = envelope(cl2::to_json(set));
        if (eps) {
            cl2::json members = cl2::json::array();
            for (const cl2::Multivector& w : sampled_members(set, eps, opt.tol)) {
                members.push_back(cl2::to_json(w));
            }
            j["members"] = std::move(members);
        }
        if (opt.verify) {
            j["verify"] = {{"ok", ok}, {"checked", checked}, {"max_deviation", max_deviation}};
        }
        emit(j);
    } else {
        print_rootset_human(set, n, eps, opt.tol);
        if (opt.verify) {
            std::cout << "verified " << checked << " member(s): " << (ok ? "all satisfy" : "FAILED")
                      << " w^" << n << " = a (max deviation = "
                      << cl2::format_double(max_deviation) << ")\n";
        }
    }
    if (set.empty() && opt.strict_empty) return 2;
    return ok ? 0 : 2;
}

int cmd_verify(int n, const std::string& expr_a, const std::string& expr_w, const Options& opt) {
    const cl2::Multivector a = cl2::parse_eval(expr_a, opt.tol);
    const cl2::Multivector w = cl2::parse_eval(expr_w, opt.tol);
    const bool ok = cl2::verify_root(a, n, w, opt.tol);
    const double deviation = cl2::norm(cl2::pow_naive(w, n) - a);
    if (opt.json) {
        cl2::json result;
        result["ok"] = ok;
        result["deviation"] = deviation;
        emit(envelope(std::move(result)));
    } else {
        std::cout << (ok ? "true" : "false") << "\n";
        std::cout << "|w^" << n << " - a| = " << cl2::format_double(deviation) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Calculator for the Clifford algebra with basis 1, e1, e2, e3 = e1*e2 "
                 "(e1^2 = e2^2 = 1, e3^2 = -1)"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "emit JSON (schema cl2/1) instead of human-readable text");
    app.add_flag("--verify", opt.verify,
                 "re-check every reported result against the brute-force oracle");
    app.add_option("--tol", opt.tol_override,
                   "relative classification tolerance (default 1e-10)")
        ->check(CLI::PositiveNumber);

    std::string expr;
    std::string expr_w;
    long long pow_n = 0;
    int roots_n = 2;
    int verify_n = 2;

    auto* classify_cmd = app.add_subcommand("classify", "sector label, I/N/V, and polar form");
    classify_cmd->add_option("expr", expr, "expression to classify")->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression");
    eval_cmd->add_option("expr", expr, "expression to evaluate");
    eval_cmd->add_flag("--stdin", opt.use_stdin, "read one expression per line from stdin");

    auto* exp_cmd = app.add_subcommand("exp", "closed-form exponential");
    exp_cmd->add_option("expr", expr, "argument expression")->required();

    auto* pow_cmd = app.add_subcommand("pow", "integer power by the sector's closed form");
    pow_cmd->add_option("n", pow_n, "integer exponent (negative needs '--' first)")->required();
    pow_cmd->add_option("expr", expr, "base expression")->required();

    auto* roots_cmd = app.add_subcommand("roots", "all nth roots of an expression");
    roots_cmd->add_option("n", roots_n, "root degree (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    roots_cmd->add_option("expr", expr, "radicand expression")->required();
    roots_cmd->add_option("--mode", opt.mode, "paper: classical formulas only; complete: all roots")
        ->check(CLI::IsMember({"paper", "complete"}))
        ->capture_default_str();
    roots_cmd
        ->add_option("--eps", opt.eps_expr,
                     "instantiate family results at this imaginary unit (expression)")
        ->expected(1);
    roots_cmd->add_flag("--strict-empty", opt.strict_empty,
                        "exit with code 2 when the root set is empty");

    auto* verify_cmd =
        app.add_subcommand("verify", "oracle check that w^n = a by repeated multiplication");
    verify_cmd->add_option("n", verify_n, "root degree (>= 2)")
        ->required()
        ->check(CLI::Range(2, 64));
    verify_cmd->add_option("a", expr, "radicand expression")->required();
    verify_cmd->add_option("w", expr_w, "candidate root expression")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    }

    if (opt.tol_override) opt.tol.tau_class = *opt.tol_override;
    try {
        opt.tol.validate();
    } catch (const cl2::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 3;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(expr, opt);
        if (app.got_subcommand(eval_cmd)) {
            if (!opt.use_stdin && expr.empty()) {
                std::cerr << "usage error: eval needs an expression or --stdin\n";
                return 3;
            }
            return cmd_eval(expr, opt);
        }
        if (app.got_subcommand(exp_cmd)) return cmd_exp(expr, opt);
        if (app.got_subcommand(pow_cmd)) return cmd_pow(pow_n, expr, opt);
        if (app.got_subcommand(roots_cmd)) return cmd_roots(roots_n, expr, opt);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_n, expr, expr_w, opt);
    } catch (const cl2::ParseError& e) {
        std::cerr << cl2::to_string(e.kind) << " error at position " << e.position << ": "
                  << e.what() << "\n";
        return (e.kind == cl2::ParseErrorKind::Lexical || e.kind == cl2::ParseErrorKind::Syntax)
                   ? 1
                   : 2;
    } catch (const cl2::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
