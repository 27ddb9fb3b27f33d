// splinewave: construct spline-type orthogonal scaling functions, verify the
// defining identities, sample phi by cascade iteration, and exercise the
// periodic filter bank. Exit codes: 0 success/pass, 1 verification failure,
// 2 numeric failure, 64 usage error.

#include <splinewave/splinewave.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

namespace sw = splinewave;

namespace {

bool stderr_color() {
    static const bool on = ::isatty(::fileno(stderr)) != 0 && std::getenv("NO_COLOR") == nullptr;
    return on;
}

void warn(const std::string& msg) {
    if (stderr_color())
        std::cerr << "\033[33mwarning:\033[0m " << msg << "\n";
    else
        std::cerr << "warning: " << msg << "\n";
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string jstr(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

std::string jnum_array(const std::vector<double>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += fmt(v[i]);
    }
    out += ']';
    return out;
}

std::string jcomplex(const std::complex<double>& z) {
    return "{\"re\": " + fmt(z.real()) + ", \"im\": " + fmt(z.imag()) + "}";
}

// Human form of the exact polynomial, e.g. "4 - 9/2 x + 3/2 x^2".
std::string poly_text(const sw::RationalPoly& p) {
    if (p.degree() < 0) return "0";
    std::string out;
    for (int k = 0; k <= p.degree(); ++k) {
        sw::Rational c = p.coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        sw::Rational mag = neg ? sw::Rational(-c) : c;
        std::string ms = sw::fraction_string(mag);
        if (k == 0) {
            out += ms;
        } else {
            if (ms != "1") out += ms + " ";
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

void emit_solution_fields(std::ostream& os, const sw::FactorSolution& s) {
    os << "\"n\": " << s.n << ", \"branch\": " << jstr(s.branch)
       << ", \"real\": " << (s.real ? "true" : "false") << ", \"a\": ";
    if (s.real) {
        os << jnum_array(s.a_real);
    } else {
        os << "[";
        for (size_t i = 0; i < s.a.size(); ++i) {
            if (i) os << ", ";
            os << jcomplex(s.a[i]);
        }
        os << "]";
    }
    std::complex<long double> sa = sw::solution_sum_a(s);
    std::complex<long double> sq = sw::solution_sum_a_sq(s);
    if (s.real) {
        os << ", \"sum_a\": " << fmt(static_cast<double>(sa.real()))
           << ", \"sum_a_sq\": " << fmt(static_cast<double>(sq.real()));
    } else {
        os << ", \"sum_a\": "
           << jcomplex({static_cast<double>(sa.real()), static_cast<double>(sa.imag())})
           << ", \"sum_a_sq\": "
           << jcomplex({static_cast<double>(sq.real()), static_cast<double>(sq.imag())});
    }
}

int cmd_qpoly(int n, bool oracle, bool json) {
    sw::QPolynomial q = sw::lorentz_q(n);
    bool match = true;
    if (oracle) {
        auto [s, t] = sw::eea_q(n);
        match = s.poly == q.poly && t == sw::poly_reflect(q.poly);
    }
    if (json) {
        std::ostringstream os;
        os << "{\"n\": " << n << ", \"coefficients\": [";
        for (int k = 0; k <= q.poly.degree(); ++k) {
            if (k) os << ", ";
            os << jstr(sw::fraction_string(q.poly.coeff(k)));
        }
        os << "], \"decimals\": [";
        for (int k = 0; k <= q.poly.degree(); ++k) {
            if (k) os << ", ";
            os << fmt(sw::to_double(q.poly.coeff(k)));
        }
        os << "]";
        if (oracle) os << ", \"eea_match\": " << (match ? "true" : "false");
        os << "}";
        std::cout << os.str() << "\n";
    } else {
        std::cout << "Q_" << n << "(x) = " << poly_text(q.poly) << "\n";
        std::cout << "decimals:";
        for (int k = 0; k <= q.poly.degree(); ++k)
            std::cout << " " << fmt(sw::to_double(q.poly.coeff(k)));
        std::cout << "\n";
        if (oracle) std::cout << "EEA oracle: " << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return (oracle && !match) ? 1 : 0;
}

int cmd_factor(int n, const std::string& branch, bool all) {
    sw::LaurentSymbol L = sw::laurent_symbol(sw::lorentz_q(n));
    std::ostringstream os;
    if (all) {
        std::vector<sw::FactorSolution> sols = sw::enumerate_solutions(L);
        os << "{\"n\": " << n << ", \"count\": " << sols.size();
        if (n > 16)
            os << ", \"warning\": " << jstr("orders above 16 are outside the validated accuracy range");
        os << ", \"solutions\": [\n";
        for (size_t i = 0; i < sols.size(); ++i) {
            os << "  {";
            emit_solution_fields(os, sols[i]);
            os << (i + 1 < sols.size() ? "},\n" : "}\n");
        }
        os << "]}";
    } else {
        sw::FactorSolution s = sw::factor_branch(L, branch);
        os << "{";
        emit_solution_fields(os, s);
        if (n > 16)
            os << ", \"warning\": " << jstr("orders above 16 are outside the validated accuracy range");
        os << "}";
    }
    std::cout << os.str() << "\n";
    return 0;
}

int cmd_coeffs(int n, const std::string& branch, bool csv) {
    sw::LaurentSymbol L = sw::laurent_symbol(sw::lorentz_q(n));
    sw::FactorSolution s = sw::spectral_factor(L, branch);
    sw::RefinementMask m = sw::refinement_mask(n, s);
    if (csv) {
        std::cout << "k,p\n";
        for (size_t j = 0; j < m.p.size(); ++j)
            std::cout << (m.k_min + static_cast<int>(j)) << "," << fmt(m.p[j]) << "\n";
    } else {
        std::ostringstream os;
        os << "{\"n\": " << n << ", \"branch\": " << jstr(s.branch) << ", \"k_min\": " << m.k_min
           << ", \"k_max\": " << m.k_max << ", \"p\": " << jnum_array(m.p);
        if (n > 16)
            os << ", \"warning\": " << jstr("orders above 16 are outside the validated accuracy range");
        os << "}";
        std::cout << os.str() << "\n";
    }
    return 0;
}

int cmd_cascade(int n, int J, int iters, const std::string& out_path) {
    sw::LaurentSymbol L = sw::laurent_symbol(sw::lorentz_q(n));
    sw::FactorSolution s = sw::spectral_factor(L, "paper");
    sw::RefinementMask m = sw::refinement_mask(n, s);
    sw::ScalingTable t = sw::cascade(m, J, iters);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cascade: cannot open '" << out_path << "' for writing\n";
            return 64;
        }
        os = &file;
    }
    *os << "x,phi\n";
    double h = std::ldexp(1.0, -J);
    for (size_t j = 0; j < t.samples.size(); ++j)
        *os << fmt(t.k_min + static_cast<double>(j) * h) << "," << fmt(t.samples[j]) << "\n";
    if (!out_path.empty() && !file.good()) {
        std::cerr << "cascade: write to '" << out_path << "' failed\n";
        return 64;
    }
    std::cerr << "cascade: sup|phi_m - phi_{m-1}| = " << fmt(t.last_delta) << " after "
              << iters << " iterations\n";
    if (t.non_convergence)
        warn("cascade: sup differences increased over the final 3 iterations");
    return 0;
}

void emit_check(std::ostream& os, const sw::CheckResult& c) {
    os << "    " << jstr(c.name) << ": {\"value\": " << fmt(c.value);
    if (c.name == "l2_bound_rhs") {
        // the bound itself; recorded so the report shows both sides
    } else if (c.cmp == '<') {
        os << ", \"bound\": " << fmt(c.reference);
    } else if (c.cmp == '>') {
        os << ", \"lower_bound\": " << fmt(c.reference) << ", \"tolerance\": " << fmt(c.tolerance);
    } else {
        if (c.reference != 0.0) os << ", \"target\": " << fmt(c.reference);
        os << ", \"tolerance\": " << fmt(c.tolerance);
    }
    os << ", \"pass\": " << (c.pass ? "true" : "false") << "}";
}

int cmd_verify(int n, const std::string& branch, double perturb) {
    sw::VerificationReport r = sw::run_verification(n, branch, perturb);
    std::ostringstream os;
    os << "{\n  \"n\": " << r.n << ",\n  \"branch\": " << jstr(r.branch) << ",\n  \"a\": "
       << jnum_array(r.a) << ",\n  \"p\": " << jnum_array(r.p) << ",\n  \"checks\": {\n";
    for (size_t i = 0; i < r.checks.size(); ++i) {
        emit_check(os, r.checks[i]);
        os << (i + 1 < r.checks.size() ? ",\n" : "\n");
    }
    os << "  },\n  \"pass\": " << (r.overall ? "true" : "false");
    if (!r.accuracy_warning.empty()) os << ",\n  \"warning\": " << jstr(r.accuracy_warning);
    os << "\n}";
    std::cout << os.str() << "\n";
    return r.overall ? 0 : 1;
}

int cmd_roundtrip(int n, size_t length, int levels, std::uint64_t seed) {
    sw::LaurentSymbol L = sw::laurent_symbol(sw::lorentz_q(n));
    sw::FactorSolution s = sw::spectral_factor(L, "paper");
    sw::RefinementMask m = sw::refinement_mask(n, s);
    sw::OrthFilterPair fp = sw::make_filter_pair(m);

    // Deterministic signal in [-1, 1): fixed 53-bit mapping, identical across
    // platforms for a given seed.
    std::mt19937_64 rng(seed);
    std::vector<double> x(length);
    for (auto& v : x) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v = 2.0 * u - 1.0;
    }

    sw::Pyramid pyr = sw::dwt_periodic(x, fp, levels);
    std::vector<double> y = sw::idwt_periodic(pyr, fp);

    double max_err = 0.0, sup = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        max_err = std::max(max_err, std::fabs(y[i] - x[i]));
        sup = std::max(sup, std::fabs(x[i]));
    }
    long double ex = 0.0L, ec = 0.0L;
    for (double v : x) ex += static_cast<long double>(v) * v;
    for (const auto& lvl : pyr.details)
        for (double v : lvl) ec += static_cast<long double>(v) * v;
    for (double v : pyr.approx) ec += static_cast<long double>(v) * v;
    double parseval = static_cast<double>(std::fabs(std::sqrt(ec) - std::sqrt(ex)) / std::sqrt(ex));

    std::ostringstream os;
    os << "{\"n\": " << n << ", \"length\": " << length << ", \"levels\": " << levels
       << ", \"seed\": " << seed << ", \"max_abs_err\": " << fmt(max_err)
       << ", \"max_rel_err\": " << fmt(sup > 0 ? max_err / sup : 0.0)
       << ", \"parseval_rel_dev\": " << fmt(parseval);
    if (n > 16)
        os << ", \"warning\": " << jstr("orders above 16 are outside the validated accuracy range");
    os << "}";
    std::cout << os.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spline-type orthogonal scaling functions: exact symbol, spectral "
                 "factorization, cascade sampling, filter banks"};
    app.require_subcommand(1);

    int n = 0;
    bool oracle = false, json = false, all = false, csv = false;
    std::string branch = "paper";
    std::string out_path;
    int levels = 10, iters = 25;
    int rt_levels = 3;
    std::uint64_t seed = 0;
    std::uint64_t length = 1024;
    double perturb = 0.0;

    CLI::App* qpoly = app.add_subcommand("qpoly", "print the exact polynomial Q_n");
    qpoly->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    qpoly->add_flag("--oracle", oracle, "cross-check against the extended-Euclid construction");
    qpoly->add_flag("--json", json, "emit JSON instead of text");

    CLI::App* factor = app.add_subcommand("factor", "spectral factorization S_n of the symbol");
    factor->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    factor->add_option("--branch", branch, "root selection: paper | index:<k>");
    factor->add_flag("--all", all, "list every branch of the factorization");

    CLI::App* coeffs = app.add_subcommand("coeffs", "refinement coefficients p_1..p_2n");
    coeffs->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    coeffs->add_option("--branch", branch, "root selection: paper | index:<k>");
    coeffs->add_flag("--csv", csv, "emit CSV (k,p) instead of JSON");

    CLI::App* cascade = app.add_subcommand("cascade", "sample phi_n on a dyadic grid (CSV)");
    cascade->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    cascade->add_option("--levels", levels, "dyadic resolution J (grid step 2^-J)")
        ->check(CLI::Range(1, 16));
    cascade->add_option("--iters", iters, "cascade iterations")->check(CLI::Range(1, 200));
    cascade->add_option("--out", out_path, "output CSV path (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "run every certification check, report JSON");
    verify->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    verify->add_option("--branch", branch, "root selection: paper | index:<k>");
    verify->add_option("--perturb", perturb, "add this to p_1 before the mask checks");

    CLI::App* roundtrip = app.add_subcommand("roundtrip", "dwt/idwt a seeded random signal");
    roundtrip->add_option("--n", n, "order n")->required()->check(CLI::Range(1, 64));
    roundtrip->add_option("--length", length, "signal length")
        ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 26));
    roundtrip->add_option("--levels", rt_levels, "transform levels")->check(CLI::Range(1, 20));
    roundtrip->add_option("--seed", seed, "RNG seed (echoed in the output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(qpoly)) return cmd_qpoly(n, oracle, json);
        if (app.got_subcommand(factor)) return cmd_factor(n, branch, all);
        if (app.got_subcommand(coeffs)) return cmd_coeffs(n, branch, csv);
        if (app.got_subcommand(cascade)) return cmd_cascade(n, levels, iters, out_path);
        if (app.got_subcommand(verify)) return cmd_verify(n, branch, perturb);
        if (app.got_subcommand(roundtrip))
            return cmd_roundtrip(n, static_cast<size_t>(length), rt_levels, seed);
    } catch (const sw::ConvergenceFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const sw::PairingFailure& e) {
        std::cerr << "numeric failure: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    }
    return 0;
}
