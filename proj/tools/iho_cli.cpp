// Command-line surface: evaluation, verification suites, and CSV/JSON output.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iho/grid.hpp"
#include "iho/io.hpp"
#include "iho/lct.hpp"
#include "iho/logmap.hpp"
#include "iho/oscillator.hpp"
#include "iho/rigged.hpp"
#include "iho/specfun.hpp"
#include "iho/wronskian.hpp"

namespace {

using cplx = std::complex<double>;
using namespace iho;

// "1+0.5i", "-2", "0.5i", "1-i"
cplx parse_complex(const std::string& s) {
    if (s.empty()) throw CLI::ValidationError("complex", "empty value");
    double re = 0.0, im = 0.0;
    std::string t = s;
    if (t.back() == 'i' || t.back() == 'I') {
        t.pop_back();
        // split off the real part, if any, at the last interior +/- sign
        std::size_t split = std::string::npos;
        for (std::size_t k = t.size(); k-- > 1;) {
            if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
                split = k;
                break;
            }
        }
        std::string im_str;
        if (split == std::string::npos) {
            im_str = t;
        } else {
            re = std::stod(t.substr(0, split));
            im_str = t.substr(split);
        }
        if (im_str.empty() || im_str == "+")
            im = 1.0;
        else if (im_str == "-")
            im = -1.0;
        else
            im = std::stod(im_str);
    } else {
        re = std::stod(t);
    }
    return {re, im};
}

Grid parse_grid(const std::string& s) {
    const auto c1 = s.find(':'), c2 = s.rfind(':');
    if (c1 == std::string::npos || c2 == c1)
        throw CLI::ValidationError("grid", "expected min:max:count");
    const double lo = std::stod(s.substr(0, c1));
    const double hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
    const long long n = std::stoll(s.substr(c2 + 1));
    if (!(lo < hi) || n < 2)
        throw CLI::ValidationError("grid", "need min < max and count >= 2");
    return Grid::from_range(lo, hi, static_cast<std::size_t>(n));
}

lct::SL2Matrix parse_matrix(const std::string& s) {
    std::vector<double> v;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t comma = s.find(',', pos);
        v.push_back(std::stod(s.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.size() != 4)
        throw CLI::ValidationError("matrix", "expected a,b,alpha,beta");
    const lct::SL2Matrix A{v[0], v[1], v[2], v[3]};
    A.validate(1e-9);
    return A;
}

oscillator::Parity parse_parity(const std::string& s) {
    if (s == "even") return oscillator::Parity::Even;
    if (s == "odd") return oscillator::Parity::Odd;
    throw CLI::ValidationError("parity", "expected even|odd");
}

struct Output {
    std::string path;   // empty = stdout
    std::string format; // csv | json

    void emit(const std::string& subcommand,
              const nlohmann::json& params, const io::Table& t) const {
        std::ofstream file;
        std::ostream* os = &std::cout;
        if (!path.empty()) {
            file.open(path);
            if (!file) throw ValidationError("cannot open output file " + path);
            os = &file;
        }
        if (format == "json") {
            nlohmann::json data = nlohmann::json::array();
            for (const auto& row : t.rows) {
                nlohmann::json obj;
                for (std::size_t i = 0; i < t.header.size(); ++i)
                    obj[t.header[i]] = row[i];
                data.push_back(std::move(obj));
            }
            nlohmann::json doc{
                {"meta", {{"subcommand", subcommand}, {"params", params}}},
                {"data", std::move(data)}};
            *os << doc.dump(2) << '\n';
        } else {
            io::write_csv(*os, t);
        }
    }
};

SampledFunction gaussian_on(const Grid& g, double sigma) {
    return sample(g, [sigma](double x) {
        return cplx(std::exp(-x * x / (2.0 * sigma * sigma)), 0.0);
    });
}

int run_eval(const std::string& parity, double omega, const std::string& lam,
             int alpha_sign, const std::string& grid_str, bool plot_data,
             const Output& out) {
    const oscillator::EigenParams p{parse_complex(lam), omega, alpha_sign,
                                    parse_parity(parity)};
    p.validate();
    const Grid g = parse_grid(grid_str);

    io::Table t;
    t.header = plot_data ? std::vector<std::string>{"x", "abs", "arg"}
                         : std::vector<std::string>{"x", "re", "im"};
    for (std::size_t i = 0; i < g.n; ++i) {
        const double x = g.x(i);
        const cplx v = oscillator::psi(p, x);
        if (plot_data)
            t.rows.push_back({x, std::abs(v), std::arg(v)});
        else
            t.rows.push_back({x, v.real(), v.imag()});
    }
    out.emit("eval",
             {{"parity", parity}, {"omega", omega}, {"lambda", lam},
              {"alpha_sign", alpha_sign}, {"grid", grid_str}},
             t);
    return 0;
}

int run_residual(const std::string& parity, double omega,
                 const std::string& re_grid_str, const std::string& im_grid_str,
                 const std::string& x_grid_str, double h, double tol,
                 const Output& out) {
    const Grid re_g = parse_grid(re_grid_str);
    const Grid im_g = parse_grid(im_grid_str);
    const Grid xg = parse_grid(x_grid_str);

    io::Table t;
    t.header = {"lambda_re", "lambda_im", "residual"};
    bool ok = true;
    for (std::size_t i = 0; i < re_g.n; ++i) {
        for (std::size_t j = 0; j < im_g.n; ++j) {
            const cplx lam{re_g.x(i), im_g.x(j)};
            const oscillator::EigenParams p{lam, omega, +1, parse_parity(parity)};
            const double r = oscillator::ode_residual(
                [&](double x) { return oscillator::psi(p, x); }, lam, omega, xg,
                h);
            ok = ok && r <= tol;
            t.rows.push_back({lam.real(), lam.imag(), r});
        }
    }
    out.emit("residual",
             {{"parity", parity}, {"omega", omega}, {"tol", tol}, {"h", h}}, t);
    if (!ok) {
        std::cerr << "residual: some residuals exceed tol " << tol << "\n";
        return 1;
    }
    return 0;
}

int run_lct(const std::string& matrix_str, const std::string& grid_str,
            double sigma, bool fast, const Output& out) {
    const lct::SL2Matrix A = parse_matrix(matrix_str);
    const Grid g = parse_grid(grid_str);
    const SampledFunction f = gaussian_on(g, sigma);
    const SampledFunction w =
        fast ? lct::lct_apply_fast(A, f) : lct::lct_apply_direct(A, f, g);

    io::Table t;
    t.header = {"u", "re", "im"};
    for (std::size_t i = 0; i < w.size(); ++i)
        t.rows.push_back({w.x(i), w.values[i].real(), w.values[i].imag()});
    out.emit("lct",
             {{"matrix", matrix_str}, {"grid", grid_str}, {"sigma", sigma},
              {"fast", fast}},
             t);
    return 0;
}

int run_group_check(const std::string& m1_str, const std::string& m2_str,
                    const std::string& grid_str, double sigma, double tol,
                    const Output& out) {
    const lct::SL2Matrix A1 = parse_matrix(m1_str);
    const lct::SL2Matrix A2 = parse_matrix(m2_str);
    const Grid g = parse_grid(grid_str);
    const double defect = lct::group_law_check(A2, A1, gaussian_on(g, sigma));

    io::Table t;
    t.header = {"defect"};
    t.rows.push_back({defect});
    out.emit("group-check",
             {{"matrix1", m1_str}, {"matrix2", m2_str}, {"tol", tol}}, t);
    if (defect > tol) {
        std::cerr << "group-check: defect " << defect << " > tol " << tol << "\n";
        return 1;
    }
    return 0;
}

int run_unitarity(const std::string& matrix_str, const std::string& grid_str,
                  double tol, const Output& out) {
    const lct::SL2Matrix A = parse_matrix(matrix_str);
    const Grid g = parse_grid(grid_str);
    const SampledFunction f = gaussian_on(g, 1.0);
    const SampledFunction h =
        sample(g, [](double x) { return cplx(x, 0.3) * std::exp(-x * x / 3.0); });
    const double defect = lct::unitarity_check(A, f, h);

    io::Table t;
    t.header = {"defect"};
    t.rows.push_back({defect});
    out.emit("unitarity", {{"matrix", matrix_str}, {"tol", tol}}, t);
    if (defect > tol) {
        std::cerr << "unitarity: defect " << defect << " > tol " << tol << "\n";
        return 1;
    }
    return 0;
}

int run_spectrum_map(double omega, double a_param, const std::string& lam_str,
                     const Output& out) {
    const cplx lam = parse_complex(lam_str);
    if (lam.imag() != 0.0)
        throw ValidationError("spectrum-map: lambda must be real");

    const Grid xg = Grid::from_range(-14.0, 14.0, 2801);
    const oscillator::EigenParams p{lam, omega, +1, oscillator::Parity::Even};
    const SampledFunction psi = sample(xg, [&](double x) {
        return oscillator::psi(p, x) * logmap::plateau_window(x);
    });
    const logmap::HalfLineSpec spec{-8.0, 2.3, 1031};
    const logmap::TwoLineFunction ch =
        logmap::spectrum_map_pipeline(omega, a_param, psi, spec);

    const double expected = lam.real() / (2.0 * omega);
    io::Table t;
    t.header = {"channel", "peak", "expected", "bin"};
    bool ok = true;
    int idx = 0;
    for (const SampledFunction* c : {&ch.plus, &ch.minus}) {
        const double rel = norm(*c) / std::max(ch.total_norm(), 1e-300);
        if (rel > 0.25) { // channel carries signal
            const double peak = logmap::dominant_frequency(*c);
            const double bin = logmap::frequency_bin_width(*c);
            ok = ok && std::abs(peak - expected) <= bin;
            t.rows.push_back({static_cast<double>(idx), peak, expected, bin});
        }
        ++idx;
    }
    out.emit("spectrum-map",
             {{"omega", omega}, {"a_param", a_param}, {"lambda", lam_str}}, t);
    if (!ok) {
        std::cerr << "spectrum-map: peak not within one bin of lambda/(2 omega)\n";
        return 1;
    }
    return 0;
}

int run_wronskian_probe(double a, double alpha, double sigma,
                        const std::string& probes_str, const Output& out) {
    std::vector<double> probes;
    std::size_t pos = 0;
    while (pos <= probes_str.size()) {
        const std::size_t comma = probes_str.find(',', pos);
        probes.push_back(std::stod(probes_str.substr(pos, comma - pos)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    const auto A_of = [alpha](double b) {
        return oscillator::amplitude(oscillator::EigenParams{
            cplx(b, 0.0), std::abs(alpha), alpha >= 0 ? +1 : -1,
            oscillator::Parity::Even});
    };
    const auto rho = [a, sigma](double b) {
        const double s = (b - a) / sigma;
        return std::exp(-0.5 * s * s) /
               (sigma * std::sqrt(2.0 * 3.141592653589793238462643));
    };
    const auto b_grid = wronskian::make_pv_grid(a, 6.0 * sigma, 0.005 * sigma);

    io::Table t;
    t.header = {"x_probe", "ratio"};
    for (double x : probes)
        t.rows.push_back({x, wronskian::delta_normalization_probe(
                                 a, alpha, A_of, rho, x, b_grid)});
    out.emit("wronskian-probe", {{"a", a}, {"alpha", alpha}, {"sigma", sigma}},
             t);
    return 0;
}

int run_rigged_check(const std::string& lam_str, double omega, double epsilon,
                     const std::string& parity, const Output& out) {
    const cplx lam = parse_complex(lam_str);
    const double alpha = omega;
    const std::vector<double> Xs{20.0, 40.0, 80.0, 160.0, 320.0};
    const auto phi = [epsilon, alpha](double x) {
        return rigged::phi_chirped_witness(epsilon, alpha, x);
    };
    const rigged::ConvergenceVerdict v = rigged::pairing_partials(
        lam, omega, parse_parity(parity), phi, Xs);

    io::Table t;
    t.header = {"X", "I_re", "I_im"};
    for (const auto& [X, val] : v.partials)
        t.rows.push_back({X, val.real(), val.imag()});
    out.emit("rigged-check",
             {{"lambda", lam_str}, {"omega", omega}, {"epsilon", epsilon},
              {"verdict", rigged::to_string(v.verdict)}},
             t);
    std::cerr << "verdict: " << rigged::to_string(v.verdict) << "\n";
    return v.verdict == rigged::Verdict::Inconclusive ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"inverted harmonic oscillator toolkit"};
    app.require_subcommand(1);

    Output out;
    app.add_option("-o,--output", out.path, "output path (default stdout)");
    out.format = "csv";
    app.add_option("--format", out.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // eval
    std::string parity = "even", lam = "0", grid = "-5:5:1001";
    double omega = 1.0;
    int alpha_sign = +1;
    bool plot_data = false;
    auto* eval = app.add_subcommand("eval", "evaluate an eigenfunction");
    eval->add_option("--parity", parity);
    eval->add_option("--omega", omega);
    eval->add_option("--lambda", lam);
    eval->add_option("--alpha-sign", alpha_sign);
    eval->add_option("--grid", grid);
    eval->add_flag("--emit-plot-data", plot_data);

    // residual
    std::string re_grid = "-2:2:5", im_grid = "-2:2:5", x_grid = "-4:4:801";
    double h = 1e-3, tol = 1e-4;
    auto* residual = app.add_subcommand("residual", "ODE residual over a lambda grid");
    residual->add_option("--parity", parity);
    residual->add_option("--omega", omega);
    residual->add_option("--lambda-re-grid", re_grid);
    residual->add_option("--lambda-im-grid", im_grid);
    residual->add_option("--x-grid", x_grid);
    residual->add_option("--step", h);
    residual->add_option("--tol", tol);

    // lct
    std::string matrix = "0,1,-1,0", matrix2 = "0,1,-1,0";
    double sigma = 1.0;
    bool fast = false;
    auto* lct_cmd = app.add_subcommand("lct", "apply a canonical transform to a Gaussian");
    lct_cmd->add_option("--matrix", matrix);
    lct_cmd->add_option("--grid", grid);
    lct_cmd->add_option("--sigma", sigma);
    lct_cmd->add_flag("--fast", fast);

    // group-check
    double gtol = 1e-5;
    auto* group = app.add_subcommand("group-check", "composition-law defect");
    group->add_option("--matrix1", matrix);
    group->add_option("--matrix2", matrix2);
    group->add_option("--grid", grid);
    group->add_option("--sigma", sigma);
    group->add_option("--tol", gtol);

    // unitarity
    double utol = 1e-6;
    auto* unit = app.add_subcommand("unitarity", "inner-product preservation defect");
    unit->add_option("--matrix", matrix);
    unit->add_option("--grid", grid);
    unit->add_option("--tol", utol);

    // spectrum-map
    double a_param = 1.0;
    auto* smap = app.add_subcommand("spectrum-map", "log-coordinate channel spectra");
    smap->add_option("--omega", omega);
    smap->add_option("--a-param", a_param);
    smap->add_option("--lambda", lam);

    // wronskian-probe
    double wa = 1.0, walpha = 1.0, wsigma = 1.0;
    std::string probes = "100,1000";
    auto* wprobe = app.add_subcommand("wronskian-probe", "smeared delta-normalization ratio");
    wprobe->add_option("--a", wa);
    wprobe->add_option("--alpha", walpha);
    wprobe->add_option("--sigma", wsigma);
    wprobe->add_option("--x-probes", probes);

    // rigged-check
    double epsilon = 0.15;
    auto* rcheck = app.add_subcommand("rigged-check", "pairing convergence verdict");
    rcheck->add_option("--lambda", lam);
    rcheck->add_option("--omega", omega);
    rcheck->add_option("--epsilon", epsilon);
    rcheck->add_option("--parity", parity);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*eval)
            return run_eval(parity, omega, lam, alpha_sign, grid, plot_data, out);
        if (*residual)
            return run_residual(parity, omega, re_grid, im_grid, x_grid, h, tol, out);
        if (*lct_cmd) return run_lct(matrix, grid, sigma, fast, out);
        if (*group) return run_group_check(matrix, matrix2, grid, sigma, gtol, out);
        if (*unit) return run_unitarity(matrix, grid, utol, out);
        if (*smap) return run_spectrum_map(omega, a_param, lam, out);
        if (*wprobe) return run_wronskian_probe(wa, walpha, wsigma, probes, out);
        if (*rcheck) return run_rigged_check(lam, omega, epsilon, parity, out);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const GridMismatch& e) {
        std::cerr << "grid mismatch: " << e.what() << "\n";
        return 2;
    } catch (const NonConvergence& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "bad numeric argument: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
