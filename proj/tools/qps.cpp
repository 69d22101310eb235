#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qps/io.hpp"
#include "qps/mub.hpp"
#include "qps/probe.hpp"
#include "qps/verify.hpp"
#include "qps/wigner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIoFailure = 3;

qps::FileFormat parse_format(const std::string& format) {
    if (format == "csv") return qps::FileFormat::csv;
    if (format == "json") return qps::FileFormat::json;
    throw std::invalid_argument("format must be csv or json");
}

int cmd_wigner(const std::string& state_path, const std::string& out_path,
               const std::string& format, double tol) {
    const auto fmt = parse_format(format);
    const qps::DensityMatrix rho = qps::load_state(state_path, tol);
    const qps::LineOperatorTable table(rho.dim());
    qps::write_wigner_grid(out_path, qps::wigner_transform(rho.matrix(), table),
                           rho.dim(), fmt);
    return kExitOk;
}

int cmd_kirkwood(const std::string& state_path, const std::string& out_path,
                 const std::string& format, double tol) {
    const auto fmt = parse_format(format);
    const qps::DensityMatrix rho = qps::load_state(state_path, tol);
    qps::write_kirkwood_grid(out_path, qps::kirkwood(rho), rho.dim(), fmt);
    return kExitOk;
}

int cmd_reconstruct(const std::string& state_path, const std::string& out_path,
                    const std::string& format, double tol, double eps1,
                    double eps2, double sigma2, bool extrapolate) {
    const auto fmt = parse_format(format);
    const qps::DensityMatrix rho = qps::load_state(state_path, tol);
    const qps::Dimension dim = rho.dim();

    qps::ProbeConfig config{eps1, eps2, sigma2};
    config.validate();
    const qps::SimulatedProbe probe(rho, config);
    qps::RealGrid recon;
    if (extrapolate) {
        qps::ProbeConfig half = config;
        half.eps1 *= 0.5;
        const qps::SimulatedProbe probe_half(rho, half);
        recon = qps::reconstruct_wigner(probe, probe_half);
    } else {
        recon = qps::reconstruct_wigner(probe);
    }
    qps::write_wigner_grid(out_path, recon, dim, fmt);

    const qps::LineOperatorTable table(dim);
    const qps::RealGrid direct = qps::wigner_transform(rho.matrix(), table);
    const Eigen::MatrixXd dev = (recon - direct).cwiseAbs();
    std::ofstream report(out_path + ".report.json");
    if (!report) throw qps::IoError("cannot write " + out_path + ".report.json");
    report << nlohmann::json{{"max_abs_deviation", dev.maxCoeff()},
                             {"mean_abs_deviation", dev.mean()},
                             {"eps1", eps1},
                             {"eps2", eps2},
                             {"sigma_p1_sq", sigma2},
                             {"extrapolated", extrapolate}}
                  .dump(2)
           << '\n';
    return kExitOk;
}

int cmd_verify(int n, int trials, std::uint64_t seed, double tol) {
    const qps::Dimension dim = qps::Dimension::validate(n);
    const qps::VerifyReport report = qps::run_verification(dim, trials, seed, tol);
    std::cout << report.table();
    return report.all_passed() ? kExitOk : kExitPropertyFailure;
}

int cmd_mub(int n, const std::string& out_path) {
    const qps::Dimension dim = qps::Dimension::validate(n);
    const qps::MubFamily mubs(dim);
    nlohmann::json bases = nlohmann::json::array();
    for (const auto b : mubs.basis_indices()) {
        nlohmann::json states = nlohmann::json::array();
        for (int m = 0; m < dim.n(); ++m) {
            const qps::Vector& s = mubs.state(b, m);
            nlohmann::json amps = nlohmann::json::array();
            for (int i = 0; i < dim.n(); ++i)
                amps.push_back({s(i).real(), s(i).imag()});
            states.push_back({{"m", m}, {"amplitudes", std::move(amps)}});
        }
        nlohmann::json basis;
        if (b.is_reference())
            basis["basis"] = "reference";
        else
            basis["basis"] = b.shift();
        basis["states"] = std::move(states);
        bases.push_back(std::move(basis));
    }
    std::ofstream out(out_path);
    if (!out) throw qps::IoError("cannot write " + out_path);
    out << nlohmann::json{{"dim", n}, {"bases", std::move(bases)}}.dump(2)
        << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete phase-space toolkit: Wigner and Kirkwood "
                 "quasi-distributions in odd prime dimension"};
    app.require_subcommand(1);

    std::string state_path, out_path, format = "csv";
    double tol = 1e-10;
    double eps1 = 1e-3, eps2 = 1.0, sigma2 = 1.0;
    bool extrapolate = false;
    int n = 0, trials = 20;
    std::uint64_t seed = 0;

    auto* wigner = app.add_subcommand("wigner", "Wigner grid of a state file");
    wigner->add_option("state", state_path, "input state JSON")->required();
    wigner->add_option("-o,--out", out_path, "output grid path")->required();
    wigner->add_option("--format", format, "csv or json");
    wigner->add_option("--tol", tol, "validation tolerance");

    auto* kirk = app.add_subcommand("kirkwood", "Kirkwood grid of a state file");
    kirk->add_option("state", state_path, "input state JSON")->required();
    kirk->add_option("-o,--out", out_path, "output grid path")->required();
    kirk->add_option("--format", format, "csv or json");
    kirk->add_option("--tol", tol, "validation tolerance");

    auto* recon = app.add_subcommand(
        "reconstruct", "Wigner grid rebuilt from simulated probe measurements");
    recon->add_option("state", state_path, "input state JSON")->required();
    recon->add_option("-o,--out", out_path, "output grid path")->required();
    recon->add_option("--format", format, "csv or json");
    recon->add_option("--tol", tol, "validation tolerance");
    recon->add_option("--eps1", eps1, "first probe coupling (0 = exact limit)");
    recon->add_option("--eps2", eps2, "second probe coupling");
    recon->add_option("--sigma2", sigma2, "probe-1 momentum variance");
    recon->add_flag("--extrapolate", extrapolate,
                    "Richardson-extrapolate from runs at eps1 and eps1/2");

    auto* verify = app.add_subcommand("verify", "run all invariant suites");
    verify->add_option("--n", n, "odd prime dimension")->required();
    verify->add_option("--trials", trials, "random states per suite");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--tol", tol, "pass threshold");

    auto* mub = app.add_subcommand("mub", "emit the N+1 MUB state vectors");
    mub->add_option("--n", n, "odd prime dimension")->required();
    mub->add_option("-o,--out", out_path, "output JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*wigner) return cmd_wigner(state_path, out_path, format, tol);
        if (*kirk) return cmd_kirkwood(state_path, out_path, format, tol);
        if (*recon)
            return cmd_reconstruct(state_path, out_path, format, tol, eps1,
                                   eps2, sigma2, extrapolate);
        if (*verify) return cmd_verify(n, trials, seed, tol);
        if (*mub) return cmd_mub(n, out_path);
    } catch (const qps::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIoFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;
}
