#include "ahlab/artin_hasse.hpp"
#include "ahlab/verifier.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1; // a fail or refuted-instance in the report
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

int write_output(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file: " << path << "\n";
        return kExitInternal;
    }
    out << data;
    if (!out) {
        std::cerr << "error: write failed: " << path << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

int run_coeffs(std::uint32_t p, std::uint32_t max_n, const std::string& format,
               const std::string& out_path) {
    ahlab::AHTable table = ahlab::compute_table(p, max_n);
    std::string data;
    if (format == "csv") {
        std::ostringstream out;
        out << "n,num,den,a_n\n";
        for (std::uint32_t n = 0; n <= max_n; ++n)
            out << n << ',' << ahlab::numerator(table.u[n]).get_str() << ','
                << ahlab::denominator(table.u[n]).get_str() << ','
                << table.a(n).v << '\n';
        data = out.str();
    } else {
        ahlab::json rows = ahlab::json::array();
        for (std::uint32_t n = 0; n <= max_n; ++n)
            rows.push_back(ahlab::json{
                {"n", n},
                {"num", ahlab::numerator(table.u[n]).get_str()},
                {"den", ahlab::denominator(table.u[n]).get_str()},
                {"a_n", table.a(n).v}});
        data = ahlab::json{{"p", p}, {"coefficients", std::move(rows)}}.dump(2);
        data += '\n';
    }
    return write_output(data, out_path);
}

int run_verify(const ahlab::RunConfig& cfg, const std::string& format,
               const std::string& out_path) {
    ahlab::VerificationReport report = ahlab::run_all(cfg);
    std::string data = format == "csv" ? ahlab::report_to_csv(report)
                                       : ahlab::to_json(report).dump(2) + "\n";
    int io = write_output(data, out_path);
    if (io != kExitOk) return io;
    std::cerr << "totals: pass=" << report.totals.pass
              << " fail=" << report.totals.fail
              << " refuted-instance=" << report.totals.refuted_instance
              << " skipped=" << report.totals.skipped << "\n";
    return report.all_ok() ? kExitOk : kExitFinding;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Artin-Hasse series coefficients and identity verification"};
    app.require_subcommand(1);

    // coeffs
    auto* coeffs = app.add_subcommand(
        "coeffs", "Exact u_n (num/den) and residues a_n for one prime");
    std::uint32_t c_p = 5, c_max_n = 20;
    std::string c_format = "csv", c_out;
    coeffs->add_option("--p", c_p, "prime modulus")->required();
    coeffs->add_option("--max-n", c_max_n, "largest index n");
    coeffs->add_option("--format", c_format)
        ->check(CLI::IsMember({"json", "csv"}));
    coeffs->add_option("--out", c_out, "output path (default: stdout)");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Run identity/congruence/conjecture checks over a prime range");
    ahlab::RunConfig cfg;
    std::string v_checks, v_format = "json", v_out;
    bool have_xmin = false, have_xmax = false;
    verify->add_option("--pmin", cfg.pmin, "smallest prime (default 3)");
    verify->add_option("--pmax", cfg.pmax, "largest prime (default 13)");
    verify->add_option("--checks", v_checks,
                       "comma-separated check names (default: all)");
    verify->add_option("--max-n", cfg.max_n, "override table depth cap");
    verify->add_option("--kmax", cfg.kmax, "convolution-sum depth (default 200)");
    auto* oxmin = verify->add_option("--xmin", cfg.xmin, "Nielsen range lower bound");
    auto* oxmax = verify->add_option("--xmax", cfg.xmax, "Nielsen range upper bound");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks (default 0)");
    verify->add_option("--trials", cfg.trials, "randomized-check trials (default 20)");
    verify->add_option("--parallel", cfg.parallel,
                       "worker threads (default 1, serial)");
    verify->add_option("--format", v_format)
        ->check(CLI::IsMember({"json", "csv"}));
    verify->add_option("--out", v_out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    have_xmin = oxmin->count() > 0;
    have_xmax = oxmax->count() > 0;

    try {
        if (coeffs->parsed()) {
            if (!ahlab::is_prime_u64(c_p)) {
                std::cerr << "error: --p must be prime\n";
                return kExitUsage;
            }
            return run_coeffs(c_p, c_max_n, c_format, c_out);
        }
        if (have_xmin != have_xmax) {
            std::cerr << "error: --xmin and --xmax must be given together\n";
            return kExitUsage;
        }
        cfg.have_xrange = have_xmin;
        cfg.checks = split_csv_list(v_checks);
        for (const auto& name : cfg.checks) {
            if (!ahlab::is_known_check(name)) {
                std::cerr << "error: unknown check '" << name
                          << "'; valid names:\n";
                for (const auto& n : ahlab::check_registry())
                    std::cerr << "  " << n << "\n";
                return kExitUsage;
            }
        }
        return run_verify(cfg, v_format, v_out);
    } catch (const ahlab::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
