#include "hf/cli.hpp"

#include "hf/hc_qchar.hpp"
#include "hf/rmatrix.hpp"
#include "hf/seminormal.hpp"
#include "hf/suites.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <stdexcept>

namespace hf {

namespace {

void check_size(const Partition& lambda, int n) {
    if (lambda.size() < 1 || lambda.size() > kMaxM) throw std::invalid_argument("partition size must be in 1.." + std::to_string(kMaxM));
    if (n < 1 || n > kMaxN) throw std::invalid_argument("n must be in 1.." + std::to_string(kMaxN));
}

void emit(const json& j, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << j.dump(2) << "\n";
}

}  // namespace

json cmd_idempotent(const Partition& lambda, int index, int n, const std::string& method) {
    check_size(lambda, n);
    const auto tabs = standard_tableaux(lambda);
    if (index < 0 || index >= static_cast<int>(tabs.size()))
        throw std::invalid_argument("tableau index must be in 0.." + std::to_string(tabs.size() - 1));
    const StandardTableau& t = tabs[index];
    TensorOperatorQ op(n, lambda.size());
    if (method == "fusion") {
        op = fused_idempotent(t, n);
    } else if (method == "recurrence") {
        op = hecke_action(matrix_unit_diag(t), n);
    } else {
        throw std::invalid_argument("method must be fusion or recurrence");
    }
    json out = {{"partition", lambda.str()}, {"tableau", to_json(t)}, {"n", n}, {"dimension", op.dim()}, {"rank", op.trace().str()}};
    if (lambda.rows() > n) out["note"] = "more than n rows: the projector is zero on this tensor power";
    out["entries"] = to_json(op);
    return out;
}

json cmd_qchar(const Partition& lambda, int n, const std::string& mode, int trunc, const std::optional<KappaInput>& kappa) {
    check_size(lambda, n);
    if (trunc < 0 || trunc > kMaxTrunc) throw std::invalid_argument("trunc must be in 0.." + std::to_string(kMaxTrunc));
    if (kappa && mode != "wakimoto") throw std::invalid_argument("a kappa file only applies to wakimoto mode");
    json out = {{"partition", lambda.str()}, {"n", n}, {"mode", mode}};
    if (mode == "formal") {
        const FormalQCharacter chi = formal_qcharacter(lambda, n);
        out["text"] = chi.str();
        out["terms"] = chi.total();
        out["result"] = to_json(chi);
    } else if (mode == "hc") {
        out["result"] = to_json(hc_image(lambda, n, trunc));
    } else if (mode == "wakimoto") {
        if (!kappa) throw std::invalid_argument("wakimoto mode needs --kappa");
        if (static_cast<int>(kappa->plus.size()) != n)
            throw std::invalid_argument("kappa_plus has " + std::to_string(kappa->plus.size()) + " series, expected n = " + std::to_string(n));
        out["result"] = to_json(wakimoto_eigenvalue(lambda, kappa->plus, kappa->minus, trunc));
    } else {
        throw std::invalid_argument("mode must be formal, hc or wakimoto");
    }
    return out;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact checks and computations for fused Hecke idempotents and q-characters", "hecke_fusion"};
    app.require_subcommand(1);
    app.set_version_flag("--version", artifact_version());

    SuiteConfig config;
    std::string out_path;
    std::string format = "json";
    auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
    verify->add_option("--suites", config.suites, "comma-separated suite names, default all")->delimiter(',');
    verify->add_option("--max-m", config.max_m, "largest m")->capture_default_str();
    verify->add_option("--max-n", config.max_n, "largest n")->capture_default_str();
    verify->add_option("--trunc", config.trunc, "series truncation K")->capture_default_str();
    verify->add_option("--seed", config.seed, "seed for randomized cases")->capture_default_str();
    verify->add_option("--out", out_path, "report path, default stdout");
    verify->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}))->capture_default_str();
    verify->add_flag("--timings", config.timings, "record wall time per case (reports are then not reproducible)");

    std::string partition;
    int index = 0;
    int n = 2;
    std::string method = "fusion";
    auto* idem = app.add_subcommand("idempotent", "print the idempotent E_L on (C^n)^m as a triple list");
    idem->add_option("--partition", partition, "e.g. 2,1")->required();
    idem->add_option("--index", index, "tableau index from 0")->capture_default_str();
    idem->add_option("--n", n, "local dimension")->capture_default_str();
    idem->add_option("--method", method, "fusion or recurrence")->check(CLI::IsMember({"fusion", "recurrence"}))->capture_default_str();
    idem->add_option("--out", out_path, "output path, default stdout");
    idem->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}))->capture_default_str();

    std::string mode = "formal";
    int trunc = 6;
    std::string kappa_path;
    auto* qchar = app.add_subcommand("qchar", "q-character, Harish-Chandra image or Wakimoto eigenvalue of S_lambda(z)");
    qchar->add_option("--partition", partition, "e.g. 2,1")->required();
    qchar->add_option("--n", n, "rank")->capture_default_str();
    qchar->add_option("--mode", mode, "formal, hc or wakimoto")->check(CLI::IsMember({"formal", "hc", "wakimoto"}))->capture_default_str();
    qchar->add_option("--trunc", trunc, "series truncation K")->capture_default_str();
    qchar->add_option("--kappa", kappa_path, "JSON file with kappa_plus and kappa_minus");
    qchar->add_option("--out", out_path, "output path, default stdout");
    qchar->add_option("--format", format, "output format")->check(CLI::IsMember({"json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*verify) {
            const Report report = run_suites(config);
            emit(report.to_json(), out_path, out);
            const std::size_t failed = report.failures();
            err << report.cases.size() - failed << " passed, " << failed << " failed\n";
            return failed == 0 ? kExitOk : kExitFailures;
        }
        if (*idem) {
            emit(cmd_idempotent(Partition::parse(partition), index, n, method), out_path, out);
            return kExitOk;
        }
        std::optional<KappaInput> kappa;
        if (!kappa_path.empty()) {
            std::ifstream f(kappa_path);
            if (!f) throw std::invalid_argument("cannot read " + kappa_path);
            json j;
            try {
                j = json::parse(f);
            } catch (const json::exception& e) {
                throw std::invalid_argument("kappa file is not valid JSON: " + std::string(e.what()));
            }
            kappa = kappa_from_json(j);
        }
        emit(cmd_qchar(Partition::parse(partition), n, mode, trunc, kappa), out_path, out);
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailures;
    }
}

}  // namespace hf
