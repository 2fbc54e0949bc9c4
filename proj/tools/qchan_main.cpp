// Command-line front end: single QFI queries, grid sweeps to CSV, figure-data
// reproduction and the self-verification suites.

#include "qchan/sweep.hpp"
#include "qchan/verify.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // internal or verification failure
constexpr int kExitUsage = 2;    // usage / domain error

qchan::ChannelKind channel_from(const std::string& s) {
    if (s == "dep") return qchan::ChannelKind::depolarizing;
    if (s == "ph") return qchan::ChannelKind::phase_flip;
    throw std::domain_error("--channel: expected dep|ph, got '" + s + "'");
}

qchan::InputKind input_from(const std::string& s) {
    if (s == "ghz") return qchan::InputKind::ghz;
    if (s == "w") return qchan::InputKind::w;
    if (s == "sep") return qchan::InputKind::separable;
    if (s == "bell") return qchan::InputKind::bell;
    throw std::domain_error("--input: expected ghz|w|sep|bell, got '" + s + "'");
}

qchan::QfiMethod method_from(const std::string& s) {
    if (s == "sld") return qchan::QfiMethod::sld;
    if (s == "fd") return qchan::QfiMethod::fidelity_fd;
    if (s == "closed") return qchan::QfiMethod::closed_form;
    if (s == "compressed") return qchan::QfiMethod::compressed;
    throw std::domain_error("--method: expected sld|fd|closed|compressed, got '" + s + "'");
}

struct QfiArgs {
    std::string channel = "dep";
    std::string input = "ghz";
    int n = 1;
    int l = 0;
    double p = 0.5;
    bool probe_lost = false;
    std::string method = "sld";
    double step = 1e-3;
};

int run_qfi(const QfiArgs& args) {
    const qchan::Scheme scheme{channel_from(args.channel), input_from(args.input), args.n, args.l,
                               args.probe_lost};
    const qchan::QfiEvaluation eval =
        qchan::evaluate_scheme(scheme, args.p, method_from(args.method), args.step);
    std::cout << "qfi " << qchan::fmt_g12(eval.value) << '\n';
    std::cout << "method " << qchan::to_string(eval.method) << '\n';
    std::cout << "p " << qchan::fmt_g12(args.p) << '\n';
    if (eval.method == qchan::QfiMethod::sld || eval.method == qchan::QfiMethod::compressed)
        std::cout << "rank_used " << eval.diag.rank_used << "\ndropped_pairs "
                  << eval.diag.dropped_pairs << '\n';
    if (eval.method == qchan::QfiMethod::fidelity_fd)
        std::cout << "fd_step " << qchan::fmt_g12(eval.diag.fd_step) << '\n';
    return kExitOk;
}

struct SweepArgs {
    std::string config_path;
    std::string channel, input, grid, out;
    std::vector<int> n_list;
    std::vector<std::string> l_list;
    std::vector<std::string> methods;
    double step = -1;
    int jobs = -1;
    bool timings = false;
};

int run_sweep_cmd(const SweepArgs& args) {
    qchan::SweepConfig cfg;
    if (!args.config_path.empty()) cfg = qchan::parse_config_file(args.config_path);
    // Flags override the file.
    if (!args.channel.empty()) cfg.channel = channel_from(args.channel);
    if (!args.input.empty()) cfg.input = input_from(args.input);
    if (!args.grid.empty()) cfg.grid = qchan::PGrid::parse(args.grid);
    if (!args.n_list.empty()) cfg.n_list = args.n_list;
    if (!args.l_list.empty()) {
        cfg.l_list.clear();
        cfg.l_all = false;
        for (const std::string& tok : args.l_list) {
            if (tok == "all") {
                cfg.l_all = true;
            } else {
                cfg.l_list.push_back(std::stoi(tok));
            }
        }
    }
    if (!args.methods.empty()) {
        cfg.methods.clear();
        for (const std::string& tok : args.methods)
            cfg.methods.push_back(method_from(tok));
    }
    if (args.step > 0) cfg.fd_step = args.step;
    if (args.jobs >= 0) cfg.jobs = args.jobs;
    if (!args.out.empty()) cfg.out_path = args.out;
    if (args.timings) cfg.timings = true;

    const std::vector<qchan::CsvRecord> records = qchan::run_sweep(cfg);
    qchan::write_csv(cfg.out_path, records);
    std::cout << "wrote " << records.size() << " records to " << cfg.out_path << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"QFI for depolarizing and phase-flip channels with ancillas and particle loss"};
    app.require_subcommand(1);

    QfiArgs qfi_args;
    CLI::App* qfi_cmd = app.add_subcommand("qfi", "evaluate a single scheme point");
    qfi_cmd->add_option("--channel", qfi_args.channel, "dep|ph");
    qfi_cmd->add_option("--input", qfi_args.input, "ghz|w|sep|bell");
    qfi_cmd->add_option("--n", qfi_args.n, "ancilla count");
    qfi_cmd->add_option("--l", qfi_args.l, "ancillas lost");
    qfi_cmd->add_option("--p", qfi_args.p, "channel parameter in (0,1)")->required();
    qfi_cmd->add_flag("--probe-lost", qfi_args.probe_lost, "trace out the probe as well");
    qfi_cmd->add_option("--method", qfi_args.method, "sld|fd|closed|compressed");
    qfi_cmd->add_option("--step", qfi_args.step, "finite-difference step for fd");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "grid sweep to CSV");
    sweep_cmd->add_option("--config", sweep_args.config_path, "key=value config file");
    sweep_cmd->add_option("--channel", sweep_args.channel, "dep|ph");
    sweep_cmd->add_option("--input", sweep_args.input, "ghz|w|sep|bell");
    sweep_cmd->add_option("--grid", sweep_args.grid, "p grid START:STOP:COUNT");
    sweep_cmd->add_option("--n", sweep_args.n_list, "ancilla counts");
    sweep_cmd->add_option("--l", sweep_args.l_list, "lost-ancilla counts, or 'all' for 0..n");
    sweep_cmd->add_option("--method", sweep_args.methods, "methods to run");
    sweep_cmd->add_option("--step", sweep_args.step, "finite-difference step");
    sweep_cmd->add_option("--jobs", sweep_args.jobs, "parallel evaluation threads");
    sweep_cmd->add_option("--out", sweep_args.out, "output CSV path");
    sweep_cmd->add_flag("--timings", sweep_args.timings, "fill the wall_time_ms column");

    int figure_id = 1;
    double figure_p = 0.2;
    std::string figure_grid, figure_out = "figure";
    CLI::App* figure_cmd = app.add_subcommand("figure", "reproduce figure data as CSV");
    figure_cmd->add_option("which", figure_id, "figure id 1..6")->required();
    figure_cmd->add_option("--p", figure_p, "parameter for the fixed-p sub-plots");
    figure_cmd->add_option("--grid", figure_grid, "p grid for the curve sub-plots");
    figure_cmd->add_option("--out", figure_out, "output path prefix");

    std::string verify_level = "fast";
    int verify_jobs = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-validation and property suites");
    verify_cmd->add_option("--level", verify_level, "fast|full");
    verify_cmd->add_option("--jobs", verify_jobs, "parallel evaluation threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;  // --help exits cleanly
    }

    try {
        if (qfi_cmd->parsed()) return run_qfi(qfi_args);
        if (sweep_cmd->parsed()) return run_sweep_cmd(sweep_args);
        if (figure_cmd->parsed()) {
            qchan::PGrid grid;
            if (!figure_grid.empty()) grid = qchan::PGrid::parse(figure_grid);
            qchan::write_figure_csvs(figure_out, qchan::figure_data(figure_id, figure_p, grid));
            std::cout << "wrote figure " << figure_id << " data with prefix " << figure_out << '\n';
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            qchan::VerifyLevel level;
            if (verify_level == "fast") {
                level = qchan::VerifyLevel::fast;
            } else if (verify_level == "full") {
                level = qchan::VerifyLevel::full;
            } else {
                std::cerr << "error: --level must be fast or full\n";
                return kExitUsage;
            }
            qchan::VerifyOptions opt;
            opt.jobs = verify_jobs;
            return qchan::print_report(qchan::run_verify(level, opt), std::cout) == 0 ? kExitOk
                                                                                      : kExitFailure;
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
