#pragma once

#include "qchan/analytic.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qchan {

/// Fixed-format float: 12 significant digits, '.' decimal, no locale.
std::string fmt_g12(double v);

struct PGrid {
    double start = 0.02;
    double stop = 0.98;
    int count = 49;

    std::vector<double> points() const;
    static PGrid parse(const std::string& spec);  // "START:STOP:COUNT"
};

struct SweepConfig {
    ChannelKind channel = ChannelKind::depolarizing;
    InputKind input = InputKind::ghz;
    PGrid grid;
    std::vector<int> n_list{1};
    std::vector<int> l_list;   // empty means l = 0 only
    bool l_all = false;        // l = 0..n per n, overrides l_list
    std::vector<QfiMethod> methods{QfiMethod::sld};
    double fd_step = 1e-3;
    std::string out_path = "sweep.csv";
    int jobs = 0;              // 0 means hardware concurrency
    bool timings = false;      // wall_time_ms stays empty unless requested
};

/// Flat key=value file, one key per line, '#' comments. Unknown keys throw.
SweepConfig parse_config_file(const std::string& path);
void apply_config_line(SweepConfig& cfg, const std::string& key, const std::string& value);

struct CsvRecord {
    std::string channel;
    std::string input;
    int n = 0;
    int l = 0;
    double p = 0;
    std::string method;
    double qfi = 0;
    std::optional<std::string> ref_method;
    std::optional<double> abs_err;
    std::optional<double> rel_err;
    std::optional<double> wall_time_ms;
};

inline constexpr const char* kCsvHeader =
    "channel,input,n,l,p,method,qfi,ref_method,abs_err,rel_err,wall_time_ms";

std::string to_csv_row(const CsvRecord& rec);

/// Evaluate one scheme point with the chosen method.
QfiEvaluation evaluate_scheme(const Scheme& s, double p, QfiMethod method, double fd_step = 1e-3);

/// Run the sweep (parallel up to cfg.jobs) and return records in
/// deterministic sorted order.
std::vector<CsvRecord> run_sweep(const SweepConfig& cfg);

void write_csv(const std::string& path, const std::vector<CsvRecord>& records);

struct FigurePoint {
    std::string series;
    double x = 0;
    double y = 0;
};

struct FigureCsv {
    std::string suffix;   // appended to the output prefix
    std::string x_name;   // p, n or l
    std::string y_name = "qfi";
    std::vector<FigurePoint> points;
};

/// Pre-baked figure data series, one CSV per sub-plot.
/// 1: no loss. 2/3: one ancilla lost (dep/ph). 4/5: arbitrary loss (dep/ph).
/// 6: optimal ancilla count. Right-hand plots use p_right.
std::vector<FigureCsv> figure_data(int which, double p_right = 0.2, const PGrid& grid = {});

void write_figure_csvs(const std::string& out_prefix, const std::vector<FigureCsv>& figs);

}  // namespace qchan
