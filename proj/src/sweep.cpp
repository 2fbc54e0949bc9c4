#include "qchan/sweep.hpp"

#include "qchan/linalg.hpp"
#include "qchan/states.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

namespace qchan {

std::string fmt_g12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<double> PGrid::points() const {
    if (count < 1) throw std::domain_error("p-grid: count must be positive");
    if (!(start > 0.0 && stop < 1.0 && start <= stop))
        throw std::domain_error("p-grid: must lie strictly inside (0,1)");
    std::vector<double> ps(count);
    if (count == 1) {
        ps[0] = start;
        return ps;
    }
    const double step = (stop - start) / (count - 1);
    for (int i = 0; i < count; ++i) ps[i] = start + i * step;
    return ps;
}

PGrid PGrid::parse(const std::string& spec) {
    PGrid g;
    char colon1 = 0, colon2 = 0;
    std::istringstream in(spec);
    if (!(in >> g.start >> colon1 >> g.stop >> colon2 >> g.count) || colon1 != ':' || colon2 != ':')
        throw std::domain_error("p-grid: expected START:STOP:COUNT, got '" + spec + "'");
    g.points();  // validate
    return g;
}

namespace {

ChannelKind parse_channel(const std::string& s) {
    if (s == "dep") return ChannelKind::depolarizing;
    if (s == "ph") return ChannelKind::phase_flip;
    throw std::domain_error("unknown channel '" + s + "' (expected dep|ph)");
}

InputKind parse_input(const std::string& s) {
    if (s == "ghz") return InputKind::ghz;
    if (s == "w") return InputKind::w;
    if (s == "sep") return InputKind::separable;
    if (s == "bell") return InputKind::bell;
    throw std::domain_error("unknown input '" + s + "' (expected ghz|w|sep|bell)");
}

QfiMethod parse_method(const std::string& s) {
    if (s == "sld") return QfiMethod::sld;
    if (s == "fd" || s == "fidelity-fd") return QfiMethod::fidelity_fd;
    if (s == "closed" || s == "closed-form") return QfiMethod::closed_form;
    if (s == "compressed") return QfiMethod::compressed;
    throw std::domain_error("unknown method '" + s + "' (expected sld|fd|closed|compressed)");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, sep))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

bool parse_bool(const std::string& v) {
    if (v == "1" || v == "true" || v == "on" || v == "yes") return true;
    if (v == "0" || v == "false" || v == "off" || v == "no") return false;
    throw std::domain_error("expected a boolean, got '" + v + "'");
}

}  // namespace

void apply_config_line(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "channel") {
        cfg.channel = parse_channel(value);
    } else if (key == "input") {
        cfg.input = parse_input(value);
    } else if (key == "grid") {
        cfg.grid = PGrid::parse(value);
    } else if (key == "n") {
        cfg.n_list.clear();
        for (const auto& tok : split(value, ',')) cfg.n_list.push_back(std::stoi(tok));
    } else if (key == "l") {
        cfg.l_list.clear();
        cfg.l_all = false;
        if (value == "all") {
            cfg.l_all = true;
        } else {
            for (const auto& tok : split(value, ',')) cfg.l_list.push_back(std::stoi(tok));
        }
    } else if (key == "methods") {
        cfg.methods.clear();
        for (const auto& tok : split(value, ',')) cfg.methods.push_back(parse_method(tok));
    } else if (key == "step") {
        cfg.fd_step = std::stod(value);
    } else if (key == "out") {
        cfg.out_path = value;
    } else if (key == "jobs") {
        cfg.jobs = std::stoi(value);
    } else if (key == "timings") {
        cfg.timings = parse_bool(value);
    } else {
        throw std::domain_error("unknown config key '" + key + "'");
    }
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto strip = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::domain_error(path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_config_line(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
    }
    return cfg;
}

std::string to_csv_row(const CsvRecord& r) {
    std::string row;
    row += r.channel;
    row += ',';
    row += r.input;
    row += ',';
    row += std::to_string(r.n);
    row += ',';
    row += std::to_string(r.l);
    row += ',';
    row += fmt_g12(r.p);
    row += ',';
    row += r.method;
    row += ',';
    row += fmt_g12(r.qfi);
    row += ',';
    if (r.ref_method) row += *r.ref_method;
    row += ',';
    if (r.abs_err) row += fmt_g12(*r.abs_err);
    row += ',';
    if (r.rel_err) row += fmt_g12(*r.rel_err);
    row += ',';
    if (r.wall_time_ms) row += fmt_g12(*r.wall_time_ms);
    return row;
}

namespace {

PureState input_state(const Scheme& s) {
    switch (s.input) {
        case InputKind::ghz: return ghz_state(s.n);
        case InputKind::w: return w_state(s.n);
        case InputKind::separable: return equatorial_state(0.0);
        case InputKind::bell: return bell_state(BellState::phi_plus);
    }
    throw std::logic_error("input_state: unreachable");
}

int effective_ancillas(const Scheme& s) {
    switch (s.input) {
        case InputKind::separable: return 0;
        case InputKind::bell: return 1;
        default: return s.n;
    }
}

}  // namespace

QfiEvaluation evaluate_scheme(const Scheme& s, double p, QfiMethod method, double fd_step) {
    validate_scheme(s);
    switch (method) {
        case QfiMethod::closed_form: {
            QfiEvaluation eval;
            eval.value = closed_form_qfi(s, p);
            eval.method = QfiMethod::closed_form;
            eval.p = p;
            return eval;
        }
        case QfiMethod::compressed:
            return compressed_qfi(s, p);
        case QfiMethod::sld:
        case QfiMethod::fidelity_fd: {
            const int n = effective_ancillas(s);
            if (s.probe_lost && s.l == n) {
                // The whole register is gone; nothing carries the parameter.
                QfiEvaluation eval;
                eval.method = method;
                eval.p = p;
                return eval;
            }
            if (n + 1 > kMaxDenseQubits)
                throw std::domain_error("dense methods are capped at " +
                                        std::to_string(kMaxDenseQubits) +
                                        " qubits; use closed or compressed");
            const ChannelFamily fam = ChannelFamily::make(s.channel, n);
            const PureState input = input_state(s);
            const LossPattern loss =
                LossPattern::trailing_ancillas(n, s.input == InputKind::ghz || s.input == InputKind::w ? s.l : 0,
                                               s.probe_lost);
            if (method == QfiMethod::sld) return qfi_for_scheme(fam, input, loss, p);
            return qfi_fidelity_fd(fam, density_of(input), loss, p, fd_step);
        }
        case QfiMethod::pure:
            throw std::domain_error("evaluate_scheme: the pure method needs an explicit state derivative");
    }
    throw std::logic_error("evaluate_scheme: unreachable");
}

namespace {

struct SweepPoint {
    Scheme scheme;
    double p = 0;
};

int method_order(const QfiMethod m) { return static_cast<int>(m); }

}  // namespace

std::vector<CsvRecord> run_sweep(const SweepConfig& cfg) {
    if (cfg.methods.empty()) throw std::domain_error("sweep: no methods requested");

    std::vector<SweepPoint> points;
    const std::vector<double> ps = cfg.grid.points();
    std::vector<int> l_for_n;
    for (int n : cfg.n_list) {
        l_for_n.clear();
        if (cfg.l_all) {
            for (int l = 0; l <= n; ++l) l_for_n.push_back(l);
        } else if (cfg.l_list.empty()) {
            l_for_n.push_back(0);
        } else {
            l_for_n = cfg.l_list;
        }
        for (int l : l_for_n) {
            const Scheme s{cfg.channel, cfg.input, n, l, false};
            validate_scheme(s);  // rejects l > n up front
            for (double p : ps) points.push_back({s, p});
        }
    }

    // Reference method: closed-form when requested, else sld.
    std::optional<QfiMethod> ref;
    for (QfiMethod m : cfg.methods)
        if (m == QfiMethod::closed_form) ref = m;
    if (!ref && cfg.methods.size() >= 2)
        for (QfiMethod m : cfg.methods)
            if (m == QfiMethod::sld) ref = m;

    const int jobs = cfg.jobs > 0 ? cfg.jobs
                                  : std::max(1u, std::thread::hardware_concurrency());

    std::vector<std::vector<CsvRecord>> per_point(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<size_t> next{0};

    auto compute_point = [&](size_t i) {
        const SweepPoint& pt = points[i];
        std::vector<CsvRecord> recs;
        std::optional<double> ref_value;
        for (QfiMethod m : cfg.methods) {
            const auto t0 = std::chrono::steady_clock::now();
            const QfiEvaluation eval = evaluate_scheme(pt.scheme, pt.p, m, cfg.fd_step);
            const auto t1 = std::chrono::steady_clock::now();
            CsvRecord rec;
            rec.channel = to_string(pt.scheme.channel);
            rec.input = to_string(pt.scheme.input);
            rec.n = pt.scheme.n;
            rec.l = pt.scheme.l;
            rec.p = pt.p;
            rec.method = std::string(to_string(m));
            rec.qfi = eval.value;
            if (cfg.timings)
                rec.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            if (ref && m == *ref) ref_value = eval.value;
            recs.push_back(std::move(rec));
        }
        if (ref && ref_value) {
            for (size_t k = 0; k < recs.size(); ++k) {
                if (cfg.methods[k] == *ref) continue;
                recs[k].ref_method = std::string(to_string(*ref));
                recs[k].abs_err = std::abs(recs[k].qfi - *ref_value);
                if (std::abs(*ref_value) > 0.0)
                    recs[k].rel_err = *recs[k].abs_err / std::abs(*ref_value);
            }
        }
        per_point[i] = std::move(recs);
    };
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            try {
                compute_point(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (const std::exception_ptr& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<CsvRecord> records;
    for (auto& recs : per_point)
        for (auto& r : recs) records.push_back(std::move(r));
    std::sort(records.begin(), records.end(), [](const CsvRecord& a, const CsvRecord& b) {
        const auto key = [](const CsvRecord& r) {
            return std::tuple<const std::string&, const std::string&, int, int, double, const std::string&>(
                r.channel, r.input, r.n, r.l, r.p, r.method);
        };
        return key(a) < key(b);
    });
    return records;
}

void write_csv(const std::string& path, const std::vector<CsvRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << kCsvHeader << '\n';
    for (const CsvRecord& r : records) out << to_csv_row(r) << '\n';
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

namespace {

void add_curve(FigureCsv& fig, const std::string& series, const Scheme& s,
               const std::vector<double>& ps) {
    for (double p : ps) fig.points.push_back({series, p, closed_form_qfi(s, p)});
}

Scheme w_scheme(ChannelKind ch, int n, int l) { return Scheme{ch, InputKind::w, n, l, false}; }
Scheme ghz_scheme(ChannelKind ch, int n, int l) { return Scheme{ch, InputKind::ghz, n, l, false}; }
Scheme sep_scheme(ChannelKind ch) { return Scheme{ch, InputKind::separable, 0, 0, false}; }

}  // namespace

std::vector<FigureCsv> figure_data(int which, double p_right, const PGrid& grid) {
    if (which < 1 || which > 6) throw std::domain_error("figure: id must be in 1..6");
    if (!(p_right > 0.0 && p_right < 1.0)) throw std::domain_error("figure: p outside (0,1)");
    const std::vector<double> ps = grid.points();
    const auto dep = ChannelKind::depolarizing;
    const auto ph = ChannelKind::phase_flip;
    std::vector<FigureCsv> figs;

    switch (which) {
        case 1: {
            FigureCsv left{"left", "p"};
            add_curve(left, "GHZ (optimal)", ghz_scheme(dep, 1, 0), ps);
            for (int n : {5, 10, 20}) add_curve(left, "W-" + std::to_string(n), w_scheme(dep, n, 0), ps);
            add_curve(left, "separable", sep_scheme(dep), ps);
            FigureCsv right{"right", "p"};
            add_curve(right, "GHZ (optimal separable)", ghz_scheme(ph, 1, 0), ps);
            for (int n : {5, 10, 20, 50}) add_curve(right, "W-" + std::to_string(n), w_scheme(ph, n, 0), ps);
            figs = {left, right};
            break;
        }
        case 2:
        case 3: {
            const ChannelKind ch = which == 2 ? dep : ph;
            FigureCsv left{"left", "p"};
            add_curve(left, "GHZ no loss", ghz_scheme(ch, 2, 0), ps);
            for (int n : {2, 5}) {
                add_curve(left, "W-" + std::to_string(n) + " no loss", w_scheme(ch, n, 0), ps);
                add_curve(left, "W-" + std::to_string(n) + " with one lost", w_scheme(ch, n, 1), ps);
            }
            add_curve(left, which == 2 ? "separable / GHZ with one lost" : "GHZ with one lost",
                      ghz_scheme(ch, 2, 1), ps);
            FigureCsv right{"right", "n"};
            for (int n = 1; n <= 30; ++n) {
                right.points.push_back({"GHZ no loss", double(n), closed_form_qfi(ghz_scheme(ch, n, 0), p_right)});
                right.points.push_back({"W no loss", double(n), closed_form_qfi(w_scheme(ch, n, 0), p_right)});
                right.points.push_back(
                    {"W with one lost", double(n), closed_form_qfi(w_scheme(ch, n, 1), p_right)});
                right.points.push_back({which == 2 ? "separable / GHZ with one lost" : "GHZ with one lost",
                                        double(n), closed_form_qfi(ghz_scheme(ch, n, std::min(1, n)), p_right)});
            }
            figs = {left, right};
            break;
        }
        case 4: {
            FigureCsv left{"left", "p"};
            add_curve(left, "GHZ no loss", ghz_scheme(dep, 8, 0), ps);
            for (int l : {0, 2, 6})
                add_curve(left, "W-8 with " + std::to_string(l) + " lost", w_scheme(dep, 8, l), ps);
            add_curve(left, "separable / GHZ with loss", sep_scheme(dep), ps);
            FigureCsv right{"right", "l"};
            for (int n : {15, 20, 25}) {
                const std::string name = "W-" + std::to_string(n);
                for (int l = 0; l <= n; ++l) {
                    right.points.push_back({name + " with loss", double(l),
                                            closed_form_qfi(w_scheme(dep, n, l), p_right)});
                    right.points.push_back({name + " no loss", double(l),
                                            closed_form_qfi(w_scheme(dep, n, 0), p_right)});
                }
            }
            for (int l = 0; l <= 25; ++l)
                right.points.push_back(
                    {"separable / GHZ with one lost", double(l), qfi_sep(dep, p_right)});
            figs = {left, right};
            break;
        }
        case 5: {
            FigureCsv left{"left", "p"};
            add_curve(left, "optimal / GHZ no loss", ghz_scheme(ph, 10, 0), ps);
            for (int l : {0, 6, 9})
                add_curve(left, "W-10 with " + std::to_string(l) + " lost", w_scheme(ph, 10, l), ps);
            add_curve(left, "GHZ with loss", ghz_scheme(ph, 10, 1), ps);
            FigureCsv right{"right", "l"};
            for (int n : {15, 20, 25}) {
                const std::string name = "W-" + std::to_string(n);
                for (int l = 0; l <= n; ++l) {
                    right.points.push_back({name + " with loss", double(l),
                                            closed_form_qfi(w_scheme(ph, n, l), p_right)});
                    right.points.push_back({name + " no loss", double(l),
                                            closed_form_qfi(w_scheme(ph, n, 0), p_right)});
                }
            }
            for (int l = 0; l <= 25; ++l)
                right.points.push_back(
                    {"GHZ with loss", double(l), closed_form_qfi(ghz_scheme(ph, 25, std::max(1, l)), p_right)});
            figs = {left, right};
            break;
        }
        case 6: {
            FigureCsv left{"left", "n"};
            FigureCsv left_inset{"left_inset", "l", "n_opt"};
            FigureCsv right{"right", "n"};
            FigureCsv right_inset{"right_inset", "l", "n_opt"};
            for (int l : {3, 4, 5, 6}) {
                const std::string series = "l=" + std::to_string(l);
                for (int n = l; n <= 12 * l; ++n) {
                    left.points.push_back(
                        {series, double(n), closed_form_qfi(w_scheme(dep, n, l), p_right)});
                    right.points.push_back(
                        {series, double(n), closed_form_qfi(w_scheme(ph, n, l), p_right)});
                }
            }
            for (int l = 1; l <= 15; ++l) {
                left_inset.points.push_back({"n_opt_dep", double(l), double(n_opt_dep(l, p_right))});
                right_inset.points.push_back({"n_opt_ph", double(l), double(n_opt_ph(l).front())});
            }
            figs = {left, left_inset, right, right_inset};
            break;
        }
    }
    return figs;
}

void write_figure_csvs(const std::string& out_prefix, const std::vector<FigureCsv>& figs) {
    for (const FigureCsv& fig : figs) {
        const std::string path = out_prefix + "_" + fig.suffix + ".csv";
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write '" + path + "'");
        out << "series," << fig.x_name << ',' << fig.y_name << '\n';
        for (const FigurePoint& pt : fig.points)
            out << pt.series << ',' << fmt_g12(pt.x) << ',' << fmt_g12(pt.y) << '\n';
        if (!out) throw std::runtime_error("write failed for '" + path + "'");
    }
}

}  // namespace qchan
