#include "qchan/sweep.hpp"

#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace qchan;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/qchan_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("fixed float formatting") {
    CHECK(fmt_g12(0.2) == "0.2");
    CHECK(fmt_g12(2.77777777778) == "2.77777777778");
    CHECK(fmt_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_g12(0.0) == "0");
}

TEST_CASE("p-grid parsing and validation") {
    PGrid g = PGrid::parse("0.1:0.9:9");
    const std::vector<double> ps = g.points();
    REQUIRE(ps.size() == 9);
    CHECK(ps.front() == doctest::Approx(0.1));
    CHECK(ps.back() == doctest::Approx(0.9));
    CHECK_THROWS_AS(PGrid::parse("0:0.9:5"), std::domain_error);
    CHECK_THROWS_AS(PGrid::parse("nonsense"), std::domain_error);
}

TEST_CASE("config file parsing with flag-style overrides") {
    TempFile cfg_file("sweep.cfg");
    {
        std::ofstream out(cfg_file.path);
        out << "# comment line\n"
            << "channel=ph\n"
            << "input=w\n"
            << "grid=0.1:0.9:5\n"
            << "n=2,4\n"
            << "l=all\n"
            << "methods=sld,closed\n"
            << "jobs=1\n";
    }
    SweepConfig cfg = parse_config_file(cfg_file.path);
    CHECK(cfg.channel == ChannelKind::phase_flip);
    CHECK(cfg.input == InputKind::w);
    CHECK(cfg.n_list == std::vector<int>{2, 4});
    CHECK(cfg.l_all);
    CHECK(cfg.methods.size() == 2);

    apply_config_line(cfg, "channel", "dep");
    CHECK(cfg.channel == ChannelKind::depolarizing);
    CHECK_THROWS_AS(apply_config_line(cfg, "bogus", "1"), std::domain_error);
}

TEST_CASE("CSV header and row shape") {
    CHECK(std::string(kCsvHeader) ==
          "channel,input,n,l,p,method,qfi,ref_method,abs_err,rel_err,wall_time_ms");
    CsvRecord rec;
    rec.channel = "dep";
    rec.input = "w";
    rec.n = 3;
    rec.l = 1;
    rec.p = 0.2;
    rec.method = "sld";
    rec.qfi = 2.5;
    CHECK(to_csv_row(rec) == "dep,w,3,1,0.2,sld,2.5,,,,");
    rec.ref_method = "closed-form";
    rec.abs_err = 1e-12;
    rec.rel_err = 4e-13;
    CHECK(to_csv_row(rec) == "dep,w,3,1,0.2,sld,2.5,closed-form,1e-12,4e-13,");
}

TEST_CASE("sweep produces sorted records with reference errors") {
    SweepConfig cfg;
    cfg.channel = ChannelKind::depolarizing;
    cfg.input = InputKind::w;
    cfg.grid = PGrid{0.1, 0.9, 5};
    cfg.n_list = {1, 2};
    cfg.l_all = true;
    cfg.methods = {QfiMethod::sld, QfiMethod::closed_form};
    cfg.jobs = 2;

    const std::vector<CsvRecord> recs = run_sweep(cfg);
    // (n=1: l=0,1; n=2: l=0,1,2) x 5 p x 2 methods
    CHECK(recs.size() == 5 * 5 * 2);
    double max_rel = 0.0;
    for (const CsvRecord& r : recs) {
        if (r.method == "sld") {
            REQUIRE(r.ref_method.has_value());
            CHECK(*r.ref_method == "closed-form");
            if (r.rel_err) max_rel = std::max(max_rel, *r.rel_err);
        } else {
            CHECK(!r.ref_method.has_value());
        }
        CHECK(!r.wall_time_ms.has_value());
    }
    CHECK(max_rel <= 1e-8);
    CHECK(std::is_sorted(recs.begin(), recs.end(), [](const CsvRecord& a, const CsvRecord& b) {
        return std::tie(a.channel, a.input, a.n, a.l, a.p, a.method) <
               std::tie(b.channel, b.input, b.n, b.l, b.p, b.method);
    }));
}

TEST_CASE("fd oracle sweep stays within its tolerance") {
    SweepConfig cfg;
    cfg.channel = ChannelKind::phase_flip;
    cfg.input = InputKind::ghz;
    cfg.grid = PGrid{0.1, 0.9, 5};
    cfg.n_list = {2};
    cfg.methods = {QfiMethod::fidelity_fd, QfiMethod::closed_form};
    cfg.jobs = 1;
    for (const CsvRecord& r : run_sweep(cfg))
        if (r.rel_err) CHECK(*r.rel_err <= 1e-3);
}

TEST_CASE("empty l list defaults to l = 0") {
    SweepConfig cfg;
    cfg.input = InputKind::w;
    cfg.grid = PGrid{0.5, 0.5, 1};
    cfg.n_list = {3};
    cfg.methods = {QfiMethod::closed_form};
    cfg.jobs = 1;
    const std::vector<CsvRecord> recs = run_sweep(cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].l == 0);
}

TEST_CASE("l greater than its paired n is rejected") {
    SweepConfig cfg;
    cfg.input = InputKind::w;
    cfg.grid = PGrid{0.5, 0.5, 1};
    cfg.n_list = {2};
    cfg.l_list = {3};
    cfg.methods = {QfiMethod::closed_form};
    CHECK_THROWS_AS(run_sweep(cfg), std::domain_error);
}

TEST_CASE("parallel and serial sweeps write identical bytes") {
    SweepConfig cfg;
    cfg.channel = ChannelKind::depolarizing;
    cfg.input = InputKind::ghz;
    cfg.grid = PGrid{0.1, 0.9, 9};
    cfg.n_list = {1, 2, 3};
    cfg.l_all = true;
    cfg.methods = {QfiMethod::sld, QfiMethod::closed_form, QfiMethod::compressed};

    TempFile serial("serial.csv"), parallel("parallel.csv");
    cfg.jobs = 1;
    write_csv(serial.path, run_sweep(cfg));
    cfg.jobs = 4;
    write_csv(parallel.path, run_sweep(cfg));
    CHECK(slurp(serial.path) == slurp(parallel.path));

    // And a repeated run is byte-identical too.
    TempFile again("again.csv");
    write_csv(again.path, run_sweep(cfg));
    CHECK(slurp(serial.path) == slurp(again.path));
}

TEST_CASE("figure data reproduces the expected qualitative features") {
    // Figure 1 left: the W-1 value coincides with the GHZ/optimal curve.
    {
        const double p = 0.3;
        const double ghz = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::ghz, 1, 0}, p);
        const double w1 = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, 1, 0}, p);
        CHECK(w1 == doctest::Approx(ghz).epsilon(1e-12));
    }
    // Figure 2 right: both W series approach the separable level for large n.
    {
        const std::vector<FigureCsv> figs = figure_data(2, 0.2, PGrid{0.1, 0.9, 5});
        REQUIRE(figs.size() == 2);
        const FigureCsv& right = figs[1];
        double no_loss_5 = 0, no_loss_30 = 0, lost_5 = 0, lost_30 = 0;
        for (const FigurePoint& pt : right.points) {
            if (pt.series == "W no loss" && pt.x == 5) no_loss_5 = pt.y;
            if (pt.series == "W no loss" && pt.x == 30) no_loss_30 = pt.y;
            if (pt.series == "W with one lost" && pt.x == 5) lost_5 = pt.y;
            if (pt.series == "W with one lost" && pt.x == 30) lost_30 = pt.y;
        }
        const double sep = qfi_sep(ChannelKind::depolarizing, 0.2);
        CHECK(std::abs(no_loss_30 - sep) < std::abs(no_loss_5 - sep));
        CHECK(std::abs(lost_30 - sep) < std::abs(lost_5 - sep));
        CHECK(std::abs(no_loss_30 - sep) < 0.25);
        CHECK(std::abs(lost_30 - sep) < 0.25);
    }
    // Figure 3 right: the phase-flip W series decreases toward zero with n.
    {
        const std::vector<FigureCsv> figs = figure_data(3, 0.2, PGrid{0.1, 0.9, 5});
        const FigureCsv& right = figs[1];
        double prev = 1e300, last = 0;
        for (const FigurePoint& pt : right.points)
            if (pt.series == "W no loss") {
                CHECK(pt.y < prev);
                prev = pt.y;
                last = pt.y;
            }
        CHECK(last < 1.0);
    }
    // Figure 5 right: every with-loss W series decreases in l.
    {
        const std::vector<FigureCsv> figs = figure_data(5, 0.2, PGrid{0.1, 0.9, 5});
        const FigureCsv& right = figs[1];
        for (const std::string& series : {"W-15 with loss", "W-20 with loss", "W-25 with loss"}) {
            double prev = 1e300;
            for (const FigurePoint& pt : right.points)
                if (pt.series == series) {
                    CHECK(pt.y < prev);
                    prev = pt.y;
                }
        }
    }
    CHECK_THROWS_AS(figure_data(0), std::domain_error);
    CHECK_THROWS_AS(figure_data(7), std::domain_error);
}

TEST_CASE("figure CSVs are written with the series header") {
    TempFile prefix("fig");
    write_figure_csvs(prefix.path, figure_data(1, 0.2, PGrid{0.1, 0.9, 3}));
    const std::string left = slurp(prefix.path + "_left.csv");
    CHECK(left.rfind("series,p,qfi\n", 0) == 0);
    CHECK(left.find("GHZ (optimal)") != std::string::npos);
    CHECK(left.find("W-10") != std::string::npos);
    std::remove((prefix.path + "_left.csv").c_str());
    std::remove((prefix.path + "_right.csv").c_str());
}

TEST_CASE("timings column is filled only on request") {
    SweepConfig cfg;
    cfg.grid = PGrid{0.5, 0.5, 1};
    cfg.n_list = {1};
    cfg.methods = {QfiMethod::closed_form};
    cfg.jobs = 1;
    cfg.timings = true;
    const std::vector<CsvRecord> recs = run_sweep(cfg);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].wall_time_ms.has_value());
}
