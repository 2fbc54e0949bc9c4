// Randomized suites shared with the verify subcommand, run here at a reduced
// trial count; the acceptance binary runs them at the full 200 trials.

#include "qchan/verify.hpp"

#include "doctest.h"

using namespace qchan;

namespace {

VerifyOptions quick() {
    VerifyOptions opt;
    opt.trials = 40;
    opt.jobs = 2;
    return opt;
}

}  // namespace

TEST_CASE("property suites pass at reduced trial counts") {
    const VerifyOptions opt = quick();
    for (const CheckResult& r :
         {property_monotonicity(opt), property_unitary_invariance(opt), property_convexity(opt),
          property_additivity(opt), property_pure_vs_sld(opt), property_kg_spectra(opt)}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("structural identities hold") {
    for (const CheckResult& r : structural_identities()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("pinned reference values hold") {
    for (const CheckResult& r : reference_value_checks()) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("small cross-validation grids pass") {
    const VerifyOptions opt = quick();
    const std::vector<double> ps{0.1, 0.3, 0.5, 0.7, 0.9};
    for (const CheckResult& r : {crossval_sld_vs_closed(4, ps, opt),
                                 crossval_fd_vs_closed(3, ps, opt),
                                 crossval_compressed_vs_dense(4, ps, opt)}) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("a corrupted closed form is caught and the scheme is named") {
    VerifyOptions opt = quick();
    opt.closed_form = [](const Scheme& s, double p) {
        double v = closed_form_qfi(s, p);
        if (s.channel == ChannelKind::depolarizing && s.input == InputKind::w && s.n == 2 && s.l == 1)
            v *= 1.001;  // deliberate fault
        return v;
    };
    const CheckResult r = crossval_sld_vs_closed(3, {0.3, 0.6}, opt);
    CHECK(!r.pass);
    CHECK(r.detail.find("dep/w n=2 l=1") != std::string::npos);
}

TEST_CASE("verify report maps pass/fail to exit codes") {
    std::ostringstream out;
    CHECK(print_report({{"alpha", true, "ok"}}, out) == 0);
    CHECK(out.str().find("PASS") != std::string::npos);
    std::ostringstream out2;
    CHECK(print_report({{"alpha", true, ""}, {"beta", false, "broke"}}, out2) == 1);
    CHECK(out2.str().find("FAIL") != std::string::npos);
    CHECK(out2.str().find("broke") != std::string::npos);
}
