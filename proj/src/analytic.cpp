#include "qchan/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

namespace qchan {

const char* to_string(InputKind kind) {
    switch (kind) {
        case InputKind::ghz: return "ghz";
        case InputKind::w: return "w";
        case InputKind::separable: return "sep";
        case InputKind::bell: return "bell";
    }
    return "?";
}

void validate_scheme(const Scheme& s) {
    if (s.channel == ChannelKind::pauli)
        throw std::domain_error("scheme: closed forms cover only the depolarizing and phase-flip channels");
    switch (s.input) {
        case InputKind::ghz:
            if (s.n < 1) throw std::domain_error("scheme: GHZ requires at least one ancilla");
            break;
        case InputKind::w:
            if (s.n < 0) throw std::domain_error("scheme: negative ancilla count");
            break;
        case InputKind::separable:
        case InputKind::bell:
            if (s.l != 0)
                throw std::domain_error("scheme: benchmark strategies take no ancilla loss");
            return;
    }
    if (s.l < 0 || s.l > s.n) throw std::domain_error("scheme: l outside [0, n]");
}

static void validate_p(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("qfi: closed forms diverge at p = 0 and p = 1; need p in (0,1)");
}

Eigen::VectorXd KEigenpair::dense(int m) const {
    Eigen::VectorXd v(m);
    v.setConstant(head);
    v(m - 1) = tail;
    return v;
}

KSpectrum k_block_spectrum(const KBlock& k) {
    if (k.m < 2) throw std::invalid_argument("k_block_spectrum: m >= 2 required");
    const double m1 = static_cast<double>(k.m - 1);
    const double big_a = k.a * m1;

    KSpectrum s;
    s.kernel_dim = k.m - 2;

    if (k.b == 0.0) {
        // Corner decouples: eigenvalues a(m-1) and c with eigenvectors
        // (1,...,1,0) and (0,...,0,1).
        const KEigenpair block{big_a, 1.0, 0.0};
        const KEigenpair corner{k.c, 0.0, 1.0};
        if (k.c >= big_a) {
            s.plus = corner;
            s.minus = block;
        } else {
            s.plus = block;
            s.minus = corner;
        }
        return s;
    }

    const double xi = k.c - big_a;
    const double disc = std::sqrt(xi * xi + 4.0 * k.b * k.b * m1);
    // Y± = xi ± disc; compute the cancelling one from Y+ Y- = -4 b^2 (m-1).
    double y_plus, y_minus;
    if (xi >= 0.0) {
        y_plus = xi + disc;
        y_minus = -4.0 * k.b * k.b * m1 / y_plus;
    } else {
        y_minus = xi - disc;
        y_plus = -4.0 * k.b * k.b * m1 / y_minus;
    }
    s.plus = KEigenpair{(k.c + big_a + disc) / 2.0, 2.0 * k.b, y_plus};
    s.minus = KEigenpair{(k.c + big_a - disc) / 2.0, 2.0 * k.b, y_minus};
    return s;
}

GSpectrum g_block_spectrum(const GBlock& g) {
    if (g.m < 1) throw std::invalid_argument("g_block_spectrum: m >= 1 required");
    return GSpectrum{static_cast<double>(g.m) * g.a, g.m - 1};
}

Eigen::MatrixXd k_block_dense(const KBlock& k) {
    if (k.m < 2) throw std::invalid_argument("k_block_dense: m >= 2 required");
    Eigen::MatrixXd m = Eigen::MatrixXd::Constant(k.m, k.m, k.a);
    m.row(k.m - 1).setConstant(k.b);
    m.col(k.m - 1).setConstant(k.b);
    m(k.m - 1, k.m - 1) = k.c;
    return m;
}

Eigen::MatrixXd g_block_dense(const GBlock& g) {
    return Eigen::MatrixXd::Constant(g.m, g.m, g.a);
}

double qfi_sep(ChannelKind channel, double p) {
    validate_p(p);
    switch (channel) {
        case ChannelKind::depolarizing: return 1.0 / (p * (2.0 - p));
        case ChannelKind::phase_flip: return 1.0 / (p * (1.0 - p));
        default: throw std::domain_error("qfi_sep: unsupported channel");
    }
}

double qfi_opt(ChannelKind channel, double p) {
    validate_p(p);
    switch (channel) {
        case ChannelKind::depolarizing: return 3.0 / (p * (4.0 - 3.0 * p));
        case ChannelKind::phase_flip: return 1.0 / (p * (1.0 - p));
        default: throw std::domain_error("qfi_opt: unsupported channel");
    }
}

namespace {

double w_dep_no_loss(int n, double p) {
    const double nn = n;
    return (3.0 * p - 4.0 * (1.0 + nn * (nn + 4.0)) / ((1.0 + nn) * (1.0 + nn))) /
           ((3.0 * p - 4.0) * p * (2.0 - p));
}

double w_dep_lost_one(int n, double p) {
    const double nn = n;
    return (nn - 1.0) / (nn + 1.0) * (nn * (2.0 * p - 3.0) - 9.0) /
           (p * (2.0 * p - 3.0) * (2.0 * nn - p * (nn - 1.0)));
}

double w_dep_lost_all(int n, double p) {
    const double nn = n;
    return (nn - 1.0) * (nn - 1.0) / ((2.0 + (nn - 1.0) * p) * (p + nn * (2.0 - p)));
}

// The general-l expression: three factored polynomial pieces over a product
// of four factors. Its l = 0, 1, n reductions are pinned in the test suite.
double w_dep_lost_l(int n, int l, double p) {
    const double nn = n, ll = l;
    const double t1 = -2.0 * p *
                      (-2.0 * (ll * (ll + 2.0) - 1.0) * nn * nn +
                       ll * (ll * (3.0 * ll + 2.0) - 9.0) * nn +
                       ll * (ll * (3.0 * ll + 4.0) - 9.0) + 8.0 * nn + 2.0);
    const double t2 = (ll - 1.0) * (ll + 3.0) * (nn + 1.0) * p * p * (2.0 * ll - nn - 1.0);
    const double t3 = 4.0 * ll * (ll + 2.0) * (nn + 3.0) * (ll - nn);
    const double denom = (nn + 1.0) * p * ((ll - 1.0) * p - 2.0 * ll) *
                         ((ll + 3.0) * p - 2.0 * (ll + 2.0)) *
                         (ll * (2.0 - 2.0 * p) + (nn + 1.0) * (p - 2.0));
    return (t1 + t2 + t3) / denom;
}

double w_ph_lost_l(int n, int l, double p) {
    const double nn = n, ll = l;
    return 4.0 * (nn - ll) / ((nn + 1.0) * (nn + 1.0 - ll)) / (p * (1.0 - p));
}

}  // namespace

double closed_form_qfi(const Scheme& s, double p) {
    validate_scheme(s);
    validate_p(p);
    if (s.probe_lost) return 0.0;  // nothing left to estimate

    const bool dep = s.channel == ChannelKind::depolarizing;
    switch (s.input) {
        case InputKind::separable:
            return qfi_sep(s.channel, p);
        case InputKind::bell:
            return qfi_opt(s.channel, p);
        case InputKind::ghz:
            if (dep) {
                if (s.l == 0) return qfi_opt(s.channel, p);
                if (s.l == s.n) return 0.0;
                return qfi_sep(s.channel, p);
            }
            return s.l == 0 ? qfi_opt(s.channel, p) : 0.0;
        case InputKind::w:
            if (dep) {
                if (s.l == 0) return w_dep_no_loss(s.n, p);
                if (s.l == 1) return w_dep_lost_one(s.n, p);
                if (s.l == s.n) return w_dep_lost_all(s.n, p);
                return w_dep_lost_l(s.n, s.l, p);
            }
            return w_ph_lost_l(s.n, s.l, p);
    }
    throw std::logic_error("closed_form_qfi: unreachable");
}

namespace {

// Block description of the post-channel, post-loss state and its exact
// p-derivative. Coefficients are affine in p, so derivatives are constants.
struct ScalarBlock {
    double v = 0, dv = 0;
};
struct GBlockP {
    int m = 0;
    double a = 0, da = 0;
};
struct KBlockP {
    int m = 0;
    double a = 0, b = 0, c = 0;
    double da = 0, db = 0, dc = 0;
};

struct BlockState {
    std::vector<ScalarBlock> scalars;
    std::vector<GBlockP> gs;
    std::vector<KBlockP> ks;

    void add_k(KBlockP k) {
        // Size-one K degenerates to its corner.
        if (k.m == 1)
            scalars.push_back({k.c, k.dc});
        else if (k.m >= 2)
            ks.push_back(k);
    }
};

BlockState ghz_blocks(const Scheme& s, double p) {
    BlockState bs;
    if (s.channel == ChannelKind::depolarizing) {
        if (s.l == 0) {
            bs.add_k({2, (2.0 - p) / 4.0, (1.0 - p) / 2.0, (2.0 - p) / 4.0, -0.25, -0.5, -0.25});
            bs.scalars.push_back({p / 4.0, 0.25});
            bs.scalars.push_back({p / 4.0, 0.25});
        } else if (s.l == s.n) {
            // Only the probe remains, in the maximally mixed (stationary) state.
            bs.scalars.push_back({0.5, 0.0});
            bs.scalars.push_back({0.5, 0.0});
        } else {
            // Coherences die with the first traced qubit; four populations remain.
            bs.scalars.push_back({(2.0 - p) / 4.0, -0.25});
            bs.scalars.push_back({(2.0 - p) / 4.0, -0.25});
            bs.scalars.push_back({p / 4.0, 0.25});
            bs.scalars.push_back({p / 4.0, 0.25});
        }
    } else {
        if (s.l == 0) {
            bs.add_k({2, 0.5, (1.0 - 2.0 * p) / 2.0, 0.5, 0.0, -1.0, 0.0});
        } else {
            bs.scalars.push_back({0.5, 0.0});
            bs.scalars.push_back({0.5, 0.0});
        }
    }
    return bs;
}

BlockState w_blocks(const Scheme& s, double p) {
    BlockState bs;
    const double n1 = s.n + 1.0;
    const int kept = s.n + 1 - s.l;  // qubits remaining
    if (s.channel == ChannelKind::depolarizing) {
        const double ll = s.l;
        bs.scalars.push_back({(2.0 * ll - p * (ll - 1.0)) / (2.0 * n1), -(ll - 1.0) / (2.0 * n1)});
        if (s.n - s.l >= 1)
            bs.gs.push_back({s.n - s.l, p / (2.0 * n1), 1.0 / (2.0 * n1)});
        bs.add_k({kept, (2.0 - p) / (2.0 * n1), (1.0 - p) / n1, (2.0 + p * (ll - 1.0)) / (2.0 * n1),
                  -1.0 / (2.0 * n1), -1.0 / n1, (ll - 1.0) / (2.0 * n1)});
    } else {
        if (s.l > 0) bs.scalars.push_back({s.l / n1, 0.0});
        bs.add_k({kept, 1.0 / n1, (1.0 - 2.0 * p) / n1, 1.0 / n1, 0.0, -2.0 / n1, 0.0});
    }
    return bs;
}

// <u| dK |v> for structured vectors u = (hu,...,hu,tu), v = (hv,...,hv,tv).
double k_deriv_elem(const KBlockP& k, double hu, double tu, double hv, double tv) {
    const double m1 = k.m - 1.0;
    const double top = k.da * m1 * hv + k.db * tv;   // rows 1..m-1 of dK v
    const double bottom = k.db * m1 * hv + k.dc * tv;  // row m
    return m1 * hu * top + tu * bottom;
}

struct BlockQfi {
    double value = 0;
    int rank = 0;
};

BlockQfi block_sld(const BlockState& bs) {
    BlockQfi out;
    auto classical = [&](double lam, double dlam) {
        if (2.0 * lam <= kSldCutoff) return;
        out.value += dlam * dlam / lam;
        ++out.rank;
    };
    for (const ScalarBlock& sb : bs.scalars) classical(sb.v, sb.dv);
    // dG has the same all-ones eigenvector: <u|dG|u> = m*da, and dG kills the
    // kernel, so only the classical term survives.
    for (const GBlockP& g : bs.gs) classical(g.m * g.a, g.m * g.da);

    for (const KBlockP& k : bs.ks) {
        const KSpectrum sp = k_block_spectrum(KBlock{k.m, k.a, k.b, k.c});
        const double m1 = k.m - 1.0;
        auto norm_of = [&](const KEigenpair& e) {
            return std::sqrt(m1 * e.head * e.head + e.tail * e.tail);
        };
        const double np = norm_of(sp.plus), nm = norm_of(sp.minus);
        const double lp = sp.plus.value, lm = sp.minus.value;
        const double dpp = k_deriv_elem(k, sp.plus.head, sp.plus.tail, sp.plus.head, sp.plus.tail) / (np * np);
        const double dmm = k_deriv_elem(k, sp.minus.head, sp.minus.tail, sp.minus.head, sp.minus.tail) / (nm * nm);
        const double dpm = k_deriv_elem(k, sp.plus.head, sp.plus.tail, sp.minus.head, sp.minus.tail) / (np * nm);
        // dK maps the kernel to zero, so the two eigenpairs carry everything.
        if (2.0 * lp > kSldCutoff) {
            out.value += dpp * dpp / lp;
            ++out.rank;
        }
        if (2.0 * lm > kSldCutoff) {
            out.value += dmm * dmm / lm;
            ++out.rank;
        }
        if (lp + lm > kSldCutoff) out.value += 4.0 * dpm * dpm / (lp + lm);
    }
    return out;
}

}  // namespace

QfiEvaluation compressed_qfi(const Scheme& s, double p) {
    validate_scheme(s);
    validate_p(p);
    if (s.input != InputKind::ghz && s.input != InputKind::w)
        throw std::domain_error("compressed_qfi: only GHZ and W inputs have a block representation");
    if (s.n > kMaxCompressedAncillas)
        throw std::domain_error("compressed_qfi: ancilla count exceeds compressed cap");

    QfiEvaluation eval;
    eval.method = QfiMethod::compressed;
    eval.p = p;
    if (s.probe_lost) return eval;

    const BlockState bs = s.input == InputKind::ghz ? ghz_blocks(s, p) : w_blocks(s, p);
    const BlockQfi bq = block_sld(bs);
    eval.value = bq.value;
    eval.diag.rank_used = bq.rank;
    return eval;
}

double n_opt_dep_leading(int l, double p) {
    validate_p(p);
    return (2.0 + 2.0 / std::sqrt(2.0 - p)) * l;
}

int n_opt_dep(int l, double p) {
    if (l < 1) throw std::invalid_argument("n_opt_dep: l >= 1 required");
    validate_p(p);
    // The QFI decays toward the separable value past its peak, so a scan up
    // to four times the leading term is exhaustive.
    const int hi = std::max(l + 16, static_cast<int>(std::ceil(4.0 * n_opt_dep_leading(l, p))));
    int best_n = std::max(l, 1);
    double best = -1.0;
    for (int n = std::max(l, 1); n <= hi; ++n) {
        const double q = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, n, l}, p);
        if (q > best) {
            best = q;
            best_n = n;
        }
    }
    return best_n;
}

std::vector<int> n_opt_ph(int l) {
    if (l < 1) throw std::invalid_argument("n_opt_ph: l >= 1 required");
    const double root = static_cast<double>(l) + std::sqrt(1.0 + static_cast<double>(l));
    const int lf = static_cast<int>(std::floor(root));
    const int lc = static_cast<int>(std::ceil(root));
    if (lf == lc) return {lf};
    // p cancels in the comparison; use the p-free prefactor 4(n-l)/((n+1)(n+1-l)).
    auto prefactor = [l](int n) {
        return 4.0 * (n - l) / ((n + 1.0) * (n + 1.0 - l));
    };
    const double qf = prefactor(lf), qc = prefactor(lc);
    if (qf > qc) return {lf};
    if (qf < qc) return {lc};
    return {lf, lc};
}

int half_loss_threshold(int n, double p) {
    if (n < 1) throw std::invalid_argument("half_loss_threshold: n >= 1 required");
    validate_p(p);
    const double sep = qfi_sep(ChannelKind::depolarizing, p);
    int threshold = 0;
    for (int l = 0; l <= n; ++l) {
        const double q = closed_form_qfi(Scheme{ChannelKind::depolarizing, InputKind::w, n, l}, p);
        if (q > sep) threshold = l;
    }
    return threshold;
}

}  // namespace qchan
