#include "genera/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "genera/genus.hpp"
#include "genera/render.hpp"
#include "genera/theta_numeric.hpp"

namespace genera {

namespace {

SymPoly p_poly(unsigned weight, std::initializer_list<std::pair<std::vector<unsigned>, Rational>> terms) {
    SymPoly f(SymBasis::Pontryagin, weight);
    for (const auto& [parts, c] : terms) f.add_term(Partition::from_parts(parts), c);
    return f;
}

Report golden_report(const std::string& claim, long k, bool pass, std::string diff_on_fail) {
    Report rep;
    rep.claim = claim;
    rep.k = k;
    rep.pass = pass;
    if (!pass) rep.diff.push_back(std::move(diff_on_fail));
    return rep;
}

std::string fmt_complex(std::complex<double> v) {
    std::ostringstream os;
    os.precision(15);
    os << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
    return os.str();
}

}  // namespace

std::vector<Report> run_traces_suite(const VerifyConfig& cfg) {
    std::vector<Report> out;

    for (int k = 0; k <= cfg.traces_k_max; ++k) {
        Report rep;
        rep.claim = "A-roof and L genus coefficients: series route equals trace route";
        rep.k = k;
        rep.pass = true;
        try {
            ahat_genus(static_cast<unsigned>(k));
            l_genus(static_cast<unsigned>(k));
        } catch (const std::runtime_error& e) {
            rep.pass = false;
            rep.diff.push_back(e.what());
        }
        out.push_back(std::move(rep));
    }

    const std::vector<SymPoly> ahat_table = {
        p_poly(0, {{{}, 1}}),
        p_poly(1, {{{1}, Rational(-1, 24)}}),
        p_poly(2, {{{2}, Rational(-4, 5760)}, {{1, 1}, Rational(7, 5760)}}),
        p_poly(3, {{{3}, Rational(-16, 967680)},
                   {{2, 1}, Rational(44, 967680)},
                   {{1, 1, 1}, Rational(-31, 967680)}}),
        p_poly(4, {{{4}, Rational(-192, 464486400)},
                   {{3, 1}, Rational(512, 464486400)},
                   {{2, 2}, Rational(208, 464486400)},
                   {{2, 1, 1}, Rational(-904, 464486400)},
                   {{1, 1, 1, 1}, Rational(381, 464486400)}}),
    };
    for (unsigned k = 0; k < ahat_table.size(); ++k) {
        const SymPoly got = ahat_genus(k);
        out.push_back(golden_report("A-roof genus matches the tabulated Pontryagin polynomial", k,
                                    got == ahat_table[k],
                                    "got " + to_text(got) + ", expected " + to_text(ahat_table[k])));
    }

    const std::vector<SymPoly> l_table = {
        p_poly(0, {{{}, 1}}),
        p_poly(1, {{{1}, Rational(1, 3)}}),
        p_poly(2, {{{2}, Rational(7, 45)}, {{1, 1}, Rational(-1, 45)}}),
        p_poly(3, {{{3}, Rational(62, 945)},
                   {{2, 1}, Rational(-13, 945)},
                   {{1, 1, 1}, Rational(2, 945)}}),
    };
    for (unsigned k = 0; k < l_table.size(); ++k) {
        const SymPoly got = l_genus(k);
        out.push_back(golden_report("L genus matches the tabulated Pontryagin polynomial", k,
                                    got == l_table[k],
                                    "got " + to_text(got) + ", expected " + to_text(l_table[k])));
    }
    return out;
}

std::vector<Report> run_ramanujan_suite(const VerifyConfig& cfg) {
    std::vector<Report> out;
    for (int k = 1; k <= cfg.ramanujan_k_max; ++k) {
        Report rep = verify_theorem_1_5(static_cast<unsigned>(k), cfg.q_order);
        out.push_back(std::move(rep));
    }

    // Golden E-basis polynomials: U_0 = 1, U_2 = E_2, U_4 = (5E_2^2 - 2E_4)/3,
    // U_6 = (35E_2^3 - 42E_2E_4 + 16E_6)/9.
    const auto u_poly = [](unsigned k) {
        const Rational scale = Rational(4).pow(k) * Rational(factorial(2 * k + 1));
        return trace(phi_weight(PhiKind::U), k, EisensteinBasis::E).scaled(scale);
    };
    std::vector<QuasiPoly> golden;
    {
        QuasiPoly u0(EisensteinBasis::E, 0);
        u0.add_term(Partition(), 1);
        golden.push_back(u0);
        QuasiPoly u2(EisensteinBasis::E, 1);
        u2.add_term(Partition::single(1), 1);
        golden.push_back(u2);
        QuasiPoly u4(EisensteinBasis::E, 2);
        u4.add_term(Partition::single(2), Rational(-2, 3));
        u4.add_term(Partition::single(1, 2), Rational(5, 3));
        golden.push_back(u4);
        QuasiPoly u6(EisensteinBasis::E, 3);
        u6.add_term(Partition::single(3), Rational(16, 9));
        u6.add_term(Partition::single(2) * Partition::single(1), Rational(-42, 9));
        u6.add_term(Partition::single(1, 3), Rational(35, 9));
        golden.push_back(u6);
    }
    for (unsigned k = 0; k < golden.size(); ++k) {
        const QuasiPoly got = u_poly(k);
        out.push_back(golden_report("U_{2k} matches the tabulated E-basis polynomial", k,
                                    got == golden[k],
                                    "got " + to_text(got) + ", expected " + to_text(golden[k])));
        const QSeries lhs = ramanujan_u(k, cfg.q_order);
        const QSeries rhs = quasi_to_qseries(golden[k], cfg.q_order);
        out.push_back(golden_report("U_{2k} q-expansion matches the tabulated polynomial", k,
                                    lhs == rhs, "q-series mismatch for U_" + std::to_string(2 * k)));
    }
    return out;
}

std::vector<Report> run_witten_suite(const VerifyConfig& cfg) {
    std::vector<Report> out;

    {
        Report rep;
        rep.claim = "exp of the Witten log-series times sigma/z is exactly 1";
        rep.order = cfg.witten_q_order;
        rep.k = cfg.z_order;
        rep.pass = true;
        const QSeriesPoly log_qw = witten_log_series(cfg.z_order, cfg.witten_q_order);
        const QSeriesPoly zero(cfg.z_order, cfg.witten_q_order);
        const QSeriesPoly product = log_qw.exp() * (zero - log_qw).exp();
        if (!(product == QSeriesPoly::one(cfg.z_order, cfg.witten_q_order))) {
            rep.pass = false;
            rep.diff.push_back("product deviates from 1 within the truncation box");
        }
        out.push_back(std::move(rep));
    }

    for (int k = 0; k <= cfg.witten_k_max; ++k) {
        Report rep;
        rep.claim = "Witten coefficient: partition sum equals the z/sigma route";
        rep.k = k;
        rep.order = cfg.witten_q_order;
        rep.pass = true;
        try {
            const QSeries c = witten_coefficient(static_cast<unsigned>(k), cfg.witten_q_order);
            if (k == 0 && !(c == QSeries::one(cfg.witten_q_order))) {
                rep.pass = false;
                rep.diff.push_back("k=0 coefficient is not 1");
            }
            if (k == 1 && !c.is_zero()) {
                rep.pass = false;
                rep.diff.push_back("k=1 coefficient is not 0");
            }
            if (k == 2 &&
                !(c == eisenstein_g(2, cfg.witten_q_order).scaled(Rational(1, 24)))) {
                rep.pass = false;
                rep.diff.push_back("k=2 coefficient is not G_4/24");
            }
        } catch (const std::runtime_error& e) {
            rep.pass = false;
            rep.diff.push_back(e.what());
        }
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<Report> run_theta_suite(const VerifyConfig& cfg) {
    using numeric::Complex;
    std::vector<Report> out;

    // Tier A, aggregated over the (z, tau) grid.
    Report prop24;
    prop24.claim = "sigma lattice product matches the q-expansion route";
    prop24.order = cfg.tier_a_cutoff;
    prop24.pass = true;
    Report t11, t12, c13;
    for (const Complex tau : cfg.tau_grid) {
        for (const double zr : cfg.z_grid) {
            const Complex z{zr, 0.0};
            {
                const Complex lhs = numeric::eval_sigma_product(z, tau, cfg.tier_a_cutoff);
                const Complex rhs = numeric::eval_sigma_qseries(z, tau, numeric::theta_cutoff(tau));
                const double resid = std::abs(lhs / rhs - 1.0);
                prop24.table.push_back({0.0, cfg.tier_a_cutoff, lhs, rhs, resid});
                if (!(resid < cfg.tol_tight)) {
                    prop24.pass = false;
                    prop24.diff.push_back("relative residual " + std::to_string(resid) + " at z=" +
                                          fmt_complex(z) + ", tau=" + fmt_complex(tau));
                }
            }
            const Report r1 = numeric::verify_theorem_1_1(z, tau, cfg.tier_a_cutoff, cfg.tol_tight);
            const Report r2 = numeric::verify_theorem_1_2(z, tau, cfg.tier_a_cutoff, cfg.tol_tight);
            const Report r3 = numeric::verify_corollary_1_3(z, tau, cfg.tier_a_cutoff, cfg.tol_tight);
            const auto merge = [](Report& acc, const Report& r) {
                acc.claim = r.claim;
                acc.order = r.order;
                if (acc.table.empty()) acc.pass = true;
                acc.table.insert(acc.table.end(), r.table.begin(), r.table.end());
                acc.diff.insert(acc.diff.end(), r.diff.begin(), r.diff.end());
                if (!r.pass) acc.pass = false;
            };
            merge(t11, r1);
            merge(t12, r2);
            merge(c13, r3);
        }
    }
    out.push_back(std::move(prop24));
    out.push_back(std::move(t11));
    out.push_back(std::move(t12));
    out.push_back(std::move(c13));

    // Tier B at the documented evaluation point.
    out.push_back(numeric::verify_lemma_g2limit(cfg.tier_b_tau, cfg.s_grid, cfg.lattice_cutoff));
    out.push_back(numeric::verify_theorem_1_1_raw(cfg.tier_b_z, cfg.tier_b_tau, cfg.s_grid,
                                                  cfg.lattice_cutoff));
    out.push_back(numeric::verify_theorem_1_2_raw(cfg.tier_b_z, cfg.tier_b_tau, cfg.s_grid,
                                                  cfg.lattice_cutoff));
    return out;
}

namespace {

unsigned suite_thread_count() {
    unsigned n = std::max(1u, std::min(4u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("GENERA_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
        else n = 1;
    }
    return n;
}

}  // namespace

std::vector<Report> run_all_suites(const VerifyConfig& cfg) {
    using Task = std::function<std::vector<Report>()>;
    const std::vector<Task> tasks = {
        [&] { return run_traces_suite(cfg); },
        [&] { return run_ramanujan_suite(cfg); },
        [&] { return run_witten_suite(cfg); },
        [&] { return run_theta_suite(cfg); },
    };

    std::vector<std::vector<Report>> partial(tasks.size());
    if (suite_thread_count() > 1) {
        std::vector<std::future<std::vector<Report>>> futs;
        futs.reserve(tasks.size());
        for (const auto& t : tasks) futs.push_back(std::async(std::launch::async, t));
        for (size_t i = 0; i < futs.size(); ++i) partial[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < tasks.size(); ++i) partial[i] = tasks[i]();
    }

    std::vector<Report> out;
    for (auto& p : partial) out.insert(out.end(), std::make_move_iterator(p.begin()),
                                       std::make_move_iterator(p.end()));
    return out;
}

bool all_tier_a_pass(const std::vector<Report>& reports) {
    for (const auto& r : reports)
        if (r.tier_a && !r.pass) return false;
    return true;
}

}  // namespace genera
