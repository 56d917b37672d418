#include "experiments.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <stdexcept>

#include "hff/fourier.hpp"
#include "hff/functional.hpp"
#include "hff/poisson1.hpp"
#include "hff/poisson2.hpp"
#include "hff/random.hpp"
#include "hff/special_sums.hpp"
#include "hff/zeta.hpp"

namespace hff::cli {

namespace {

std::string fmt_complex(cdouble z) {
    char buf[64];
    if (z.imag() == 0.0) {
        std::snprintf(buf, sizeof buf, "%g", z.real());
    } else {
        std::snprintf(buf, sizeof buf, "%g%+gi", z.real(), z.imag());
    }
    return buf;
}

std::string mode_name(Level2Mode m) { return m == Level2Mode::Plain ? "plain" : "epsilon"; }

std::vector<Level2Mode> modes_of(const Config& c) {
    if (c.mode == "plain") return {Level2Mode::Plain};
    if (c.mode == "epsilon") return {Level2Mode::Epsilon};
    return {Level2Mode::Plain, Level2Mode::Epsilon};
}

double tol_or(const Config& c, double fallback) {
    return c.tolerance > 0.0 ? c.tolerance : fallback;
}

Row make_row(std::string experiment, std::int64_t h, std::int64_t hp, std::string mode,
             std::string param, std::string quantity, cdouble value, double abs_err, double tol) {
    Row r;
    r.experiment = std::move(experiment);
    r.H = h;
    r.Hprime = hp;
    r.mode = std::move(mode);
    r.param = std::move(param);
    r.quantity = std::move(quantity);
    r.value = value;
    r.abs_err = abs_err;
    r.tolerance = tol;
    r.pass = abs_err <= tol;
    return r;
}

// Appends |v_i - v_{i-1}| rows for a convergence schedule; a delta passes
// when it does not grow past its predecessor (beyond the noise floor).
void append_deltas(std::vector<Row>& rows, const std::string& experiment,
                   const std::string& param, const std::vector<std::pair<std::string, double>>& seq,
                   double floor) {
    double prev_delta = -1.0;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        const double delta = std::abs(seq[i].second - seq[i - 1].second);
        const double tol = prev_delta < 0.0 ? delta + floor : prev_delta + floor;
        rows.push_back(make_row(experiment, 0, 0, "-", param, "delta@" + seq[i].first, delta,
                                delta > tol ? delta - tol : 0.0, floor));
        rows.back().pass = delta <= tol;
        prev_delta = delta;
    }
}

// ---------------------------------------------------------------- transform1d

std::vector<Row> run_transform1d(const Config& c) {
    const double tol = tol_or(c, 1e-12);
    std::vector<Row> rows;
    SplitMix64 seeder(c.seed);
    for (const std::int64_t h : c.H) {
        const CyclicLattice g = make_level1(h).grid();
        for (std::int64_t t = 0; t < c.trials; ++t) {
            const LatticeFn phi = LatticeFn(
                g, random_complex_vector(static_cast<std::size_t>(g.size), seeder.next()));
            const LatticeFn psi = LatticeFn(
                g, random_complex_vector(static_cast<std::size_t>(g.size), seeder.next()));
            const std::string param = "trial=" + std::to_string(t);

            double a = 0.0, b = 0.0;
            const LatticeFn f = forward(phi);
            for (const auto& v : phi.raw()) a += std::norm(v);
            for (const auto& v : f.raw()) b += std::norm(v);
            rows.push_back(make_row("transform1d", h, 0, "-", param, "parseval_rel_err",
                                    b / a - 1.0, std::abs(a - b) / a, tol));

            double round_err = 0.0;
            const LatticeFn back = inverse(f);
            for (std::int64_t z = 0; z < g.size; ++z)
                round_err = std::max(round_err, std::abs(back.at(z) - phi.at(z)));
            rows.push_back(
                make_row("transform1d", h, 0, "-", param, "roundtrip_err", round_err, round_err, tol));

            const LatticeFn f4 = forward(forward(forward(f)));
            double pow4_err = 0.0;
            for (std::int64_t z = 0; z < g.size; ++z)
                pow4_err = std::max(pow4_err, std::abs(f4.at(z) - phi.at(z)));
            rows.push_back(
                make_row("transform1d", h, 0, "-", param, "pow4_err", pow4_err, pow4_err, tol));

            const LatticeFn conv = forward(convolve(phi, psi));
            const LatticeFn fq = forward(psi);
            double conv_err = 0.0;
            for (std::int64_t z = 0; z < g.size; ++z)
                conv_err = std::max(conv_err, std::abs(conv.at(z) - f.at(z) * fq.at(z)));
            rows.push_back(make_row("transform1d", h, 0, "-", param, "conv_theorem_err", conv_err,
                                    conv_err, tol));
        }
    }
    return rows;
}

// ------------------------------------------------------------------ gauss-sum

std::vector<Row> run_gauss_sum(const Config& c) {
    const double tol = tol_or(c, 1e-8);
    std::vector<Row> rows;
    for (std::int64_t z = 1; z <= c.zmax; ++z) {
        const cdouble closed = gauss_sum_closed(z);
        const double err = std::abs(closed - gauss_sum_direct(z, +1));
        rows.push_back(make_row("gauss-sum", 0, 0, "-", "z=" + std::to_string(z),
                                "closed_vs_direct", closed, err, tol));
    }
    const cdouble spots[4] = {
        {1.0, 0.0}, {0.0, 0.0}, {0.0, std::sqrt(3.0)}, {2.0, 2.0}};
    for (std::int64_t z = 1; z <= 4; ++z) {
        const cdouble got = gauss_sum_closed(z);
        rows.push_back(make_row("gauss-sum", 0, 0, "-", "z=" + std::to_string(z), "spot_value",
                                got, std::abs(got - spots[z - 1]), tol_or(c, 1e-12)));
    }
    return rows;
}

// ------------------------------------------------------------- gaussian-coeff

std::vector<Row> run_gaussian_coeff(const Config& c) {
    const double tol = tol_or(c, 1e-6);
    std::vector<Row> rows;
    for (const cdouble xi : c.xi) {
        const cdouble target = 1.0 / std::sqrt(xi);
        std::vector<std::pair<std::string, double>> origin_seq, site_seq;
        for (const std::int64_t h : c.H) {
            const Level1Lattice lat = make_level1(h);
            const std::string param = "xi=" + fmt_complex(xi);
            const cdouble c0 = gaussian_coefficient(lat, xi, 0);
            rows.push_back(make_row("gaussian-coeff", h, 0, "-", param, "origin_err", c0,
                                    std::abs(c0 - target), tol));
            origin_seq.emplace_back("H=" + std::to_string(h), std::abs(c0 - target));

            const cdouble psf = per_site_gauss_factor(xi, 1.0, lat.epsilon(),
                                                      static_cast<double>(h) / 2.0);
            rows.push_back(make_row("gaussian-coeff", h, 0, "-", param, "shifted_site_err", psf,
                                    std::abs(psf - target), tol));
            site_seq.emplace_back("H=" + std::to_string(h), std::abs(psf - target));
        }
        if (c.sweep) {
            append_deltas(rows, "gaussian-coeff", "xi=" + fmt_complex(xi) + ";q=origin_err",
                          origin_seq, 1e-14);
            append_deltas(rows, "gaussian-coeff", "xi=" + fmt_complex(xi) + ";q=shifted_site_err",
                          site_seq, 1e-14);
        }
    }
    return rows;
}

// ---------------------------------------------------------------------- theta

std::vector<Row> run_theta(const Config& c) {
    const double tol = tol_or(c, 1e-12);
    std::vector<Row> rows;
    for (const cdouble xi : c.xi) {
        const cdouble lhs = theta_sum(xi);
        const cdouble rhs = theta_sum(1.0 / xi) / std::sqrt(xi);
        rows.push_back(make_row("theta", 0, 0, "-", "xi=" + fmt_complex(xi), "modular_residual",
                                lhs, std::abs(lhs - rhs), tol));
    }
    const cdouble t8 = theta_sum({8.0, 0.0});
    rows.push_back(make_row("theta", 0, 0, "-", "xi=8", "asymptotic_residual", t8,
                            std::abs(t8 - (1.0 + 2.0 * std::exp(-8.0 * pi))), tol));
    return rows;
}

// ------------------------------------------------------------------ poisson1d

std::vector<Row> run_poisson1d(const Config& c) {
    const double tol = tol_or(c, 1e-10);
    std::vector<Row> rows;
    SplitMix64 seeder(c.seed);
    for (const std::int64_t h : c.H) {
        const CyclicLattice g = make_level1(h).grid();
        for (std::int64_t s = 1; s <= g.size; ++s) {
            if (g.size % s != 0) continue;
            double worst = 0.0;
            double worst43 = 0.0;
            for (std::int64_t t = 0; t < c.trials; ++t) {
                const LatticeFn phi = LatticeFn(
                    g, random_complex_vector(static_cast<std::size_t>(g.size), seeder.next()));
                const auto [lhs, rhs] = poisson_pair(phi, subgroup(g, s));
                worst = std::max(worst, std::abs(lhs - rhs));
                if (s == h) {
                    // unnormalized form: |S| = |S^perp| = H
                    const double scale = std::sqrt(static_cast<double>(h));
                    worst43 = std::max(worst43, std::abs(lhs * scale - rhs * scale));
                }
            }
            rows.push_back(make_row("poisson1d", h, 0, "-", "s=" + std::to_string(s),
                                    "identity_residual", worst, worst, tol));
            if (s == h)
                rows.push_back(make_row("poisson1d", h, 0, "-", "s=" + std::to_string(s),
                                        "unnormalized_residual", worst43, worst43, tol));
        }
    }
    return rows;
}

// ------------------------------------------------------- functional-roundtrip

std::vector<Row> run_functional_roundtrip(const Config& c) {
    const double tol = tol_or(c, 1e-12);
    std::vector<Row> rows;
    SplitMix64 seeder(c.seed);
    for (const std::int64_t h : c.H) {
        for (const std::int64_t hp : c.Hprime) {
            for (const Level2Mode mode : modes_of(c)) {
                const FunctionalSpace sp = make_space(make_level1(h), hp, mode);
                if (!sp.dense_viable())
                    throw std::invalid_argument(
                        "functional-roundtrip: dense table too large for H=" + std::to_string(h) +
                        " H'=" + std::to_string(hp));
                DenseFunctional f(sp);
                f.table() = random_complex_vector(f.table().size(), seeder.next());

                double round_err = 0.0;
                const DenseFunctional back = inverse_dense(forward_dense(f));
                for (std::size_t i = 0; i < f.table().size(); ++i)
                    round_err = std::max(round_err, std::abs(back.table()[i] - f.table()[i]));
                rows.push_back(make_row("functional-roundtrip", h, hp, mode_name(mode), "-",
                                        "roundtrip_err", round_err, round_err, tol));

                SplitMix64 site_rng(seeder.next());
                std::vector<LatticeFn> sites;
                for (std::int64_t k = 0; k < sp.site_count(); ++k) {
                    LatticeFn s(sp.site_grid());
                    for (auto& v : s.raw()) v = site_rng.uniform_complex();
                    sites.push_back(std::move(s));
                }
                const FactoredFunctional fac(sp, std::move(sites));
                double fac_err = 0.0;
                const DenseFunctional a = densify(forward_factored(fac));
                const DenseFunctional b = forward_dense(densify(fac));
                for (std::size_t i = 0; i < a.table().size(); ++i)
                    fac_err = std::max(fac_err, std::abs(a.table()[i] - b.table()[i]));
                rows.push_back(make_row("functional-roundtrip", h, hp, mode_name(mode), "-",
                                        "factored_vs_dense_err", fac_err, fac_err, tol));

                for (const double l : {0.5, 1.0, 2.0}) {
                    DenseFunctional dl(sp);
                    dl.table()[0] = std::pow(delta_functional(sp).table()[0].real(), l);
                    const DenseFunctional fdl = forward_dense(dl);
                    const double want = delta_power_transform(sp, l);
                    double err = 0.0;
                    for (const auto& v : fdl.table()) err = std::max(err, std::abs(v - want));
                    char param[32];
                    std::snprintf(param, sizeof param, "l=%g", l);
                    rows.push_back(make_row("functional-roundtrip", h, hp, mode_name(mode), param,
                                            "delta_power_err", want, err,
                                            tol * std::max(1.0, want)));
                }
            }
        }
    }
    return rows;
}

// --------------------------------------------------------- poisson-functional

std::vector<Row> run_poisson_functional(const Config& c) {
    const double tol = tol_or(c, 1e-10);
    std::vector<Row> rows;
    SplitMix64 seeder(c.seed);
    for (const std::int64_t h : c.H) {
        for (const std::int64_t hp : c.Hprime) {
            for (const Level2Mode mode : modes_of(c)) {
                const FunctionalSpace sp = make_space(make_level1(h), hp, mode);
                if (!sp.dense_viable())
                    throw std::invalid_argument("poisson-functional: dense table too large");
                std::vector<std::int64_t> divs;
                for (std::int64_t d = 1; d <= sp.per_site_size(); ++d)
                    if (sp.per_site_size() % d == 0) divs.push_back(d);
                for (std::int64_t t = 0; t < c.trials; ++t) {
                    DenseFunctional f(sp);
                    f.table() = random_complex_vector(f.table().size(), seeder.next());
                    std::vector<std::int64_t> gens;
                    std::string gen_str;
                    for (std::int64_t k = 0; k < sp.site_count(); ++k) {
                        gens.push_back(divs[static_cast<std::size_t>(
                            seeder.next() % divs.size())]);
                        gen_str += (k ? "." : "") + std::to_string(gens.back());
                    }
                    const ProductSubgroup y = make_product_subgroup(sp, gens);
                    const auto [lhs, rhs] = poisson_functional_pair(f, y);
                    const std::string param = "trial=" + std::to_string(t) + ";gens=" + gen_str;
                    rows.push_back(make_row("poisson-functional", h, hp, mode_name(mode), param,
                                            "identity_residual", lhs, std::abs(lhs - rhs), tol));
                    const bigint orders = product_subgroup_order(y) *
                                          product_subgroup_order(annihilator_product(y));
                    const bool exact = orders == functional_space_order(sp);
                    rows.push_back(make_row("poisson-functional", h, hp, mode_name(mode), param,
                                            "order_identity", exact ? 1.0 : 0.0, exact ? 0.0 : 1.0,
                                            0.5));
                }
            }
        }
    }
    return rows;
}

// -------------------------------------------------------------- theta-product

std::vector<Row> run_theta_product(const Config& c) {
    const double tol = tol_or(c, 1e-8);
    std::vector<Row> rows;
    for (const std::int64_t hp : c.Hprime) {
        for (const Level2Mode mode : modes_of(c)) {
            const FunctionalSpace sp = make_space(make_level1(c.H.at(0)), hp, mode);
            for (const cdouble xi : c.xi) {
                for (const std::int64_t gen : c.generators) {
                    if (gen < 1 || sp.per_site_size() % gen != 0) continue;
                    const auto report = theta_product_report(
                        sp, xi,
                        std::vector<std::int64_t>(static_cast<std::size_t>(sp.site_count()), gen));
                    double worst = 0.0;
                    for (const auto& r : report) worst = std::max(worst, r.abs_diff);
                    const std::string param =
                        "xi=" + fmt_complex(xi) + ";gen=" + std::to_string(gen);
                    rows.push_back(make_row("theta-product", c.H.at(0), hp, mode_name(mode), param,
                                            "site_residual", report.front().computed, worst, tol));
                }
            }
        }
    }
    return rows;
}

// ------------------------------------------------------------------ zeta-site

std::vector<Row> run_zeta_site(const Config& c) {
    const double tol = tol_or(c, 1e-10);
    std::vector<Row> rows;
    SplitMix64 rng(c.seed);
    const std::vector<std::int64_t> primes = nth_primes(25);
    for (const std::int64_t hp : c.Hprime) {
        const Level2Lattice l2 = make_level2(hp);
        for (std::int64_t t = 0; t < c.trials; ++t) {
            const std::int64_t p = primes[static_cast<std::size_t>(rng.next() % primes.size())];
            const cdouble s{1.0 + 1.5 * (rng.uniform_signed() + 1.0), 4.0 * rng.uniform_signed()};
            const std::int64_t z_b = l2.grid().index_at(
                static_cast<std::size_t>(rng.next() % static_cast<std::uint64_t>(l2.Np)));
            const cdouble closed = zeta_site_factor_closed(p, s, z_b, l2);
            const cdouble via_direct =
                l2.epsilon_p() *
                std::exp(-s * std::log(static_cast<double>(p)) * static_cast<double>(hp) / 2.0) *
                zeta_site_factor_direct(p, s, z_b, l2);
            const double rel = std::abs(closed - via_direct) / std::abs(closed);
            const std::string param = "p=" + std::to_string(p) + ";s=" + fmt_complex(s) +
                                      ";zb=" + std::to_string(z_b);
            rows.push_back(make_row("zeta-site", 0, hp, "plain", param, "closed_vs_direct_rel",
                                    closed, rel, tol));
        }
    }
    const Level2Lattice anchor = make_level2(2);
    const cdouble direct = zeta_site_factor_direct(2, {2.0, 0.0}, 0, anchor);
    rows.push_back(make_row("zeta-site", 0, 2, "plain", "p=2;s=2;zb=0", "anchor_7_5", direct,
                            std::abs(direct - 7.5), tol_or(c, 1e-12)));
    return rows;
}

// -------------------------------------------------------------- zeta-converge

std::vector<Row> run_zeta_converge(const Config& c) {
    std::vector<Row> rows;
    for (const cdouble s : c.xi) {  // xi doubles as the complex exponent s
        if (!(s.real() > 1.0))
            throw std::invalid_argument("zeta-converge needs Re(s) > 1");
        const cdouble ref = zeta_reference(s);
        const std::string base = "s=" + fmt_complex(s) + ";depth=" + std::to_string(c.depth);
        std::vector<std::pair<std::string, double>> gaps;
        double prev_gap = -1.0;
        double prev_val = 0.0;
        for (std::size_t i = 0; i < c.K.size(); ++i) {
            const std::int64_t k = c.K[i];
            const cdouble v = zeta_partial(s, k, c.depth);
            const double gap = std::abs(v - ref);
            const std::string param = base + ";K=" + std::to_string(k);
            const bool last = i + 1 == c.K.size();
            // intermediate rows must shrink the gap; the last must land
            // inside the configured tolerance
            const double tol = last ? tol_or(c, 1e-5) : (prev_gap < 0 ? gap + 1.0 : prev_gap);
            rows.push_back(make_row("zeta-converge", 0, 0, "-", param, "euler_gap", v, gap, tol));
            if (s.imag() == 0.0) {
                const bool up = i == 0 || v.real() > prev_val;
                Row r = make_row("zeta-converge", 0, 0, "-", param, "monotone_in_K", v,
                                 up ? 0.0 : 1.0, 0.5);
                rows.push_back(r);
                prev_val = v.real();
            }
            gaps.emplace_back("K=" + std::to_string(k), gap);
            prev_gap = gap;
        }
        if (c.sweep) append_deltas(rows, "zeta-converge", base, gaps, 1e-12);
    }
    return rows;
}

using Runner = std::vector<Row> (*)(const Config&);

const std::map<std::string, Runner>& registry() {
    static const std::map<std::string, Runner> reg = {
        {"transform1d", run_transform1d},
        {"gauss-sum", run_gauss_sum},
        {"gaussian-coeff", run_gaussian_coeff},
        {"theta", run_theta},
        {"poisson1d", run_poisson1d},
        {"functional-roundtrip", run_functional_roundtrip},
        {"poisson-functional", run_poisson_functional},
        {"theta-product", run_theta_product},
        {"zeta-site", run_zeta_site},
        {"zeta-converge", run_zeta_converge},
    };
    return reg;
}

}  // namespace

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, _] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

Config defaults_for(const std::string& experiment) {
    Config c;
    c.H = {8, 16};
    c.Hprime = {2};
    c.xi = {{1.0, 0.0}, {2.0, 0.0}};
    c.m = {1, 2};
    c.s = {2};
    c.generators = {1};
    c.K = {10, 100, 1000};
    if (experiment == "transform1d") {
        c.H = {8, 16, 32, 64};
    } else if (experiment == "gauss-sum") {
        c.zmax = 2000;
    } else if (experiment == "gaussian-coeff") {
        c.H = {8, 16, 32};
        c.xi = {{1.0, 0.0}, {2.0, 0.0}, {1.0, 1.0}};
        c.sweep = true;
    } else if (experiment == "theta") {
        c.xi = {{0.5, 0.0}, {1.0, 0.0}, {2.0, 0.0}};
    } else if (experiment == "poisson1d") {
        c.H = {4, 6, 8};
    } else if (experiment == "functional-roundtrip") {
        c.H = {2};
        c.Hprime = {2, 4};
    } else if (experiment == "poisson-functional") {
        c.H = {2};
        c.Hprime = {2};
        c.trials = 20;
    } else if (experiment == "theta-product") {
        c.H = {2};
        c.Hprime = {16};
        c.xi = {{1.0, 0.0}, {2.0, 0.0}};
        c.generators = {1, 4, 16};
    } else if (experiment == "zeta-site") {
        c.Hprime = {2, 8};
        c.trials = 50;
    } else if (experiment == "zeta-converge") {
        c.xi = {{2.0, 0.0}};
        c.K = {10, 100, 1000, 10000};
        c.depth = 256;
        c.sweep = true;
    } else {
        throw std::invalid_argument("unknown experiment: '" + experiment + "'");
    }
    return c;
}

std::vector<Row> run_experiment(const std::string& experiment, const Config& config) {
    const auto it = registry().find(experiment);
    if (it == registry().end())
        throw std::invalid_argument("unknown experiment: '" + experiment + "'");
    validate(config);
    return it->second(config);
}

}  // namespace hff::cli
