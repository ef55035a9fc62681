// SPDX-License-Identifier: Apache-2.0
//
// swanrel: reliability and link analysis for segmented pinching-antenna waveguides
// Copyright (C) 2026 The swanrel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "commands.hpp"

#include "swan/swan.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

namespace swancli
{
    namespace
    {
        constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

        void check(swan_status s)
        {
            if (s != SWAN_OK)
                throw CommandError(std::string(swan_status_string(s)) + ": " + swan_last_error_message());
        }

        struct SystemDeleter
        {
            void operator()(swan_system_t *p) const { swan_system_destroy(p); }
        };
        struct PlacementDeleter
        {
            void operator()(swan_placement_t *p) const { swan_placement_destroy(p); }
        };
        using System = std::unique_ptr<swan_system_t, SystemDeleter>;
        using Placement = std::unique_ptr<swan_placement_t, PlacementDeleter>;

        // One sweep point
        struct Point
        {
            double axis_value;
            std::size_t segments;
            double region_x;
            double eps0;
        };

        swan_system_params params_for(const ExperimentConfig &cfg, const Point &p)
        {
            swan_system_params s;
            swan_system_params_defaults(&s);
            s.carrier_hz = cfg.carrier_hz;
            s.n_eff = cfg.n_eff;
            s.power_w = cfg.power_w();
            s.noise_w = cfg.noise_w();
            s.min_spacing_m = cfg.min_spacing_m;
            s.region_x = p.region_x;
            s.region_y = cfg.region_y;
            s.height = cfg.height;
            s.user_x = cfg.user_x;
            s.user_y = cfg.user_y;
            s.user_z = cfg.user_z;
            s.first_feed_x = cfg.first_feed_x ? *cfg.first_feed_x : kNaN;
            s.eps0 = p.eps0;
            s.segments = p.segments;
            return s;
        }

        System make_system(const swan_system_params &params)
        {
            swan_system_t *raw = nullptr;
            check(swan_system_create(&params, &raw));
            return System(raw);
        }

        Placement make_placement(const System &sys, swan_placement_kind kind)
        {
            swan_placement_t *raw = nullptr;
            check(swan_placement_create(sys.get(), kind, &raw));
            return Placement(raw);
        }

        swan_system_derived derived(const System &sys)
        {
            swan_system_derived d;
            check(swan_system_get_derived(sys.get(), &d));
            return d;
        }

        swan_mc_config mc_for(const ExperimentConfig &cfg)
        {
            return {cfg.trials, cfg.seed, cfg.batch, cfg.threads};
        }

        double target_rate(const ExperimentConfig &cfg, const System &sys)
        {
            if (cfg.r0_rule == R0Rule::absolute)
                return cfg.r0;
            double r = 0.0;
            check(swan_rate(derived(sys).max_snr, &r));
            return cfg.r0_factor * r;
        }

        Range default_range(const std::string &command, Axis axis)
        {
            Range r;
            switch (axis)
            {
            case Axis::segments:
                r = command == "op-sweep" ? Range{1, 20, 1, false} : Range{1, 50, 1, false};
                break;
            case Axis::region_x:
                r = Range{10, 100, 10, false};
                break;
            case Axis::eps0:
                r = command == "gain-sweep" ? Range{1e-6, 1e6, 10, true} : Range{1e-4, 1e2, 10, true};
                break;
            }
            return r;
        }

        std::vector<Point> sweep_points(const std::string &command, const ExperimentConfig &cfg)
        {
            const Range range = cfg.range ? *cfg.range : default_range(command, cfg.axis);
            std::vector<Point> pts;
            for (double v : range.values())
            {
                Point p{v, static_cast<std::size_t>(cfg.segments), cfg.region_x, cfg.eps0};
                switch (cfg.axis)
                {
                case Axis::segments:
                    if (v < 1.0 || v != std::floor(v))
                        throw ConfigError("M sweep values must be positive integers");
                    p.segments = static_cast<std::size_t>(v);
                    break;
                case Axis::region_x:
                    p.region_x = v;
                    if (cfg.hold == Hold::segment_length)
                    {
                        const double m = v / cfg.segment_length;
                        if (std::abs(m - std::round(m)) > 1e-9 * std::max(1.0, m) || std::round(m) < 1.0)
                            throw ConfigError("Dx sweep value " + std::to_string(v) +
                                              " is not a whole number of segments of length L");
                        p.segments = static_cast<std::size_t>(std::round(m));
                    }
                    break;
                case Axis::eps0:
                    p.eps0 = v;
                    break;
                }
                pts.push_back(p);
            }
            return pts;
        }

        std::string fmt(double x)
        {
            if (std::isnan(x))
                return "nan";
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", x);
            return buf;
        }

        std::string fmt_hash(std::uint64_t h)
        {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
            return buf;
        }

        class CsvWriter
        {
        public:
            CsvWriter(std::ostream &out, const std::string &command, const ExperimentConfig &cfg) : out_(out)
            {
                out_ << "# swanrel " << command << " config_hash=" << fmt_hash(cfg.hash()) << " seed=" << cfg.seed
                     << "\n";
            }

            void header(const std::vector<std::string> &cols) { row_text(cols); }

            void row(const std::vector<double> &values)
            {
                std::vector<std::string> s;
                s.reserve(values.size());
                for (double v : values)
                    s.push_back(fmt(v));
                row_text(s);
            }

        private:
            void row_text(const std::vector<std::string> &cols)
            {
                for (std::size_t i = 0; i < cols.size(); ++i)
                    out_ << (i ? "," : "") << cols[i];
                out_ << "\n";
            }

            std::ostream &out_;
        };

        double closed(swan_status (*fn)(double, double, size_t, double *), double a, double b, std::size_t m)
        {
            double x = 0.0;
            check(fn(a, b, m, &x));
            return x;
        }
    }

    void pnr_sweep(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        const auto pts = sweep_points("pnr-sweep", cfg);
        CsvWriter csv(out, "pnr-sweep", cfg);

        std::vector<std::string> cols{to_string(cfg.axis)};
        struct Proto
        {
            bool on;
            const char *name;
            swan_architecture arch;
        };
        const Proto protos[] = {{cfg.conventional, "conventional", SWAN_ARCH_CONVENTIONAL},
                                {cfg.ss, "ss", SWAN_ARCH_SEGMENT_SELECTION},
                                {cfg.sa, "sa", SWAN_ARCH_SEGMENT_AGGREGATION}};
        for (const auto &p : protos)
            if (p.on)
                cols.push_back(std::string("pnr_") + p.name);
        if (cfg.mc)
        {
            for (const auto &p : protos)
                if (p.on)
                    cols.push_back(std::string("mc_") + p.name);
            for (const auto &p : protos)
                if (p.on)
                    cols.push_back(std::string("se_") + p.name);
        }
        csv.header(cols);

        const auto mc = mc_for(cfg);
        for (const auto &pt : pts)
        {
            const auto sys = make_system(params_for(cfg, pt));
            const double L = pt.region_x / static_cast<double>(pt.segments);
            std::vector<double> row{pt.axis_value};
            double v = 0.0;
            if (cfg.conventional)
            {
                check(swan_pnr_conventional(pt.eps0, pt.region_x, &v));
                row.push_back(v);
            }
            if (cfg.ss)
            {
                check(swan_pnr_ss(pt.eps0, L, &v));
                row.push_back(v);
            }
            if (cfg.sa)
                row.push_back(closed(swan_pnr_sa, pt.eps0, pt.region_x, pt.segments));
            if (cfg.mc)
            {
                std::vector<double> se;
                for (const auto &p : protos)
                    if (p.on)
                    {
                        swan_estimate e;
                        check(swan_estimate_pnr(sys.get(), p.arch, &mc, &e));
                        row.push_back(e.value);
                        se.push_back(e.std_err);
                    }
                row.insert(row.end(), se.begin(), se.end());
            }
            csv.row(row);
        }
    }

    void gain_sweep(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        const auto pts = sweep_points("gain-sweep", cfg);
        CsvWriter csv(out, "gain-sweep", cfg);
        csv.header({to_string(cfg.axis), "gain_ss", "gain_sa", "M2", "M3", "limit", "gap_ss", "gap_sa"});
        for (const auto &pt : pts)
        {
            const double m = static_cast<double>(pt.segments);
            csv.row({pt.axis_value, closed(swan_gain_ss, pt.eps0, pt.region_x, pt.segments),
                     closed(swan_gain_sa, pt.eps0, pt.region_x, pt.segments), m * m, m * m * m,
                     1.0 + pt.region_x * pt.region_x * pt.eps0,
                     closed(swan_gain_ss_gap, pt.eps0, pt.region_x, pt.segments),
                     closed(swan_gain_sa_gap, pt.eps0, pt.region_x, pt.segments)});
        }
    }

    void op_sweep(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        const auto pts = sweep_points("op-sweep", cfg);
        CsvWriter csv(out, "op-sweep", cfg);

        std::vector<std::string> cols{to_string(cfg.axis), "r0"};
        if (cfg.conventional)
            cols.push_back("op_conventional");
        if (cfg.ss)
            cols.push_back("op_ss");
        if (cfg.sa)
        {
            if (cfg.mc)
                for (const char *c : {"op_sa_mc_optimized", "se_sa_mc_optimized", "op_sa_mc_optimized_magnitude",
                                      "op_sa_mc_center", "se_sa_mc_center"})
                    cols.push_back(c);
            for (const char *c : {"op_sa_gaussian_bound", "op_sa_bruteforce", "op_sa_bound_bruteforce"})
                cols.push_back(c);
        }
        csv.header(cols);

        const auto mc = mc_for(cfg);
        for (const auto &pt : pts)
        {
            const auto sys = make_system(params_for(cfg, pt));
            const auto d = derived(sys);
            const double r0 = target_rate(cfg, sys);
            const double snr = d.max_snr;
            std::vector<double> row{pt.axis_value, r0};
            double v = 0.0;
            if (cfg.conventional)
            {
                check(swan_op_conventional(pt.eps0, pt.region_x, snr, r0, &v));
                row.push_back(v);
            }
            if (cfg.ss)
            {
                check(swan_op_ss(pt.eps0, d.segment_length, snr, r0, &v));
                row.push_back(v);
            }
            if (cfg.sa)
            {
                const auto optimized = make_placement(sys, SWAN_PLACEMENT_PHASE_ALIGNED);
                if (cfg.mc)
                {
                    swan_estimate exact, magnitude, center;
                    check(swan_estimate_op(sys.get(), SWAN_ARCH_SEGMENT_AGGREGATION, r0, SWAN_PLACEMENT_PHASE_ALIGNED,
                                           &mc, &exact, &magnitude));
                    check(swan_estimate_op(sys.get(), SWAN_ARCH_SEGMENT_AGGREGATION, r0, SWAN_PLACEMENT_CENTERED, &mc,
                                           &center, nullptr));
                    row.insert(row.end(), {exact.value, exact.std_err, magnitude.value, center.value, center.std_err});
                }
                double mean = 0.0, var = 0.0;
                check(swan_sa_moments(sys.get(), optimized.get(), &mean, &var));
                check(swan_op_sa_gaussian_bound(sys.get(), mean, var, r0, &v));
                row.push_back(v);
                if (pt.segments <= 24)
                {
                    check(swan_op_sa_bruteforce(sys.get(), optimized.get(), r0, &v));
                    row.push_back(v);
                    check(swan_op_sa_bound_bruteforce(sys.get(), optimized.get(), r0, &v));
                    row.push_back(v);
                }
                else
                    row.insert(row.end(), {kNaN, kNaN});
            }
            csv.row(row);
        }
    }

    void placement_dump(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        const Point pt{0.0, static_cast<std::size_t>(cfg.segments), cfg.region_x, cfg.eps0};
        const auto sys = make_system(params_for(cfg, pt));
        const auto pl = make_placement(sys, SWAN_PLACEMENT_PHASE_ALIGNED);
        CsvWriter csv(out, "placement-dump", cfg);
        csv.header({"m", "feed", "initial", "shift", "position", "electrical_length", "residual", "feasible",
                    "closed_form_gap"});
        std::size_t n = 0;
        check(swan_placement_count(pl.get(), &n));
        for (std::size_t m = 0; m < n; ++m)
        {
            swan_placement_row r;
            check(swan_placement_get_row(pl.get(), m, &r));
            csv.row({static_cast<double>(m + 1), r.feed, r.initial, r.shift, r.position, r.electrical_length,
                     r.residual, (r.in_segment && r.spacing_ok) ? 1.0 : 0.0, r.closed_form_gap});
        }
    }

    namespace
    {
        class Report
        {
        public:
            explicit Report(std::ostream &out) : out_(out) {}

            void check(const std::string &name, bool pass, const std::string &detail)
            {
                out_ << (pass ? "[PASS] " : "[FAIL] ") << name << ": " << detail << "\n";
                pass ? ++passed_ : ++failed_;
            }

            void skip(const std::string &name, const std::string &why)
            {
                out_ << "[SKIP] " << name << ": " << why << "\n";
            }

            bool finish()
            {
                out_ << "summary: " << passed_ << " passed, " << failed_ << " failed\n";
                return failed_ == 0;
            }

        private:
            std::ostream &out_;
            int passed_ = 0, failed_ = 0;
        };

        // |estimate - p| in units of sqrt(p (1 - p) / n); 0 when both are degenerate and equal
        double z_score(double estimate, double p, std::uint64_t n)
        {
            const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(n));
            const double diff = std::abs(estimate - p);
            if (se == 0.0)
                return diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
            return diff / se;
        }

        std::string sci(double x)
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6e", x);
            return buf;
        }
    }

    bool validate(const ExperimentConfig &cfg, std::ostream &out)
    {
        cfg.validate();
        Report rep(out);
        out << "# swanrel validate config_hash=" << fmt_hash(cfg.hash()) << " seed=" << cfg.seed
            << " trials=" << cfg.trials << "\n";

        const Point pt{0.0, static_cast<std::size_t>(cfg.segments), cfg.region_x, cfg.eps0};
        const auto sys = make_system(params_for(cfg, pt));
        const auto d = derived(sys);
        const double L = d.segment_length;
        const auto mc = mc_for(cfg);
        out << "# M=" << cfg.segments << " Dx=" << fmt(cfg.region_x) << " L=" << fmt(L) << " eps0=" << fmt(cfg.eps0)
            << "\n";

        // Two-state chain of one segment
        double lambda = 0.0, mu = 0.0;
        check(swan_rates_for_length(cfg.lambda0() > 0.0 ? cfg.lambda0() : 1e-300, cfg.mu0, L, &lambda, &mu));
        const double relax = 1.0 / (lambda + mu);
        {
            double worst = 0.0;
            for (int i = 1; i <= 10; ++i)
                for (int j = 1; j <= 10; ++j)
                {
                    const double s = 0.2 * i * relax, t = 0.3 * j * relax;
                    swan_transition ps, pt_, pst;
                    check(swan_transition_probabilities(lambda, mu, s, &ps));
                    check(swan_transition_probabilities(lambda, mu, t, &pt_));
                    check(swan_transition_probabilities(lambda, mu, s + t, &pst));
                    worst = std::max({worst, std::abs(ps.p11 * pt_.p11 + ps.p10 * pt_.p01 - pst.p11),
                                      std::abs(ps.p01 * pt_.p11 + ps.p00 * pt_.p01 - pst.p01),
                                      std::abs(ps.p11 * pt_.p10 + ps.p10 * pt_.p00 - pst.p10),
                                      std::abs(ps.p01 * pt_.p10 + ps.p00 * pt_.p00 - pst.p00)});
                }
            rep.check("ctmc chapman-kolmogorov", worst <= 1e-12, "max_abs_err=" + sci(worst) + " tol=1e-12");
        }
        {
            std::vector<double> times;
            for (int k = 1; k <= 10; ++k)
                times.push_back(0.25 * k * relax);
            std::vector<double> from_work(times.size()), from_fail(times.size());
            check(swan_empirical_working_fraction(lambda, mu, 1, times.data(), times.size(), cfg.trials, cfg.seed,
                                                  cfg.threads, from_work.data()));
            check(swan_empirical_working_fraction(lambda, mu, 0, times.data(), times.size(), cfg.trials,
                                                  cfg.seed + 1, cfg.threads, from_fail.data()));
            double z11 = 0.0, z01 = 0.0;
            for (std::size_t k = 0; k < times.size(); ++k)
            {
                swan_transition p;
                check(swan_transition_probabilities(lambda, mu, times[k], &p));
                z11 = std::max(z11, z_score(from_work[k], p.p11, cfg.trials));
                z01 = std::max(z01, z_score(from_fail[k], p.p01, cfg.trials));
            }
            rep.check("ctmc trajectories p11(t)", z11 <= 3.0, "max_z=" + fmt(z11) + " tol=3");
            rep.check("ctmc trajectories p01(t)", z01 <= 3.0, "max_z=" + fmt(z01) + " tol=3");
        }

        // Steady-state PNR
        {
            const swan_architecture archs[] = {SWAN_ARCH_CONVENTIONAL, SWAN_ARCH_SEGMENT_SELECTION,
                                               SWAN_ARCH_SEGMENT_AGGREGATION};
            const char *names[] = {"conventional", "ss", "sa"};
            double closed_form[3];
            check(swan_pnr_conventional(cfg.eps0, cfg.region_x, &closed_form[0]));
            check(swan_pnr_ss(cfg.eps0, L, &closed_form[1]));
            check(swan_pnr_sa(cfg.eps0, cfg.region_x, pt.segments, &closed_form[2]));
            for (int a = 0; a < 3; ++a)
            {
                swan_estimate e;
                check(swan_estimate_pnr(sys.get(), archs[a], &mc, &e));
                const double z = z_score(e.value, closed_form[a], cfg.trials);
                rep.check(std::string("pnr ") + names[a] + " mc vs closed form", z <= 3.0,
                          "closed=" + fmt(closed_form[a]) + " mc=" + fmt(e.value) + " z=" + fmt(z) + " tol=3");
            }
        }

        // Placement
        const auto pl = make_placement(sys, SWAN_PLACEMENT_PHASE_ALIGNED);
        {
            std::size_t n = 0;
            check(swan_placement_count(pl.get(), &n));
            double gap = 0.0, residual = 0.0;
            int feasible = 0;
            check(swan_placement_summary(pl.get(), nullptr, nullptr, nullptr, &feasible));
            for (std::size_t m = 0; m < n; ++m)
            {
                swan_placement_row r;
                check(swan_placement_get_row(pl.get(), m, &r));
                gap = std::max(gap, r.closed_form_gap);
                residual = std::max(residual, std::abs(r.residual));
            }
            rep.check("placement closed form vs root solve", gap <= 1e-10, "max_gap_m=" + sci(gap) + " tol=1e-10");
            rep.check("placement phase residual", residual <= 1e-9, "max_residual_m=" + sci(residual) + " tol=1e-9");
            rep.check("placement feasible", feasible != 0, feasible ? "all segments" : "infeasible segment");

            std::vector<std::uint8_t> all(n, 1);
            double exact = 0.0, aligned = 0.0;
            check(swan_snr_sa(sys.get(), pl.get(), all.data(), n, SWAN_SNR_EXACT, &exact));
            check(swan_snr_sa(sys.get(), pl.get(), all.data(), n, SWAN_SNR_ALIGNED, &aligned));
            const double rel = std::abs(exact / aligned - 1.0);
            rep.check("aligned snr exact vs magnitude", rel <= 1e-6, "rel_err=" + sci(rel) + " tol=1e-6");
        }

        // Outage
        {
            const double r0 = target_rate(cfg, sys);
            if (pt.segments <= 24)
            {
                double op = 0.0, bound = 0.0;
                check(swan_op_sa_bruteforce(sys.get(), pl.get(), r0, &op));
                check(swan_op_sa_bound_bruteforce(sys.get(), pl.get(), r0, &bound));
                swan_estimate magnitude;
                check(swan_estimate_op(sys.get(), SWAN_ARCH_SEGMENT_AGGREGATION, r0, SWAN_PLACEMENT_PHASE_ALIGNED,
                                       &mc, nullptr, &magnitude));
                const double z = z_score(magnitude.value, op, cfg.trials);
                rep.check("sa outage mc vs enumeration", z <= 3.0,
                          "enumerated=" + fmt(op) + " mc=" + fmt(magnitude.value) + " z=" + fmt(z) + " tol=3");
                rep.check("sa outage bound dominates", bound >= op,
                          "bound=" + fmt(bound) + " op=" + fmt(op));
            }
            else
                rep.skip("sa outage mc vs enumeration", "M > 24");
        }

        // Moment closed forms for a symmetric layout of segments of length L
        for (std::size_t m : {5u, 11u, 21u})
        {
            swan_system_params p = params_for(cfg, {0.0, m, cfg.segment_length * static_cast<double>(m), cfg.eps0});
            p.first_feed_x = cfg.user_x - 0.5 * p.region_x;
            const auto s = make_system(p);
            const auto centered = make_placement(s, SWAN_PLACEMENT_PHASE_ALIGNED);
            double mean = 0.0, var = 0.0, cmean = 0.0, cvar = 0.0;
            check(swan_sa_moments(s.get(), centered.get(), &mean, &var));
            check(swan_sa_moments_symmetric(s.get(), &cmean, &cvar));
            const double em = std::abs(cmean / mean - 1.0), ev = std::abs(cvar / var - 1.0);
            rep.check("sa moments closed form M=" + std::to_string(m) + " L=" + fmt(cfg.segment_length),
                      em <= 0.02 && ev <= 0.02, "mean_rel_err=" + fmt(em) + " var_rel_err=" + fmt(ev) + " tol=0.02");
        }

        return rep.finish();
    }

    void write_plot_script(const std::string &command, const ExperimentConfig &cfg, const std::string &csv_path,
                           std::ostream &out)
    {
        const std::string axis = to_string(cfg.axis);
        out << "# gnuplot script for " << command << "\n";
        out << "set datafile separator ','\n";
        out << "set datafile commentschars '#'\n";
        out << "set key autotitle columnhead\n";
        out << "set xlabel '" << axis << "'\n";
        if (cfg.axis == Axis::eps0)
            out << "set logscale x\n";
        if (command == "gain-sweep")
            out << "set logscale y\nset ylabel 'gain'\n"
                << "plot for [c in 'gain_ss gain_sa limit'] '" << csv_path
                << "' using 1:(column(c)) with linespoints title c\n";
        else if (command == "op-sweep")
            out << "set logscale y\nset ylabel 'outage probability'\n"
                << "plot for [c in 'op_conventional op_ss op_sa_mc_optimized op_sa_mc_center op_sa_gaussian_bound'] '"
                << csv_path << "' using 1:(column(c)) with linespoints title c\n";
        else
            out << "set ylabel 'probability of non-zero rate'\n"
                << "plot for [c in 'pnr_conventional pnr_ss pnr_sa'] '" << csv_path
                << "' using 1:(column(c)) with linespoints title c\n";
    }
}
