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
#include "config.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{
    enum Exit
    {
        kOk = 0,
        kConfigError = 1,
        kValidationFailed = 2
    };

    struct Overrides
    {
        std::string config_path;
        std::optional<std::uint64_t> seed, trials;
        std::optional<unsigned> threads;
        std::string axis, range, out_path, plot_path;
        std::vector<std::string> sets;
    };

    void add_common(CLI::App *cmd, Overrides &o, bool sweep)
    {
        cmd->add_option("--config", o.config_path, "key = value config file")->check(CLI::ExistingFile);
        cmd->add_option("--seed", o.seed, "Monte Carlo seed");
        cmd->add_option("--trials", o.trials, "Monte Carlo trials per estimate");
        cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)");
        cmd->add_option("--out", o.out_path, "output file (default stdout)");
        cmd->add_option("--set", o.sets, "extra key=value override, repeatable");
        if (sweep)
        {
            cmd->add_option("--axis", o.axis, "sweep axis")->check(CLI::IsMember({"M", "Dx", "eps0"}));
            cmd->add_option("--range", o.range, "start:stop:step, or start:stop:xfactor for a geometric sweep");
            cmd->add_option("--plot", o.plot_path, "also write a gnuplot script here");
        }
    }

    swancli::ExperimentConfig resolve(const Overrides &o)
    {
        swancli::ExperimentConfig cfg;
        if (!o.config_path.empty())
            cfg = swancli::load_config(o.config_path, cfg);
        for (const auto &kv : o.sets)
        {
            const auto eq = kv.find('=');
            if (eq == std::string::npos)
                throw swancli::ConfigError("--set expects key=value, got '" + kv + "'");
            cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (o.seed)
            cfg.seed = *o.seed;
        if (o.trials)
            cfg.trials = *o.trials;
        if (o.threads)
            cfg.threads = *o.threads;
        if (!o.axis.empty())
            cfg.set("axis", o.axis);
        if (!o.range.empty())
            cfg.set("range", o.range);
        cfg.validate();
        return cfg;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"swanrel: reliability, PNR and outage analysis for segmented pinching-antenna waveguides"};
    app.set_version_flag("--version", "swanrel 1.0.0");
    bool print_defaults = false;
    app.add_flag("--print-defaults", print_defaults, "print the default configuration and exit");

    Overrides o;
    struct Sub
    {
        const char *name;
        const char *help;
        bool sweep;
    };
    const Sub subs[] = {{"pnr-sweep", "PNR closed forms and Monte Carlo estimates over a sweep", true},
                        {"gain-sweep", "PNR gains of SS and SA over conventional PASS", true},
                        {"op-sweep", "outage probability of all architectures over a sweep", true},
                        {"validate", "run the oracle suite and report pass/fail", false},
                        {"placement-dump", "phase-aligned antenna positions per segment", false}};
    std::vector<CLI::App *> cmds;
    for (const auto &s : subs)
    {
        auto *cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, o, s.sweep);
        cmds.push_back(cmd);
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    if (print_defaults)
    {
        std::cout << swancli::ExperimentConfig{}.dump();
        return kOk;
    }

    CLI::App *chosen = nullptr;
    for (auto *c : cmds)
        if (c->parsed())
            chosen = c;
    if (chosen == nullptr)
    {
        std::cerr << app.help();
        return kConfigError;
    }
    const std::string name = chosen->get_name();

    try
    {
        const auto cfg = resolve(o);

        std::ostringstream buf;
        bool ok = true;
        if (name == "pnr-sweep")
            swancli::pnr_sweep(cfg, buf);
        else if (name == "gain-sweep")
            swancli::gain_sweep(cfg, buf);
        else if (name == "op-sweep")
            swancli::op_sweep(cfg, buf);
        else if (name == "placement-dump")
            swancli::placement_dump(cfg, buf);
        else
            ok = swancli::validate(cfg, buf);

        if (o.out_path.empty())
            std::cout << buf.str() << std::flush;
        else
        {
            std::ofstream f(o.out_path, std::ios::binary);
            if (!(f << buf.str()))
                throw swancli::ConfigError("cannot write '" + o.out_path + "'");
        }

        if (!o.plot_path.empty())
        {
            std::ofstream f(o.plot_path, std::ios::binary);
            swancli::write_plot_script(name, cfg, o.out_path.empty() ? "data.csv" : o.out_path, f);
            if (!f)
                throw swancli::ConfigError("cannot write '" + o.plot_path + "'");
        }
        return ok ? kOk : kValidationFailed;
    }
    catch (const swancli::ConfigError &e)
    {
        std::cerr << "swanrel: config error: " << e.what() << "\n";
        return kConfigError;
    }
    catch (const swancli::CommandError &e)
    {
        std::cerr << "swanrel: " << e.what() << "\n";
        return kConfigError;
    }
}
