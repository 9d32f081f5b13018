// SPDX-License-Identifier: Apache-2.0
//
// xlirs: near-field SNR analysis for extremely large intelligent reflecting surfaces
// Copyright (C) 2026 The xlirs authors
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

#include "xlirs/errors.hpp"
#include "xlirs/harness.hpp"
#include "xlirs/parallel.hpp"
#include "xlirs/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace
{

using namespace xlirs;
using namespace xlirs::harness;

enum Exit
{
    Ok = 0,
    Usage = 1,
    Parse = 2,
    Invalid = 3,
    NoConvergence = 4,
    Io = 5,
    ChecksFailed = 6
};

int exit_code(const Error &e)
{
    switch (e.kind())
    {
    case ErrorKind::parse:
        return Parse;
    case ErrorKind::validation:
    case ErrorKind::domain:
        return Invalid;
    case ErrorKind::convergence:
        return NoConvergence;
    case ErrorKind::io:
        return Io;
    }
    return Usage;
}

std::string first_nonempty(const std::string &a, const std::string &b) { return a.empty() ? b : a; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Near-field SNR models for extremely large intelligent reflecting surfaces"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads (0 = XLIRS_THREADS or all cores)")->check(CLI::NonNegativeNumber);

    auto *snr = app.add_subcommand("snr", "Evaluate models for one scenario");
    std::string snr_config, snr_models;
    bool snr_linear = false;
    snr->add_option("config", snr_config, "Scenario file")->required();
    snr->add_option("--models", snr_models, "Comma-separated model list or 'all'");
    snr->add_flag("--linear", snr_linear, "Report linear SNR instead of dB");

    auto *sweep = app.add_subcommand("sweep", "Sweep one geometric parameter and write CSV");
    std::string sweep_config, sweep_var, sweep_grid, sweep_out, sweep_models;
    bool emit_plot = false, sweep_log = false, sweep_linear = false;
    sweep->add_option("config", sweep_config, "Scenario file")->required();
    sweep->add_option("--var", sweep_var, "Sweep variable: L, Lz or rq");
    sweep->add_option("--grid", sweep_grid, "start:stop:steps or comma-separated list");
    sweep->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep->add_option("--models", sweep_models, "Comma-separated model list or 'all'");
    sweep->add_flag("--log", sweep_log, "Geometric spacing for start:stop:steps grids");
    sweep->add_flag("--linear", sweep_linear, "Write linear SNR columns");
    sweep->add_flag("--emit-plotscript", emit_plot, "Write <out>.gp for gnuplot");

    auto *validate = app.add_subcommand("validate", "Run the cross-model validation suite");
    std::vector<std::string> tags;
    double beta0_scale = 1.0;
    validate->add_option("--tags", tags, "Restrict to these suites")->delimiter(',');
    validate->add_option("--beta0-scale", beta0_scale, "Scale beta0^2 in the plane-wave check")
        ->check(CLI::PositiveNumber);

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? Ok : Usage;
    }

    try
    {
        if (*snr)
        {
            const auto cfg = load_config(snr_config);
            const auto models = parse_models(first_nonempty(snr_models, first_nonempty(cfg.models, "all")));
            std::cout << format_report(run_scenario(cfg, models, threads), snr_linear);
        }
        else if (*sweep)
        {
            const auto cfg = load_config(sweep_config);
            const std::string var = first_nonempty(sweep_var, cfg.sweep_var);
            const std::string grid = first_nonempty(sweep_grid, cfg.sweep_grid);
            if (var.empty())
                throw ParseError("sweep variable missing: pass --var or set sweep.var");
            if (grid.empty())
                throw ParseError("sweep grid missing: pass --grid or set sweep.grid");
            SweepSpec spec{*cfg.scenario, parse_variable(var), parse_grid(grid, sweep_log),
                           parse_models(first_nonempty(sweep_models, first_nonempty(cfg.models, "all"))), cfg.upw};
            const auto table = run_sweep(spec, threads);
            write_csv(table, sweep_out, sweep_linear);
            std::cerr << "wrote " << table.rows.size() << " rows to " << sweep_out << "\n";
            if (emit_plot)
            {
                const std::string gp = sweep_out + ".gp";
                std::ofstream os(gp, std::ios::binary);
                os << plot_script(table, sweep_out, sweep_linear);
                if (!os)
                    throw IoError("cannot write plot script '" + gp + "'");
                std::cerr << "wrote " << gp << "\n";
            }
        }
        else if (*validate)
        {
            ValidationOptions opt{tags, beta0_scale, threads};
            const auto checks = run_validation(opt);
            std::cout << format_checks(checks);
            for (const auto &c : checks)
                if (!c.passed)
                    return ChecksFailed;
        }
    }
    catch (const Error &e)
    {
        std::cerr << "xlirs: " << e.what() << "\n";
        return exit_code(e);
    }
    catch (const std::exception &e)
    {
        std::cerr << "xlirs: " << e.what() << "\n";
        return Usage;
    }
    return Ok;
}
