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

#include "xlirs/harness.hpp"
#include "xlirs/channel.hpp"
#include "xlirs/errors.hpp"
#include "xlirs/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

namespace xlirs::harness
{

namespace
{

struct ModelInfo
{
    Model model;
    const char *name;
    std::vector<std::string> columns;
};

const std::vector<ModelInfo> &model_table()
{
    static const std::vector<ModelInfo> table = {
        {Model::ExactSum, "exact-sum", {"exact_sum"}},
        {Model::Integral, "integral", {"integral"}},
        {Model::Bounds, "bounds", {"bounds_lower", "bounds_upper"}},
        {Model::Boresight, "boresight", {"boresight_lower", "boresight_upper"}},
        {Model::Asymptotic, "asymptotic", {"asymptotic"}},
        {Model::UlaIntegral, "ula-integral", {"ula_integral"}},
        {Model::UlaClosed, "ula-closed", {"ula_closed"}},
        {Model::UlaAsymptotic, "ula-asymptotic", {"ula_asymptotic"}},
        {Model::Upw, "upw", {"upw"}},
    };
    return table;
}

const ModelInfo &info(Model m)
{
    for (const auto &i : model_table())
        if (i.model == m)
            return i;
    throw ValidationError("unknown model");
}

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos)
        return {};
    return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

Cell cell_from(const std::string &column, const SnrEstimate &est)
{
    return {column, est.value, est.diagnostics};
}

std::string csv_field(const std::string &text)
{
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string out = "\"";
    for (char c : text)
    {
        if (c == '"')
            out += '"';
        out += c == '\n' ? ' ' : c;
    }
    return out + "\"";
}

} // namespace

std::string model_name(Model m) { return info(m).name; }
std::vector<std::string> model_columns(Model m) { return info(m).columns; }

Model parse_model(const std::string &name)
{
    for (const auto &i : model_table())
        if (name == i.name)
            return i.model;
    throw ParseError("unknown model '" + name + "'");
}

std::vector<Model> all_models()
{
    std::vector<Model> out;
    for (const auto &i : model_table())
        out.push_back(i.model);
    return out;
}

std::vector<Model> parse_models(const std::string &list)
{
    std::vector<Model> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (item.empty())
            continue;
        if (item == "all")
        {
            for (auto m : all_models())
                if (std::find(out.begin(), out.end(), m) == out.end())
                    out.push_back(m);
            continue;
        }
        const Model m = parse_model(item);
        if (std::find(out.begin(), out.end(), m) == out.end())
            out.push_back(m);
    }
    if (out.empty())
        throw ParseError("model list is empty");
    return out;
}

ModelReport evaluate_model(const Scenario &scenario, Model model, const std::optional<UpwConfig> &upw, int threads)
{
    ModelReport report{model, {}};
    const auto columns = model_columns(model);
    try
    {
        switch (model)
        {
        case Model::ExactSum:
            report.cells.push_back(cell_from(columns[0], snr_exact_sum(scenario, threads)));
            break;
        case Model::Integral:
            report.cells.push_back(cell_from(columns[0], snr_integral_upa(scenario)));
            break;
        case Model::Bounds: {
            const auto b = snr_bounds_general(scenario);
            report.cells.push_back(cell_from(columns[0], b.lower));
            report.cells.push_back(cell_from(columns[1], b.upper));
            break;
        }
        case Model::Boresight: {
            const auto r = snr_boresight(scenario);
            if (const auto *b = std::get_if<BoundsPair>(&r))
            {
                report.cells.push_back(cell_from(columns[0], b->lower));
                report.cells.push_back(cell_from(columns[1], b->upper));
            }
            else
            {
                auto est = std::get<SnrEstimate>(r);
                est.diagnostics.push_back("equal ranges: exact closed form, lower = upper");
                report.cells.push_back(cell_from(columns[0], est));
                report.cells.push_back(cell_from(columns[1], est));
            }
            break;
        }
        case Model::Asymptotic:
            report.cells.push_back(cell_from(columns[0], snr_asymptotic_upa(scenario)));
            break;
        case Model::UlaIntegral:
            report.cells.push_back(cell_from(columns[0], snr_ula_integral(scenario)));
            break;
        case Model::UlaClosed:
            report.cells.push_back(cell_from(columns[0], snr_ula_closed(scenario)));
            break;
        case Model::UlaAsymptotic:
            report.cells.push_back(cell_from(columns[0], snr_ula_asymptotic(scenario)));
            break;
        case Model::Upw:
            report.cells.push_back(cell_from(columns[0], snr_upw(scenario, upw)));
            break;
        }
    }
    catch (const Error &e)
    {
        report.cells.clear();
        for (const auto &c : columns)
            report.cells.push_back({c, std::nullopt, {std::string("skipped: ") + e.what()}});
    }
    return report;
}

ScenarioReport run_scenario(const ScenarioConfig &config, const std::vector<Model> &models, int threads)
{
    if (!config.scenario)
        throw ValidationError("config has no scenario");
    if (models.empty())
        throw ValidationError("no models requested");
    ScenarioReport report;
    for (auto m : models)
        report.models.push_back(evaluate_model(*config.scenario, m, config.upw, threads));
    return report;
}

ScenarioReport run_scenario(const std::string &config_path, const std::vector<Model> &models, int threads)
{
    return run_scenario(load_config(config_path), models, threads);
}

std::string format_report(const ScenarioReport &report, bool linear)
{
    std::ostringstream out;
    for (const auto &m : report.models)
        for (const auto &c : m.cells)
        {
            char line[160];
            if (c.linear)
                std::snprintf(line, sizeof line, "%-16s %18.10g%s\n", c.column.c_str(),
                              linear ? *c.linear : to_db(*c.linear), linear ? "" : " dB");
            else
                std::snprintf(line, sizeof line, "%-16s %18s\n", c.column.c_str(), "-");
            out << line;
            for (const auto &n : c.notes)
                out << "    " << n << "\n";
        }
    return out.str();
}

std::string variable_name(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::SurfaceSize: return "L";
    case SweepVariable::UlaLength: return "Lz";
    case SweepVariable::TxRange: return "rq";
    }
    return "?";
}

SweepVariable parse_variable(const std::string &name)
{
    if (name == "L")
        return SweepVariable::SurfaceSize;
    if (name == "Lz")
        return SweepVariable::UlaLength;
    if (name == "rq")
        return SweepVariable::TxRange;
    throw ParseError("unknown sweep variable '" + name + "' (expected L, Lz or rq)");
}

void SweepSpec::validate() const
{
    if (grid.empty())
        throw ValidationError("sweep grid is empty");
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
        if (!(std::isfinite(grid[i]) && grid[i] > 0.0))
            throw ValidationError("sweep grid values must be finite and positive");
        if (i > 0 && !(grid[i] > grid[i - 1]))
            throw ValidationError("sweep grid must be strictly increasing");
    }
    if (models.empty())
        throw ValidationError("sweep needs at least one model");
}

std::int64_t nearest_odd_count(double length, double spacing)
{
    if (!(length > 0.0 && spacing > 0.0) || !std::isfinite(length / spacing))
        throw ValidationError("length and spacing must be positive");
    const double x = length / spacing;
    double lo = std::floor(x);
    if (std::fmod(lo, 2.0) == 0.0)
        lo -= 1.0;
    const double hi = lo + 2.0;
    // Equal distances up to rounding count as a tie.
    const double dlo = x - lo, dhi = hi - x;
    const double pick = dlo < dhi - 1e-9 ? lo : hi;
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(pick));
}

std::vector<double> parse_grid(const std::string &text_in, bool log)
{
    const std::string text = trim(text_in);
    if (text.empty())
        throw ParseError("empty grid");
    std::vector<double> grid;
    if (text.find(':') != std::string::npos)
    {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string p;
        while (std::getline(ss, p, ':'))
            parts.push_back(trim(p));
        if (parts.size() != 3)
            throw ParseError("grid range must be start:stop:steps, got '" + text + "'");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        std::size_t used = 0;
        long steps = 0;
        try
        {
            steps = std::stol(parts[2], &used);
        }
        catch (...)
        {
            used = 0;
        }
        if (used != parts[2].size() || steps < 1)
            throw ParseError("grid step count must be a positive integer, got '" + parts[2] + "'");
        if (steps == 1)
            return {start};
        if (log && !(start > 0.0 && stop > 0.0))
            throw ParseError("log grid needs positive end points");
        for (long i = 0; i < steps; ++i)
        {
            const double t = static_cast<double>(i) / static_cast<double>(steps - 1);
            grid.push_back(log ? start * std::pow(stop / start, t) : start + (stop - start) * t);
        }
        grid.back() = stop;
        return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!trim(item).empty())
            grid.push_back(parse_number(item));
    if (grid.empty())
        throw ParseError("empty grid");
    return grid;
}

SweepTable run_sweep(const SweepSpec &spec, int threads)
{
    spec.validate();
    SweepTable table;
    table.variable = spec.variable;
    for (auto m : spec.models)
        for (const auto &c : model_columns(m))
            table.columns.push_back(c);
    table.rows.resize(spec.grid.size());

    const int workers = worker_threads(threads);
    const long n = static_cast<long>(spec.grid.size());

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers) if (workers > 1 && n > 1)
    for (long i = 0; i < n; ++i)
    {
        auto &row = table.rows[static_cast<std::size_t>(i)];
        const double v = spec.grid[static_cast<std::size_t>(i)];
        row.sweep_value = v;
        row.linear.assign(table.columns.size(), std::nullopt);
        try
        {
            const auto &g = spec.base.geometry();
            Scenario s = spec.base;
            switch (spec.variable)
            {
            case SweepVariable::SurfaceSize: {
                const auto m = nearest_odd_count(v, g.spacing());
                s = s.with_geometry(g.with_counts(m, m));
                break;
            }
            case SweepVariable::UlaLength:
                s = s.with_geometry(g.with_counts(g.m_y(), nearest_odd_count(v, g.spacing())));
                break;
            case SweepVariable::TxRange:
                s = s.with_tx(s.tx().with_range(v));
                break;
            }
            const auto &rg = s.geometry();
            row.m_y = rg.m_y();
            row.m_z = rg.m_z();
            row.realized_length_y = rg.length_y();
            row.realized_length_z = rg.length_z();
            row.diagnostics.push_back("realized my=" + std::to_string(rg.m_y()) + " mz=" + std::to_string(rg.m_z()) +
                                      " Ly=" + num(rg.length_y()) + " Lz=" + num(rg.length_z()));
            std::size_t col = 0;
            for (auto m : spec.models)
            {
                // Single-threaded inside a row; rows already run in parallel.
                const auto rep = evaluate_model(s, m, spec.upw, 1);
                for (const auto &c : rep.cells)
                {
                    row.linear[col++] = c.linear;
                    for (const auto &note : c.notes)
                        row.diagnostics.push_back(c.column + ": " + note);
                }
            }
        }
        catch (const std::exception &e)
        {
            row.diagnostics.push_back(std::string("row failed: ") + e.what());
        }
    }
    return table;
}

std::string format_csv(const SweepTable &table, bool linear)
{
    std::string out = "sweep_var";
    for (const auto &c : table.columns)
        out += "," + c + (linear ? "_linear" : "_db");
    out += ",diagnostics\n";
    for (const auto &row : table.rows)
    {
        out += num(row.sweep_value);
        for (const auto &v : row.linear)
        {
            out += ',';
            if (v && *v > 0.0 && std::isfinite(*v))
                out += num(linear ? *v : to_db(*v));
        }
        std::string diag;
        for (std::size_t i = 0; i < row.diagnostics.size(); ++i)
            diag += (i ? "; " : "") + row.diagnostics[i];
        out += "," + csv_field(diag) + "\n";
    }
    return out;
}

void write_csv(const SweepTable &table, const std::string &path, bool linear)
{
    if (table.columns.empty())
        throw ValidationError("table has no model columns");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << format_csv(table, linear);
    out.flush();
    if (!out)
        throw IoError("write to '" + path + "' failed");
}

std::string plot_script(const SweepTable &table, const std::string &csv_path, bool linear)
{
    std::ostringstream gp;
    gp << "# gnuplot script for " << csv_path << "\n";
    gp << "set datafile separator ','\n";
    gp << "set key left top\n";
    gp << "set grid\nset termoption noenhanced\n";
    switch (table.variable)
    {
    case SweepVariable::SurfaceSize:
        gp << "set logscale x\nset xlabel 'IRS size L (m)'\n";
        break;
    case SweepVariable::UlaLength:
        gp << "set logscale x\nset xlabel 'IRS size L_z (m)'\n";
        break;
    case SweepVariable::TxRange:
        gp << "set xlabel 'link distance r_q (m)'\n";
        break;
    }
    if (linear)
        gp << "set logscale y\nset ylabel 'SNR'\n";
    else
        gp << "set ylabel 'SNR (dB)'\n";
    gp << "plot ";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
    {
        if (i)
            gp << ", \\\n     ";
        gp << "'" << csv_path << "' using 1:" << (i + 2) << " every ::1 with linespoints title '"
           << table.columns[i] << "'";
    }
    gp << "\n";
    return gp.str();
}

} // namespace xlirs::harness
