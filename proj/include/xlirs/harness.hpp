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

#ifndef XLIRS_HARNESS_HPP
#define XLIRS_HARNESS_HPP

#include "xlirs/config.hpp"
#include "xlirs/scenario.hpp"
#include "xlirs/snr_models.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace xlirs::harness
{

// Models selectable from the command line. Some produce two columns (lower/upper).
enum class Model
{
    ExactSum,
    Integral,
    Bounds,
    Boresight,
    Asymptotic,
    UlaIntegral,
    UlaClosed,
    UlaAsymptotic,
    Upw
};

std::string model_name(Model m);             // "exact-sum", "bounds", ...
std::vector<std::string> model_columns(Model m); // "exact_sum", "bounds_lower", "bounds_upper", ...
Model parse_model(const std::string &name);  // throws ParseError
// Comma-separated list; "all" selects every model. Throws ParseError on unknown or empty lists.
std::vector<Model> parse_models(const std::string &list);
std::vector<Model> all_models();

// One output column for one scenario. Without a value the model was skipped and
// `notes` holds the reason.
struct Cell
{
    std::string column;
    std::optional<double> linear;
    std::vector<std::string> notes;
};

struct ModelReport
{
    Model model;
    std::vector<Cell> cells;
};

// Evaluates one model. Precondition failures and quadrature non-convergence become
// skipped cells; nothing throws for an applicable-or-not model.
ModelReport evaluate_model(const Scenario &scenario, Model model, const std::optional<UpwConfig> &upw,
                           int threads = 0);

struct ScenarioReport
{
    std::vector<ModelReport> models;
};

ScenarioReport run_scenario(const ScenarioConfig &config, const std::vector<Model> &models, int threads = 0);
ScenarioReport run_scenario(const std::string &config_path, const std::vector<Model> &models, int threads = 0);
std::string format_report(const ScenarioReport &report, bool linear);

enum class SweepVariable
{
    SurfaceSize, // square UPA, L_y = L_z = L
    UlaLength,   // L_z only
    TxRange      // r_q
};

std::string variable_name(SweepVariable v); // "L", "Lz", "rq"
SweepVariable parse_variable(const std::string &name);

struct SweepSpec
{
    Scenario base;
    SweepVariable variable = SweepVariable::SurfaceSize;
    std::vector<double> grid;
    std::vector<Model> models;
    std::optional<UpwConfig> upw;

    // Throws ValidationError: grid nonempty, positive, strictly increasing; models nonempty.
    void validate() const;
};

struct SweepRow
{
    double sweep_value = 0.0;
    std::int64_t m_y = 0;
    std::int64_t m_z = 0;
    double realized_length_y = 0.0;
    double realized_length_z = 0.0;
    std::vector<std::optional<double>> linear; // one per table column
    std::vector<std::string> diagnostics;
};

struct SweepTable
{
    SweepVariable variable = SweepVariable::SurfaceSize;
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;
};

// Nearest odd element count to length / spacing, ties toward the larger count, at least 1.
std::int64_t nearest_odd_count(double length, double spacing);

// "start:stop:steps" (inclusive, `steps` points; geometric spacing when `log`) or a
// comma-separated list. Throws ParseError.
std::vector<double> parse_grid(const std::string &text, bool log = false);

// Rows are independent and fan out over `threads` workers (0 = worker_threads());
// output order follows the grid and does not depend on the thread count.
SweepTable run_sweep(const SweepSpec &spec, int threads = 0);

// Header `sweep_var,<column>_db...,diagnostics` (`_linear` with `linear`), numbers with
// 10 significant digits, LF endings. Skipped cells are empty.
std::string format_csv(const SweepTable &table, bool linear = false);
void write_csv(const SweepTable &table, const std::string &path, bool linear = false);

// gnuplot script plotting every model column of the CSV against the sweep variable.
std::string plot_script(const SweepTable &table, const std::string &csv_path, bool linear = false);

} // namespace xlirs::harness

#endif
