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

#include "xlirs/config.hpp"
#include "xlirs/errors.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

namespace xlirs::harness
{

namespace
{

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_plain(const std::string &text)
{
    std::size_t used = 0;
    double v = 0.0;
    try
    {
        v = std::stod(text, &used);
    }
    catch (...)
    {
        throw ParseError("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v))
        throw ParseError("not a number: '" + text + "'");
    return v;
}

const std::set<std::string> kRequired = {"wavelength_m", "spacing_over_wavelength", "element_area_over_d2", "my",
                                         "mz",           "tx.r_m",                  "tx.theta_rad",
                                         "tx.phi_rad",   "rx.r_m",                  "rx.theta_rad",
                                         "rx.phi_rad",   "pbar_db"};
const std::set<std::string> kOptional = {"upw.beta0_squared", "sweep.var", "sweep.grid", "sweep.models"};
const std::set<std::string> kPrefixed = {"tx", "rx", "upw", "sweep"};
const std::set<std::string> kPlain = {"geometry", "power"};

std::int64_t parse_count(const std::string &where, const std::string &key, const std::string &text, int line)
{
    std::size_t used = 0;
    long long v = 0;
    try
    {
        v = std::stoll(text, &used);
    }
    catch (...)
    {
        throw ParseError(where + "key '" + key + "' needs an integer, got '" + text + "'", line);
    }
    if (used != text.size())
        throw ParseError(where + "key '" + key + "' needs an integer, got '" + text + "'", line);
    return v;
}

} // namespace

double parse_number(const std::string &raw)
{
    const std::string text = trim(raw);
    const auto at = text.find("pi");
    if (at == std::string::npos)
        return parse_plain(text);

    // [coef*]pi[/den] with an optional leading minus
    std::string head = trim(text.substr(0, at));
    std::string tail = trim(text.substr(at + 2));
    double coef = 1.0;
    if (!head.empty())
    {
        if (head == "-")
            coef = -1.0;
        else if (head.back() == '*')
            coef = parse_plain(trim(head.substr(0, head.size() - 1)));
        else
            throw ParseError("not a number: '" + text + "'");
    }
    double den = 1.0;
    if (!tail.empty())
    {
        if (tail.front() != '/')
            throw ParseError("not a number: '" + text + "'");
        den = parse_plain(trim(tail.substr(1)));
        if (den == 0.0)
            throw ParseError("division by zero in '" + text + "'");
    }
    return coef * std::numbers::pi / den;
}

ScenarioConfig parse_config(std::istream &in, const std::string &source)
{
    std::map<std::string, std::pair<std::string, int>> values;
    std::string section;
    std::string raw;
    int line_no = 0;
    auto where = [&](int line) { return source + ":" + std::to_string(line) + ": "; };

    while (std::getline(in, raw))
    {
        ++line_no;
        std::string line = raw;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[')
        {
            if (line.back() != ']')
                throw ParseError(where(line_no) + "unterminated section header", line_no);
            section = trim(line.substr(1, line.size() - 2));
            if (!kPrefixed.count(section) && !kPlain.count(section))
                throw ParseError(where(line_no) + "unknown section [" + section + "]", line_no);
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError(where(line_no) + "expected 'key = value'", line_no);
        std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (kPrefixed.count(section) && key.rfind(section + ".", 0) != 0)
            key = section + "." + key;
        if (!kRequired.count(key) && !kOptional.count(key))
            throw ParseError(where(line_no) + "unknown key '" + key + "'", line_no);
        if (value.empty())
            throw ParseError(where(line_no) + "key '" + key + "' has no value", line_no);
        if (values.count(key))
            throw ParseError(where(line_no) + "duplicate key '" + key + "' (first set on line " +
                                 std::to_string(values[key].second) + ")",
                             line_no);
        values[key] = {value, line_no};
    }

    for (const auto &key : kRequired)
        if (!values.count(key))
            throw ParseError(source + ": missing key '" + key + "'");

    auto number = [&](const std::string &key) {
        const auto &[text, line] = values.at(key);
        try
        {
            return parse_number(text);
        }
        catch (const ParseError &e)
        {
            throw ParseError(where(line) + "key '" + key + "': " + e.what(), line);
        }
    };
    auto count = [&](const std::string &key) {
        const auto &[text, line] = values.at(key);
        return parse_count(where(line), key, text, line);
    };

    ScenarioConfig cfg;
    const auto geom = IrsGeometry::from_ratios(count("my"), count("mz"), number("wavelength_m"),
                                               number("spacing_over_wavelength"), number("element_area_over_d2"));
    auto node = [&](const std::string &prefix) {
        try
        {
            return NodePosition(number(prefix + ".r_m"), number(prefix + ".theta_rad"), number(prefix + ".phi_rad"));
        }
        catch (const ValidationError &e)
        {
            throw ValidationError(prefix + ": " + e.what());
        }
    };
    cfg.scenario.emplace(geom, node("tx"), node("rx"), from_db(number("pbar_db")));

    if (values.count("upw.beta0_squared"))
    {
        const auto &text = values["upw.beta0_squared"].first;
        if (text == "free_space")
            cfg.upw = UpwConfig::free_space_reference(geom.wavelength());
        else if (text == "far_field")
            cfg.upw = UpwConfig::far_field_default(*cfg.scenario);
        else
            cfg.upw = UpwConfig{number("upw.beta0_squared")};
    }
    if (values.count("sweep.var"))
        cfg.sweep_var = values["sweep.var"].first;
    if (values.count("sweep.grid"))
        cfg.sweep_grid = values["sweep.grid"].first;
    if (values.count("sweep.models"))
        cfg.models = values["sweep.models"].first;
    return cfg;
}

ScenarioConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open config '" + path + "'");
    return parse_config(in, path);
}

} // namespace xlirs::harness
