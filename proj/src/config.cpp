// SPDX-License-Identifier: Apache-2.0
//
// eelm: link-level simulator and ELM-based channel estimator for RIS-assisted OFDM
// Copyright (C) 2026 the eelm authors
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

#include "eelm/config.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace eelm {

std::string to_string(Estimator e)
{
    switch (e)
    {
    case Estimator::LsOnly: return "ls_only";
    case Estimator::Eelm: return "eelm";
    case Estimator::ElmNoStd: return "elm_no_std";
    }
    return "?";
}

Estimator estimator_from_string(const std::string &s)
{
    if (s == "ls_only") return Estimator::LsOnly;
    if (s == "eelm") return Estimator::Eelm;
    if (s == "elm_no_std") return Estimator::ElmNoStd;
    throw std::invalid_argument("unknown estimator: " + s);
}

static std::string trim(const std::string &s)
{
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

static std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (!item.empty())
            out.push_back(item);
    }
    return out;
}

std::vector<double> parse_double_list(const std::string &s)
{
    std::vector<double> out;
    for (const auto &item : split_list(s))
    {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad number in list: " + item);
        out.push_back(v);
    }
    return out;
}

std::vector<Estimator> parse_estimator_list(const std::string &s)
{
    std::vector<Estimator> out;
    for (const auto &item : split_list(s))
        out.push_back(estimator_from_string(item));
    if (out.empty())
        throw std::invalid_argument("estimator list is empty");
    return out;
}

static bool parse_bool(const std::string &v)
{
    if (v == "true" || v == "on" || v == "1" || v == "yes")
        return true;
    if (v == "false" || v == "off" || v == "0" || v == "no")
        return false;
    throw std::invalid_argument("bad boolean: " + v);
}

static int parse_int(const std::string &v)
{
    size_t used = 0;
    int out = std::stoi(v, &used);
    if (used != v.size())
        throw std::invalid_argument("bad integer: " + v);
    return out;
}

static double parse_double(const std::string &v)
{
    size_t used = 0;
    double out = std::stod(v, &used);
    if (used != v.size())
        throw std::invalid_argument("bad number: " + v);
    return out;
}

static uint64_t parse_u64(const std::string &v)
{
    size_t used = 0;
    unsigned long long out = std::stoull(v, &used);
    if (used != v.size())
        throw std::invalid_argument("bad unsigned integer: " + v);
    return out;
}

void apply_config_entry(SweepConfig &cfg, const std::string &key, const std::string &value)
{
    if (key == "n") cfg.n_subcarriers = parse_int(value);
    else if (key == "paths") cfg.n_paths = parse_int(value);
    else if (key == "cp") cfg.cp_len = parse_int(value);
    else if (key == "subsurfaces") cfg.n_subsurfaces = parse_int(value);
    else if (key == "snr") cfg.snr_grid_db = parse_double_list(value);
    else if (key == "evm") cfg.evm_target = parse_double(value);
    else if (key == "hpa") cfg.hpa_enabled = parse_bool(value);
    else if (key == "noiseless") cfg.noiseless = parse_bool(value);
    else if (key == "trials") cfg.n_trials = parse_int(value);
    else if (key == "train_samples") cfg.n_train = parse_int(value);
    else if (key == "seed") cfg.seed = parse_u64(value);
    else if (key == "estimators") cfg.estimators = parse_estimator_list(value);
    else if (key == "k_factor") cfg.k_factor = parse_double(value);
    else if (key == "pdp_decay") cfg.pdp_decay = parse_double(value);
    else if (key == "zc_root") cfg.zc_root = parse_int(value);
    else if (key == "hidden") cfg.hidden_size = parse_int(value);
    else if (key == "activation") cfg.activation = activation_from_string(value);
    else if (key == "std_scope") cfg.std_scope = std_scope_from_string(value);
    else if (key == "output_scale") cfg.output_scale = output_scale_from_string(value);
    else if (key == "ridge") cfg.ridge = parse_double(value);
    else if (key == "train_snr_min") cfg.train_snr_min_db = parse_double(value);
    else if (key == "train_snr_max") cfg.train_snr_max_db = parse_double(value);
    else if (key == "threads") cfg.threads = parse_int(value);
    else
        throw std::invalid_argument("unknown config key: " + key);
}

SweepConfig parse_config_file(const std::string &path)
{
    std::ifstream f(path);
    if (!f)
        throw std::runtime_error("cannot open config file: " + path);

    SweepConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line))
    {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                        ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try
        {
            apply_config_entry(cfg, key, value);
        }
        catch (const std::exception &e)
        {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    cfg.validate();
    return cfg;
}

void SweepConfig::validate() const
{
    if (n_subcarriers < 2)
        throw std::invalid_argument("config: n must be >= 2");
    if (n_paths < 1)
        throw std::invalid_argument("config: paths must be >= 1");
    if (n_paths > n_subcarriers)
        throw std::invalid_argument("config: paths must not exceed n");
    if (cp_len < 0 || cp_len >= n_subcarriers)
        throw std::invalid_argument("config: cp must satisfy 0 <= cp < n");
    if (n_subsurfaces < 1)
        throw std::invalid_argument("config: subsurfaces must be >= 1");
    if (evm_target <= 0.0 || evm_target >= 100.0)
        throw std::invalid_argument("config: evm must lie in (0, 100)");
    if (n_trials < 0 || n_train < 0)
        throw std::invalid_argument("config: trials and train_samples must be non-negative");
    if (zc_root < 1 || zc_root >= n_subcarriers)
        throw std::invalid_argument("config: zc_root must lie in [1, n)");
    if (hidden_size < 1)
        throw std::invalid_argument("config: hidden must be >= 1");
    if (ridge < 0.0)
        throw std::invalid_argument("config: ridge must be non-negative");
    if (train_snr_max_db < train_snr_min_db)
        throw std::invalid_argument("config: train_snr_max below train_snr_min");
    if (estimators.empty())
        throw std::invalid_argument("config: at least one estimator required");
    if (k_factor < 0.0 || pdp_decay < 0.0)
        throw std::invalid_argument("config: k_factor and pdp_decay must be non-negative");
}

ElmOptions SweepConfig::elm_options(Estimator which) const
{
    ElmOptions opt;
    opt.hidden_size = hidden_size;
    opt.activation = activation;
    opt.std_scope = which == Estimator::ElmNoStd ? StdScope::Off : std_scope;
    opt.output_scale = output_scale;
    opt.ridge = ridge;
    return opt;
}

static std::string join_doubles(const std::vector<double> &v)
{
    std::string out;
    char buf[64];
    for (size_t i = 0; i < v.size(); i++)
    {
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        if (i)
            out += ",";
        out += buf;
    }
    return out;
}

std::string config_to_string(const SweepConfig &cfg)
{
    std::ostringstream os;
    char buf[64];
    auto num = [&](double v) {
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    os << "n = " << cfg.n_subcarriers << "\n";
    os << "paths = " << cfg.n_paths << "\n";
    os << "cp = " << cfg.cp_len << "\n";
    os << "subsurfaces = " << cfg.n_subsurfaces << "\n";
    os << "snr = " << join_doubles(cfg.snr_grid_db) << "\n";
    os << "evm = " << num(cfg.evm_target) << "\n";
    os << "hpa = " << (cfg.hpa_enabled ? "on" : "off") << "\n";
    os << "noiseless = " << (cfg.noiseless ? "true" : "false") << "\n";
    os << "trials = " << cfg.n_trials << "\n";
    os << "train_samples = " << cfg.n_train << "\n";
    os << "seed = " << cfg.seed << "\n";
    os << "estimators = ";
    for (size_t i = 0; i < cfg.estimators.size(); i++)
        os << (i ? "," : "") << to_string(cfg.estimators[i]);
    os << "\n";
    os << "k_factor = " << num(cfg.k_factor) << "\n";
    os << "pdp_decay = " << num(cfg.pdp_decay) << "\n";
    os << "zc_root = " << cfg.zc_root << "\n";
    os << "hidden = " << cfg.hidden_size << "\n";
    os << "activation = " << to_string(cfg.activation) << "\n";
    os << "std_scope = " << to_string(cfg.std_scope) << "\n";
    os << "output_scale = " << to_string(cfg.output_scale) << "\n";
    os << "ridge = " << num(cfg.ridge) << "\n";
    os << "train_snr_min = " << num(cfg.train_snr_min_db) << "\n";
    os << "train_snr_max = " << num(cfg.train_snr_max_db) << "\n";
    os << "threads = " << cfg.threads << "\n";
    return os.str();
}

} // namespace eelm
