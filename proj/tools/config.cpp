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

#include "config.hpp"

#include "swan/swan.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace swancli
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

        double to_double(const std::string &key, const std::string &v)
        {
            double x = 0.0;
            const auto *end = v.data() + v.size();
            const auto r = std::from_chars(v.data(), end, x);
            if (r.ec != std::errc() || r.ptr != end || !std::isfinite(x))
                throw ConfigError("invalid number for '" + key + "': '" + v + "'");
            return x;
        }

        std::uint64_t to_u64(const std::string &key, const std::string &v)
        {
            std::uint64_t x = 0;
            const auto *end = v.data() + v.size();
            auto r = std::from_chars(v.data(), end, x);
            if (r.ec == std::errc() && r.ptr == end)
                return x;
            // accept 1e6 style integers
            const double d = to_double(key, v);
            if (d < 0.0 || d != std::floor(d) || d > 1.8e19)
                throw ConfigError("invalid non-negative integer for '" + key + "': '" + v + "'");
            return static_cast<std::uint64_t>(d);
        }

        bool to_bool(const std::string &key, const std::string &v)
        {
            if (v == "1" || v == "true" || v == "on" || v == "yes")
                return true;
            if (v == "0" || v == "false" || v == "off" || v == "no")
                return false;
            throw ConfigError("invalid boolean for '" + key + "': '" + v + "'");
        }

        std::string num(double x)
        {
            // shortest text that reads back to the same double
            char buf[64];
            const auto res = std::to_chars(buf, buf + sizeof buf, x);
            return std::string(buf, res.ptr);
        }
    }

    const char *to_string(Axis axis)
    {
        switch (axis)
        {
        case Axis::segments:
            return "M";
        case Axis::region_x:
            return "Dx";
        case Axis::eps0:
            return "eps0";
        }
        return "?";
    }

    std::vector<double> Range::values() const
    {
        std::vector<double> out;
        if (geometric)
        {
            for (double x = start; x <= stop * (1.0 + 1e-12); x *= step)
                out.push_back(x);
        }
        else
        {
            const auto n = static_cast<long long>(std::floor((stop - start) / step * (1.0 + 1e-12) + 1e-9));
            for (long long i = 0; i <= n; ++i)
                out.push_back(start + static_cast<double>(i) * step);
        }
        return out;
    }

    std::string Range::str() const
    {
        return num(start) + ":" + num(stop) + ":" + (geometric ? "x" : "") + num(step);
    }

    Range Range::parse(const std::string &text)
    {
        const auto a = text.find(':');
        const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
        Range r;
        if (a == std::string::npos)
        {
            r.start = r.stop = to_double("range", trim(text));
            r.step = 1.0;
        }
        else
        {
            r.start = to_double("range", trim(text.substr(0, a)));
            r.stop = to_double("range", trim(text.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1)));
            if (b != std::string::npos)
            {
                std::string s = trim(text.substr(b + 1));
                if (!s.empty() && (s[0] == 'x' || s[0] == '*'))
                {
                    r.geometric = true;
                    s = s.substr(1);
                }
                r.step = to_double("range", s);
            }
        }
        if (r.stop < r.start)
            throw ConfigError("range '" + text + "' must be increasing");
        if (r.geometric ? !(r.step > 1.0) || !(r.start > 0.0) : !(r.step > 0.0))
            throw ConfigError("range '" + text + "' has an invalid step");
        return r;
    }

    double ExperimentConfig::power_w() const { return swan_dbm_to_watt(power_dbm); }
    double ExperimentConfig::noise_w() const { return swan_dbm_to_watt(noise_dbm); }

    void ExperimentConfig::set(const std::string &raw_key, const std::string &raw_value)
    {
        const std::string key = trim(raw_key);
        const std::string v = trim(raw_value);
        if (key == "carrier_hz")
            carrier_hz = to_double(key, v);
        else if (key == "carrier_ghz")
            carrier_hz = to_double(key, v) * 1e9;
        else if (key == "n_eff")
            n_eff = to_double(key, v);
        else if (key == "power_dbm")
            power_dbm = to_double(key, v);
        else if (key == "noise_dbm")
            noise_dbm = to_double(key, v);
        else if (key == "min_spacing_m")
            min_spacing_m = v == "auto" ? -1.0 : to_double(key, v);
        else if (key == "Dx" || key == "region_x")
            region_x = to_double(key, v);
        else if (key == "Dy" || key == "region_y")
            region_y = to_double(key, v);
        else if (key == "d" || key == "height")
            height = to_double(key, v);
        else if (key == "user_x")
            user_x = to_double(key, v);
        else if (key == "user_y")
            user_y = to_double(key, v);
        else if (key == "user_z")
            user_z = to_double(key, v);
        else if (key == "first_feed_x")
            first_feed_x = v == "auto" ? std::optional<double>{} : std::optional<double>{to_double(key, v)};
        else if (key == "eps0")
            eps0 = to_double(key, v);
        else if (key == "mu0")
            mu0 = to_double(key, v);
        else if (key == "M" || key == "segments")
            segments = to_u64(key, v);
        else if (key == "L" || key == "segment_length")
            segment_length = to_double(key, v);
        else if (key == "hold")
        {
            if (v == "M")
                hold = Hold::segments;
            else if (v == "L")
                hold = Hold::segment_length;
            else
                throw ConfigError("hold must be M or L, got '" + v + "'");
        }
        else if (key == "axis")
        {
            if (v == "M")
                axis = Axis::segments;
            else if (v == "Dx")
                axis = Axis::region_x;
            else if (v == "eps0")
                axis = Axis::eps0;
            else
                throw ConfigError("axis must be M, Dx or eps0, got '" + v + "'");
        }
        else if (key == "range")
            range = v == "auto" ? std::optional<Range>{} : std::optional<Range>{Range::parse(v)};
        else if (key == "protocols")
        {
            conventional = ss = sa = false;
            std::stringstream ss_in(v);
            std::string item;
            while (std::getline(ss_in, item, ','))
            {
                item = trim(item);
                if (item == "conventional")
                    conventional = true;
                else if (item == "ss")
                    ss = true;
                else if (item == "sa")
                    sa = true;
                else
                    throw ConfigError("unknown protocol '" + item + "'");
            }
        }
        else if (key == "r0_rule")
        {
            if (v == "fraction")
                r0_rule = R0Rule::fraction;
            else if (v == "absolute")
                r0_rule = R0Rule::absolute;
            else
                throw ConfigError("r0_rule must be fraction or absolute, got '" + v + "'");
        }
        else if (key == "r0_factor")
            r0_factor = to_double(key, v);
        else if (key == "r0")
        {
            r0 = to_double(key, v); // only used with r0_rule = absolute
        }
        else if (key == "trials")
            trials = to_u64(key, v);
        else if (key == "seed")
            seed = to_u64(key, v);
        else if (key == "batch")
            batch = to_u64(key, v);
        else if (key == "threads")
            threads = static_cast<unsigned>(to_u64(key, v));
        else if (key == "mc")
            mc = to_bool(key, v);
        else
            throw ConfigError("unknown config key '" + key + "'");
    }

    void ExperimentConfig::validate() const
    {
        if (!(carrier_hz > 0.0))
            throw ConfigError("carrier_hz must be positive");
        if (!(n_eff >= 1.0))
            throw ConfigError("n_eff must be at least 1");
        if (!(region_x > 0.0) || !(region_y > 0.0) || !(height > 0.0))
            throw ConfigError("Dx, Dy and d must be positive");
        if (!(eps0 >= 0.0) || !(mu0 > 0.0))
            throw ConfigError("eps0 must be non-negative and mu0 positive");
        if (segments == 0)
            throw ConfigError("M must be at least 1");
        if (!(segment_length > 0.0))
            throw ConfigError("L must be positive");
        if (!conventional && !ss && !sa)
            throw ConfigError("protocols must name at least one architecture");
        if (r0_rule == R0Rule::fraction && !(r0_factor >= 0.0))
            throw ConfigError("r0_factor must be non-negative");
        if (r0_rule == R0Rule::absolute && !(r0 >= 0.0))
            throw ConfigError("r0 must be non-negative");
        if (trials == 0 || batch == 0)
            throw ConfigError("trials and batch must be positive");
        if (range && axis == Axis::segments && (range->start < 1.0 || range->start != std::floor(range->start)))
            throw ConfigError("an M range must start at a positive integer");
    }

    std::string ExperimentConfig::dump() const
    {
        std::ostringstream o;
        o << "# RF\n";
        o << "carrier_hz = " << num(carrier_hz) << "\n";
        o << "n_eff = " << num(n_eff) << "\n";
        o << "power_dbm = " << num(power_dbm) << "\n";
        o << "noise_dbm = " << num(noise_dbm) << "\n";
        o << "min_spacing_m = " << (min_spacing_m < 0.0 ? std::string("auto") : num(min_spacing_m)) << "\n";
        o << "# geometry\n";
        o << "Dx = " << num(region_x) << "\n";
        o << "Dy = " << num(region_y) << "\n";
        o << "d = " << num(height) << "\n";
        o << "user_x = " << num(user_x) << "\n";
        o << "user_y = " << num(user_y) << "\n";
        o << "user_z = " << num(user_z) << "\n";
        o << "first_feed_x = " << (first_feed_x ? num(*first_feed_x) : std::string("auto")) << "\n";
        o << "# reliability\n";
        o << "eps0 = " << num(eps0) << "\n";
        o << "mu0 = " << num(mu0) << "\n";
        o << "# waveguide\n";
        o << "M = " << segments << "\n";
        o << "L = " << num(segment_length) << "\n";
        o << "hold = " << (hold == Hold::segments ? "M" : "L") << "\n";
        o << "# sweep\n";
        o << "axis = " << to_string(axis) << "\n";
        o << "range = " << (range ? range->str() : std::string("auto")) << "\n";
        std::string protos;
        for (auto [on, name] : {std::pair{conventional, "conventional"}, {ss, "ss"}, {sa, "sa"}})
            if (on)
                protos += (protos.empty() ? "" : ",") + std::string(name);
        o << "protocols = " << protos << "\n";
        o << "# outage target\n";
        o << "r0_rule = " << (r0_rule == R0Rule::fraction ? "fraction" : "absolute") << "\n";
        o << "r0_factor = " << num(r0_factor) << "\n";
        o << "r0 = " << num(r0) << "\n";
        o << "# Monte Carlo\n";
        o << "trials = " << trials << "\n";
        o << "seed = " << seed << "\n";
        o << "batch = " << batch << "\n";
        o << "mc = " << (mc ? "true" : "false") << "\n";
        return o.str();
    }

    std::uint64_t ExperimentConfig::hash() const
    {
        // FNV-1a, 64 bit
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : dump())
        {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        return h;
    }

    ExperimentConfig parse_config(std::istream &in, ExperimentConfig base)
    {
        std::string line;
        int lineno = 0;
        while (std::getline(in, line))
        {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos)
                line.resize(hash);
            line = trim(line);
            if (line.empty())
                continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
            try
            {
                base.set(line.substr(0, eq), line.substr(eq + 1));
            }
            catch (const ConfigError &e)
            {
                throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
            }
        }
        return base;
    }

    ExperimentConfig load_config(const std::string &path, ExperimentConfig base)
    {
        std::ifstream in(path);
        if (!in)
            throw ConfigError("cannot open config file '" + path + "'");
        try
        {
            return parse_config(in, std::move(base));
        }
        catch (const ConfigError &e)
        {
            throw ConfigError(path + ": " + e.what());
        }
    }
}
