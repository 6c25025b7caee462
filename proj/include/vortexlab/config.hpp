// Experiment configuration: a strict subset of TOML (sections, scalars,
// flat numeric arrays, # comments).  Every key that the runner does not
// consume is an error, and validation happens before any compute starts.
#ifndef VORTEXLAB_CONFIG_HPP
#define VORTEXLAB_CONFIG_HPP

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "vortexlab/util.hpp"

namespace vortexlab {

struct ConfigValue {
    std::variant<double, bool, std::string, std::vector<double>> v;
};

class Config {
  public:
    static Config parse(const std::string& text) {
        Config cfg;
        std::istringstream in(text);
        std::string line, section;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::string s = strip_comment(line);
            s = trim(s);
            if (s.empty()) continue;
            if (s.front() == '[') {
                if (s.back() != ']')
                    throw ValidationError("config line " + std::to_string(lineno) +
                                          ": malformed section header");
                section = trim(s.substr(1, s.size() - 2));
                if (section.empty())
                    throw ValidationError("config line " + std::to_string(lineno) +
                                          ": empty section name");
                continue;
            }
            const auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": expected key = value");
            const std::string key = trim(s.substr(0, eq));
            const std::string val = trim(s.substr(eq + 1));
            if (key.empty() || val.empty())
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": expected key = value");
            cfg.values_[section + "." + key] = parse_value(val, lineno);
        }
        return cfg;
    }

    bool has(const std::string& dotted) const { return values_.count(dotted) > 0; }

    double get_double(const std::string& dotted) const {
        const auto& cv = fetch(dotted);
        if (const double* d = std::get_if<double>(&cv.v)) return *d;
        throw ValidationError("config: " + dotted + " must be a number");
    }
    double get_double(const std::string& dotted, double fallback) const {
        return has(dotted) ? get_double(dotted) : fallback;
    }
    int get_int(const std::string& dotted) const {
        const double d = get_double(dotted);
        if (d != std::floor(d))
            throw ValidationError("config: " + dotted + " must be an integer");
        return int(d);
    }
    int get_int(const std::string& dotted, int fallback) const {
        return has(dotted) ? get_int(dotted) : fallback;
    }
    bool get_bool(const std::string& dotted, bool fallback) const {
        if (!has(dotted)) return fallback;
        const auto& cv = fetch(dotted);
        if (const bool* b = std::get_if<bool>(&cv.v)) return *b;
        throw ValidationError("config: " + dotted + " must be a boolean");
    }
    std::string get_string(const std::string& dotted) const {
        const auto& cv = fetch(dotted);
        if (const std::string* s = std::get_if<std::string>(&cv.v)) return *s;
        throw ValidationError("config: " + dotted + " must be a string");
    }
    std::string get_string(const std::string& dotted, const std::string& fallback) const {
        return has(dotted) ? get_string(dotted) : fallback;
    }
    std::vector<double> get_array(const std::string& dotted) const {
        const auto& cv = fetch(dotted);
        if (const auto* a = std::get_if<std::vector<double>>(&cv.v)) return *a;
        if (const double* d = std::get_if<double>(&cv.v)) return {*d};
        throw ValidationError("config: " + dotted + " must be an array of numbers");
    }
    std::vector<double> get_array(const std::string& dotted,
                                  const std::vector<double>& fallback) const {
        return has(dotted) ? get_array(dotted) : fallback;
    }

    /// Throws if any parsed key was never consumed by a getter.
    void reject_unconsumed() const {
        std::string unknown;
        for (const auto& [k, v] : values_)
            if (!consumed_.count(k)) unknown += (unknown.empty() ? "" : ", ") + k;
        if (!unknown.empty())
            throw ValidationError("config: unknown keys: " + unknown);
    }

    /// Echo of all parsed keys (deterministic order).
    std::vector<std::pair<std::string, std::string>> echo() const {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [k, cv] : values_) {
            std::string s;
            if (const double* d = std::get_if<double>(&cv.v)) {
                char tmp[40];
                std::snprintf(tmp, sizeof tmp, "%.17g", *d);
                s = tmp;
            } else if (const bool* b = std::get_if<bool>(&cv.v)) {
                s = *b ? "true" : "false";
            } else if (const std::string* str = std::get_if<std::string>(&cv.v)) {
                s = *str;
            } else if (const auto* a = std::get_if<std::vector<double>>(&cv.v)) {
                s = "[";
                for (std::size_t i = 0; i < a->size(); ++i) {
                    char tmp[40];
                    std::snprintf(tmp, sizeof tmp, "%.17g", (*a)[i]);
                    s += std::string(i ? "," : "") + tmp;
                }
                s += "]";
            }
            out.emplace_back(k, s);
        }
        return out;
    }

  private:
    const ConfigValue& fetch(const std::string& dotted) const {
        auto it = values_.find(dotted);
        if (it == values_.end())
            throw ValidationError("config: missing required key " + dotted);
        consumed_.insert(dotted);
        return it->second;
    }

    static std::string trim(const std::string& s) {
        std::size_t a = s.find_first_not_of(" \t\r");
        std::size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? "" : s.substr(a, b - a + 1);
    }

    static std::string strip_comment(const std::string& s) {
        bool in_str = false;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '"') in_str = !in_str;
            if (s[i] == '#' && !in_str) return s.substr(0, i);
        }
        return s;
    }

    static ConfigValue parse_value(const std::string& val, int lineno) {
        ConfigValue cv;
        if (val.front() == '"') {
            if (val.size() < 2 || val.back() != '"')
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unterminated string");
            cv.v = val.substr(1, val.size() - 2);
            return cv;
        }
        if (val == "true" || val == "false") {
            cv.v = (val == "true");
            return cv;
        }
        if (val.front() == '[') {
            if (val.back() != ']')
                throw ValidationError("config line " + std::to_string(lineno) +
                                      ": unterminated array");
            std::vector<double> arr;
            std::string inner = val.substr(1, val.size() - 2);
            std::istringstream items(inner);
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                arr.push_back(parse_number(item, lineno));
            }
            cv.v = std::move(arr);
            return cv;
        }
        cv.v = parse_number(val, lineno);
        return cv;
    }

    static double parse_number(const std::string& s, int lineno) {
        std::size_t pos = 0;
        double d;
        try {
            d = std::stod(s, &pos);
        } catch (const std::exception&) {
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": not a number: " + s);
        }
        if (pos != s.size())
            throw ValidationError("config line " + std::to_string(lineno) +
                                  ": trailing characters in number: " + s);
        return d;
    }

    std::map<std::string, ConfigValue> values_;
    mutable std::set<std::string> consumed_;
};

}  // namespace vortexlab

#endif
