// sweep.cpp: Configuration parsing and the eigs / sweep / optline / steady runners

#include "tlsflow/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "tlsflow/bath.hpp"
#include "tlsflow/flows.hpp"
#include "tlsflow/moments.hpp"
#include "tlsflow/parallel.hpp"
#include "tlsflow/spectra.hpp"
#include "tlsflow/system.hpp"

namespace tlsflow::sweep {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) parts.push_back(trim(cur));
    if (!s.empty() && s.back() == sep) parts.emplace_back();
    return parts;
}

double parse_double(const std::string& key, const std::string& text) {
    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not a number");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& text) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ConfigError("config key '" + key + "': '" + text + "' is not an integer");
    }
    return v;
}

double positive(const std::string& key, double v) {
    if (!(v > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
    return v;
}

void require_positive(const std::string& key, const Axis& a) {
    for (double v : a.values)
        if (!(v > 0.0)) throw ConfigError("config key '" + key + "' must be positive");
}

const char* flag(bool b) { return b ? "1" : "0"; }

bath::ReservoirSpec bath_for(const SweepConfig& cfg, int j, double c1_value) {
    return j == 0 ? bath::ReservoirSpec{cfg.T1, c1_value, cfg.n_exp}
                  : bath::ReservoirSpec{cfg.T2, cfg.c2_for(c1_value), cfg.n_exp};
}

void write_output_header(std::ostream& out, const char* header) { out << header << '\n'; }

}  // namespace

double Axis::min() const { return *std::min_element(values.begin(), values.end()); }
double Axis::max() const { return *std::max_element(values.begin(), values.end()); }

Axis parse_axis(const std::string& key, const std::string& text) {
    Axis a;
    if (text.find(':') == std::string::npos) {
        a.values = {parse_double(key, text)};
        return a;
    }
    const auto parts = split(text, ':');
    if (parts.size() != 4) throw ConfigError("config key '" + key + "': grid must be min:max:count:log|lin");
    const double lo = parse_double(key, parts[0]);
    const double hi = parse_double(key, parts[1]);
    const int count = parse_int(key, parts[2]);
    const std::string& scale = parts[3];
    if (scale != "log" && scale != "lin") throw ConfigError("config key '" + key + "': grid scale must be log or lin");
    if (count < 2) throw ConfigError("config key '" + key + "': grid needs at least 2 points");
    if (!(lo < hi)) throw ConfigError("config key '" + key + "': grid bounds must satisfy min < max");
    if (scale == "log" && !(lo > 0.0)) throw ConfigError("config key '" + key + "': log grid needs min > 0");

    a.is_grid = true;
    a.values.resize(count);
    for (int k = 0; k < count; ++k) {
        const double t = static_cast<double>(k) / (count - 1);
        a.values[k] = scale == "log" ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))) : lo + t * (hi - lo);
    }
    a.values.front() = lo;
    a.values.back() = hi;
    return a;
}

std::map<std::string, std::string> parse_key_values(const std::string& text) {
    std::map<std::string, std::string> entries;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
        entries[key] = trim(line.substr(eq + 1));
    }
    return entries;
}

SweepConfig make_config(const std::map<std::string, std::string>& entries) {
    SweepConfig cfg;
    cfg.Omega = parse_axis("Omega", "1e-5:0.1:64:log");
    cfg.c1 = parse_axis("c1", "0.002");

    for (const auto& [key, value] : entries) {
        if (value.empty()) throw ConfigError("config key '" + key + "' has no value");
        if (key == "approach") {
            if (value == "all") {
                cfg.approaches = {Approach::local, Approach::global, Approach::partial_secular};
            } else {
                try {
                    cfg.approaches = {parse_approach(value)};
                } catch (const std::invalid_argument&) {
                    throw ConfigError("config key 'approach': expected local, global, ps or all");
                }
            }
        } else if (key == "omega1") {
            cfg.omega1 = positive(key, parse_double(key, value));
        } else if (key == "omega2") {
            cfg.omega2 = positive(key, parse_double(key, value));
        } else if (key == "Omega") {
            cfg.Omega = parse_axis(key, value);
        } else if (key == "c1") {
            cfg.c1 = parse_axis(key, value);
            require_positive(key, cfg.c1);
        } else if (key == "c2") {
            cfg.c2 = positive(key, parse_double(key, value));
        } else if (key == "c2_ratio") {
            cfg.c2_ratio = parse_double(key, value);
            if (cfg.c2_ratio < 0.0) throw ConfigError("config key 'c2_ratio' must be non-negative");
        } else if (key == "n_exp") {
            cfg.n_exp = parse_int(key, value);
            if (cfg.n_exp < 0) throw ConfigError("config key 'n_exp' must be non-negative");
        } else if (key == "T1") {
            cfg.T1 = positive(key, parse_double(key, value));
        } else if (key == "T2") {
            cfg.T2 = positive(key, parse_double(key, value));
        } else if (key == "output") {
            cfg.output = value;
        } else if (key == "threads") {
            cfg.threads = parse_int(key, value);
            if (cfg.threads < 1) throw ConfigError("config key 'threads' must be at least 1");
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    for (double w : cfg.Omega.values)
        if (!(w >= 0.0)) throw ConfigError("config key 'Omega' must be non-negative");
    return cfg;
}

SweepConfig load_config(const std::string& file_text, const std::vector<std::string>& overrides) {
    auto entries = parse_key_values(file_text);
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ConfigError("override '" + o + "': expected key=value");
        const std::string key = trim(o.substr(0, eq));
        if (key.empty()) throw ConfigError("override '" + o + "': empty key");
        entries[key] = trim(o.substr(eq + 1));
    }
    return make_config(entries);
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void run_eigs(const SweepConfig& cfg, std::ostream& out) {
    const sys::TlsPair pair{cfg.omega1, cfg.omega2, 0.0};
    const double c1 = cfg.c1.front();
    const auto b1 = bath_for(cfg, 0, c1);
    const auto b2 = bath_for(cfg, 1, c1);

    std::vector<spectra::SpectrumScan> scans;
    for (Approach a : cfg.approaches) {
        scans.push_back(spectra::splitting_scan(a, pair, b1, b2, cfg.Omega.values, cfg.threads));
    }
    write_output_header(out, "Omega,approach,k,re_lambda,im_lambda");
    for (std::size_t i = 0; i < cfg.Omega.values.size(); ++i) {
        for (const auto& scan : scans) {
            for (int k = 0; k < 4; ++k) {
                const cplx l = scan.eigenvalues[i][k];
                out << format_number(cfg.Omega.values[i]) << ',' << to_string(scan.approach) << ',' << k << ','
                    << format_number(l.real()) << ',' << format_number(l.imag()) << '\n';
            }
        }
    }
}

void run_sweep(const SweepConfig& cfg, std::ostream& out) {
    const auto& c1s = cfg.c1.values;
    const auto& omegas = cfg.Omega.values;
    const std::size_t na = cfg.approaches.size();
    const std::size_t total = c1s.size() * omegas.size() * na;
    std::vector<std::string> rows(total);

    parallel_for(total, cfg.threads, [&](std::size_t idx) {
        const std::size_t ia = idx % na;
        const std::size_t iw = (idx / na) % omegas.size();
        const std::size_t ic = idx / (na * omegas.size());
        const Approach a = cfg.approaches[ia];
        const double c1 = c1s[ic];
        const sys::TlsPair pair{cfg.omega1, cfg.omega2, omegas[iw]};
        const double gamma1 = bath::coupling_rate(bath_for(cfg, 0, c1), cfg.omega1);

        std::string row = format_number(gamma1) + ',' + format_number(omegas[iw]) + ',' + std::string(to_string(a)) + ',';
        try {
            const auto rep = flows::steady_flows(a, pair, bath_for(cfg, 0, c1), bath_for(cfg, 1, c1));
            row += format_number(rep.J1) + ',' + format_number(rep.J2) + ',' + format_number(rep.j_hot()) + ',' +
                   format_number(rep.first_law_residual) + ',' + flag(rep.second_law_ok) + ",0";
        } catch (const std::exception&) {
            row += "nan,nan,nan,nan,0,1";
        }
        rows[idx] = std::move(row);
    });

    write_output_header(out, "gamma1_ref,Omega,approach,J1,J2,j_hot,first_law_residual,second_law_ok,skipped");
    for (const auto& r : rows) out << r << '\n';
}

void run_optline(const SweepConfig& cfg, std::ostream& out) {
    const sys::TlsPair pair{cfg.omega1, cfg.omega2, 0.0};
    std::vector<double> gamma1;
    for (double c1 : cfg.c1.values) gamma1.push_back(bath::coupling_rate(bath_for(cfg, 0, c1), cfg.omega1));
    const double lo = cfg.Omega.min();
    const double hi = cfg.Omega.max();
    if (!(lo > 0.0 && lo < hi)) throw ConfigError("config key 'Omega': optline needs a grid with 0 < min < max");

    write_output_header(out, "gamma1_ref,approach,Omega_star,j_star,bracket");
    for (Approach a : cfg.approaches) {
        const auto b1 = bath_for(cfg, 0, cfg.c1.front());
        const auto b2 = bath_for(cfg, 1, cfg.c1.front());
        const auto line = flows::optimal_line(a, gamma1, b1, b2, pair, cfg.c2_ratio, lo, hi, cfg.threads);
        for (const auto& pt : line) {
            out << format_number(pt.gamma1_ref) << ',' << to_string(a) << ',';
            if (!pt.ok) {
                out << "nan,nan,failed\n";
                continue;
            }
            out << format_number(pt.optimum.omega_star) << ',' << format_number(pt.optimum.j_star) << ','
                << (pt.optimum.interior ? "interior" : "boundary") << '\n';
        }
    }
}

void run_steady(const SweepConfig& cfg, std::ostream& out) {
    if (cfg.Omega.values.size() != 1) throw ConfigError("config key 'Omega': steady needs a single value");
    if (cfg.c1.values.size() != 1) throw ConfigError("config key 'c1': steady needs a single value");
    const sys::TlsPair pair{cfg.omega1, cfg.omega2, cfg.Omega.front()};
    const auto b1 = bath_for(cfg, 0, cfg.c1.front());
    const auto b2 = bath_for(cfg, 1, cfg.c1.front());

    write_output_header(out,
                        "approach,Omega,n1,n2,re_coherence,im_coherence,J1,J2,j1,j2,first_law_residual,first_law_ok,"
                        "second_law_ok");
    for (Approach a : cfg.approaches) {
        const auto system = moments::build_moment_system(a, pair, b1, b2);
        const auto v = moments::steady_moments(system);
        const auto rep = flows::stationary_flows(system, v);
        out << to_string(a) << ',' << format_number(pair.coupling) << ',' << format_number(v.occupancy1()) << ','
            << format_number(v.occupancy2()) << ',' << format_number(v.coherence().real()) << ','
            << format_number(v.coherence().imag()) << ',' << format_number(rep.J1) << ',' << format_number(rep.J2)
            << ',' << format_number(rep.j1) << ',' << format_number(rep.j2) << ','
            << format_number(rep.first_law_residual) << ',' << flag(rep.first_law_ok) << ','
            << flag(rep.second_law_ok) << '\n';
    }
}

}  // namespace tlsflow::sweep
