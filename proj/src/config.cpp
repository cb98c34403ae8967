#include "vcw/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "vcw/error.hpp"
#include "vcw/grid.hpp"

namespace vcw {

namespace {

constexpr std::array<std::pair<Scenario, std::string_view>, 5> kScenarioNames{{
    {Scenario::profile_decay, "profile-decay"},
    {Scenario::stability, "stability"},
    {Scenario::kappa_limit, "kappa-limit"},
    {Scenario::verify_profile, "verify-profile"},
    {Scenario::theta0_checks, "theta0-checks"},
}};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Error bad_value(std::string_view key, std::string_view value, std::string_view why) {
    std::ostringstream msg;
    msg << key << " = '" << value << "': " << why;
    return Error(ErrorCode::InvalidValue, msg.str());
}

double parse_double(std::string_view key, std::string_view text) {
    double out = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc{} || ptr != end || !std::isfinite(out)) {
        throw bad_value(key, text, "not a finite number");
    }
    return out;
}

std::size_t parse_count(std::string_view key, std::string_view text) {
    std::size_t out = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    if (ec != std::errc{} || ptr != end) throw bad_value(key, text, "not a non-negative integer");
    return out;
}

template <class T, class Parse>
std::vector<T> parse_list(std::string_view key, std::string_view text, Parse parse) {
    std::vector<T> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = trim(text.substr(0, comma));
        if (item.empty()) throw bad_value(key, text, "empty list item");
        out.push_back(parse(key, item));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (out.empty()) throw bad_value(key, text, "empty list");
    return out;
}

using Setter = std::function<void(RunConfig&, std::string_view key, std::string_view value)>;

Setter real(double RunConfig::*member) {
    return [member](RunConfig& c, std::string_view k, std::string_view v) {
        c.*member = parse_double(k, v);
    };
}

template <class Sub>
Setter real(Sub RunConfig::*sub, double Sub::*member) {
    return [sub, member](RunConfig& c, std::string_view k, std::string_view v) {
        (c.*sub).*member = parse_double(k, v);
    };
}

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"scenario",
         [](RunConfig& c, std::string_view, std::string_view v) { c.scenario = parse_scenario(v); }},
        {"R", real(&RunConfig::gas, &GasInputs::R)},
        {"gamma", real(&RunConfig::gas, &GasInputs::gamma)},
        {"mu", real(&RunConfig::gas, &GasInputs::mu)},
        {"kappa", real(&RunConfig::gas, &GasInputs::kappa)},
        {"theta_minus", real(&RunConfig::gas, &GasInputs::theta_minus)},
        {"theta_plus", real(&RunConfig::gas, &GasInputs::theta_plus)},
        {"v_minus", real(&RunConfig::gas, &GasInputs::v_minus)},
        {"u_b", real(&RunConfig::gas, &GasInputs::u_b)},
        {"alpha", real(&RunConfig::profile, &ProfileParams::alpha)},
        {"delta0", real(&RunConfig::profile, &ProfileParams::delta0)},
        {"alpha_coupling_scale",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.profile.coupling.scale = parse_double(k, v);
         }},
        {"alpha_coupling_exponent",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.profile.coupling.exponent = parse_double(k, v);
         }},
        {"amp_phi", real(&RunConfig::perturb, &PerturbSpec::amp_phi)},
        {"amp_psi", real(&RunConfig::perturb, &PerturbSpec::amp_psi)},
        {"amp_zeta", real(&RunConfig::perturb, &PerturbSpec::amp_zeta)},
        {"width", real(&RunConfig::perturb, &PerturbSpec::width)},
        {"center", real(&RunConfig::perturb, &PerturbSpec::center)},
        {"eta0", real(&RunConfig::eta0)},
        {"L", real(&RunConfig::length)},
        {"n",
         [](RunConfig& c, std::string_view k, std::string_view v) { c.cells = parse_count(k, v); }},
        {"T", real(&RunConfig::horizon)},
        {"cfl", real(&RunConfig::cfl)},
        {"sample_interval", real(&RunConfig::sample_interval)},
        {"fit_t0", real(&RunConfig::fit_t0)},
        {"fit_t1", real(&RunConfig::fit_t1)},
        {"kappa_list",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.kappa_list = parse_list<double>(k, v, parse_double);
         }},
        {"p_list",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.p_list = parse_list<double>(k, v, parse_double);
         }},
        {"refine_levels",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.refine_levels = parse_list<std::size_t>(k, v, parse_count);
         }},
        {"kernel_half_width",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             c.kernel.half_width_sigmas = parse_double(k, v);
         }},
        {"kernel_nodes",
         [](RunConfig& c, std::string_view k, std::string_view v) {
             const auto nodes = parse_count(k, v);
             if (nodes > 1'000'001) throw bad_value(k, v, "too many kernel nodes");
             c.kernel.sub_nodes = static_cast<int>(nodes);
         }},
        {"out_dir",
         [](RunConfig& c, std::string_view, std::string_view v) { c.out_dir = std::string(v); }},
    };
    return table;
}

std::string fmt(double x) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

template <class T>
std::string join(const std::vector<T>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        if constexpr (std::is_floating_point_v<T>) {
            out += fmt(xs[i]);
        } else {
            out += std::to_string(xs[i]);
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Scenario s) noexcept {
    for (const auto& [value, name] : kScenarioNames) {
        if (value == s) return name;
    }
    return "unknown";
}

Scenario parse_scenario(std::string_view name) {
    for (const auto& [value, known] : kScenarioNames) {
        if (known == name) return value;
    }
    throw bad_value("scenario", name, "unknown scenario");
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    std::size_t line_no = 0;
    for (std::size_t pos = 0; pos <= text.size();) {
        ++line_no;
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;

        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw Error(ErrorCode::ParseError,
                        "line " + std::to_string(line_no) + ": empty key or value");
        }
        const auto it = setters().find(key);
        if (it == setters().end()) {
            throw Error(ErrorCode::UnknownKey,
                        "line " + std::to_string(line_no) + ": '" + std::string(key) + "'");
        }
        if (!seen.insert(std::string(key)).second) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) +
                                                   ": duplicate key '" + std::string(key) + "'");
        }
        it->second(cfg, key, value);
    }
    validate(cfg);
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const RunConfig& cfg) {
    PhysParams p{};
    try {
        p = build_params(cfg.gas);
        validate(cfg.profile);
        validate(cfg.perturb);
        validate(cfg.kernel);
        Grid1D grid(cfg.length, cfg.cells);
        for (const auto n : cfg.refine_levels) Grid1D level(cfg.length, n);
    } catch (const Error& e) {
        throw Error(ErrorCode::InvalidValue, e.what());
    }

    auto require = [](bool ok, std::string_view key, double value, std::string_view why) {
        if (!ok) throw bad_value(key, fmt(value), why);
    };
    require(cfg.horizon > 0.0, "T", cfg.horizon, "must be positive");
    require(cfg.cfl > 0.0 && cfg.cfl <= 1.0, "cfl", cfg.cfl, "must lie in (0, 1]");
    require(cfg.sample_interval > 0.0, "sample_interval", cfg.sample_interval, "must be positive");
    require(cfg.eta0 > 0.0, "eta0", cfg.eta0, "must be positive");
    require(cfg.fit_t0 >= 1.0, "fit_t0", cfg.fit_t0, "must be at least 1");
    require(cfg.fit_t1 > cfg.fit_t0, "fit_t1", cfg.fit_t1, "must exceed fit_t0");
    require(cfg.profile.coupling.scale > 0.0, "alpha_coupling_scale", cfg.profile.coupling.scale,
            "must be positive");
    for (const double k : cfg.kappa_list) require(k > 0.0, "kappa_list", k, "entries must be positive");
    for (const double q : cfg.p_list) require(q >= 1.0, "p_list", q, "entries must be at least 1");
    require(cfg.refine_levels.size() >= 2, "refine_levels",
            static_cast<double>(cfg.refine_levels.size()), "needs at least two levels");
    if (cfg.out_dir.empty()) throw bad_value("out_dir", "", "must not be empty");

    const double reach = std::abs(p.s) * cfg.horizon;
    if (reach > 0.9 * cfg.length) {
        std::ostringstream msg;
        msg << "|s| T = " << reach << " exceeds 0.9 L = " << 0.9 * cfg.length;
        throw Error(ErrorCode::LayerContainmentViolated, msg.str());
    }
}

std::string to_config_text(const RunConfig& c) {
    std::ostringstream out;
    auto line = [&](std::string_view key, const std::string& value) {
        out << key << " = " << value << '\n';
    };
    out << "# scenario: profile-decay | stability | kappa-limit | verify-profile | theta0-checks\n";
    line("scenario", std::string(to_string(c.scenario)));
    out << "\n# gas and boundary data\n";
    line("R", fmt(c.gas.R));
    line("gamma", fmt(c.gas.gamma));
    line("mu", fmt(c.gas.mu));
    line("kappa", fmt(c.gas.kappa));
    line("theta_minus", fmt(c.gas.theta_minus));
    line("theta_plus", fmt(c.gas.theta_plus));
    line("v_minus", fmt(c.gas.v_minus));
    line("u_b", fmt(c.gas.u_b));
    out << "\n# initial temperature shape; kappa-limit uses alpha = scale * kappa^exponent\n";
    line("alpha", fmt(c.profile.alpha));
    line("delta0", fmt(c.profile.delta0));
    line("alpha_coupling_scale", fmt(c.profile.coupling.scale));
    line("alpha_coupling_exponent", fmt(c.profile.coupling.exponent));
    out << "\n# perturbation (stability)\n";
    line("amp_phi", fmt(c.perturb.amp_phi));
    line("amp_psi", fmt(c.perturb.amp_psi));
    line("amp_zeta", fmt(c.perturb.amp_zeta));
    line("width", fmt(c.perturb.width));
    line("center", fmt(c.perturb.center));
    line("eta0", fmt(c.eta0));
    out << "\n# grid and time\n";
    line("L", fmt(c.length));
    line("n", std::to_string(c.cells));
    line("T", fmt(c.horizon));
    line("cfl", fmt(c.cfl));
    line("sample_interval", fmt(c.sample_interval));
    line("fit_t0", fmt(c.fit_t0));
    line("fit_t1", fmt(c.fit_t1));
    out << "\n# studies\n";
    line("kappa_list", join(c.kappa_list));
    line("p_list", join(c.p_list));
    line("refine_levels", join(c.refine_levels));
    line("kernel_half_width", fmt(c.kernel.half_width_sigmas));
    line("kernel_nodes", std::to_string(c.kernel.sub_nodes));
    out << "\nout_dir = " << c.out_dir << '\n';
    return out.str();
}

}  // namespace vcw
