#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vcw/heat_reference.hpp"
#include "vcw/ns_solver.hpp"
#include "vcw/params.hpp"

namespace vcw {

enum class Scenario { profile_decay, stability, kappa_limit, verify_profile, theta0_checks };

std::string_view to_string(Scenario s) noexcept;
/// Throws Error{InvalidValue} for an unknown name.
Scenario parse_scenario(std::string_view name);

/// Everything one invocation needs. Deterministic: there is no seed.
struct RunConfig {
    Scenario scenario = Scenario::profile_decay;
    GasInputs gas{};
    ProfileParams profile{};
    PerturbSpec perturb{0.05, 0.05, 0.05, 5.0, 0.0};
    double eta0 = 1.0;  ///< admissible L2 size of the initial perturbation

    double length = 400.0;
    std::size_t cells = 4000;
    double horizon = 200.0;
    double cfl = 0.4;
    double sample_interval = 2.0;
    double fit_t0 = 20.0;
    double fit_t1 = 200.0;

    std::vector<double> kappa_list{1.0, 0.5, 0.25, 0.125};
    std::vector<double> p_list{1.0, 2.0};
    std::vector<std::size_t> refine_levels{200, 400, 800};
    KernelQuadSpec kernel{};

    std::string out_dir = "out";
};

/// Parses a flat `key = value` document (`#` starts a comment). Unknown keys,
/// malformed lines and invalid values are errors; absent keys keep defaults.
RunConfig parse_config(std::string_view text);

/// Reads and parses a file. Throws Error{IoError} if it cannot be read.
RunConfig load_config(const std::filesystem::path& path);

/// Checks derived invariants: valid gas and profile parameters, grid,
/// T > 0, |s| T <= 0.9 L, sample interval > 0, and so on.
void validate(const RunConfig& cfg);

/// Renders a config in the same format parse_config() accepts.
std::string to_config_text(const RunConfig& cfg);

}  // namespace vcw
