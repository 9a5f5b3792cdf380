#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "resload/cold.hpp"
#include "resload/errors.hpp"
#include "resload/household.hpp"
#include "resload/lighting.hpp"
#include "resload/scenario.hpp"

namespace py = pybind11;

namespace {

resload::ScenarioConfig prepare(const std::string& config_path,
                                std::optional<std::uint64_t> seed,
                                std::optional<std::string> out) {
    resload::ScenarioConfig config = resload::load_scenario_config(config_path);
    if (seed) {
        config.seed = *seed;
    }
    if (out) {
        config.output_directory = std::filesystem::absolute(*out).lexically_normal();
    }
    return config;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Minute-resolution residential electric load profile simulator";
    m.attr("__version__") = "0.1.0";

    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) {
                std::rethrow_exception(p);
            }
        } catch (const resload::IngestError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const resload::ConfigError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "run_calibrate",
        [](const std::string& config, std::optional<std::string> out) {
            const auto cfg = prepare(config, std::nullopt, std::move(out));
            py::gil_scoped_release release;
            resload::run_calibrate(cfg);
        },
        py::arg("config"), py::arg("out") = std::nullopt,
        "Build transition matrices from the scenario's activity logs.");

    m.def(
        "run_simulate",
        [](const std::string& config, std::optional<std::uint64_t> seed, int workers,
           std::optional<std::string> out) {
            const auto cfg = prepare(config, seed, std::move(out));
            py::gil_scoped_release release;
            resload::run_simulate(cfg, workers);
        },
        py::arg("config"), py::arg("seed") = std::nullopt, py::arg("workers") = 1,
        py::arg("out") = std::nullopt, "Simulate household load profiles.");

    m.def(
        "run_analyze",
        [](const std::string& config, std::optional<std::string> out) {
            const auto cfg = prepare(config, std::nullopt, std::move(out));
            py::gil_scoped_release release;
            resload::run_analyze(cfg);
        },
        py::arg("config"), py::arg("out") = std::nullopt,
        "Compute bracket and summary statistics from simulate outputs.");

    m.def(
        "run_pipeline",
        [](const std::string& config, std::optional<std::uint64_t> seed, int workers,
           std::optional<std::string> out) {
            const auto cfg = prepare(config, seed, std::move(out));
            py::gil_scoped_release release;
            resload::run_pipeline(cfg, workers);
        },
        py::arg("config"), py::arg("seed") = std::nullopt, py::arg("workers") = 1,
        py::arg("out") = std::nullopt, "calibrate, simulate, and analyze in one run.");

    m.def(
        "cold_duty_probability",
        [](double rating_w, double target_annual_kwh) {
            return resload::cold_duty_probability(
                resload::ColdApplianceParams{rating_w, target_annual_kwh, 10});
        },
        py::arg("rating_w"), py::arg("target_annual_kwh"),
        "Per-10-minute run probability hitting the annual energy target.");

    m.def(
        "effective_occupancy",
        [](int active_count) {
            return resload::effective_occupancy(resload::default_lighting_params(), active_count);
        },
        py::arg("active_count"), "Default effective-occupancy table lookup (clamped).");

    m.def(
        "profile_energy_kwh",
        [](const std::string& path) {
            return resload::annual_energy_kwh(
                resload::read_profile_csv(path, std::chrono::sys_days{}));
        },
        py::arg("path"), "Total energy of a per-household profile CSV in kWh.");
}
