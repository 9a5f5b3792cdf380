#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "resload/activity.hpp"
#include "resload/errors.hpp"
#include "resload/scenario.hpp"
#include "resload/transitions.hpp"
#include "support.hpp"

using namespace resload;
using nlohmann::json;

namespace {

json base_doc() {
    json doc;
    doc["inputs"]["activity_log_csv"] = testsup::fixture("activity_logs.csv").string();
    doc["inputs"]["census_csv"] = testsup::fixture("census.csv").string();
    doc["inputs"]["weather_csv"] = testsup::fixture("weather.csv").string();
    doc["scenario"]["region"] = "TX";
    doc["scenario"]["n_households"] = 3;
    doc["scenario"]["start_date"] = "2019-07-01";
    doc["scenario"]["days"] = 2;
    doc["scenario"]["seed"] = 7;
    return doc;
}

std::filesystem::path write_config(const std::filesystem::path& dir, const json& doc,
                                   const std::string& name = "config.json") {
    const auto path = dir / name;
    testsup::write_file(path, doc.dump(2) + "\n");
    return path;
}

ScenarioConfig load_doc(const std::filesystem::path& dir, const json& doc,
                        const std::string& name = "config.json") {
    return load_scenario_config(write_config(dir, doc, name));
}

// Relative path -> file bytes for everything under root.
std::map<std::string, std::string> snapshot_tree(const std::filesystem::path& root) {
    std::map<std::string, std::string> files;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(root)) {
        if (entry.is_regular_file()) {
            files[entry.path().lexically_relative(root).generic_string()] =
                testsup::read_file(entry.path());
        }
    }
    return files;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in{path};
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines;
}

}  // namespace

TEST_CASE("fixture scenario config loads with defaults filled in") {
    const ScenarioConfig cfg = load_scenario_config(testsup::fixture("scenario.json"));
    CHECK(cfg.region == "TX");
    CHECK(cfg.n_households == 10);
    CHECK(cfg.days == 7);
    CHECK(cfg.seed == 42);
    CHECK(format_date(cfg.start_date) == "2019-07-01");
    CHECK(cfg.activity_log_csv.is_absolute());
    CHECK(std::filesystem::exists(cfg.activity_log_csv));
    CHECK(std::filesystem::exists(cfg.census_csv));
    CHECK(std::filesystem::exists(cfg.weather_csv));
    CHECK(cfg.matrix_archive.empty());
    CHECK(cfg.output_directory.empty());
    CHECK(cfg.write_household_profiles);
    CHECK_FALSE(cfg.analysis.household_size_filter.has_value());
    CHECK_FALSE(cfg.analysis.date_range.has_value());

    // Untouched sections keep the built-in parameter set.
    CHECK(cfg.params.hvac.setpoint_home_c == 21.0);
    CHECK(cfg.params.water_heater.volume_l == 190.0);
    CHECK(cfg.params.lighting.bulb_wattages.size() == 30);
    CHECK(cfg.params.cold.size() == 2);
}

TEST_CASE("rendered effective config is a fixed point of load") {
    testsup::TempDir tmp;
    ScenarioConfig cfg = load_scenario_config(testsup::fixture("scenario.json"));
    cfg.output_directory = tmp.path / "out";

    const std::string first = render_effective_config(cfg);
    const auto rendered = tmp.path / "effective.json";
    testsup::write_file(rendered, first);

    const ScenarioConfig reloaded = load_scenario_config(rendered);
    CHECK(render_effective_config(reloaded) == first);
    CHECK(reloaded.seed == cfg.seed);
    CHECK(reloaded.activity_log_csv == cfg.activity_log_csv);
    CHECK(reloaded.output_directory == cfg.output_directory);
}

TEST_CASE("unknown config keys are rejected by section") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["extras"] = 1;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("unknown key 'extras'"),
                         ConfigError);

    doc = base_doc();
    doc["params"]["hvac"]["heat_rate"] = 500;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("params.hvac: unknown key 'heat_rate'"), ConfigError);

    doc = base_doc();
    doc["output"]["dir"] = "x";
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("output: unknown key 'dir'"),
                         ConfigError);
}

TEST_CASE("scenario section validation") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["scenario"]["n_households"] = 0;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("at least 1 (got 0)"),
                         ConfigError);

    doc = base_doc();
    doc["scenario"]["days"] = 0;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("scenario.days must be at least 1"), ConfigError);

    doc = base_doc();
    doc["scenario"].erase("start_date");
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("scenario.start_date must be set"), ConfigError);

    doc = base_doc();
    doc["scenario"]["start_date"] = "2019-13-01";
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("scenario.start_date"),
                         ConfigError);

    doc = base_doc();
    doc["scenario"]["region"] = "";
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("region"), ConfigError);

    doc = base_doc();
    doc["scenario"]["seed"] = "forty-two";
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("scenario.seed must be an integer"), ConfigError);

    doc = base_doc();
    doc.erase("scenario");
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("missing 'scenario'"),
                         ConfigError);

    doc = base_doc();
    doc.erase("inputs");
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("missing 'inputs'"),
                         ConfigError);
}

TEST_CASE("config file level errors") {
    testsup::TempDir tmp;
    CHECK_THROWS_WITH_AS(load_scenario_config(tmp.path / "absent.json"),
                         doctest::Contains("cannot open config file"), ConfigError);

    const auto broken = tmp.path / "broken.json";
    testsup::write_file(broken, "{ not json");
    CHECK_THROWS_AS(load_scenario_config(broken), ConfigError);

    const auto list = tmp.path / "list.json";
    testsup::write_file(list, "[1, 2]\n");
    CHECK_THROWS_WITH_AS(load_scenario_config(list),
                         doctest::Contains("top level must be an object"), ConfigError);
}

TEST_CASE("lighting stock shorthand expands to a wattage list") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["params"]["lighting"]["bulb_count"] = 5;
    doc["params"]["lighting"]["bulb_wattage_w"] = 42.0;
    ScenarioConfig cfg = load_doc(tmp.path, doc);
    REQUIRE(cfg.params.lighting.bulb_wattages.size() == 5);
    for (double w : cfg.params.lighting.bulb_wattages) {
        CHECK(w == 42.0);
    }

    // An explicit list takes precedence over the shorthand pair.
    doc["params"]["lighting"]["bulb_wattages"] = {10.0, 20.0};
    cfg = load_doc(tmp.path, doc, "config2.json");
    REQUIRE(cfg.params.lighting.bulb_wattages.size() == 2);
    CHECK(cfg.params.lighting.bulb_wattages[0] == 10.0);
    CHECK(cfg.params.lighting.bulb_wattages[1] == 20.0);

    doc = base_doc();
    doc["params"]["lighting"]["bulb_count"] = -1;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc, "config3.json"),
                         doctest::Contains("bulb_count must be non-negative"), ConfigError);
}

TEST_CASE("physical parameter validation catches bad overrides") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["params"]["hvac"]["deadband_c"] = 0;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("params.hvac.deadband_c must be positive"),
                         ConfigError);

    doc = base_doc();
    doc["params"]["hvac"]["cool_rate_w"] = 150;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("cool_rate_w must be negative"), ConfigError);

    doc = base_doc();
    doc["params"]["water_heater"]["setpoint_c"] = 5;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("setpoint must exceed inlet temperature"), ConfigError);

    doc = base_doc();
    doc["params"]["lighting"]["duration_bands"] = json::array(
        {{{"min_minutes", 1}, {"max_minutes", 5}, {"weight", 0.5}},
         {{"min_minutes", 5}, {"max_minutes", 10}, {"weight", 0.4}}});
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("weights must sum to 1"),
                         ConfigError);

    doc = base_doc();
    doc["params"]["lighting"]["effective_occupancy"] = {0.5, 1.0};
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("must start at 0 for zero persons"), ConfigError);

    doc = base_doc();
    doc["params"]["cold_appliances"] = json::array(
        {{{"rating_w", 200}, {"target_annual_kwh", 600}, {"interval_minutes", 5}}});
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("fixed at 10"), ConfigError);

    doc = base_doc();
    doc["params"]["activity_loads"]["steady_w"]["away"] = 50;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("steady_w.away must be 0"), ConfigError);

    doc = base_doc();
    doc["params"]["hot_water_events"] = json::array(
        {{{"activity", "grooming"}, {"flow_l_per_min", 8}, {"duration_minutes", 0}}});
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("duration_minutes must be positive"), ConfigError);
}

TEST_CASE("activity name keys must match the profiled states") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["params"]["activity_loads"]["steady_w"]["gaming"] = 200;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("unknown activity 'gaming'"),
                         ConfigError);
}

TEST_CASE("analysis options validation") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["analysis"]["household_size_filter"] = 0;
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("household_size_filter must be at least 1"),
                         ConfigError);

    doc = base_doc();
    doc["analysis"]["date_range"] = {{"start", "2019-07-02"}, {"end", "2019-07-01"}};
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc), doctest::Contains("end precedes start"),
                         ConfigError);

    // Entirely outside the simulated span.
    doc = base_doc();
    doc["analysis"]["date_range"] = {{"start", "2019-08-01"}, {"end", "2019-08-02"}};
    CHECK_THROWS_WITH_AS(load_doc(tmp.path, doc),
                         doctest::Contains("selects no simulated days"), ConfigError);

    doc = base_doc();
    doc["analysis"]["date_range"] = {{"start", "2019-07-02"}, {"end", "2019-07-02"}};
    const ScenarioConfig cfg = load_doc(tmp.path, doc, "ok.json");
    REQUIRE(cfg.analysis.date_range.has_value());
    CHECK(format_date(cfg.analysis.date_range->start) == "2019-07-02");
    CHECK(format_date(cfg.analysis.date_range->end) == "2019-07-02");
}

TEST_CASE("calibrate writes an archive and a report") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["output"]["directory"] = (tmp.path / "out").string();
    const ScenarioConfig cfg = load_doc(tmp.path, doc);

    run_calibrate(cfg);

    const auto out = tmp.path / "out";
    CHECK(std::filesystem::exists(out / "effective_config.json"));
    REQUIRE(std::filesystem::exists(out / "matrices.csv"));

    std::ifstream archive_in{out / "matrices.csv", std::ios::binary};
    const TransitionMatrixSet from_archive = load_matrix_archive(archive_in, "matrices.csv");

    std::ifstream log_in{testsup::fixture("activity_logs.csv")};
    const auto records = ingest_activity_logs(log_in, "activity_logs.csv");
    const TransitionMatrixSet rebuilt = TransitionMatrixSet::build(records);
    CHECK(from_archive.total_transition_observations() ==
          rebuilt.total_transition_observations());
    CHECK(from_archive.populated_row_count() == rebuilt.populated_row_count());

    const json report = json::parse(testsup::read_file(out / "calibration_report.json"));
    CHECK(report.at("records") == 120);
    CHECK(report.at("weekday_records") == 60);
    CHECK(report.at("weekend_records") == 60);
    CHECK(report.at("total_transitions") == rebuilt.total_transition_observations());
}

TEST_CASE("calibrate requires activity logs and an output directory") {
    testsup::TempDir tmp;

    json doc = base_doc();
    CHECK_THROWS_WITH_AS(run_calibrate(load_doc(tmp.path, doc)),
                         doctest::Contains("output directory is not set"), ConfigError);

    doc = base_doc();
    doc["inputs"].erase("activity_log_csv");
    doc["output"]["directory"] = (tmp.path / "out").string();
    CHECK_THROWS_WITH_AS(run_calibrate(load_doc(tmp.path, doc, "c2.json")),
                         doctest::Contains("calibrate requires inputs.activity_log_csv"),
                         ConfigError);
}

TEST_CASE("simulate writes manifest, profiles, and their aggregate") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["output"]["directory"] = (tmp.path / "out").string();
    const ScenarioConfig cfg = load_doc(tmp.path, doc);

    run_simulate(cfg, 1);

    const auto out = tmp.path / "out";
    const auto manifest = read_lines(out / "households.csv");
    REQUIRE(manifest.size() == 4);
    CHECK(manifest[0] == "household_id,region,income_bracket,members");
    CHECK(manifest[1].rfind("hh-000000,TX,", 0) == 0);
    CHECK(manifest[2].rfind("hh-000001,TX,", 0) == 0);
    CHECK(manifest[3].rfind("hh-000002,TX,", 0) == 0);

    LoadProfile sum;
    for (int i = 0; i < 3; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "hh-%06d.csv", i);
        const auto path = out / "households" / name;
        REQUIRE(std::filesystem::exists(path));
        const LoadProfile p = read_profile_csv(path, cfg.start_date);
        REQUIRE(p.minutes() == 2880);
        if (i == 0) {
            sum = p;
        } else {
            for (std::size_t m = 0; m < p.minutes(); ++m) {
                sum.hvac_w[m] += p.hvac_w[m];
                sum.water_heater_w[m] += p.water_heater_w[m];
                sum.lighting_w[m] += p.lighting_w[m];
                sum.cold_w[m] += p.cold_w[m];
                sum.activity_w[m] += p.activity_w[m];
            }
        }
    }

    // Profile CSVs round-trip exactly, so the aggregate must equal the sum
    // of the per-household read-backs bit for bit.
    const LoadProfile agg = read_profile_csv(out / "aggregate_total.csv", cfg.start_date);
    REQUIRE(agg.minutes() == 2880);
    for (std::size_t m = 0; m < agg.minutes(); ++m) {
        CHECK(agg.hvac_w[m] == sum.hvac_w[m]);
        CHECK(agg.water_heater_w[m] == sum.water_heater_w[m]);
        CHECK(agg.lighting_w[m] == sum.lighting_w[m]);
        CHECK(agg.cold_w[m] == sum.cold_w[m]);
        CHECK(agg.activity_w[m] == sum.activity_w[m]);
        CHECK(agg.total_w[m] == agg.hvac_w[m] + agg.water_heater_w[m] + agg.lighting_w[m] +
                                    agg.cold_w[m] + agg.activity_w[m]);
    }
}

TEST_CASE("simulate output is identical across worker counts") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["scenario"]["n_households"] = 4;
    doc["output"]["directory"] = (tmp.path / "out").string();
    const ScenarioConfig cfg = load_doc(tmp.path, doc);

    run_simulate(cfg, 1);
    const auto serial = snapshot_tree(tmp.path / "out");
    std::filesystem::remove_all(tmp.path / "out");

    run_simulate(cfg, 3);
    const auto threaded = snapshot_tree(tmp.path / "out");

    REQUIRE(serial.size() == threaded.size());
    for (const auto& [name, bytes] : serial) {
        INFO("file ", name);
        REQUIRE(threaded.count(name) == 1);
        CHECK(threaded.at(name) == bytes);
    }
}

TEST_CASE("simulate needs either a matrix archive or activity logs") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["inputs"].erase("activity_log_csv");
    doc["output"]["directory"] = (tmp.path / "out").string();
    CHECK_THROWS_WITH_AS(run_simulate(load_doc(tmp.path, doc), 1),
                         doctest::Contains("inputs.matrix_archive or inputs.activity_log_csv"),
                         ConfigError);
}

TEST_CASE("a calibrated archive replays identically to inline calibration") {
    testsup::TempDir tmp;

    json doc = base_doc();
    doc["output"]["directory"] = (tmp.path / "cal").string();
    run_calibrate(load_doc(tmp.path, doc, "cal.json"));

    json inline_doc = base_doc();
    inline_doc["output"]["directory"] = (tmp.path / "a").string();
    run_simulate(load_doc(tmp.path, inline_doc, "a.json"), 1);

    json archive_doc = base_doc();
    archive_doc["inputs"].erase("activity_log_csv");
    archive_doc["inputs"]["matrix_archive"] = (tmp.path / "cal" / "matrices.csv").string();
    archive_doc["output"]["directory"] = (tmp.path / "b").string();
    run_simulate(load_doc(tmp.path, archive_doc, "b.json"), 1);

    CHECK(testsup::read_file(tmp.path / "a" / "aggregate_total.csv") ==
          testsup::read_file(tmp.path / "b" / "aggregate_total.csv"));
    CHECK(testsup::read_file(tmp.path / "a" / "households.csv") ==
          testsup::read_file(tmp.path / "b" / "households.csv"));
}

TEST_CASE("analyze rereads simulate outputs and writes bracket files") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["scenario"]["n_households"] = 6;
    doc["output"]["directory"] = (tmp.path / "out").string();
    const ScenarioConfig cfg = load_doc(tmp.path, doc);

    run_simulate(cfg, 1);
    run_analyze(cfg);

    const auto out = tmp.path / "out";
    REQUIRE(std::filesystem::exists(out / "bracket_diff.csv"));
    REQUIRE(std::filesystem::exists(out / "summary.csv"));

    const auto diff_lines = read_lines(out / "bracket_diff.csv");
    REQUIRE(diff_lines.size() > 1);
    CHECK(diff_lines[0] == "minute_of_day,bracket,fraction,percent");
    // Whole days only: every bracket present contributes exactly 1440 rows.
    CHECK((diff_lines.size() - 1) % 1440 == 0);

    const auto summary_lines = read_lines(out / "summary.csv");
    REQUIRE(summary_lines.size() > 1);
    CHECK(summary_lines[0] == "region,bracket,households,mean_household_size,annual_kwh_mean");
    long households = 0;
    for (std::size_t i = 1; i < summary_lines.size(); ++i) {
        const auto& line = summary_lines[i];
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        const auto c3 = line.find(',', c2 + 1);
        CHECK(line.substr(0, c1) == "TX");
        households += std::stol(line.substr(c2 + 1, c3 - c2 - 1));
    }
    CHECK(households == 6);

    // The same directory does not satisfy a different scenario.
    json longer = doc;
    longer["scenario"]["days"] = 3;
    CHECK_THROWS_WITH_AS(run_analyze(load_doc(tmp.path, longer, "longer.json")),
                         doctest::Contains("outputs do not match this scenario"), ConfigError);
}

TEST_CASE("analyze requires prior simulate outputs in the directory") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["output"]["directory"] = (tmp.path / "fresh").string();
    CHECK_THROWS_WITH_AS(run_analyze(load_doc(tmp.path, doc)),
                         doctest::Contains("run simulate before analyze"), ConfigError);
}

TEST_CASE("analyze refuses to run without per-household profiles") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["output"]["directory"] = (tmp.path / "out").string();
    doc["output"]["write_household_profiles"] = false;
    const ScenarioConfig cfg = load_doc(tmp.path, doc);

    run_simulate(cfg, 1);
    CHECK_FALSE(std::filesystem::exists(tmp.path / "out" / "households" / "hh-000000.csv"));
    CHECK_THROWS_WITH_AS(run_analyze(cfg),
                         doctest::Contains("set output.write_household_profiles"), ConfigError);
}

TEST_CASE("pipeline runs calibrate, simulate, and analysis in one pass") {
    testsup::TempDir tmp;
    json doc = base_doc();
    doc["scenario"]["n_households"] = 5;
    doc["analysis"]["date_range"] = {{"start", "2019-07-02"}, {"end", "2019-07-02"}};
    doc["output"]["directory"] = (tmp.path / "out").string();

    run_pipeline(load_doc(tmp.path, doc), 2);

    const auto out = tmp.path / "out";
    for (const char* name : {"effective_config.json", "matrices.csv", "calibration_report.json",
                             "households.csv", "aggregate_total.csv", "bracket_diff.csv",
                             "summary.csv"}) {
        INFO("expected output ", name);
        CHECK(std::filesystem::exists(out / name));
    }
    CHECK(std::filesystem::exists(out / "households" / "hh-000004.csv"));

    json missing_logs = doc;
    missing_logs["inputs"].erase("activity_log_csv");
    missing_logs["output"]["directory"] = (tmp.path / "out2").string();
    CHECK_THROWS_WITH_AS(run_pipeline(load_doc(tmp.path, missing_logs, "p2.json"), 1),
                         doctest::Contains("pipeline requires inputs.activity_log_csv"),
                         ConfigError);
}

TEST_CASE("household size filter produces its own diff file or fails loudly") {
    testsup::TempDir tmp;

    // A census pool where every household has exactly two members, so a
    // size-2 filter keeps everything and a size-4 filter keeps nothing.
    std::string census =
        "record_id,region,income_bracket,weight,age_bin,employment_status,"
        "occupation_category,parental_status\n";
    for (int i = 0; i < 4; ++i) {
        const char* brackets[] = {"<25K", "25-50K", "75-100K", "100K+"};
        for (int m = 0; m < 2; ++m) {
            census += "r" + std::to_string(i) + ",TX," + brackets[i] +
                      ",1,25-44,employed,office,non-parent\n";
        }
    }
    const auto census_path = tmp.path / "census_pairs.csv";
    testsup::write_file(census_path, census);

    json doc = base_doc();
    doc["inputs"]["census_csv"] = census_path.string();
    doc["scenario"]["n_households"] = 4;
    doc["analysis"]["household_size_filter"] = 2;
    doc["output"]["directory"] = (tmp.path / "out").string();
    run_pipeline(load_doc(tmp.path, doc), 1);
    CHECK(std::filesystem::exists(tmp.path / "out" / "bracket_diff_size2.csv"));

    json nomatch = doc;
    nomatch["analysis"]["household_size_filter"] = 4;
    nomatch["output"]["directory"] = (tmp.path / "out2").string();
    CHECK_THROWS_WITH_AS(run_pipeline(load_doc(tmp.path, nomatch, "n.json"), 1),
                         doctest::Contains("matches no simulated households"), ConfigError);
}
