#include "resload/census.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "resload/csv.hpp"
#include "resload/errors.hpp"

namespace resload {

std::vector<CensusHouseholdRecord> ingest_census(std::istream& in, std::string_view source_name) {
    csv::Reader reader(in, std::string{source_name});
    const std::size_t col_record = reader.column("record_id");
    const std::size_t col_region = reader.column("region");
    const std::size_t col_bracket = reader.column("income_bracket");
    const std::size_t col_age = reader.column("age_bin");
    const std::size_t col_emp = reader.column("employment_status");
    const std::size_t col_occ = reader.column("occupation_category");
    const std::size_t col_par = reader.column("parental_status");
    const bool has_weight = reader.has_column("weight");
    const std::size_t col_weight = has_weight ? reader.column("weight") : 0;

    std::vector<CensusHouseholdRecord> records;
    std::unordered_map<std::string, std::size_t> index_by_id;

    while (reader.next()) {
        const std::string id{reader.field(col_record)};
        if (id.empty()) {
            throw IngestError(source_name, reader.row(), "record_id",
                              "person row references an undeclared household (empty record_id)");
        }

        const std::string region{reader.field(col_region)};
        IncomeBracket bracket;
        try {
            bracket = parse_income_bracket(reader.field(col_bracket));
        } catch (const ConfigError& e) {
            throw IngestError(source_name, reader.row(), "income_bracket", e.what());
        }
        double weight = 1.0;
        if (has_weight) {
            weight = reader.number(col_weight, "weight");
            if (weight < 0.0) {
                throw IngestError(source_name, reader.row(), "weight",
                                  "weight must be non-negative");
            }
        }

        PersonLabel label;
        label.age_bin = parse_age_bin(reader.field(col_age), reader.source(), reader.row());
        label.employment = parse_employment(reader.field(col_emp), reader.source(), reader.row());
        label.occupation = parse_occupation(reader.field(col_occ), reader.source(), reader.row());
        label.parental = parse_parental(reader.field(col_par), reader.source(), reader.row());

        auto [it, inserted] = index_by_id.try_emplace(id, records.size());
        if (inserted) {
            CensusHouseholdRecord record;
            record.record_id = id;
            record.region = region;
            record.income_bracket = bracket;
            record.weight = weight;
            record.members.push_back(label);
            records.push_back(std::move(record));
            continue;
        }

        CensusHouseholdRecord& record = records[it->second];
        if (record.region != region) {
            throw IngestError(source_name, reader.row(), "region",
                              "record '" + id + "' appears with conflicting regions '" +
                                  record.region + "' and '" + region + "'");
        }
        if (record.income_bracket != bracket) {
            throw IngestError(source_name, reader.row(), "income_bracket",
                              "record '" + id + "' appears with conflicting income brackets");
        }
        if (record.weight != weight) {
            throw IngestError(source_name, reader.row(), "weight",
                              "record '" + id + "' appears with conflicting weights");
        }
        record.members.push_back(label);
    }

    for (const auto& record : records) {
        if (record.members.empty()) {
            throw IngestError(source_name, 0, "record_id",
                              "record '" + record.record_id + "' has zero members");
        }
    }
    return records;
}

std::vector<Household> populate_households(std::span<const CensusHouseholdRecord> records,
                                           std::string_view region, int n,
                                           std::shared_ptr<const HouseholdParams> params,
                                           RngStream& rng) {
    if (n < 0) {
        throw ConfigError("household count must be non-negative");
    }

    std::vector<const CensusHouseholdRecord*> pool;
    std::vector<double> cumulative;
    double total_weight = 0.0;
    for (const auto& record : records) {
        if (record.region != region) {
            continue;
        }
        if (record.weight <= 0.0) {
            continue;
        }
        pool.push_back(&record);
        total_weight += record.weight;
        cumulative.push_back(total_weight);
    }
    if (pool.empty() && n > 0) {
        throw ConfigError("region '" + std::string(region) +
                          "' has no census records with positive weight");
    }

    std::vector<Household> households;
    households.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const double u = rng.uniform() * total_weight;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const std::size_t pick = std::min<std::size_t>(
            static_cast<std::size_t>(it - cumulative.begin()), pool.size() - 1);
        const CensusHouseholdRecord& record = *pool[pick];

        char id[16];
        std::snprintf(id, sizeof id, "hh-%06d", i);
        Household household;
        household.household_id = id;
        household.members = record.members;
        household.income_bracket = record.income_bracket;
        household.region = record.region;
        household.params = params;
        households.push_back(std::move(household));
    }
    return households;
}

}  // namespace resload
