#pragma once

#include <istream>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "resload/activity.hpp"
#include "resload/household.hpp"
#include "resload/rng.hpp"

namespace resload {

struct CensusHouseholdRecord {
    std::string record_id;
    std::string region;
    IncomeBracket income_bracket = IncomeBracket::Under25K;
    double weight = 1.0;
    std::vector<PersonLabel> members;
};

// Census CSV, one row per person: record_id, region, income_bracket,
// weight (optional, default 1), age_bin, employment_status,
// occupation_category, parental_status. Rows sharing a record_id form one
// household and must agree on the household-level fields. Records come back
// in first-appearance order.
std::vector<CensusHouseholdRecord> ingest_census(std::istream& in,
                                                 std::string_view source_name = "census");

// Samples n households for the region, with replacement, proportionally to
// record weights (uniform when the weight column was absent). Sampled
// households copy the record's members and bracket verbatim and share the
// params bundle.
std::vector<Household> populate_households(std::span<const CensusHouseholdRecord> records,
                                           std::string_view region, int n,
                                           std::shared_ptr<const HouseholdParams> params,
                                           RngStream& rng);

}  // namespace resload
