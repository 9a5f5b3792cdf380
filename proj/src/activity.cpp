#include "resload/activity.hpp"

#include <charconv>

#include "resload/csv.hpp"

namespace resload {

namespace {

[[noreturn]] void bad_category(std::string_view source, std::size_t row,
                               std::string_view field, std::string_view value,
                               std::string_view expected) {
    throw IngestError(source, row, field,
                      "unknown value '" + std::string{value} + "', expected one of " +
                          std::string{expected});
}

}  // namespace

std::string_view to_string(ActivityState s) {
    switch (s) {
        case ActivityState::Away: return "away";
        case ActivityState::Sleeping: return "sleeping";
        case ActivityState::Grooming: return "grooming";
        case ActivityState::Cooking: return "cooking";
        case ActivityState::Dishwashing: return "dishwashing";
        case ActivityState::Cleaning: return "cleaning";
        case ActivityState::Laundry: return "laundry";
        case ActivityState::Leisure: return "leisure";
        case ActivityState::Other: return "other";
    }
    return "?";
}

std::string_view to_string(DayType d) {
    return d == DayType::Weekday ? "weekday" : "weekend";
}

std::string_view to_string(AgeBin a) {
    switch (a) {
        case AgeBin::Age15To24: return "15-24";
        case AgeBin::Age25To44: return "25-44";
        case AgeBin::Age45To64: return "45-64";
        case AgeBin::Age65Plus: return "65+";
    }
    return "?";
}

std::string_view to_string(Employment e) {
    return e == Employment::Employed ? "employed" : "not-employed";
}

std::string_view to_string(Occupation o) {
    switch (o) {
        case Occupation::None: return "none";
        case Occupation::Office: return "office";
        case Occupation::Service: return "service";
        case Occupation::Manual: return "manual";
        case Occupation::Other: return "other";
    }
    return "?";
}

std::string_view to_string(ParentalStatus p) {
    return p == ParentalStatus::Parent ? "parent" : "non-parent";
}

std::string to_string(const PersonLabel& l) {
    std::string out{to_string(l.age_bin)};
    out += "/";
    out += to_string(l.employment);
    out += "/";
    out += to_string(l.occupation);
    out += "/";
    out += to_string(l.parental);
    return out;
}

AgeBin parse_age_bin(std::string_view v, std::string_view source, std::size_t row) {
    if (v == "15-24") return AgeBin::Age15To24;
    if (v == "25-44") return AgeBin::Age25To44;
    if (v == "45-64") return AgeBin::Age45To64;
    if (v == "65+") return AgeBin::Age65Plus;
    bad_category(source, row, "age_bin", v, "{15-24, 25-44, 45-64, 65+}");
}

Employment parse_employment(std::string_view v, std::string_view source, std::size_t row) {
    if (v == "employed") return Employment::Employed;
    if (v == "not-employed") return Employment::NotEmployed;
    bad_category(source, row, "employment_status", v, "{employed, not-employed}");
}

Occupation parse_occupation(std::string_view v, std::string_view source, std::size_t row) {
    if (v == "none") return Occupation::None;
    if (v == "office") return Occupation::Office;
    if (v == "service") return Occupation::Service;
    if (v == "manual") return Occupation::Manual;
    if (v == "other") return Occupation::Other;
    bad_category(source, row, "occupation_category", v, "{none, office, service, manual, other}");
}

ParentalStatus parse_parental(std::string_view v, std::string_view source, std::size_t row) {
    if (v == "parent") return ParentalStatus::Parent;
    if (v == "non-parent") return ParentalStatus::NonParent;
    bad_category(source, row, "parental_status", v, "{parent, non-parent}");
}

DayType parse_day_type(std::string_view v, std::string_view source, std::size_t row) {
    if (v == "weekday") return DayType::Weekday;
    if (v == "weekend") return DayType::Weekend;
    bad_category(source, row, "day_type", v, "{weekday, weekend}");
}

std::vector<ActivityLogRecord> ingest_activity_logs(std::istream& in,
                                                    std::string_view source_name) {
    csv::Reader reader{in, std::string{source_name}};

    const std::size_t col_id = reader.column("respondent_id");
    const std::size_t col_age = reader.column("age_bin");
    const std::size_t col_emp = reader.column("employment_status");
    const std::size_t col_occ = reader.column("occupation_category");
    const std::size_t col_par = reader.column("parental_status");
    const std::size_t col_day = reader.column("day_type");

    // Slot columns must be present as s000..s143 exactly; a shorter or longer
    // run is reported as a slot-count violation rather than a generic missing
    // column so the failure mode named in the schema is recognizable.
    std::array<std::size_t, kSlotsPerDay> slot_cols{};
    int found_slots = 0;
    for (int s = 0;; ++s) {
        char name[16];
        std::snprintf(name, sizeof name, "s%03d", s);
        if (!reader.has_column(name)) break;
        if (s < kSlotsPerDay) slot_cols[static_cast<std::size_t>(s)] = reader.column(name);
        ++found_slots;
    }
    if (found_slots != kSlotsPerDay) {
        throw IngestError(source_name, 1, "slots",
                          "slot count must be 144 (s000..s143), found " +
                              std::to_string(found_slots) + " slot columns");
    }

    auto advance = [&]() {
        try {
            return reader.next();
        } catch (const IngestError& e) {
            // A short or long row is in practice a wrong slot count; report it
            // in those terms.
            throw IngestError(source_name, e.row(), "slots",
                              "slot count != 144 (wrong number of fields in row)");
        }
    };

    std::vector<ActivityLogRecord> records;
    while (advance()) {
        ActivityLogRecord rec;
        rec.respondent_id = std::string{reader.field(col_id)};
        if (rec.respondent_id.empty()) reader.fail("respondent_id", "must not be empty");
        rec.label.age_bin = parse_age_bin(reader.field(col_age), reader.source(), reader.row());
        rec.label.employment =
            parse_employment(reader.field(col_emp), reader.source(), reader.row());
        rec.label.occupation =
            parse_occupation(reader.field(col_occ), reader.source(), reader.row());
        rec.label.parental = parse_parental(reader.field(col_par), reader.source(), reader.row());
        rec.day_type = parse_day_type(reader.field(col_day), reader.source(), reader.row());

        for (int s = 0; s < kSlotsPerDay; ++s) {
            char name[8];
            std::snprintf(name, sizeof name, "s%03d", s);
            long long code = reader.integer(slot_cols[static_cast<std::size_t>(s)], name);
            if (code < 0 || code >= kActivityStateCount) {
                reader.fail(name, "state code " + std::to_string(code) + " outside 0-8");
            }
            rec.slots[static_cast<std::size_t>(s)] = static_cast<ActivityState>(code);
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace resload
