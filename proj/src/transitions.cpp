#include "resload/transitions.hpp"

#include <cstdio>
#include <string>

#include "resload/csv.hpp"
#include "resload/errors.hpp"

namespace resload {

namespace {

constexpr int kS = kActivityStateCount;
constexpr int kCells = kLabelCount * kDayTypeCount * kHoursPerDay;

// Label field accessors for the pooling hierarchy.
int age_of(int label) { return label / (kEmploymentCount * kOccupationCount * kParentalCount); }
int emp_of(int label) { return label / (kOccupationCount * kParentalCount) % kEmploymentCount; }
int occ_of(int label) { return label / kParentalCount % kOccupationCount; }

}  // namespace

std::size_t TransitionMatrixSet::cell_index(int label, int day, int hour, int from, int to) {
    return static_cast<std::size_t>((((label * kDayTypeCount + day) * kHoursPerDay + hour) * kS +
                                     from) *
                                        kS +
                                    to);
}

std::size_t TransitionMatrixSet::initial_index(int label, int day, int state) {
    return static_cast<std::size_t>((label * kDayTypeCount + day) * kS + state);
}

TransitionMatrixSet TransitionMatrixSet::build(std::span<const ActivityLogRecord> records) {
    if (records.empty()) {
        throw SimulationError("cannot calibrate transition matrices from an empty record collection");
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(kCells) * kS * kS, 0);
    std::vector<std::uint64_t> initial(static_cast<std::size_t>(kLabelCount) * kDayTypeCount * kS,
                                       0);
    for (const auto& rec : records) {
        const int label = rec.label.index();
        const int day = static_cast<int>(rec.day_type);
        initial[initial_index(label, day, static_cast<int>(rec.slots[0]))] += 1;
        for (int t = 0; t + 1 < kSlotsPerDay; ++t) {
            // The transition is attributed to the hour containing the source
            // slot (six 10-minute slots per hour).
            const int hour = t / 6;
            const int from = static_cast<int>(rec.slots[static_cast<std::size_t>(t)]);
            const int to = static_cast<int>(rec.slots[static_cast<std::size_t>(t + 1)]);
            counts[cell_index(label, day, hour, from, to)] += 1;
        }
    }
    return from_counts(std::move(counts), std::move(initial));
}

TransitionMatrixSet TransitionMatrixSet::from_counts(std::vector<std::uint64_t> transition_counts,
                                                     std::vector<std::uint64_t> initial_counts) {
    const std::size_t want_counts = static_cast<std::size_t>(kCells) * kS * kS;
    const std::size_t want_initial = static_cast<std::size_t>(kLabelCount) * kDayTypeCount * kS;
    if (transition_counts.size() != want_counts || initial_counts.size() != want_initial) {
        throw SimulationError("transition count arrays have the wrong shape");
    }
    TransitionMatrixSet set;
    set.counts_ = std::move(transition_counts);
    set.initial_counts_ = std::move(initial_counts);
    set.resolve();
    return set;
}

void TransitionMatrixSet::resolve() {
    // Pooled counts per fallback level. Level 1 drops parental status, level 2
    // occupation, level 3 employment, level 4 age (the global pool).
    const std::size_t row_len = kS;
    auto pool_rows = [&](int groups) {
        return std::vector<std::uint64_t>(
            static_cast<std::size_t>(groups) * kDayTypeCount * kHoursPerDay * kS * row_len, 0);
    };
    const int g1 = kAgeBinCount * kEmploymentCount * kOccupationCount;
    const int g2 = kAgeBinCount * kEmploymentCount;
    const int g3 = kAgeBinCount;
    std::vector<std::uint64_t> l1 = pool_rows(g1);
    std::vector<std::uint64_t> l2 = pool_rows(g2);
    std::vector<std::uint64_t> l3 = pool_rows(g3);
    std::vector<std::uint64_t> l4 = pool_rows(1);

    auto pooled_index = [](int group, int day, int hour, int from, int to) {
        return static_cast<std::size_t>(
            (((group * kDayTypeCount + day) * kHoursPerDay + hour) * kS + from) * kS + to);
    };

    for (int label = 0; label < kLabelCount; ++label) {
        const int a = age_of(label);
        const int e = emp_of(label);
        const int o = occ_of(label);
        const int i1 = (a * kEmploymentCount + e) * kOccupationCount + o;
        const int i2 = a * kEmploymentCount + e;
        for (int day = 0; day < kDayTypeCount; ++day) {
            for (int hour = 0; hour < kHoursPerDay; ++hour) {
                for (int from = 0; from < kS; ++from) {
                    for (int to = 0; to < kS; ++to) {
                        const std::uint64_t c = counts_[cell_index(label, day, hour, from, to)];
                        if (c == 0) continue;
                        l1[pooled_index(i1, day, hour, from, to)] += c;
                        l2[pooled_index(i2, day, hour, from, to)] += c;
                        l3[pooled_index(a, day, hour, from, to)] += c;
                        l4[pooled_index(0, day, hour, from, to)] += c;
                    }
                }
            }
        }
    }

    auto normalize = [](const std::uint64_t* row, Row& out) {
        std::uint64_t total = 0;
        for (int j = 0; j < kS; ++j) total += row[j];
        if (total == 0) return false;
        for (int j = 0; j < kS; ++j) {
            out[static_cast<std::size_t>(j)] =
                static_cast<double>(row[j]) / static_cast<double>(total);
        }
        return true;
    };

    resolved_rows_.assign(static_cast<std::size_t>(kCells) * kS, Row{});
    for (int label = 0; label < kLabelCount; ++label) {
        const int a = age_of(label);
        const int e = emp_of(label);
        const int o = occ_of(label);
        const int i1 = (a * kEmploymentCount + e) * kOccupationCount + o;
        const int i2 = a * kEmploymentCount + e;
        for (int day = 0; day < kDayTypeCount; ++day) {
            for (int hour = 0; hour < kHoursPerDay; ++hour) {
                for (int from = 0; from < kS; ++from) {
                    Row& out = resolved_rows_[(static_cast<std::size_t>(
                                                   (label * kDayTypeCount + day) * kHoursPerDay +
                                                   hour) *
                                               kS) +
                                              static_cast<std::size_t>(from)];
                    if (normalize(&counts_[cell_index(label, day, hour, from, 0)], out)) continue;
                    if (normalize(&l1[pooled_index(i1, day, hour, from, 0)], out)) continue;
                    if (normalize(&l2[pooled_index(i2, day, hour, from, 0)], out)) continue;
                    if (normalize(&l3[pooled_index(a, day, hour, from, 0)], out)) continue;
                    if (normalize(&l4[pooled_index(0, day, hour, from, 0)], out)) continue;
                    out.fill(0.0);
                    out[static_cast<std::size_t>(from)] = 1.0;  // terminal fallback
                }
            }
        }
    }

    // Initial distributions pool through the same label hierarchy. A day type
    // with no records at all borrows the other day type's pool; both empty is
    // precluded by build(), but from_counts permits it, in which case midnight
    // defaults to Sleeping.
    resolved_initial_.assign(static_cast<std::size_t>(kLabelCount) * kDayTypeCount, Row{});
    auto initial_pool = [&](int day, auto&& match) {
        std::array<std::uint64_t, kS> acc{};
        for (int label = 0; label < kLabelCount; ++label) {
            if (!match(label)) continue;
            for (int s = 0; s < kS; ++s) {
                acc[static_cast<std::size_t>(s)] += initial_counts_[initial_index(label, day, s)];
            }
        }
        return acc;
    };
    for (int label = 0; label < kLabelCount; ++label) {
        const int a = age_of(label);
        const int e = emp_of(label);
        const int o = occ_of(label);
        for (int day = 0; day < kDayTypeCount; ++day) {
            Row& out = resolved_initial_[static_cast<std::size_t>(label * kDayTypeCount + day)];
            auto try_pool = [&](auto&& match, int d) {
                auto acc = initial_pool(d, match);
                return normalize(acc.data(), out);
            };
            auto self = [&](int l) { return l == label; };
            auto drop_par = [&](int l) {
                return age_of(l) == a && emp_of(l) == e && occ_of(l) == o;
            };
            auto drop_occ = [&](int l) { return age_of(l) == a && emp_of(l) == e; };
            auto drop_emp = [&](int l) { return age_of(l) == a; };
            auto all = [](int) { return true; };
            if (try_pool(self, day) || try_pool(drop_par, day) || try_pool(drop_occ, day) ||
                try_pool(drop_emp, day) || try_pool(all, day) || try_pool(all, 1 - day)) {
                continue;
            }
            out.fill(0.0);
            out[static_cast<std::size_t>(ActivityState::Sleeping)] = 1.0;
        }
    }
}

const TransitionMatrixSet::Row& TransitionMatrixSet::row(const PersonLabel& label, DayType day,
                                                         int hour, ActivityState from) const {
    const std::size_t idx =
        static_cast<std::size_t>(
            (label.index() * kDayTypeCount + static_cast<int>(day)) * kHoursPerDay + hour) *
            kS +
        static_cast<std::size_t>(from);
    return resolved_rows_[idx];
}

const TransitionMatrixSet::Row& TransitionMatrixSet::initial_distribution(const PersonLabel& label,
                                                                          DayType day) const {
    return resolved_initial_[static_cast<std::size_t>(label.index() * kDayTypeCount +
                                                      static_cast<int>(day))];
}

bool TransitionMatrixSet::cell_observed(const PersonLabel& label, DayType day, int hour,
                                        ActivityState from) const {
    const std::size_t base =
        cell_index(label.index(), static_cast<int>(day), hour, static_cast<int>(from), 0);
    for (int to = 0; to < kS; ++to) {
        if (counts_[base + static_cast<std::size_t>(to)] > 0) return true;
    }
    return false;
}

std::uint64_t TransitionMatrixSet::transition_count(const PersonLabel& label, DayType day,
                                                    int hour, ActivityState from,
                                                    ActivityState to) const {
    return counts_[cell_index(label.index(), static_cast<int>(day), hour, static_cast<int>(from),
                              static_cast<int>(to))];
}

std::uint64_t TransitionMatrixSet::initial_count(const PersonLabel& label, DayType day,
                                                 ActivityState state) const {
    return initial_counts_[initial_index(label.index(), static_cast<int>(day),
                                         static_cast<int>(state))];
}

std::size_t TransitionMatrixSet::populated_row_count() const {
    std::size_t populated = 0;
    for (std::size_t r = 0; r < counts_.size(); r += kS) {
        for (int j = 0; j < kS; ++j) {
            if (counts_[r + static_cast<std::size_t>(j)] > 0) {
                ++populated;
                break;
            }
        }
    }
    return populated;
}

std::uint64_t TransitionMatrixSet::total_transition_observations() const {
    std::uint64_t total = 0;
    for (auto c : counts_) total += c;
    return total;
}

OccupancySequence sample_activity_sequence(const TransitionMatrixSet& set,
                                           const PersonLabel& label,
                                           std::span<const DayType> calendar, RngStream& rng,
                                           int person_index) {
    if (calendar.empty()) {
        throw SimulationError("sample_activity_sequence requires a non-empty calendar");
    }
    OccupancySequence seq;
    seq.person_index = person_index;
    seq.slots.resize(calendar.size() * kSlotsPerDay);

    const auto& init = set.initial_distribution(label, calendar[0]);
    auto state = static_cast<ActivityState>(rng.sample_discrete(init));
    seq.slots[0] = state;

    for (std::size_t g = 1; g < seq.slots.size(); ++g) {
        const std::size_t day = g / kSlotsPerDay;
        const int slot_in_day = static_cast<int>(g % kSlotsPerDay);
        // Source-slot hour; the midnight transition (slot 143 -> slot 0) keeps
        // hour 23 but uses the new day's day-type matrices.
        const int hour = slot_in_day == 0 ? 23 : (slot_in_day - 1) / 6;
        const auto& row = set.row(label, calendar[day], hour, state);
        state = static_cast<ActivityState>(rng.sample_discrete(row));
        seq.slots[g] = state;
    }
    return seq;
}

namespace {

constexpr std::string_view kArchiveMagic = "resload-matrices v1";

PersonLabel label_from_index(int index) {
    PersonLabel l;
    l.age_bin = static_cast<AgeBin>(age_of(index));
    l.employment = static_cast<Employment>(emp_of(index));
    l.occupation = static_cast<Occupation>(occ_of(index));
    l.parental = static_cast<ParentalStatus>(index % kParentalCount);
    return l;
}

}  // namespace

void save_matrix_archive(const TransitionMatrixSet& set, std::ostream& out) {
    std::string buf;
    buf.reserve(1 << 16);
    buf += kArchiveMagic;
    buf += "\nkind,age_bin,employment_status,occupation_category,parental_status,day_type,hour,"
           "from_state,to_state,count\n";
    auto flush = [&] {
        out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        buf.clear();
    };
    for (int label = 0; label < kLabelCount; ++label) {
        const PersonLabel pl = label_from_index(label);
        std::string prefix = std::string{to_string(pl.age_bin)} + "," +
                             std::string{to_string(pl.employment)} + "," +
                             std::string{to_string(pl.occupation)} + "," +
                             std::string{to_string(pl.parental)};
        for (int day = 0; day < kDayTypeCount; ++day) {
            const auto day_name = to_string(static_cast<DayType>(day));
            for (int s = 0; s < kActivityStateCount; ++s) {
                const std::uint64_t c = set.initial_counts()[TransitionMatrixSet::initial_index(
                    label, day, s)];
                if (c == 0) continue;
                buf += "initial,";
                buf += prefix;
                buf += ",";
                buf += day_name;
                buf += ",,,";
                csv::append_number(buf, static_cast<std::int64_t>(s));
                buf += ",";
                csv::append_number(buf, static_cast<std::int64_t>(c));
                buf += "\n";
            }
            for (int hour = 0; hour < kHoursPerDay; ++hour) {
                for (int from = 0; from < kActivityStateCount; ++from) {
                    for (int to = 0; to < kActivityStateCount; ++to) {
                        const std::uint64_t c = set.transition_counts()
                            [TransitionMatrixSet::cell_index(label, day, hour, from, to)];
                        if (c == 0) continue;
                        buf += "transition,";
                        buf += prefix;
                        buf += ",";
                        buf += day_name;
                        buf += ",";
                        csv::append_number(buf, static_cast<std::int64_t>(hour));
                        buf += ",";
                        csv::append_number(buf, static_cast<std::int64_t>(from));
                        buf += ",";
                        csv::append_number(buf, static_cast<std::int64_t>(to));
                        buf += ",";
                        csv::append_number(buf, static_cast<std::int64_t>(c));
                        buf += "\n";
                        if (buf.size() > (1 << 15)) flush();
                    }
                }
            }
        }
    }
    flush();
}

TransitionMatrixSet load_matrix_archive(std::istream& in, std::string_view source_name) {
    std::string magic;
    if (!std::getline(in, magic)) {
        throw IngestError(source_name, 0, "", "empty archive");
    }
    if (!magic.empty() && magic.back() == '\r') magic.pop_back();
    if (magic != kArchiveMagic) {
        throw IngestError(source_name, 1, "",
                          "unrecognized archive header '" + magic + "', expected '" +
                              std::string{kArchiveMagic} + "'");
    }

    csv::Reader reader{in, std::string{source_name}};
    const auto col_kind = reader.column("kind");
    const auto col_age = reader.column("age_bin");
    const auto col_emp = reader.column("employment_status");
    const auto col_occ = reader.column("occupation_category");
    const auto col_par = reader.column("parental_status");
    const auto col_day = reader.column("day_type");
    const auto col_hour = reader.column("hour");
    const auto col_from = reader.column("from_state");
    const auto col_to = reader.column("to_state");
    const auto col_count = reader.column("count");

    std::vector<std::uint64_t> counts(
        static_cast<std::size_t>(kCells) * kActivityStateCount * kActivityStateCount, 0);
    std::vector<std::uint64_t> initial(
        static_cast<std::size_t>(kLabelCount) * kDayTypeCount * kActivityStateCount, 0);

    while (reader.next()) {
        PersonLabel label;
        label.age_bin = parse_age_bin(reader.field(col_age), reader.source(), reader.row());
        label.employment = parse_employment(reader.field(col_emp), reader.source(), reader.row());
        label.occupation = parse_occupation(reader.field(col_occ), reader.source(), reader.row());
        label.parental = parse_parental(reader.field(col_par), reader.source(), reader.row());
        const DayType day = parse_day_type(reader.field(col_day), reader.source(), reader.row());
        const long long count = reader.integer(col_count, "count");
        if (count < 0) reader.fail("count", "must be non-negative");
        const long long to = reader.integer(col_to, "to_state");
        if (to < 0 || to >= kActivityStateCount) reader.fail("to_state", "state outside 0-8");

        const auto kind = reader.field(col_kind);
        if (kind == "initial") {
            initial[TransitionMatrixSet::initial_index(label.index(), static_cast<int>(day),
                                                       static_cast<int>(to))] +=
                static_cast<std::uint64_t>(count);
        } else if (kind == "transition") {
            const long long hour = reader.integer(col_hour, "hour");
            if (hour < 0 || hour >= kHoursPerDay) reader.fail("hour", "hour outside 0-23");
            const long long from = reader.integer(col_from, "from_state");
            if (from < 0 || from >= kActivityStateCount) {
                reader.fail("from_state", "state outside 0-8");
            }
            counts[TransitionMatrixSet::cell_index(label.index(), static_cast<int>(day),
                                                   static_cast<int>(hour), static_cast<int>(from),
                                                   static_cast<int>(to))] +=
                static_cast<std::uint64_t>(count);
        } else {
            reader.fail("kind", "unknown kind '" + std::string{kind} + "'");
        }
    }
    return TransitionMatrixSet::from_counts(std::move(counts), std::move(initial));
}

}  // namespace resload
