#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "resload/activity.hpp"
#include "resload/rng.hpp"

namespace resload {

inline constexpr int kHoursPerDay = 24;

/// Hourly, label- and day-type-conditioned 9x9 transition matrices calibrated
/// from activity logs, plus the midnight initial-state distributions.
///
/// Calibration keeps raw observation counts; every probability row is the
/// count row normalized, so a set rebuilt from its own counts reproduces the
/// probabilities exactly.
///
/// Sparse cells resolve through a fixed fallback hierarchy, pooling counts by
/// dropping label fields in the order parental_status, occupation_category,
/// employment_status, age_bin, then the global (all-label) pool for the same
/// day type and hour. A state with no observations anywhere resolves to the
/// self-transition row. Resolved rows are precomputed, so lookups during
/// sampling are table reads.
///
/// Immutable after construction and safe to share across threads.
class TransitionMatrixSet {
public:
    using Row = std::array<double, kActivityStateCount>;

    /// Calibrates from records (empirical frequencies per cell). Throws
    /// SimulationError on an empty collection.
    static TransitionMatrixSet build(std::span<const ActivityLogRecord> records);

    /// Rebuilds from retained counts (the archive load path and the count
    /// consistency check).
    static TransitionMatrixSet from_counts(std::vector<std::uint64_t> transition_counts,
                                           std::vector<std::uint64_t> initial_counts);

    /// The resolved row for (label, day, hour, from): the calibrated row when
    /// the cell was observed, otherwise the first populated fallback row.
    /// Always sums to 1 within 1e-9.
    const Row& row(const PersonLabel& label, DayType day, int hour, ActivityState from) const;

    /// Resolved midnight state distribution (same fallback hierarchy; if even
    /// the day type's global pool is empty the other day type's pool is used).
    const Row& initial_distribution(const PersonLabel& label, DayType day) const;

    /// True when the fully-labeled cell itself has observations out of `from`.
    bool cell_observed(const PersonLabel& label, DayType day, int hour, ActivityState from) const;

    std::uint64_t transition_count(const PersonLabel& label, DayType day, int hour,
                                   ActivityState from, ActivityState to) const;
    std::uint64_t initial_count(const PersonLabel& label, DayType day, ActivityState state) const;

    // Flat count storage, indexed by cell_index/initial_index below. Exposed
    // for serialization and for rebuild-from-counts checks.
    const std::vector<std::uint64_t>& transition_counts() const { return counts_; }
    const std::vector<std::uint64_t>& initial_counts() const { return initial_counts_; }

    static std::size_t cell_index(int label, int day, int hour, int from, int to);
    static std::size_t initial_index(int label, int day, int state);

    /// Number of fully-labeled (label, day, hour, from) rows with at least one
    /// observation. Calibration-report material.
    std::size_t populated_row_count() const;
    std::uint64_t total_transition_observations() const;

private:
    TransitionMatrixSet() = default;
    void resolve();

    std::vector<std::uint64_t> counts_;          // [label][day][hour][from][to]
    std::vector<std::uint64_t> initial_counts_;  // [label][day][state]
    std::vector<Row> resolved_rows_;             // [label][day][hour][from]
    std::vector<Row> resolved_initial_;          // [label][day]
};

/// Samples a 10-minute-resolution activity sequence over `calendar` (one
/// DayType per simulated day). The first slot is drawn from the initial
/// distribution of the first day; each later slot is drawn from the row at
/// the source slot's hour. Day boundaries chain the 23:50 state into the next
/// day's 00:00 transition using the next day's day-type matrices.
OccupancySequence sample_activity_sequence(const TransitionMatrixSet& set,
                                           const PersonLabel& label,
                                           std::span<const DayType> calendar, RngStream& rng,
                                           int person_index = 0);

/// Archive I/O: a versioned CSV bundle of the retained counts (sparse; only
/// nonzero cells are written). Loading rebuilds probabilities from counts, so
/// the round trip is exact.
void save_matrix_archive(const TransitionMatrixSet& set, std::ostream& out);
TransitionMatrixSet load_matrix_archive(std::istream& in,
                                        std::string_view source_name = "matrix archive");

}  // namespace resload
