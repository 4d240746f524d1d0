#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "muxdeg/core.hpp"
#include "muxdeg/tensor.hpp"

namespace muxdeg {

struct RoleRecord {
    ActorId actor = 0;
    std::string role;
    std::string family; // empty when the role is not tied to a family

    /// Rendering used in reports, e.g. "Caporegime Mistretta Family" or a
    /// bare "Pharmacist" when no family is attached.
    std::string display() const;
};

using RoleMap = std::map<ActorId, RoleRecord>;

struct RankingEntry {
    std::size_t rank = 0; // 1-based, contiguous
    ActorId actor = 0;
    std::int64_t score = 0;
    std::optional<RoleRecord> role;
};

struct DegreeTableRow {
    ActorId actor = 0;
    std::optional<RoleRecord> role;
    std::int64_t multilayer = 0;
    std::int64_t aggregate = 0;
    // aligned with DegreeTable::layer_order; nullopt marks an absent node
    std::vector<std::optional<std::int64_t>> per_layer;
};

struct DegreeTable {
    std::vector<LayerId> layer_order; // report column order, newest layer first
    std::vector<DegreeTableRow> rows; // by descending multidegree, ties by ascending id
};

/// Stacked-histogram record for one actor: (series name, value) pairs in
/// series order Multilayer, Aggregate, then the table's layer columns.
/// Absent-layer cells are carried as 0 here; the DegreeTable keeps the
/// absence marker.
struct HistogramSeries {
    ActorId actor = 0;
    std::vector<std::pair<std::string, std::int64_t>> values;
};

/// Degree on the flattened union network: one edge wherever any layer
/// connects the pair. This is the report's "aggregate" column, distinct from
/// the weight-summing overlay_network.
DegreeVector approach1_aggregate_degrees(const MultiplexNetwork& net);

/// Binary degree per layer, over the full actor set.
std::vector<std::pair<LayerId, DegreeVector>>
approach2_per_layer_degrees(const MultiplexNetwork& net);

/// Multidegree over the supra structure (see multidegree()).
DegreeVector approach3_multilayer_degrees(const MultiplexNetwork& net);

/// Top-k actors by score, descending; ties broken by ascending actor id.
/// Returns fewer than k entries only when the network has fewer actors.
std::vector<RankingEntry> rank_top_k(const MultiplexNetwork& net, const DegreeVector& scores,
                                     std::size_t k, const RoleMap* roles = nullptr);

/// The comparison table: top-k actors by multidegree with all four score
/// families and role annotations joined in.
DegreeTable comparison_table(const MultiplexNetwork& net, const RoleMap* roles, std::size_t k);

std::vector<HistogramSeries> histogram_data(const DegreeTable& table);

} // namespace muxdeg
