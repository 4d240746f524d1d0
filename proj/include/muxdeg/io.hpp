#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "muxdeg/analysis.hpp"
#include "muxdeg/core.hpp"

namespace muxdeg {

/// One per-layer edge-list CSV. The column map absorbs naming drift between
/// corpora; a missing weight column means every edge gets weight 1.
struct LayerSourceSpec {
    std::string path;
    std::string layer_name;
    std::string source_column = "source";
    std::string target_column = "target";
    std::string weight_column = "weight";
};

struct LayerStats {
    LayerId layer;
    std::size_t active_actors = 0;
    std::size_t edges = 0;
};

struct SharedActorStats {
    LayerId layer_a;
    LayerId layer_b;
    std::size_t count = 0;
};

/// Counts recomputed from the loaded network, never cached elsewhere.
struct ValidationReport {
    std::vector<LayerStats> layers;
    std::vector<SharedActorStats> shared; // one entry per unordered layer pair
    std::size_t total_actors = 0;
    std::size_t intralayer_edges = 0;
    std::size_t coupling_edges = 0; // N * L*(L-1)/2 under full categorical coupling
    std::vector<std::string> warnings;
};

struct LoadResult {
    MultiplexNetwork network;
    ValidationReport report;
};

LoadResult load_network(const std::vector<LayerSourceSpec>& specs);

struct RolesResult {
    RoleMap roles;
    std::vector<std::string> warnings;
};

/// Roles CSV with columns actor,role[,family]. Duplicate actors keep the last
/// record and add a warning.
RolesResult load_roles(const std::string& path);

/// Warnings for role records whose actor does not appear in the network.
std::vector<std::string> role_warnings(const MultiplexNetwork& net, const RoleMap& roles);

enum class ExportFormat { csv, json };

/// CSV/JSON column key for a layer name: lower-cased, non-alphanumerics
/// folded to '_' ("Phone Calls" -> "phone_calls").
std::string layer_column_name(const std::string& layer_name);

// All serializers produce deterministic bytes: stable key order, integer
// formatting only, LF line endings.
void export_degree_table(const DegreeTable& table, const ValidationReport* report,
                         ExportFormat format, std::ostream& out);
void export_ranking(const std::vector<RankingEntry>& ranking, ExportFormat format,
                    std::ostream& out);
void export_histogram(const std::vector<HistogramSeries>& series, ExportFormat format,
                      std::ostream& out);
void export_validation_report(const ValidationReport& report, ExportFormat format,
                              std::ostream& out);

void export_degree_table(const DegreeTable& table, const ValidationReport* report,
                         ExportFormat format, const std::string& path);
void export_ranking(const std::vector<RankingEntry>& ranking, ExportFormat format,
                    const std::string& path);
void export_histogram(const std::vector<HistogramSeries>& series, ExportFormat format,
                      const std::string& path);
void export_validation_report(const ValidationReport& report, ExportFormat format,
                              const std::string& path);

/// Canonical edge list of one layer (source,target,weight; u < v; sorted),
/// suitable for reloading through load_network.
std::string layer_edgelist_csv(const MultiplexNetwork& net, const LayerId& layer);

void write_text_file(const std::string& path, const std::string& content);

} // namespace muxdeg
