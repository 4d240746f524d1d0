#include "muxdeg/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace muxdeg {

std::string RoleRecord::display() const
{
    if (family.empty()) {
        return role;
    }
    return role + " " + family + " Family";
}

DegreeVector approach1_aggregate_degrees(const MultiplexNetwork& net)
{
    const std::size_t n = net.actor_count();
    std::set<std::pair<std::size_t, std::size_t>> support;
    for (const auto& edge : net.edges()) {
        const auto iu = net.actor_index(edge.u);
        const auto iv = net.actor_index(edge.v);
        support.insert(std::minmax(iu, iv));
    }
    std::vector<Triplet> entries;
    entries.reserve(support.size() * 2);
    for (const auto& [iu, iv] : support) {
        entries.push_back(Triplet{iu, iv, 1});
        entries.push_back(Triplet{iv, iu, 1});
    }
    return degree_vector(SparseMatrix::from_triplets(n, n, std::move(entries)),
                         DegreeMode::binary);
}

std::vector<std::pair<LayerId, DegreeVector>>
approach2_per_layer_degrees(const MultiplexNetwork& net)
{
    std::vector<std::pair<LayerId, DegreeVector>> result;
    result.reserve(net.layer_count());
    for (const auto& layer : net.layers()) {
        result.emplace_back(layer,
                            degree_vector(layer_adjacency(net, layer).matrix, DegreeMode::binary));
    }
    return result;
}

DegreeVector approach3_multilayer_degrees(const MultiplexNetwork& net)
{
    return multidegree(net);
}

std::vector<RankingEntry> rank_top_k(const MultiplexNetwork& net, const DegreeVector& scores,
                                     std::size_t k, const RoleMap* roles)
{
    if (k < 1) {
        throw Error(ErrorKind::invalid_argument, "k must be >= 1");
    }
    const std::size_t n = net.actor_count();
    if (scores.values.size() != n) {
        throw Error(ErrorKind::dimension_mismatch,
                    "score vector has " + std::to_string(scores.values.size()) +
                        " entries for " + std::to_string(n) + " actors");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (scores.values[a] != scores.values[b]) {
            return scores.values[a] > scores.values[b];
        }
        return net.actors()[a] < net.actors()[b]; // deterministic tie break
    });

    std::vector<RankingEntry> ranking;
    const std::size_t take = std::min(k, n);
    ranking.reserve(take);
    for (std::size_t pos = 0; pos < take; ++pos) {
        const ActorId actor = net.actors()[order[pos]];
        RankingEntry entry{pos + 1, actor, scores.values[order[pos]], std::nullopt};
        if (roles != nullptr) {
            if (auto it = roles->find(actor); it != roles->end()) {
                entry.role = it->second;
            }
        }
        ranking.push_back(std::move(entry));
    }
    return ranking;
}

DegreeTable comparison_table(const MultiplexNetwork& net, const RoleMap* roles, std::size_t k)
{
    if (k < 1) {
        throw Error(ErrorKind::invalid_argument, "k must be >= 1");
    }
    DegreeTable table;
    table.layer_order.assign(net.layers().rbegin(), net.layers().rend());
    if (net.actor_count() == 0) {
        return table;
    }

    const DegreeVector multi = approach3_multilayer_degrees(net);
    const DegreeVector aggregate = approach1_aggregate_degrees(net);
    const auto per_layer = approach2_per_layer_degrees(net);

    for (const auto& entry : rank_top_k(net, multi, k, roles)) {
        const std::size_t i = net.actor_index(entry.actor);
        DegreeTableRow row;
        row.actor = entry.actor;
        row.role = entry.role;
        row.multilayer = multi.values[i];
        row.aggregate = aggregate.values[i];
        for (const auto& layer : table.layer_order) {
            const std::int64_t degree = per_layer[layer.index].second.values[i];
            if (degree > 0) {
                row.per_layer.emplace_back(degree);
            } else {
                row.per_layer.emplace_back(std::nullopt); // absent node
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::vector<HistogramSeries> histogram_data(const DegreeTable& table)
{
    if (table.rows.empty()) {
        throw Error(ErrorKind::empty_input, "degree table has no rows");
    }
    std::vector<HistogramSeries> series;
    series.reserve(table.rows.size());
    for (const auto& row : table.rows) {
        HistogramSeries s;
        s.actor = row.actor;
        s.values.emplace_back("Multilayer", row.multilayer);
        s.values.emplace_back("Aggregate", row.aggregate);
        for (std::size_t c = 0; c < table.layer_order.size(); ++c) {
            s.values.emplace_back(table.layer_order[c].name, row.per_layer[c].value_or(0));
        }
        series.push_back(std::move(s));
    }
    return series;
}

} // namespace muxdeg
