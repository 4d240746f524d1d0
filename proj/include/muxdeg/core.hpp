#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "muxdeg/errors.hpp"

namespace muxdeg {

/// Stable integer label identifying the same person on every layer.
/// Ids come from the source data and are sparse; no contiguity is assumed.
using ActorId = std::int64_t;

struct LayerId {
    std::size_t index = 0; // 0-based registration order
    std::string name;

    friend bool operator==(const LayerId&, const LayerId&) = default;
};

/// One undirected weighted intralayer edge, stored canonically with u < v.
struct EdgeRecord {
    std::size_t layer = 0;
    ActorId u = 0;
    ActorId v = 0;
    std::int64_t weight = 1;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

struct PresenceProfile {
    ActorId actor = 0;
    std::vector<LayerId> active_layers; // layers where the actor has positive degree
};

class MultiplexNetwork;

/// Mutating construction phase. Duplicate (layer,u,v) submissions merge their
/// weights and record a warning; self-loops and non-positive weights are rejected.
class NetworkBuilder {
public:
    LayerId add_layer(const std::string& name);

    /// Registers an actor with no edges (actors are otherwise auto-registered
    /// by add_edge). Idempotent.
    void add_actor(ActorId id);

    void add_edge(const LayerId& layer, ActorId u, ActorId v, std::int64_t weight = 1);

    const std::vector<std::string>& warnings() const
    {
        return warnings_;
    }

    MultiplexNetwork build() const;

private:
    std::vector<LayerId> layers_;
    std::set<ActorId> actors_;
    // per layer, canonical (u,v) -> accumulated weight
    std::vector<std::map<std::pair<ActorId, ActorId>, std::int64_t>> edges_;
    std::vector<std::string> warnings_;
};

/// Immutable multiplex network: actors, named layers, weighted intralayer
/// edges, and implicit categorical coupling (every actor is replicated on
/// every layer with a unit-weight edge between its own counterparts).
///
/// All queries are pure reads and safe to call concurrently.
class MultiplexNetwork {
public:
    // (actor index, weight), sorted by actor index
    using Neighbor = std::pair<std::size_t, std::int64_t>;

    std::size_t actor_count() const
    {
        return actors_.size();
    }

    std::size_t layer_count() const
    {
        return layers_.size();
    }

    /// Actor ids in ascending order. This is the fixed ordering shared by all
    /// matrices and degree vectors derived from the network.
    const std::vector<ActorId>& actors() const
    {
        return actors_;
    }

    const std::vector<LayerId>& layers() const
    {
        return layers_;
    }

    const LayerId& layer(std::string_view name) const;

    bool has_actor(ActorId id) const;

    /// Position of the actor in the fixed ordering.
    std::size_t actor_index(ActorId id) const;

    /// All intralayer edges, sorted by (layer, u, v).
    const std::vector<EdgeRecord>& edges() const
    {
        return edges_;
    }

    std::size_t layer_edge_count(const LayerId& layer) const;

    /// Actors with positive degree on the layer.
    std::size_t active_actor_count(const LayerId& layer) const;

    /// Count of distinct neighbours within the layer; weights are ignored.
    std::int64_t layer_degree(ActorId actor, const LayerId& layer) const;

    /// Sum of incident edge weights within the layer.
    std::int64_t layer_strength(ActorId actor, const LayerId& layer) const;

    PresenceProfile presence_profile(ActorId actor) const;

    /// Actors with positive degree in both layers. With a == b this is the
    /// layer's active-actor count.
    std::size_t shared_actor_count(const LayerId& a, const LayerId& b) const;

    /// Validates the handle against the registered layers and returns its index.
    std::size_t resolve(const LayerId& layer) const;

    const std::vector<Neighbor>& neighbors(std::size_t layer_index, std::size_t actor_index) const;

private:
    friend class NetworkBuilder;

    std::vector<ActorId> actors_;
    std::unordered_map<ActorId, std::size_t> index_;
    std::vector<LayerId> layers_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<std::vector<Neighbor>>> adj_; // [layer][actor index]
};

} // namespace muxdeg
