#include "muxdeg/core.hpp"

#include <algorithm>

namespace muxdeg {

LayerId NetworkBuilder::add_layer(const std::string& name)
{
    if (name.empty()) {
        throw Error(ErrorKind::invalid_argument, "layer name must be non-empty");
    }
    for (const auto& layer : layers_) {
        if (layer.name == name) {
            throw Error(ErrorKind::duplicate_layer, "layer \"" + name + "\" already registered");
        }
    }
    layers_.push_back(LayerId{layers_.size(), name});
    edges_.emplace_back();
    return layers_.back();
}

void NetworkBuilder::add_actor(ActorId id)
{
    if (id < 0) {
        throw Error(ErrorKind::invalid_argument,
                    "actor ids are non-negative, got " + std::to_string(id));
    }
    actors_.insert(id);
}

void NetworkBuilder::add_edge(const LayerId& layer, ActorId u, ActorId v, std::int64_t weight)
{
    if (layer.index >= layers_.size() || layers_[layer.index].name != layer.name) {
        throw Error(ErrorKind::not_found, "unknown layer \"" + layer.name + "\"");
    }
    if (u == v) {
        throw Error(ErrorKind::self_loop_forbidden,
                    "self-loop on actor " + std::to_string(u) + " in layer \"" + layer.name +
                        "\"");
    }
    if (weight < 1) {
        throw Error(ErrorKind::invalid_weight,
                    "edge weight must be >= 1, got " + std::to_string(weight));
    }
    add_actor(u);
    add_actor(v);

    auto key = std::minmax(u, v);
    auto [it, inserted] = edges_[layer.index].try_emplace(key, weight);
    if (!inserted) {
        it->second += weight;
        warnings_.push_back("layer \"" + layer.name + "\": duplicate edge (" +
                            std::to_string(key.first) + ", " + std::to_string(key.second) +
                            "), weights summed to " + std::to_string(it->second));
    }
}

MultiplexNetwork NetworkBuilder::build() const
{
    MultiplexNetwork net;
    net.actors_.assign(actors_.begin(), actors_.end()); // std::set iterates ascending
    net.index_.reserve(net.actors_.size());
    for (std::size_t i = 0; i < net.actors_.size(); ++i) {
        net.index_.emplace(net.actors_[i], i);
    }
    net.layers_ = layers_;
    net.adj_.assign(layers_.size(),
                    std::vector<std::vector<MultiplexNetwork::Neighbor>>(net.actors_.size()));
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        for (const auto& [key, weight] : edges_[l]) {
            net.edges_.push_back(EdgeRecord{l, key.first, key.second, weight});
            const std::size_t iu = net.index_.at(key.first);
            const std::size_t iv = net.index_.at(key.second);
            net.adj_[l][iu].emplace_back(iv, weight);
            net.adj_[l][iv].emplace_back(iu, weight);
        }
        for (auto& row : net.adj_[l]) {
            std::sort(row.begin(), row.end());
        }
    }
    return net;
}

const LayerId& MultiplexNetwork::layer(std::string_view name) const
{
    for (const auto& layer : layers_) {
        if (layer.name == name) {
            return layer;
        }
    }
    throw Error(ErrorKind::not_found, "unknown layer \"" + std::string(name) + "\"");
}

bool MultiplexNetwork::has_actor(ActorId id) const
{
    return index_.contains(id);
}

std::size_t MultiplexNetwork::actor_index(ActorId id) const
{
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw Error(ErrorKind::not_found, "unknown actor " + std::to_string(id));
    }
    return it->second;
}

std::size_t MultiplexNetwork::resolve(const LayerId& layer) const
{
    if (layer.index >= layers_.size() || layers_[layer.index].name != layer.name) {
        throw Error(ErrorKind::not_found, "unknown layer \"" + layer.name + "\"");
    }
    return layer.index;
}

std::size_t MultiplexNetwork::layer_edge_count(const LayerId& layer) const
{
    const std::size_t l = resolve(layer);
    std::size_t count = 0;
    for (const auto& edge : edges_) {
        count += edge.layer == l ? 1 : 0;
    }
    return count;
}

std::size_t MultiplexNetwork::active_actor_count(const LayerId& layer) const
{
    const std::size_t l = resolve(layer);
    std::size_t count = 0;
    for (const auto& row : adj_[l]) {
        count += row.empty() ? 0 : 1;
    }
    return count;
}

std::int64_t MultiplexNetwork::layer_degree(ActorId actor, const LayerId& layer) const
{
    const std::size_t l = resolve(layer);
    return static_cast<std::int64_t>(adj_[l][actor_index(actor)].size());
}

std::int64_t MultiplexNetwork::layer_strength(ActorId actor, const LayerId& layer) const
{
    const std::size_t l = resolve(layer);
    std::int64_t sum = 0;
    for (const auto& [_, weight] : adj_[l][actor_index(actor)]) {
        sum += weight;
    }
    return sum;
}

PresenceProfile MultiplexNetwork::presence_profile(ActorId actor) const
{
    const std::size_t i = actor_index(actor);
    PresenceProfile profile{actor, {}};
    for (std::size_t l = 0; l < layers_.size(); ++l) {
        if (!adj_[l][i].empty()) {
            profile.active_layers.push_back(layers_[l]);
        }
    }
    return profile;
}

std::size_t MultiplexNetwork::shared_actor_count(const LayerId& a, const LayerId& b) const
{
    const std::size_t la = resolve(a);
    const std::size_t lb = resolve(b);
    std::size_t count = 0;
    for (std::size_t i = 0; i < actors_.size(); ++i) {
        if (!adj_[la][i].empty() && !adj_[lb][i].empty()) {
            ++count;
        }
    }
    return count;
}

const std::vector<MultiplexNetwork::Neighbor>&
MultiplexNetwork::neighbors(std::size_t layer_index, std::size_t actor_index) const
{
    return adj_.at(layer_index).at(actor_index);
}

} // namespace muxdeg
