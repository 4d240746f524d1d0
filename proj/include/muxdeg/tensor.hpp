#pragma once

#include <cstdint>
#include <vector>

#include "muxdeg/core.hpp"
#include "muxdeg/sparse.hpp"

namespace muxdeg {

enum class DegreeMode {
    binary,   // count distinct neighbours (support of the column)
    weighted, // sum entry values
};

/// Symmetric N x N adjacency of one layer over the full actor ordering.
/// Actors with no edges on the layer contribute empty rows.
struct LayerAdjacency {
    LayerId layer;
    SparseMatrix matrix;
};

/// One N x N block of the supra-adjacency grid. The diagonal block (k,k) is
/// that layer's adjacency; an off-diagonal block (h,k) is the categorical
/// coupling: a unit entry on the diagonal for every actor.
struct CouplingBlock {
    LayerId from_layer;
    LayerId to_layer;
    SparseMatrix matrix;
};

/// The (N*L) x (N*L) block matrix with coupling_block(h,k) at block (h,k).
/// Row h*N + i addresses the replica of actor i on layer h.
struct SupraAdjacency {
    std::size_t actor_count = 0;
    std::size_t layer_count = 0;
    SparseMatrix matrix;
};

/// Per-actor values keyed by the network's fixed actor ordering.
struct DegreeVector {
    std::vector<std::int64_t> values;

    std::int64_t at(std::size_t actor_index) const
    {
        return values.at(actor_index);
    }
};

LayerAdjacency layer_adjacency(const MultiplexNetwork& net, const LayerId& layer);

/// Column sums of a square matrix: binary mode counts stored entries,
/// weighted mode sums them. Throws DimensionMismatch for non-square input.
DegreeVector degree_vector(const SparseMatrix& adjacency, DegreeMode mode);

CouplingBlock coupling_block(const MultiplexNetwork& net, const LayerId& h, const LayerId& k);

SupraAdjacency assemble_supra(const MultiplexNetwork& net);

/// Folds the L x L block grid into one N x N matrix by summing all blocks,
/// coupling blocks included.
SparseMatrix project_single_layer(const SupraAdjacency& supra);

/// Entrywise sum of the per-layer adjacencies; interlayer coupling is ignored.
/// Binary mode sums the 0/1 support matrices instead of the weights.
SparseMatrix overlay_network(const MultiplexNetwork& net, DegreeMode mode);

/// Multidegree centrality: for each actor, the sum over all ordered layer
/// pairs (h,k) of its binary degree in coupling_block(h,k). Under categorical
/// coupling every actor picks up L*(L-1) from the off-diagonal blocks on top
/// of its per-layer degrees.
DegreeVector multidegree(const MultiplexNetwork& net);

} // namespace muxdeg
