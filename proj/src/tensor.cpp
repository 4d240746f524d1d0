#include "muxdeg/tensor.hpp"

namespace muxdeg {

namespace {

std::vector<Triplet> layer_triplets(const MultiplexNetwork& net, std::size_t layer_index,
                                    std::size_t row_offset, std::size_t col_offset)
{
    std::vector<Triplet> entries;
    for (const auto& edge : net.edges()) {
        if (edge.layer != layer_index) {
            continue;
        }
        const std::size_t iu = net.actor_index(edge.u);
        const std::size_t iv = net.actor_index(edge.v);
        entries.push_back(Triplet{row_offset + iu, col_offset + iv, edge.weight});
        entries.push_back(Triplet{row_offset + iv, col_offset + iu, edge.weight});
    }
    return entries;
}

std::vector<Triplet> coupling_triplets(std::size_t n, std::size_t row_offset,
                                       std::size_t col_offset)
{
    std::vector<Triplet> entries;
    entries.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        entries.push_back(Triplet{row_offset + i, col_offset + i, 1});
    }
    return entries;
}

} // namespace

LayerAdjacency layer_adjacency(const MultiplexNetwork& net, const LayerId& layer)
{
    const std::size_t l = net.resolve(layer);
    const std::size_t n = net.actor_count();
    return LayerAdjacency{net.layers()[l],
                          SparseMatrix::from_triplets(n, n, layer_triplets(net, l, 0, 0))};
}

DegreeVector degree_vector(const SparseMatrix& adjacency, DegreeMode mode)
{
    if (!adjacency.is_square()) {
        throw Error(ErrorKind::dimension_mismatch,
                    "degree vector needs a square matrix, got " +
                        std::to_string(adjacency.rows()) + "x" + std::to_string(adjacency.cols()));
    }
    return DegreeVector{mode == DegreeMode::binary ? adjacency.column_support()
                                                   : adjacency.column_sums()};
}

CouplingBlock coupling_block(const MultiplexNetwork& net, const LayerId& h, const LayerId& k)
{
    const std::size_t lh = net.resolve(h);
    const std::size_t lk = net.resolve(k);
    const std::size_t n = net.actor_count();
    if (lh == lk) {
        return CouplingBlock{net.layers()[lh], net.layers()[lk],
                             layer_adjacency(net, net.layers()[lh]).matrix};
    }
    return CouplingBlock{net.layers()[lh], net.layers()[lk],
                         SparseMatrix::from_triplets(n, n, coupling_triplets(n, 0, 0))};
}

SupraAdjacency assemble_supra(const MultiplexNetwork& net)
{
    const std::size_t n = net.actor_count();
    const std::size_t l = net.layer_count();
    if (l == 0) {
        throw Error(ErrorKind::invalid_argument, "supra-adjacency needs at least one layer");
    }
    std::vector<Triplet> entries;
    for (std::size_t h = 0; h < l; ++h) {
        for (std::size_t k = 0; k < l; ++k) {
            auto block = h == k ? layer_triplets(net, h, h * n, k * n)
                                : coupling_triplets(n, h * n, k * n);
            entries.insert(entries.end(), block.begin(), block.end());
        }
    }
    return SupraAdjacency{n, l, SparseMatrix::from_triplets(n * l, n * l, std::move(entries))};
}

SparseMatrix project_single_layer(const SupraAdjacency& supra)
{
    const std::size_t n = supra.actor_count;
    std::vector<Triplet> entries;
    entries.reserve(supra.matrix.nnz());
    supra.matrix.for_each([&](std::size_t r, std::size_t c, std::int64_t v) {
        entries.push_back(Triplet{r % n, c % n, v});
    });
    return SparseMatrix::from_triplets(n, n, std::move(entries));
}

SparseMatrix overlay_network(const MultiplexNetwork& net, DegreeMode mode)
{
    const std::size_t n = net.actor_count();
    if (net.layer_count() == 0) {
        throw Error(ErrorKind::invalid_argument, "overlay needs at least one layer");
    }
    SparseMatrix sum(n, n);
    for (const auto& layer : net.layers()) {
        const SparseMatrix adj = layer_adjacency(net, layer).matrix;
        sum = sum.plus(mode == DegreeMode::binary ? adj.binarized() : adj);
    }
    return sum;
}

DegreeVector multidegree(const MultiplexNetwork& net)
{
    const std::size_t n = net.actor_count();
    if (net.layer_count() == 0) {
        throw Error(ErrorKind::invalid_argument, "multidegree needs at least one layer");
    }
    DegreeVector total{std::vector<std::int64_t>(n, 0)};
    for (const auto& h : net.layers()) {
        for (const auto& k : net.layers()) {
            const DegreeVector block =
                degree_vector(coupling_block(net, h, k).matrix, DegreeMode::binary);
            for (std::size_t i = 0; i < n; ++i) {
                total.values[i] += block.values[i];
            }
        }
    }
    return total;
}

} // namespace muxdeg
