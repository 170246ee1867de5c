#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hampow/graph.hpp"

namespace hampow {

/// Parameters of the host H, the k-th power of the cycle on [n]. When
/// n <= 2k+1 the power collapses to the complete graph and the canonical
/// kn-edge indexing is undefined; callers must check is_complete().
struct HamiltonPowerParams {
    int n = 0;
    int k = 0;

    HamiltonPowerParams() = default;
    HamiltonPowerParams(int n_, int k_);

    bool is_complete() const { return n <= 2 * k + 1; }

    /// min(|u-v|, n-|u-v|) for 0-based u, v.
    int cyclic_distance(int u, int v) const;

    long long edge_ids() const { return static_cast<long long>(k) * n; }

    /// Canonical id of edge {v, v+i mod n}: k*v + (i-1), v in [0,n), i in [1,k].
    long long edge_id(int v, int i) const;
    /// Inverse of edge_id: the 0-based endpoints of an id.
    std::pair<int, int> edge_endpoints(long long id) const;
    /// Canonical id of an arbitrary H-edge given by its endpoints.
    long long edge_id_of(int u, int v) const;
};

Graph build_hamilton_power(const HamiltonPowerParams& params);

/// k-th power of the path on [s].
Graph build_path_power(int s, int k);

/// H_s: induced subgraph of H on the first s vertices, 1 <= s <= n.
Graph build_prefix(const HamiltonPowerParams& params, int s);

/// Subgraph of a fixed non-complete H, stored as an edge mask over the
/// canonical edge indexing.
class HSubgraph {
public:
    explicit HSubgraph(const HamiltonPowerParams& params);

    static HSubgraph full(const HamiltonPowerParams& params);
    /// Mask of H[S] for a 0-based vertex set S.
    static HSubgraph from_vertex_set(const HamiltonPowerParams& params,
                                     std::span<const int> vertices);
    /// Requires g to be a subgraph of H on the same vertex count.
    static HSubgraph from_graph(const HamiltonPowerParams& params, const Graph& g);

    const HamiltonPowerParams& params() const { return params_; }

    bool test(long long id) const;
    void set(long long id, bool value = true);
    bool has_edge(int u, int v) const;
    void set_edge(int u, int v, bool value = true);

    long long edge_count() const;
    Graph materialize() const;

    std::string mask_hex() const;
    static HSubgraph from_mask_hex(const HamiltonPowerParams& params,
                                   const std::string& hex);

    bool operator==(const HSubgraph& other) const {
        return params_.n == other.params_.n && params_.k == other.params_.k &&
               mask_ == other.mask_;
    }

private:
    HamiltonPowerParams params_;
    std::vector<std::uint64_t> mask_;
};

/// Completion F*: union over components C of F of the host-induced
/// subgraphs H[V(C)]. Component vertex sets are preserved; F is a subgraph
/// of F*; the map is idempotent.
HSubgraph completion(const HSubgraph& f);

}  // namespace hampow
