#include "hampow/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hampow {

HamiltonPowerParams::HamiltonPowerParams(int n_, int k_) : n(n_), k(k_) {
    if (n < 3) throw std::invalid_argument("HamiltonPowerParams: n must be >= 3");
    if (k < 1) throw std::invalid_argument("HamiltonPowerParams: k must be >= 1");
}

int HamiltonPowerParams::cyclic_distance(int u, int v) const {
    int d = u > v ? u - v : v - u;
    return std::min(d, n - d);
}

long long HamiltonPowerParams::edge_id(int v, int i) const {
    if (is_complete())
        throw std::logic_error("edge_id: undefined for complete H (n <= 2k+1)");
    if (v < 0 || v >= n || i < 1 || i > k)
        throw std::out_of_range("edge_id: bad (v, i)");
    return static_cast<long long>(k) * v + (i - 1);
}

std::pair<int, int> HamiltonPowerParams::edge_endpoints(long long id) const {
    if (is_complete())
        throw std::logic_error("edge_endpoints: undefined for complete H");
    if (id < 0 || id >= edge_ids()) throw std::out_of_range("edge_endpoints: bad id");
    int v = static_cast<int>(id / k);
    int i = static_cast<int>(id % k) + 1;
    return {v, (v + i) % n};
}

long long HamiltonPowerParams::edge_id_of(int u, int v) const {
    if (is_complete())
        throw std::logic_error("edge_id_of: undefined for complete H");
    if (u == v) throw std::invalid_argument("edge_id_of: self-loop");
    // forward distance from u to v on the cycle
    int fwd = (v - u) % n;
    if (fwd < 0) fwd += n;
    if (fwd >= 1 && fwd <= k) return edge_id(u, fwd);
    int bwd = n - fwd;
    if (bwd >= 1 && bwd <= k) return edge_id(v, bwd);
    throw std::invalid_argument("edge_id_of: not an H edge");
}

Graph build_hamilton_power(const HamiltonPowerParams& params) {
    if (params.is_complete()) return Graph::complete(params.n);
    Graph g(params.n);
    for (int v = 0; v < params.n; ++v)
        for (int i = 1; i <= params.k; ++i) g.add_edge(v, (v + i) % params.n);
    return g;
}

Graph build_path_power(int s, int k) {
    if (s < 1) throw std::invalid_argument("build_path_power: s must be >= 1");
    if (k < 1) throw std::invalid_argument("build_path_power: k must be >= 1");
    Graph g(s);
    for (int v = 0; v < s; ++v)
        for (int i = 1; i <= k && v + i < s; ++i) g.add_edge(v, v + i);
    return g;
}

Graph build_prefix(const HamiltonPowerParams& params, int s) {
    if (s < 1 || s > params.n) throw std::out_of_range("build_prefix: s out of range");
    Graph g(s);
    for (int u = 0; u < s; ++u)
        for (int v = u + 1; v < s; ++v)
            if (params.cyclic_distance(u, v) <= params.k) g.add_edge(u, v);
    return g;
}

HSubgraph::HSubgraph(const HamiltonPowerParams& params) : params_(params) {
    if (params_.is_complete())
        throw std::invalid_argument("HSubgraph: host must satisfy n >= 2k+2");
    mask_.assign(std::size_t((params_.edge_ids() + 63) / 64), 0);
}

HSubgraph HSubgraph::full(const HamiltonPowerParams& params) {
    HSubgraph f(params);
    for (long long id = 0; id < params.edge_ids(); ++id) f.set(id);
    return f;
}

HSubgraph HSubgraph::from_vertex_set(const HamiltonPowerParams& params,
                                     std::span<const int> vertices) {
    HSubgraph f(params);
    std::vector<char> in(params.n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= params.n)
            throw std::out_of_range("from_vertex_set: vertex out of range");
        in[v] = 1;
    }
    for (int v = 0; v < params.n; ++v) {
        if (!in[v]) continue;
        for (int i = 1; i <= params.k; ++i)
            if (in[(v + i) % params.n]) f.set(params.edge_id(v, i));
    }
    return f;
}

HSubgraph HSubgraph::from_graph(const HamiltonPowerParams& params, const Graph& g) {
    if (g.order() != params.n)
        throw std::invalid_argument("from_graph: vertex count differs from host");
    HSubgraph f(params);
    for (auto [u, v] : g.edges()) f.set(params.edge_id_of(u, v));
    return f;
}

bool HSubgraph::test(long long id) const {
    if (id < 0 || id >= params_.edge_ids()) throw std::out_of_range("HSubgraph::test");
    return (mask_[std::size_t(id / 64)] >> (id % 64)) & 1ULL;
}

void HSubgraph::set(long long id, bool value) {
    if (id < 0 || id >= params_.edge_ids()) throw std::out_of_range("HSubgraph::set");
    if (value)
        mask_[std::size_t(id / 64)] |= 1ULL << (id % 64);
    else
        mask_[std::size_t(id / 64)] &= ~(1ULL << (id % 64));
}

bool HSubgraph::has_edge(int u, int v) const { return test(params_.edge_id_of(u, v)); }

void HSubgraph::set_edge(int u, int v, bool value) {
    set(params_.edge_id_of(u, v), value);
}

long long HSubgraph::edge_count() const {
    long long c = 0;
    for (auto w : mask_) c += std::popcount(w);
    return c;
}

Graph HSubgraph::materialize() const {
    Graph g(params_.n);
    for (long long id = 0; id < params_.edge_ids(); ++id)
        if (test(id)) {
            auto [u, v] = params_.edge_endpoints(id);
            g.add_edge(u, v);
        }
    return g;
}

std::string HSubgraph::mask_hex() const {
    // little-endian bytes: hex pair j encodes mask bits 8j..8j+7
    static const char* digits = "0123456789abcdef";
    std::size_t bytes = std::size_t((params_.edge_ids() + 7) / 8);
    std::string s;
    s.reserve(bytes * 2);
    for (std::size_t j = 0; j < bytes; ++j) {
        unsigned byte = unsigned(mask_[j / 8] >> (8 * (j % 8))) & 0xFFu;
        s.push_back(digits[byte >> 4]);
        s.push_back(digits[byte & 0xF]);
    }
    return s;
}

HSubgraph HSubgraph::from_mask_hex(const HamiltonPowerParams& params,
                                   const std::string& hex) {
    HSubgraph f(params);
    std::size_t bytes = std::size_t((params.edge_ids() + 7) / 8);
    if (hex.size() != bytes * 2)
        throw std::invalid_argument("from_mask_hex: wrong mask length");
    auto nibble = [](char c) -> unsigned {
        if (c >= '0' && c <= '9') return unsigned(c - '0');
        if (c >= 'a' && c <= 'f') return unsigned(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return unsigned(c - 'A' + 10);
        throw std::invalid_argument("from_mask_hex: bad hex digit");
    };
    for (std::size_t j = 0; j < bytes; ++j) {
        unsigned byte = (nibble(hex[2 * j]) << 4) | nibble(hex[2 * j + 1]);
        f.mask_[j / 8] |= std::uint64_t(byte) << (8 * (j % 8));
    }
    for (long long id = params.edge_ids(); id < (long long)f.mask_.size() * 64; ++id)
        if ((f.mask_[std::size_t(id / 64)] >> (id % 64)) & 1ULL)
            throw std::invalid_argument("from_mask_hex: bits beyond kn set");
    return f;
}

HSubgraph completion(const HSubgraph& f) {
    auto g = f.materialize();
    auto dec = decompose(g);
    HSubgraph star(f.params());
    for (const auto& comp : dec.components) {
        if (comp.size() < 2) continue;
        auto part = HSubgraph::from_vertex_set(f.params(), comp);
        for (auto [u, v] : part.materialize().edges()) star.set_edge(u, v);
    }
    return star;
}

}  // namespace hampow
