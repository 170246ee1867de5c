#include "hampow/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace hampow {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    rows_.assign(std::size_t(n_) * words_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (rows_[std::size_t(u) * words_ + v / 64] >> (v % 64)) & 1ULL;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (has_edge(u, v)) return;
    rows_[std::size_t(u) * words_ + v / 64] |= 1ULL << (v % 64);
    rows_[std::size_t(v) * words_ + u / 64] |= 1ULL << (u % 64);
    ++edges_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!has_edge(u, v)) return;
    rows_[std::size_t(u) * words_ + v / 64] &= ~(1ULL << (v % 64));
    rows_[std::size_t(v) * words_ + u / 64] &= ~(1ULL << (u % 64));
    --edges_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto w : row(v)) d += std::popcount(w);
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(std::size_t(edges_));
    for (int u = 0; u < n_; ++u) {
        auto r = row(u);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int v = w * 64 + b;
                if (v > u) out.emplace_back(u, v);
            }
        }
    }
    return out;
}

long long Graph::edges_within(std::span<const std::uint64_t> mask) const {
    long long twice = 0;
    for (int v = 0; v < n_; ++v) {
        if (!((mask[v / 64] >> (v % 64)) & 1ULL)) continue;
        auto r = row(v);
        for (int w = 0; w < words_; ++w) twice += std::popcount(r[w] & mask[w]);
    }
    return twice / 2;
}

InducedGraph induced(const Graph& g, std::span<const int> vertices) {
    std::vector<int> labels(vertices.begin(), vertices.end());
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("induced: duplicate vertex");
    for (int v : labels)
        if (v < 0 || v >= g.order())
            throw std::out_of_range("induced: vertex out of range");

    Graph sub(static_cast<int>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (g.has_edge(labels[i], labels[j]))
                sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return {std::move(sub), std::move(labels)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.order() + b.order());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    int off = a.order();
    for (auto [u, v] : b.edges()) g.add_edge(u + off, v + off);
    return g;
}

Decomposition decompose(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    Decomposition d;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(d.components.size());
        d.components.emplace_back();
        comp[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            d.components[id].push_back(v);
            auto r = g.row(v);
            for (int w = 0; w < g.words_per_row(); ++w) {
                std::uint64_t bits = r[w];
                while (bits) {
                    int b = std::countr_zero(bits);
                    bits &= bits - 1;
                    int u = w * 64 + b;
                    if (comp[u] < 0) {
                        comp[u] = id;
                        stack.push_back(u);
                    }
                }
            }
        }
        std::sort(d.components[id].begin(), d.components[id].end());
    }

    d.rank = n - static_cast<long long>(d.components.size());
    d.is_good = true;
    long long core_size = 0;
    for (const auto& c : d.components) {
        if (c.size() == 2) d.is_good = false;
        if (c.size() > 2) {
            ++d.core_components;
            core_size += static_cast<long long>(c.size());
            d.core_vertices.insert(d.core_vertices.end(), c.begin(), c.end());
        }
    }
    std::sort(d.core_vertices.begin(), d.core_vertices.end());
    d.core_rank = core_size - d.core_components;

    if (!d.core_vertices.empty()) {
        std::vector<std::uint64_t> mask(g.words_per_row(), 0);
        for (int v : d.core_vertices) mask[v / 64] |= 1ULL << (v % 64);
        d.core_edges = g.edges_within(mask);
    }
    return d;
}

}  // namespace hampow
