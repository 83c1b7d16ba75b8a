#ifndef HAMLAB_HGRAPH_HPP
#define HAMLAB_HGRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace hamlab {

using Vertex = int;
// sorted, duplicate-free vertex ids
using VertexSet = std::vector<Vertex>;

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool is_sorted_unique(const VertexSet& s);
bool contains_all(const VertexSet& big, const VertexSet& small);
VertexSet sorted(std::vector<Vertex> v);

struct EdgeHash {
    size_t operator()(const std::vector<Vertex>& e) const {
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (Vertex v : e) {
            h ^= (uint64_t)v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return (size_t)h;
    }
};

// k-uniform hypergraph on vertices 0..n-1. Immutable after construction;
// all queries are read-only. Three backings share one query interface:
//   - explicit edge set (the usual case)
//   - complete K_n^(k), kept symbolic so big-n connection tests stay cheap
//   - seeded Bernoulli predicate (edge iff hash(seed,e) < p), also symbolic
class Hypergraph {
public:
    enum class Backing { Explicit, Complete, Bernoulli };

    static Hypergraph from_edges(int n, int k, std::vector<VertexSet> edges);
    static Hypergraph complete(int n, int k);
    static Hypergraph bernoulli(int n, int k, uint64_t seed, double p);

    Hypergraph(const Hypergraph& o);
    Hypergraph& operator=(const Hypergraph& o);
    Hypergraph(Hypergraph&& o) noexcept;
    Hypergraph& operator=(Hypergraph&& o) noexcept;
    ~Hypergraph() = default;

    int n() const { return n_; }
    int k() const { return k_; }
    Backing backing() const { return backing_; }

    unsigned long long edge_count() const;
    bool contains(const VertexSet& edge) const;

    // number of edges containing S; |S| <= k required, |S| == k tests membership
    unsigned long long degree(const VertexSet& s) const;
    // the (k-|S|)-sets T with T disjoint from S and T u S an edge
    std::vector<VertexSet> neighborhood(const VertexSet& s) const;
    // min over all s-sets of degree; s == 0 gives |E|
    unsigned long long min_s_degree(int s) const;
    // subhypergraph induced by B, relabeled to 0..|B|-1 preserving order
    Hypergraph induced(const VertexSet& b) const;
    // edges entirely inside B, without relabeling
    unsigned long long edge_count_within(const VertexSet& b) const;

    // explicit edge list; materializes symbolic backings (guarded by size)
    const std::vector<VertexSet>& edges() const;
    Hypergraph materialized() const;

    // link of a (k-2)-set as vertex pairs; lazily indexed for explicit graphs
    std::vector<std::pair<Vertex, Vertex>> link_pairs(const VertexSet& s) const;

    // .khg text format: "k n" header, '#' comments, one sorted edge per line
    static Hypergraph parse_khg(std::istream& in);
    static Hypergraph load_khg(const std::string& path);
    void write_khg(std::ostream& out) const;
    void save_khg(const std::string& path) const;

private:
    Hypergraph(int n, int k, Backing b) : n_(n), k_(k), backing_(b) {}

    void check_subset(const VertexSet& s, int max_size) const;
    bool bernoulli_member(const VertexSet& e) const;
    const std::unordered_map<std::vector<Vertex>, std::vector<std::pair<Vertex, Vertex>>, EdgeHash>&
    link_index() const;

    int n_;
    int k_;
    Backing backing_;
    std::vector<VertexSet> edges_;
    std::unordered_set<std::vector<Vertex>, EdgeHash> edge_set_;
    uint64_t seed_ = 0;
    uint64_t threshold_ = 0;  // Bernoulli: member iff mix(seed,e) < threshold
    double p_ = 0.0;

    mutable std::mutex link_mu_;
    mutable bool link_built_ = false;
    mutable std::unordered_map<std::vector<Vertex>, std::vector<std::pair<Vertex, Vertex>>, EdgeHash>
        link_index_;
};

}  // namespace hamlab

#endif
