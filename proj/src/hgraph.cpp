#include "hamlab/hgraph.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "hamlab/combin.hpp"

namespace hamlab {

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool is_sorted_unique(const VertexSet& s) {
    for (size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

bool contains_all(const VertexSet& big, const VertexSet& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

VertexSet sorted(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

Hypergraph Hypergraph::from_edges(int n, int k, std::vector<VertexSet> edges) {
    if (n < 0 || k < 2) throw std::invalid_argument("Hypergraph: need n >= 0, k >= 2");
    if (!edges.empty() && k > n)
        throw std::invalid_argument("Hypergraph: k > n with nonempty edge set");
    Hypergraph h(n, k, Backing::Explicit);
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if ((int)e.size() != k) throw std::invalid_argument("Hypergraph: edge arity != k");
        if (!is_sorted_unique(e)) throw std::invalid_argument("Hypergraph: duplicate vertex in edge");
        if (e.front() < 0 || e.back() >= n)
            throw std::invalid_argument("Hypergraph: vertex id out of range");
        if (!h.edge_set_.insert(e).second)
            throw std::invalid_argument("Hypergraph: duplicate edge");
    }
    h.edges_ = std::move(edges);
    for (auto& e : h.edges_) std::sort(e.begin(), e.end());
    std::sort(h.edges_.begin(), h.edges_.end());
    return h;
}

Hypergraph Hypergraph::complete(int n, int k) {
    if (n < 0 || k < 2) throw std::invalid_argument("Hypergraph: need n >= 0, k >= 2");
    return Hypergraph(n, k, Backing::Complete);
}

Hypergraph Hypergraph::bernoulli(int n, int k, uint64_t seed, double p) {
    if (n < 0 || k < 2) throw std::invalid_argument("Hypergraph: need n >= 0, k >= 2");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("Hypergraph: p outside [0,1]");
    Hypergraph h(n, k, Backing::Bernoulli);
    h.seed_ = seed;
    h.p_ = p;
    h.threshold_ = p >= 1.0 ? UINT64_MAX : (uint64_t)(p * 18446744073709551616.0);
    return h;
}

Hypergraph::Hypergraph(const Hypergraph& o)
    : n_(o.n_),
      k_(o.k_),
      backing_(o.backing_),
      edges_(o.edges_),
      edge_set_(o.edge_set_),
      seed_(o.seed_),
      threshold_(o.threshold_),
      p_(o.p_) {}

Hypergraph& Hypergraph::operator=(const Hypergraph& o) {
    if (this == &o) return *this;
    n_ = o.n_;
    k_ = o.k_;
    backing_ = o.backing_;
    edges_ = o.edges_;
    edge_set_ = o.edge_set_;
    seed_ = o.seed_;
    threshold_ = o.threshold_;
    p_ = o.p_;
    link_built_ = false;
    link_index_.clear();
    return *this;
}

Hypergraph::Hypergraph(Hypergraph&& o) noexcept
    : n_(o.n_),
      k_(o.k_),
      backing_(o.backing_),
      edges_(std::move(o.edges_)),
      edge_set_(std::move(o.edge_set_)),
      seed_(o.seed_),
      threshold_(o.threshold_),
      p_(o.p_) {}

Hypergraph& Hypergraph::operator=(Hypergraph&& o) noexcept {
    n_ = o.n_;
    k_ = o.k_;
    backing_ = o.backing_;
    edges_ = std::move(o.edges_);
    edge_set_ = std::move(o.edge_set_);
    seed_ = o.seed_;
    threshold_ = o.threshold_;
    p_ = o.p_;
    link_built_ = false;
    link_index_.clear();
    return *this;
}

bool Hypergraph::bernoulli_member(const VertexSet& e) const {
    uint64_t h = seed_;
    for (Vertex v : e) h = splitmix64(h ^ (uint64_t)(v + 1));
    return splitmix64(h) < threshold_;
}

unsigned long long Hypergraph::edge_count() const {
    switch (backing_) {
        case Backing::Explicit:
            return edges_.size();
        case Backing::Complete:
            return binom(n_, k_);
        case Backing::Bernoulli: {
            unsigned long long c = 0;
            std::vector<int> all(n_);
            for (int i = 0; i < n_; ++i) all[i] = i;
            for_each_subset(all, k_, [&](const VertexSet& e) {
                if (bernoulli_member(e)) ++c;
            });
            return c;
        }
    }
    return 0;
}

bool Hypergraph::contains(const VertexSet& edge) const {
    if ((int)edge.size() != k_) return false;
    if (!is_sorted_unique(edge)) throw std::invalid_argument("contains: edge not sorted/unique");
    if (edge.front() < 0 || edge.back() >= n_) return false;
    switch (backing_) {
        case Backing::Explicit:
            return edge_set_.count(edge) != 0;
        case Backing::Complete:
            return true;
        case Backing::Bernoulli:
            return bernoulli_member(edge);
    }
    return false;
}

void Hypergraph::check_subset(const VertexSet& s, int max_size) const {
    if ((int)s.size() > max_size)
        throw std::invalid_argument("query set larger than permitted");
    if (!is_sorted_unique(s)) throw std::invalid_argument("query set not sorted/unique");
    if (!s.empty() && (s.front() < 0 || s.back() >= n_))
        throw std::invalid_argument("query vertex out of range");
}

unsigned long long Hypergraph::degree(const VertexSet& s) const {
    check_subset(s, k_);
    if ((int)s.size() == k_) return contains(s) ? 1 : 0;
    switch (backing_) {
        case Backing::Explicit: {
            if ((int)s.size() == k_ - 2) {
                auto& idx = link_index();
                auto it = idx.find(s);
                return it == idx.end() ? 0 : it->second.size();
            }
            unsigned long long c = 0;
            for (const auto& e : edges_)
                if (contains_all(e, s)) ++c;
            return c;
        }
        case Backing::Complete:
            return binom(n_ - (int)s.size(), k_ - (int)s.size());
        case Backing::Bernoulli: {
            unsigned long long c = 0;
            VertexSet pool;
            for (int v = 0; v < n_; ++v)
                if (!std::binary_search(s.begin(), s.end(), v)) pool.push_back(v);
            for_each_subset(pool, k_ - (int)s.size(), [&](const VertexSet& t) {
                if (bernoulli_member(set_union(s, t))) ++c;
            });
            return c;
        }
    }
    return 0;
}

std::vector<VertexSet> Hypergraph::neighborhood(const VertexSet& s) const {
    check_subset(s, k_);
    std::vector<VertexSet> out;
    switch (backing_) {
        case Backing::Explicit:
            for (const auto& e : edges_)
                if (contains_all(e, s)) out.push_back(set_difference(e, s));
            break;
        case Backing::Complete:
        case Backing::Bernoulli: {
            VertexSet pool;
            for (int v = 0; v < n_; ++v)
                if (!std::binary_search(s.begin(), s.end(), v)) pool.push_back(v);
            for_each_subset(pool, k_ - (int)s.size(), [&](const VertexSet& t) {
                if (backing_ == Backing::Complete || bernoulli_member(set_union(s, t)))
                    out.push_back(t);
            });
            break;
        }
    }
    return out;
}

unsigned long long Hypergraph::min_s_degree(int s) const {
    if (s < 0 || s > k_ || s > n_)
        throw std::invalid_argument("min_s_degree: s outside [0, min(k,n)]");
    if (s == 0) return edge_count();
    if (backing_ == Backing::Complete) return binom(n_ - s, k_ - s);
    unsigned long long best = ULLONG_MAX;
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    for_each_subset(all, s, [&](const VertexSet& set) {
        unsigned long long d = degree(set);
        if (d < best) best = d;
    });
    return best == ULLONG_MAX ? 0 : best;
}

Hypergraph Hypergraph::induced(const VertexSet& b) const {
    check_subset(b, n_);
    if (backing_ == Backing::Complete) return complete((int)b.size(), k_);
    std::vector<VertexSet> kept;
    if (backing_ == Backing::Explicit) {
        for (const auto& e : edges_) {
            if (!contains_all(b, e)) continue;
            VertexSet relab(e.size());
            for (size_t i = 0; i < e.size(); ++i)
                relab[i] = (int)(std::lower_bound(b.begin(), b.end(), e[i]) - b.begin());
            kept.push_back(std::move(relab));
        }
    } else {
        for_each_subset(b, k_, [&](const VertexSet& e) {
            if (!bernoulli_member(e)) return;
            VertexSet relab(e.size());
            for (size_t i = 0; i < e.size(); ++i)
                relab[i] = (int)(std::lower_bound(b.begin(), b.end(), e[i]) - b.begin());
            kept.push_back(std::move(relab));
        });
    }
    return from_edges((int)b.size(), k_, std::move(kept));
}

unsigned long long Hypergraph::edge_count_within(const VertexSet& b) const {
    check_subset(b, n_);
    if ((int)b.size() < k_) return 0;
    switch (backing_) {
        case Backing::Explicit: {
            unsigned long long c = 0;
            for (const auto& e : edges_)
                if (contains_all(b, e)) ++c;
            return c;
        }
        case Backing::Complete:
            return binom((int)b.size(), k_);
        case Backing::Bernoulli: {
            unsigned long long c = 0;
            for_each_subset(b, k_, [&](const VertexSet& e) {
                if (bernoulli_member(e)) ++c;
            });
            return c;
        }
    }
    return 0;
}

const std::vector<VertexSet>& Hypergraph::edges() const {
    if (backing_ != Backing::Explicit)
        throw std::logic_error("edges(): symbolic backing, call materialized() first");
    return edges_;
}

Hypergraph Hypergraph::materialized() const {
    if (backing_ == Backing::Explicit) return *this;
    if (binom(n_, k_) > 20000000ull)
        throw std::length_error("materialized: too many potential edges");
    std::vector<VertexSet> es;
    std::vector<int> all(n_);
    for (int i = 0; i < n_; ++i) all[i] = i;
    for_each_subset(all, k_, [&](const VertexSet& e) {
        if (backing_ == Backing::Complete || bernoulli_member(e)) es.push_back(e);
    });
    return from_edges(n_, k_, std::move(es));
}

const std::unordered_map<std::vector<Vertex>, std::vector<std::pair<Vertex, Vertex>>, EdgeHash>&
Hypergraph::link_index() const {
    std::lock_guard<std::mutex> lock(link_mu_);
    if (!link_built_) {
        for (const auto& e : edges_) {
            // every (k-2)-subset of e, paired with the remaining two vertices
            int k = k_;
            std::vector<int> idx(k - 2);
            for (int i = 0; i < k - 2; ++i) idx[i] = i;
            if (k == 2) {
                link_index_[{}].emplace_back(e[0], e[1]);
            } else {
                while (true) {
                    VertexSet key(k - 2);
                    for (int i = 0; i < k - 2; ++i) key[i] = e[idx[i]];
                    VertexSet rest = set_difference(e, key);
                    link_index_[key].emplace_back(rest[0], rest[1]);
                    if (!next_combination(idx, k)) break;
                }
            }
        }
        link_built_ = true;
    }
    return link_index_;
}

std::vector<std::pair<Vertex, Vertex>> Hypergraph::link_pairs(const VertexSet& s) const {
    if ((int)s.size() != k_ - 2) throw std::invalid_argument("link_pairs: need a (k-2)-set");
    check_subset(s, k_);
    switch (backing_) {
        case Backing::Explicit: {
            auto& idx = link_index();
            auto it = idx.find(s);
            if (it == idx.end()) return {};
            return it->second;
        }
        case Backing::Complete:
        case Backing::Bernoulli: {
            std::vector<std::pair<Vertex, Vertex>> out;
            for (int u = 0; u < n_; ++u) {
                if (std::binary_search(s.begin(), s.end(), u)) continue;
                for (int v = u + 1; v < n_; ++v) {
                    if (std::binary_search(s.begin(), s.end(), v)) continue;
                    if (backing_ == Backing::Complete ||
                        bernoulli_member(set_union(s, VertexSet{u, v})))
                        out.emplace_back(u, v);
                }
            }
            return out;
        }
    }
    return {};
}

Hypergraph Hypergraph::parse_khg(std::istream& in) {
    std::string line;
    int lineno = 0;
    int k = -1, n = -1;
    std::vector<VertexSet> edges;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> nums;
        long long x;
        while (ls >> x) nums.push_back(x);
        if (!ls.eof()) {
            throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                     ": non-numeric token");
        }
        if (nums.empty()) continue;
        if (k < 0) {
            if (nums.size() != 2)
                throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                         ": header must be 'k n'");
            k = (int)nums[0];
            n = (int)nums[1];
            if (k < 2 || n < 0)
                throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                         ": bad header values");
            continue;
        }
        if ((int)nums.size() != k)
            throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                     ": expected " + std::to_string(k) + " vertex ids");
        VertexSet e;
        for (long long v : nums) {
            if (v < 0 || v >= n)
                throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                         ": vertex id out of range");
            e.push_back((int)v);
        }
        if (!is_sorted_unique(e))
            throw std::runtime_error("khg parse error at line " + std::to_string(lineno) +
                                     ": vertices must be strictly increasing");
        edges.push_back(std::move(e));
    }
    if (k < 0) throw std::runtime_error("khg parse error: missing header");
    try {
        return from_edges(n, k, std::move(edges));
    } catch (const std::invalid_argument& ex) {
        throw std::runtime_error(std::string("khg parse error: ") + ex.what());
    }
}

Hypergraph Hypergraph::load_khg(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return parse_khg(f);
}

void Hypergraph::write_khg(std::ostream& out) const {
    const auto& es = edges();  // materialization guard applies
    out << k_ << ' ' << n_ << '\n';
    for (const auto& e : es) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

void Hypergraph::save_khg(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_khg(f);
}

}  // namespace hamlab
