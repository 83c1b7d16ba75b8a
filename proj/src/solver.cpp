#include "hamlab/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>
#include <unordered_map>

#include "hamlab/combin.hpp"

namespace hamlab {

namespace {

using Clock = std::chrono::steady_clock;

uint64_t mask_of(const VertexSet& s) {
    uint64_t m = 0;
    for (Vertex v : s) m |= 1ull << v;
    return m;
}

struct CycleSearch {
    int n, k, ell, step, m;
    const SearchBudget* budget;
    Clock::time_point t0;
    SearchStats stats;

    std::vector<VertexSet> edges;              // sorted edge list
    std::vector<uint64_t> edge_mask;
    std::unordered_map<uint64_t, std::vector<int>> by_overlap;  // l-subset mask -> edges
    std::vector<std::vector<int>> incident;    // vertex -> edge indices

    std::vector<VertexSet> ovl;  // O_0..O_{m-1}
    std::vector<VertexSet> intr; // I_0..I_{m-1}
    uint64_t o0_mask = 0;
    bool timed_out = false;

    bool over_budget() {
        if (budget->max_nodes && stats.nodes > budget->max_nodes) return true;
        if (budget->max_millis && (stats.nodes & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
            if (ms > budget->max_millis) return true;
        }
        return false;
    }

    // every unused vertex still needs one edge inside unused | frontier | O_0
    bool coverable(uint64_t unused, uint64_t frontier) {
        uint64_t allowed = unused | frontier | o0_mask;
        uint64_t rest = unused;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            bool ok = false;
            for (int ei : incident[v]) {
                if ((edge_mask[ei] & ~allowed) == 0) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    // candidate extensions from overlap O: edges containing O whose rest is unused
    struct Cand {
        int edge;
        VertexSet next_ovl;
        VertexSet inter;
        int onward;
    };

    std::vector<Cand> extensions(const VertexSet& o, uint64_t o_mask, uint64_t unused) {
        std::vector<Cand> cands;
        auto it = by_overlap.find(o_mask);
        if (it == by_overlap.end()) return cands;
        for (int ei : it->second) {
            uint64_t rest_mask = edge_mask[ei] & ~o_mask;
            if (rest_mask & ~unused) continue;
            VertexSet rest = set_difference(edges[ei], o);
            // choose the next overlap inside the fresh part
            std::vector<int> idx(ell);
            for (int i = 0; i < ell; ++i) idx[i] = i;
            while (true) {
                Cand c;
                c.edge = ei;
                c.next_ovl.resize(ell);
                for (int i = 0; i < ell; ++i) c.next_ovl[i] = rest[idx[i]];
                c.inter = set_difference(rest, c.next_ovl);
                uint64_t after = unused & ~rest_mask;
                uint64_t nom = mask_of(c.next_ovl);
                c.onward = 0;
                auto jt = by_overlap.find(nom);
                if (jt != by_overlap.end()) {
                    for (int ej : jt->second)
                        if ((edge_mask[ej] & ~nom & ~after) == 0) ++c.onward;
                }
                cands.push_back(std::move(c));
                if (!next_combination(idx, (int)rest.size())) break;
            }
        }
        // fail-first: fewest onward completions, then lexicographic for determinism
        std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
            if (a.onward != b.onward) return a.onward < b.onward;
            if (a.next_ovl != b.next_ovl) return a.next_ovl < b.next_ovl;
            return a.inter < b.inter;
        });
        return cands;
    }

    // reflection canonical check for cycles whose vertex 0 sits in O_0
    bool canonical_reflection() const {
        VertexSet fwd = set_union(intr[0], ovl[1 % m]);
        VertexSet bwd = set_union(intr[m - 1], ovl[m - 1]);
        if (m == 2) {
            // O_1 is shared by both edges; compare interiors instead
            return intr[0].front() < intr[1].front();
        }
        return fwd.front() < bwd.front();
    }

    bool extend(int j, uint64_t unused) {
        ++stats.nodes;
        stats.max_depth = std::max(stats.max_depth, j);
        if (over_budget()) {
            timed_out = true;
            return false;
        }
        if (j == m - 1) {
            // last edge: remaining vertices are the interior, wraps to O_0
            VertexSet rest;
            uint64_t r = unused;
            while (r) {
                rest.push_back(std::countr_zero(r));
                r &= r - 1;
            }
            if ((int)rest.size() != k - 2 * ell) return false;
            VertexSet last = set_union(set_union(ovl[m - 1], rest), ovl[0]);
            if ((int)last.size() != k) return false;
            if (!std::binary_search(edges.begin(), edges.end(), last)) return false;
            intr[m - 1] = rest;
            if (!ovl[0].empty() && ovl[0].front() == 0 && !canonical_reflection()) return false;
            return true;
        }
        uint64_t o_mask = mask_of(ovl[j]);
        if (!coverable(unused, o_mask)) return false;
        for (auto& c : extensions(ovl[j], o_mask, unused)) {
            intr[j] = c.inter;
            ovl[j + 1] = c.next_ovl;
            uint64_t used = edge_mask[c.edge] & ~o_mask;
            if (extend(j + 1, unused & ~used)) return true;
            if (timed_out) return false;
        }
        return false;
    }

    std::optional<std::vector<Vertex>> run() {
        ovl.assign(m, {});
        intr.assign(m, {});
        uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
        bool found = false;

        // The first edge must contain vertex 0; pin 0's block to kill the
        // rotational symmetry: either 0 is in the leading overlap O_0
        // (reflection resolved when the cycle closes) or in the interior I_0
        // (reflection killed by min(O_0) < min(O_1) right here).
        for (int ei : incident[0]) {
            const VertexSet& e = edges[ei];
            VertexSet others = set_difference(e, {0});
            for_each_subset_until(others, ell - 1, [&](const VertexSet& o0rest) {
                VertexSet o0 = set_union(VertexSet{0}, o0rest);
                VertexSet rem = set_difference(e, o0);
                return for_each_subset_until(rem, ell, [&](const VertexSet& o1) {
                    ovl[0] = o0;
                    ovl[1] = o1;
                    intr[0] = set_difference(rem, o1);
                    o0_mask = mask_of(o0);
                    if (extend(1, full & ~mask_of(e))) {
                        found = true;
                        return true;
                    }
                    return timed_out;
                });
            });
            if (found) return assemble();
            if (timed_out) return std::nullopt;
            for_each_subset_until(others, ell, [&](const VertexSet& o0) {
                VertexSet rem = set_difference(e, o0);  // contains 0
                return for_each_subset_until(rem, ell, [&](const VertexSet& o1) {
                    if (std::binary_search(o1.begin(), o1.end(), 0)) return false;
                    if (!(o0.front() < o1.front())) return false;
                    ovl[0] = o0;
                    ovl[1] = o1;
                    intr[0] = set_difference(rem, o1);
                    o0_mask = mask_of(o0);
                    if (extend(1, full & ~mask_of(e))) {
                        found = true;
                        return true;
                    }
                    return timed_out;
                });
            });
            if (found) return assemble();
            if (timed_out) return std::nullopt;
        }
        return std::nullopt;
    }

    std::vector<Vertex> assemble() const {
        std::vector<Vertex> seq;
        for (int j = 0; j < m; ++j) {
            seq.insert(seq.end(), ovl[j].begin(), ovl[j].end());
            seq.insert(seq.end(), intr[j].begin(), intr[j].end());
        }
        return seq;
    }
};

}  // namespace

SolveResult hamiltonian_cycle(const Hypergraph& h, int ell, const SearchBudget& budget) {
    if (ell < 1 || ell >= h.k()) throw std::invalid_argument("hamiltonian_cycle: bad ell");
    int step = h.k() - ell;
    if (h.n() % step != 0)
        throw std::invalid_argument("hamiltonian_cycle: (k-ell) must divide n");
    SolveResult res;
    auto t0 = Clock::now();

    if (h.backing() == Hypergraph::Backing::Complete && h.n() >= h.k() && h.n() / step >= 2) {
        // identity ordering realizes the cycle
        std::vector<Vertex> seq(h.n());
        for (int i = 0; i < h.n(); ++i) seq[i] = i;
        auto chk = validate_cycle(h, seq, ell);
        res.cycle = chk.walk;
        res.stats.outcome = SearchStats::Outcome::Found;
        res.stats.nodes = 1;
        res.stats.millis =
            std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        return res;
    }

    Hypergraph hx = h.backing() == Hypergraph::Backing::Explicit ? h : h.materialized();
    if (hx.n() > 64) throw std::length_error("hamiltonian_cycle: n > 64 unsupported");

    CycleSearch cs;
    cs.n = hx.n();
    cs.k = hx.k();
    cs.ell = ell;
    cs.step = step;
    cs.m = hx.n() / step;
    cs.budget = &budget;
    cs.t0 = t0;
    cs.edges = hx.edges();
    cs.edge_mask.reserve(cs.edges.size());
    cs.incident.assign(cs.n, {});
    for (size_t i = 0; i < cs.edges.size(); ++i) {
        cs.edge_mask.push_back(mask_of(cs.edges[i]));
        for (Vertex v : cs.edges[i]) cs.incident[v].push_back((int)i);
        for_each_subset(cs.edges[i], ell, [&](const VertexSet& o) {
            cs.by_overlap[mask_of(o)].push_back((int)i);
        });
    }

    std::optional<std::vector<Vertex>> seq;
    if (cs.m >= 2 && cs.n >= cs.k && !cs.edges.empty()) seq = cs.run();
    res.stats = cs.stats;
    res.stats.millis =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    if (cs.timed_out) {
        res.stats.outcome = SearchStats::Outcome::Timeout;
    } else if (seq) {
        auto chk = validate_cycle(hx, *seq, ell);
        if (!chk.ok()) throw std::logic_error("hamiltonian_cycle: witness failed validation");
        chk.walk->k = h.k();
        res.cycle = chk.walk;
        res.stats.outcome = SearchStats::Outcome::Found;
    } else {
        res.stats.outcome = SearchStats::Outcome::Exhausted;
    }
    return res;
}

bool hamiltonian_cycle_oracle(const Hypergraph& h, int ell) {
    if (h.n() > 10) throw std::length_error("hamiltonian_cycle_oracle: hard cap n <= 10");
    if (ell < 1 || ell >= h.k()) throw std::invalid_argument("oracle: bad ell");
    int step = h.k() - ell;
    if (h.n() % step != 0) throw std::invalid_argument("oracle: (k-ell) must divide n");
    int n = h.n(), k = h.k();
    if (n < k || n / step < 2 || h.edge_count() == 0) return false;

    std::vector<Vertex> rest;
    for (int v = 1; v < n; ++v) rest.push_back(v);
    std::vector<Vertex> seq(n);
    int m = n / step;

    auto windows_ok = [&](const std::vector<Vertex>& s) {
        VertexSet w(k);
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < k; ++i) w[i] = s[(j * step + i) % n];
            std::sort(w.begin(), w.end());
            if (!h.contains(w)) return false;
        }
        return true;
    };

    for (int anchor : {0, ell}) {
        if (anchor >= n) continue;
        std::vector<Vertex> perm = rest;
        do {
            int pi = 0;
            for (int pos = 0; pos < n; ++pos) seq[pos] = (pos == anchor) ? 0 : perm[pi++];
            // reflection quotient, valid for the 1-overlap anchored case
            if (ell == 1 && anchor == 0 && seq[1] > seq[n - 1]) continue;
            if (windows_ok(seq)) return true;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (anchor == 0 && ell == 0) break;
    }
    return false;
}

namespace {

struct PathEnum {
    const Hypergraph* h;
    int k, ell, m;
    const std::function<void(const std::vector<Vertex>&)>* fn;
    std::vector<Vertex> seq;
    uint64_t used = 0;

    void emit_orders(const VertexSet& fresh, int windows_left) {
        // append every ordering of the fresh block, then recurse
        VertexSet perm = fresh;
        do {
            size_t base = seq.size();
            seq.insert(seq.end(), perm.begin(), perm.end());
            step(windows_left);
            seq.resize(base);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }

    void step(int windows_left) {
        if (windows_left == 0) {
            (*fn)(seq);
            return;
        }
        VertexSet overlap(seq.end() - ell, seq.end());
        std::sort(overlap.begin(), overlap.end());
        for (const auto& t : h->neighborhood(overlap)) {
            bool clash = false;
            for (Vertex v : t)
                if (used & (1ull << v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (Vertex v : t) used |= 1ull << v;
            emit_orders(t, windows_left - 1);
            for (Vertex v : t) used &= ~(1ull << v);
        }
    }
};

}  // namespace

void enumerate_paths(const Hypergraph& h, int ell, int m,
                     const std::function<void(const std::vector<Vertex>&)>& fn) {
    if (m < 1) throw std::invalid_argument("enumerate_paths: m >= 1");
    if (ell < 1 || ell >= h.k()) throw std::invalid_argument("enumerate_paths: bad ell");
    if (h.n() > 64) throw std::length_error("enumerate_paths: n > 64 unsupported");
    Hypergraph hx = h.backing() == Hypergraph::Backing::Explicit ? h : h.materialized();
    PathEnum pe;
    pe.h = &hx;
    pe.k = hx.k();
    pe.ell = ell;
    pe.m = m;
    pe.fn = &fn;
    for (const auto& e : hx.edges()) {
        uint64_t em = mask_of(e);
        pe.used = em;
        pe.seq.clear();
        pe.emit_orders(e, m - 1);
    }
}

unsigned long long count_paths(const Hypergraph& h, int ell, int m) {
    unsigned long long c = 0;
    enumerate_paths(h, ell, m, [&](const std::vector<Vertex>&) { ++c; });
    return c;
}

}  // namespace hamlab
