#include "hamlab/absorb.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "hamlab/combin.hpp"

namespace hamlab {

TargetSplit split_target(const VertexSet& s, int k, int ell) {
    if (!(1 <= ell && 2 * ell < k)) throw std::invalid_argument("split_target: need 1 <= ell < k/2");
    if ((int)s.size() != k - ell) throw std::invalid_argument("split_target: |S| must be k-ell");
    if (!is_sorted_unique(s)) throw std::invalid_argument("split_target: S not sorted/unique");
    int s3 = std::max(0, 3 * ell - k);  // minimal admissible overlap
    if (s3 >= ell) throw std::logic_error("split_target: no valid split");
    int total = k - ell + s3;
    int s1 = (total + 1) / 2;  // minimal s1 with s1 >= s2 >= s1-1
    int s2 = total - s1;
    TargetSplit t;
    t.s1 = s1;
    t.s2 = s2;
    t.s3 = s3;
    t.S1.assign(s.begin(), s.begin() + s1);
    t.S2.assign(s.begin() + (s1 - s3), s.end());
    return t;
}

namespace {

// ordered block concatenation helpers for building walk sequences
void append_sorted(std::vector<Vertex>& seq, const VertexSet& block) {
    seq.insert(seq.end(), block.begin(), block.end());
}

void append_with_lead(std::vector<Vertex>& seq, const VertexSet& block, const VertexSet& lead) {
    append_sorted(seq, lead);
    append_sorted(seq, set_difference(block, lead));
}

void append_with_trail(std::vector<Vertex>& seq, const VertexSet& block, const VertexSet& trail) {
    append_sorted(seq, set_difference(block, trail));
    append_sorted(seq, trail);
}

struct PathOnSearch {
    const Hypergraph* h;
    int k, ell, step;
    VertexSet head, tail;
    std::vector<VertexSet> ovl;   // O_1.. between consecutive windows
    std::vector<VertexSet> blocks;  // interiors per window
    int m = 0;
    bool found = false;

    // choose window j+1 given overlap O_j and the remaining vertex pool
    bool extend(int j, const VertexSet& prev_ovl, const VertexSet& remaining) {
        if (j == m - 1) {
            if ((int)remaining.size() != step) return false;
            VertexSet w = set_union(prev_ovl, remaining);
            if (!h->contains(w)) return false;
            if (!contains_all(remaining, tail)) return false;
            blocks[j] = remaining;
            return true;
        }
        return for_each_subset_until(remaining, step, [&](const VertexSet& t) {
            VertexSet w = set_union(prev_ovl, t);
            if (!h->contains(w)) return false;
            VertexSet rest = set_difference(remaining, t);
            return for_each_subset_until(t, ell, [&](const VertexSet& o) {
                // the final window still needs room for the tail
                if (j + 1 == m - 1 && !set_intersection(o, tail).empty()) return false;
                ovl[j] = o;
                blocks[j] = set_difference(t, o);
                return extend(j + 1, o, rest);
            });
        });
    }
};

}  // namespace

std::optional<EllWalk> find_path_on(const Hypergraph& h, const VertexSet& w,
                                    const VertexSet& head, const VertexSet& tail, int ell) {
    int k = h.k(), step = k - ell;
    if (ell < 1 || 2 * ell >= k) throw std::invalid_argument("find_path_on: need 1 <= ell < k/2");
    if ((int)w.size() < k || ((int)w.size() - k) % step != 0)
        throw std::invalid_argument("find_path_on: |W| must be k + (m-1)(k-ell)");
    if ((int)head.size() != ell || (int)tail.size() != ell)
        throw std::invalid_argument("find_path_on: end sets must have size ell");
    if (!contains_all(w, head) || !contains_all(w, tail))
        throw std::invalid_argument("find_path_on: ends must lie in W");
    if (!set_intersection(head, tail).empty()) return std::nullopt;

    int m = 1 + ((int)w.size() - k) / step;
    if (m == 1) {
        if (!h.contains(w)) return std::nullopt;
        std::vector<Vertex> seq;
        append_sorted(seq, head);
        append_sorted(seq, set_difference(set_difference(w, head), tail));
        append_sorted(seq, tail);
        auto chk = validate_path(h, seq, ell);
        if (!chk.ok()) return std::nullopt;
        return chk.walk;
    }

    PathOnSearch ps;
    ps.h = &h;
    ps.k = k;
    ps.ell = ell;
    ps.step = step;
    ps.head = head;
    ps.tail = tail;
    ps.m = m;
    ps.ovl.assign(m, {});
    ps.blocks.assign(m, {});

    // first window: any edge containing head, overlap chosen off the head
    VertexSet pool = set_difference(w, head);
    bool ok = for_each_subset_until(pool, k - ell, [&](const VertexSet& rest0) {
        VertexSet w0 = set_union(head, rest0);
        if (!h.contains(w0)) return false;
        VertexSet after = set_difference(pool, rest0);
        return for_each_subset_until(rest0, ell, [&](const VertexSet& o) {
            if (m == 2 && !set_intersection(o, tail).empty()) return false;
            ps.ovl[0] = o;
            ps.blocks[0] = set_union(head, set_difference(rest0, o));
            return ps.extend(1, o, after);
        });
    });
    if (!ok) return std::nullopt;

    std::vector<Vertex> seq;
    append_with_lead(seq, ps.blocks[0], head);
    for (int j = 1; j < m; ++j) {
        append_sorted(seq, ps.ovl[j - 1]);
        if (j == m - 1)
            append_with_trail(seq, ps.blocks[j], tail);
        else
            append_sorted(seq, ps.blocks[j]);
    }
    auto chk = validate_path(h, seq, ell);
    if (!chk.ok()) throw std::logic_error("find_path_on: assembled walk failed validation");
    return chk.walk;
}

std::optional<EllWalk> absorbs_check(const Hypergraph& h, const EllWalk& p, const VertexSet& u,
                                     int vertex_cap) {
    if (p.kind != EllWalk::Kind::Path) throw std::invalid_argument("absorbs_check: path input");
    VertexSet vp = sorted(p.seq);
    if (!set_intersection(vp, u).empty())
        throw std::invalid_argument("absorbs_check: U must avoid V(P)");
    if ((int)u.size() % (p.k - p.ell) != 0)
        throw std::invalid_argument("absorbs_check: |U| must be a multiple of (k-ell)");
    if ((int)(vp.size() + u.size()) > vertex_cap)
        throw std::length_error("absorbs_check: |V(P) u U| above cap");
    if (u.empty()) return p;
    auto e = ends(p);
    return find_path_on(h, set_union(vp, u), e.head, e.tail, p.ell);
}

namespace {

struct AbsorberSearch {
    const Hypergraph* h;
    int k, ell;
    VertexSet s, avoid;  // avoid = S u forbidden
    TargetSplit split;
    unsigned long long attempts = 0, cap = 0;
    Absorber out;
    bool done = false;

    VertexSet fresh_pool(const VertexSet& used) const {
        VertexSet pool;
        for (int v = 0; v < h->n(); ++v) {
            if (std::binary_search(avoid.begin(), avoid.end(), v)) continue;
            if (std::binary_search(used.begin(), used.end(), v)) continue;
            pool.push_back(v);
        }
        return pool;
    }

    bool tick() { return ++attempts > cap; }

    bool run() {
        int s1 = split.s1, s3 = split.s3;
        VertexSet pool0 = fresh_pool({});
        // (i) X with f1 = X u S1 an edge; X = L1 u F u F1
        return for_each_subset_until(pool0, k - s1, [&](const VertexSet& x) {
            if (tick()) return true;
            if (!h->contains(set_union(x, split.S1))) return false;
            return for_each_subset_until(x, ell, [&](const VertexSet& l1) {
                VertexSet xr = set_difference(x, l1);
                return for_each_subset_until(xr, ell - s3, [&](const VertexSet& f) {
                    VertexSet f1 = set_difference(xr, f);
                    return step_y(x, l1, f, f1);
                });
            });
        }) && done;
    }

    bool step_y(const VertexSet& x, const VertexSet& l1, const VertexSet& f, const VertexSet& f1) {
        VertexSet pool = fresh_pool(x);
        VertexSet s2f = set_union(split.S2, f);
        // (ii) Y with f2 = S2 u F u Y an edge; Y = L2 u F2
        return for_each_subset_until(pool, split.s1, [&](const VertexSet& y) {
            if (tick()) return true;
            if (!h->contains(set_union(s2f, y))) return false;
            return for_each_subset_until(y, ell, [&](const VertexSet& l2) {
                VertexSet f2set = set_difference(y, l2);
                return step_pair(x, l1, f, f1, y, l2, f2set);
            });
        });
    }

    bool step_pair(const VertexSet& x, const VertexSet& l1, const VertexSet& f,
                   const VertexSet& f1, const VertexSet& y, const VertexSet& l2,
                   const VertexSet& f2set) {
        // (iii) subsets L1' in L1, L2' in L2 of size ell-1, then the pair {x1,x2}
        return for_each_subset_until(l1, ell - 1, [&](const VertexSet& l1p) {
            return for_each_subset_until(l2, ell - 1, [&](const VertexSet& l2p) {
                VertexSet base = set_union(set_union(l1p, l2p), set_union(f, set_union(f1, f2set)));
                VertexSet pool = fresh_pool(set_union(x, y));
                int np = (int)pool.size();
                for (int i = 0; i < np; ++i) {
                    for (int j = 0; j < np; ++j) {
                        if (i == j) continue;
                        if (tick()) return true;
                        Vertex a = pool[i], b = pool[j];
                        VertexSet e2 = set_union(base, sorted({a, b}));
                        if ((int)e2.size() != k || !h->contains(e2)) continue;
                        if (step_outer(x, l1, f, f1, y, l2, f2set, l1p, l2p, a, b, e2))
                            return true;
                    }
                }
                return false;
            });
        });
    }

    bool step_outer(const VertexSet& x, const VertexSet& l1, const VertexSet& f,
                    const VertexSet& f1set, const VertexSet& y, const VertexSet& l2,
                    const VertexSet& f2set, const VertexSet& l1p, const VertexSet& l2p,
                    Vertex x1, Vertex x2, const VertexSet& e2) {
        // (iv) disjoint edges e1 around {x1} u L1 and e3 around {x2} u L2
        VertexSet used = set_union(set_union(x, y), sorted({x1, x2}));
        VertexSet pool1 = fresh_pool(used);
        VertexSet seed1 = set_union(l1, VertexSet{x1});
        VertexSet seed3 = set_union(l2, VertexSet{x2});
        return for_each_subset_until(pool1, k - ell - 1, [&](const VertexSet& t1) {
            if (tick()) return true;
            VertexSet e1 = set_union(seed1, t1);
            if (!h->contains(e1)) return false;
            VertexSet pool3 = set_difference(pool1, t1);
            return for_each_subset_until(pool3, k - ell - 1, [&](const VertexSet& t3) {
                if (tick()) return true;
                VertexSet e3 = set_union(seed3, t3);
                if (!h->contains(e3)) return false;
                assemble(x, l1, f, f1set, y, l2, f2set, l1p, l2p, x1, x2, e1, e2, e3, t1, t3);
                return true;
            });
        });
    }

    void assemble(const VertexSet& x, const VertexSet& l1, const VertexSet& f,
                  const VertexSet& f1set, const VertexSet& y, const VertexSet& l2,
                  const VertexSet& f2set, const VertexSet& l1p, const VertexSet& l2p, Vertex x1,
                  Vertex x2, const VertexSet& e1, const VertexSet& e2, const VertexSet& e3,
                  const VertexSet& t1, const VertexSet& t3) {
        out.S = s;
        out.S1 = split.S1;
        out.S2 = split.S2;
        out.s1 = split.s1;
        out.s2 = split.s2;
        out.s3 = split.s3;
        out.X = x;
        out.Y = y;
        out.L1 = l1;
        out.L2 = l2;
        out.F = f;
        out.F1 = f1set;
        out.F2 = f2set;
        out.L1p = l1p;
        out.L2p = l2p;
        out.x1 = x1;
        out.x2 = x2;
        out.e1 = e1;
        out.e2 = e2;
        out.e3 = e3;
        out.f1 = set_union(x, split.S1);
        out.f2 = set_union(set_union(split.S2, f), y);

        // shared ends live in the fresh parts of e1 and e3 (k-l-1 >= l)
        VertexSet head(t1.begin(), t1.begin() + ell);
        VertexSet tail(t3.begin(), t3.begin() + ell);

        // P = (e1, e2, e3): overlaps {x1} u L1' and {x2} u L2'
        VertexSet o1 = set_union(l1p, VertexSet{x1});
        VertexSet o2 = set_union(l2p, VertexSet{x2});
        std::vector<Vertex> seq;
        append_with_lead(seq, set_difference(e1, o1), head);
        append_sorted(seq, o1);
        append_sorted(seq, set_difference(e2, set_union(o1, o2)));
        append_sorted(seq, o2);
        append_with_trail(seq, set_difference(e3, o2), tail);
        out.P = EllWalk{seq, ell, k, EllWalk::Kind::Path};

        // P' = (e1, f1, f2, e3): overlaps L1, (S1 n S2) u F, L2
        VertexSet o1b = l1;
        VertexSet o2b = set_union(set_intersection(split.S1, split.S2), f);
        VertexSet o3b = l2;
        std::vector<Vertex> seq2;
        append_with_lead(seq2, set_difference(e1, o1b), head);
        append_sorted(seq2, o1b);
        append_sorted(seq2, set_difference(out.f1, set_union(o1b, o2b)));
        append_sorted(seq2, o2b);
        append_sorted(seq2, set_difference(out.f2, set_union(o2b, o3b)));
        append_sorted(seq2, o3b);
        append_with_trail(seq2, set_difference(e3, o3b), tail);
        out.Pprime = EllWalk{seq2, ell, k, EllWalk::Kind::Path};
        done = true;
    }
};

}  // namespace

std::optional<Absorber> find_absorber(const Hypergraph& h, const VertexSet& s,
                                      const VertexSet& forbidden, unsigned long long attempt_cap) {
    int k = h.k();
    if (!is_sorted_unique(s) || (!forbidden.empty() && !is_sorted_unique(forbidden)))
        throw std::invalid_argument("find_absorber: sets must be sorted/unique");
    if (!set_intersection(s, forbidden).empty())
        throw std::invalid_argument("find_absorber: S meets forbidden");
    AbsorberSearch as;
    as.h = &h;
    as.k = k;
    as.ell = 0;
    // ell recovered from |S| = k - ell
    int ell = k - (int)s.size();
    if (ell < 1 || 2 * ell >= k) throw std::invalid_argument("find_absorber: |S| must be k-ell");
    as.ell = ell;
    as.s = s;
    as.avoid = set_union(s, forbidden);
    as.split = split_target(s, k, ell);
    as.cap = attempt_cap;
    if (as.run()) {
        auto viol = check_absorber(as.out, h);
        if (!viol.empty())
            throw std::logic_error("find_absorber: built absorber violates invariants: " + viol[0]);
        return as.out;
    }
    return std::nullopt;
}

std::vector<std::string> check_absorber(const Absorber& a, const Hypergraph& h) {
    std::vector<std::string> bad;
    int k = h.k(), ell = a.P.ell;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) bad.push_back(what);
    };
    // 1. split inequality chain (eq. constraints on sizes)
    expect(a.s1 >= a.s2 && a.s2 >= a.s1 - 1 && std::max(0, 3 * ell - k) <= a.s3 && a.s3 < ell,
           "split sizes violate |S1|>=|S2|>=|S1|-1 or s3 range");
    // 2. s1+s2-s3 = k-ell
    expect(a.s1 + a.s2 - a.s3 == k - ell, "s1+s2-s3 != k-ell");
    // 3. s1 >= s2 >= ell
    expect(a.s2 >= ell, "s2 < ell");
    // 4. partition part sizes
    expect((int)a.L1.size() == ell && (int)a.L2.size() == ell &&
               (int)a.F.size() == ell - a.s3 && (int)a.F.size() > 0 &&
               (int)a.F1.size() == a.s2 - ell && (int)a.F2.size() == a.s1 - ell,
           "part sizes |L1|,|L2|,|F|,|F1|,|F2| wrong");
    // 5. e-overlaps
    expect(set_intersection(a.e1, a.e2) == set_union(a.L1p, VertexSet{a.x1}) &&
               set_intersection(a.e2, a.e3) == set_union(a.L2p, VertexSet{a.x2}) &&
               (int)a.L1p.size() == ell - 1 && (int)a.L2p.size() == ell - 1,
           "e1/e2/e3 overlaps differ from {x1} u L1', {x2} u L2'");
    // 6. f-overlaps
    expect(set_intersection(a.e1, a.f1) == a.L1 &&
               set_intersection(a.f1, a.f2).size() == (size_t)ell &&
               set_intersection(a.f2, a.e3) == a.L2,
           "e1/f1/f2/e3 overlaps differ from L1, ell, L2");
    // 7. all five edges present
    expect(h.contains(a.e1) && h.contains(a.e2) && h.contains(a.e3) && h.contains(a.f1) &&
               h.contains(a.f2),
           "a constructed edge is missing from H");
    // 8. V(P') = V(P) u S
    expect(sorted(a.Pprime.seq) == set_union(sorted(a.P.seq), a.S), "V(P') != V(P) u S");
    // 9. both walks validate with identical ends
    {
        auto cp = validate_path(h, a.P.seq, ell);
        auto cq = validate_path(h, a.Pprime.seq, ell);
        bool ok = cp.ok() && cq.ok() && cp.walk->size() == 3 && cq.walk->size() == 4 &&
                  ends(*cp.walk) == ends(*cq.walk);
        expect(ok, "P/P' fail validation or end agreement");
    }
    // 10. |V(P)| = q = 3k-2l
    expect((int)a.P.seq.size() == 3 * k - 2 * ell, "|V(P)| != 3k-2ell");
    return bad;
}

namespace {

VertexSet mask_to_set(uint64_t m) {
    VertexSet s;
    while (m) {
        s.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return s;
}

struct TripleKey {
    uint64_t w, head, tail;
    bool operator==(const TripleKey&) const = default;
};

struct TripleKeyHash {
    size_t operator()(const TripleKey& t) const {
        uint64_t h = t.w * 0x9e3779b97f4a7c15ull;
        h ^= t.head + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= t.tail + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return (size_t)h;
    }
};

}  // namespace

unsigned long long count_absorbers(const Hypergraph& h, const VertexSet& s, int n_cap) {
    if (h.n() > n_cap) throw std::length_error("count_absorbers: n above cap");
    int k = h.k();
    int ell = k - (int)s.size();
    if (ell < 1 || 2 * ell >= k) throw std::invalid_argument("count_absorbers: |S| must be k-ell");
    Hypergraph hx = h.backing() == Hypergraph::Backing::Explicit ? h : h.materialized();

    unsigned long long fact[21];
    fact[0] = 1;
    for (int i = 1; i <= 20; ++i) fact[i] = fact[i - 1] * i;
    int il = k - 2 * ell;
    unsigned long long mult = fact[ell] * fact[ell] * fact[ell] * fact[ell] * fact[il] * fact[il] *
                              fact[il];

    auto mask_of = [](const VertexSet& vs) {
        uint64_t m = 0;
        for (Vertex v : vs) m |= 1ull << v;
        return m;
    };
    uint64_t s_mask = mask_of(s);

    // overlap index: l-subset mask -> member edge masks
    std::vector<uint64_t> edge_masks;
    std::unordered_map<uint64_t, std::vector<uint64_t>> by_ovl;
    for (const auto& e : hx.edges()) {
        uint64_t em = mask_of(e);
        edge_masks.push_back(em);
        for_each_subset(e, ell, [&](const VertexSet& o) {
            by_ovl[mask_of(o)].push_back(em);
        });
    }

    std::unordered_map<TripleKey, bool, TripleKeyHash> memo;
    auto absorbs_with_ends = [&](uint64_t w, uint64_t head, uint64_t tail) {
        TripleKey key{w, head, tail};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        bool ok = find_path_on(hx, mask_to_set(w), mask_to_set(head), mask_to_set(tail), ell)
                      .has_value();
        memo.emplace(key, ok);
        return ok;
    };

    unsigned long long count = 0;
    for (size_t i = 0; i < edge_masks.size(); ++i) {
        uint64_t e1 = edge_masks[i];
        if (e1 & s_mask) continue;
        VertexSet e1v = hx.edges()[i];
        for_each_subset(e1v, ell, [&](const VertexSet& o1v) {
            uint64_t o1 = mask_of(o1v);
            uint64_t b1 = e1 & ~o1;
            auto it2 = by_ovl.find(o1);
            if (it2 == by_ovl.end()) return;
            for (uint64_t e2 : it2->second) {
                uint64_t t2 = e2 & ~o1;
                if (t2 & (b1 | s_mask)) continue;
                for_each_subset(mask_to_set(t2), ell, [&](const VertexSet& o2v) {
                    uint64_t o2 = mask_of(o2v);
                    auto it3 = by_ovl.find(o2);
                    if (it3 == by_ovl.end()) return;
                    for (uint64_t e3 : it3->second) {
                        uint64_t t3 = e3 & ~o2;
                        if (t3 & (e1 | e2 | s_mask)) continue;
                        uint64_t w = e1 | e2 | e3 | s_mask;
                        for_each_subset(mask_to_set(b1), ell, [&](const VertexSet& hd) {
                            uint64_t hm = mask_of(hd);
                            for_each_subset(mask_to_set(t3), ell, [&](const VertexSet& tl) {
                                if (absorbs_with_ends(w, hm, mask_of(tl))) count += mult;
                            });
                        });
                    }
                });
            }
        });
    }
    return count;
}

}  // namespace hamlab
