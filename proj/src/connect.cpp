#include "hamlab/connect.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hamlab/combin.hpp"

namespace hamlab {

namespace {

// |{z in pool : base u {z} in E}|, base a (k-1)-set
long long completion_count(const Hypergraph& h, const VertexSet& base, const VertexSet& pool) {
    long long c = 0;
    for (Vertex z : pool) {
        if (std::binary_search(base.begin(), base.end(), z)) continue;
        if (h.contains(set_union(base, VertexSet{z}))) ++c;
    }
    return c;
}

Vertex first_completion(const Hypergraph& h, const VertexSet& base, const VertexSet& pool,
                        const VertexSet& banned) {
    for (Vertex z : pool) {
        if (std::binary_search(base.begin(), base.end(), z)) continue;
        if (std::binary_search(banned.begin(), banned.end(), z)) continue;
        if (h.contains(set_union(base, VertexSet{z}))) return z;
    }
    return -1;
}

struct GadgetSearch {
    const Hypergraph* h;
    int ell;
    VertexSet xe, ye;  // the pair's end sets
    VertexSet avail;   // R \ F
    double eta_r_4;
    ConnectStage deepest = ConnectStage::Observation;

    bool extendable_x(const VertexSet& l, Vertex x) const {
        return (double)completion_count(*h, set_union(set_union(xe, l), VertexSet{x}), avail) >=
               eta_r_4;
    }
    bool extendable_y(const VertexSet& l, Vertex y) const {
        return (double)completion_count(*h, set_union(set_union(ye, l), VertexSet{y}), avail) >=
               eta_r_4;
    }

    // lexicographically first full gadget, or nullopt
    std::optional<std::vector<VertexSet>> run(unsigned long long cap) {
        unsigned long long ticks = 0;
        std::optional<std::vector<VertexSet>> out;
        for_each_subset_until(avail, ell - 1, [&](const VertexSet& l1) {
            VertexSet pool1 = set_difference(avail, l1);
            for (Vertex x : pool1) {
                if (!extendable_x(l1, x)) continue;
                for (Vertex y : pool1) {
                    if (y == x || !extendable_y(l1, y)) continue;
                    if (deepest == ConnectStage::Observation) deepest = ConnectStage::MSelection;
                    VertexSet t1 = sorted({x, y});
                    VertexSet used1 = set_union(l1, t1);
                    if (++ticks > cap) return true;
                    if (step_m(l1, x, y, used1, out, ticks, cap)) return true;
                }
            }
            return false;
        });
        return out;
    }

    bool step_m(const VertexSet& l1, Vertex x, Vertex y, const VertexSet& used1,
                std::optional<std::vector<VertexSet>>& out, unsigned long long& ticks,
                unsigned long long cap) {
        VertexSet pool = set_difference(avail, used1);
        return for_each_subset_until(pool, ell - 2, [&](const VertexSet& s) {
            VertexSet pool2 = set_difference(pool, s);
            VertexSet base = set_union(set_union(s, l1), sorted({x, y}));  // (k-2)-set
            return for_each_subset_until(pool2, 2, [&](const VertexSet& mset) {
                if (++ticks > cap) return true;
                VertexSet e2 = set_union(base, mset);
                if (!h->contains(e2)) return false;
                VertexSet mprime = set_union(mset, s);
                VertexSet used2 = set_union(used1, mprime);
                // second disjoint extendable triple (x', L', y') forming e3
                VertexSet pool3 = set_difference(avail, used2);
                return for_each_subset_until(pool3, ell - 1, [&](const VertexSet& l2) {
                    VertexSet pool4 = set_difference(pool3, l2);
                    for (Vertex xp : pool4) {
                        if (!extendable_x(l2, xp)) continue;
                        for (Vertex yp : pool4) {
                            if (yp == xp || !extendable_y(l2, yp)) continue;
                            if (++ticks > cap) return true;
                            VertexSet e3 = set_union(set_union(mprime, l2), sorted({xp, yp}));
                            if (!h->contains(e3)) continue;
                            if (deepest == ConnectStage::MSelection)
                                deepest = ConnectStage::FinalEdge;
                            VertexSet used3 =
                                set_union(used2, set_union(l2, sorted({xp, yp})));
                            // final vertices v, v' complete e1 and e4
                            VertexSet b1 = set_union(set_union(xe, l1), VertexSet{x});
                            Vertex v = first_completion(*h, b1, set_difference(avail, used3),
                                                        used3);
                            if (v < 0) continue;
                            VertexSet used4 = set_union(used3, VertexSet{v});
                            VertexSet b4 = set_union(set_union(ye, l2), VertexSet{yp});
                            Vertex vp = first_completion(*h, b4, set_difference(avail, used4),
                                                         used4);
                            if (vp < 0) continue;
                            VertexSet e1 = set_union(b1, VertexSet{v});
                            VertexSet e4 = set_union(b4, VertexSet{vp});
                            out = std::vector<VertexSet>{e1,           e2, e3, e4,
                                                         l1,           l2, mprime,
                                                         VertexSet{x}, VertexSet{y},
                                                         VertexSet{xp}, VertexSet{yp},
                                                         VertexSet{v}, VertexSet{vp}};
                            return true;
                        }
                    }
                    return false;
                });
            });
        });
    }
};

}  // namespace

std::vector<ExtendableTriple> find_extendable_triples(const Hypergraph& h, const VertexSet& x_end,
                                                      const VertexSet& y_end, const VertexSet& r,
                                                      const VertexSet& f, double eta,
                                                      size_t limit) {
    int k = h.k();
    int ell = (int)x_end.size();
    if (2 * ell != k - 1)
        throw std::invalid_argument("find_extendable_triples: requires 2*ell = k-1");
    if (y_end.size() != x_end.size())
        throw std::invalid_argument("find_extendable_triples: end sizes differ");
    VertexSet avail = set_difference(r, f);
    double thresh = eta * (double)r.size() / 4.0;
    std::vector<ExtendableTriple> out;
    for_each_subset_until(avail, ell - 1, [&](const VertexSet& l) {
        VertexSet pool = set_difference(avail, l);
        std::vector<std::pair<Vertex, long long>> xs, ys;
        for (Vertex v : pool) {
            long long cx = completion_count(h, set_union(set_union(x_end, l), VertexSet{v}), avail);
            if ((double)cx >= thresh) xs.emplace_back(v, cx);
            long long cy = completion_count(h, set_union(set_union(y_end, l), VertexSet{v}), avail);
            if ((double)cy >= thresh) ys.emplace_back(v, cy);
        }
        for (const auto& [x, cx] : xs) {
            for (const auto& [y, cy] : ys) {
                if (x == y) continue;
                out.push_back(ExtendableTriple{x, l, y, cx, cy});
                if (out.size() >= limit) return true;
            }
        }
        return false;
    });
    return out;
}

ConnectResult connect_all(const Hypergraph& h, const ConnectRequest& req) {
    ConnectResult res;
    int k = h.k();
    if (req.pairs.empty()) return res;
    int ell = (int)req.pairs[0].first.size();
    if (ell < 1 || 2 * ell >= k) throw std::invalid_argument("connect_all: need 1 <= ell < k/2");

    // all 2m end sets mutually disjoint
    VertexSet all_ends;
    for (const auto& [x, y] : req.pairs) {
        if ((int)x.size() != ell || (int)y.size() != ell)
            throw std::invalid_argument("connect_all: end set size mismatch");
        for (const auto* s : {&x, &y}) {
            if (!set_intersection(all_ends, *s).empty())
                throw std::invalid_argument("connect_all: end sets intersect");
            all_ends = set_union(all_ends, *s);
        }
    }

    VertexSet forbidden = all_ends;
    for (size_t j = 0; j < req.pairs.size(); ++j) {
        const auto& [xe, ye] = req.pairs[j];
        VertexSet avail = set_difference(req.reservoir, forbidden);
        std::vector<Vertex> seq;
        if (k - 2 >= 2 * ell) {
            // single edge X u Y u Z u M with Z lexicographic from R \ F
            VertexSet xy = set_union(xe, ye);
            bool placed = for_each_subset_until(avail, k - 2 - 2 * ell, [&](const VertexSet& z) {
                VertexSet base = set_union(xy, z);
                VertexSet pool = set_difference(avail, z);
                return for_each_subset_until(pool, 2, [&](const VertexSet& mset) {
                    VertexSet e = set_union(base, mset);
                    if (!h.contains(e)) return false;
                    seq.clear();
                    seq.insert(seq.end(), xe.begin(), xe.end());
                    VertexSet mid = set_union(z, mset);
                    seq.insert(seq.end(), mid.begin(), mid.end());
                    seq.insert(seq.end(), ye.begin(), ye.end());
                    return true;
                });
            });
            if (!placed) {
                res.failure = ConnectFailure{(int)j, ConnectStage::SingleEdge,
                                             "no edge X u Y u Z u M inside the reservoir"};
                return res;
            }
        } else {
            // 2l = k-1: four-edge gadget via two disjoint extendable triples
            GadgetSearch gs;
            gs.h = &h;
            gs.ell = ell;
            gs.xe = xe;
            gs.ye = ye;
            gs.avail = avail;
            gs.eta_r_4 = req.eta * (double)req.reservoir.size() / 4.0;
            auto gadget = gs.run(50000000ull);
            if (!gadget) {
                res.failure = ConnectFailure{(int)j, gs.deepest, "gadget search exhausted"};
                return res;
            }
            const auto& g = *gadget;
            const VertexSet &l1 = g[4], &l2 = g[5], &mprime = g[6];
            Vertex x = g[7][0], y = g[8][0], xp = g[9][0], yp = g[10][0], v = g[11][0],
                   vp = g[12][0];
            // seq: X | v | L,x | y | M' | x' | L',y' | v' | Y
            seq.insert(seq.end(), xe.begin(), xe.end());
            seq.push_back(v);
            VertexSet o1 = set_union(l1, VertexSet{x});
            seq.insert(seq.end(), o1.begin(), o1.end());
            seq.push_back(y);
            seq.insert(seq.end(), mprime.begin(), mprime.end());
            seq.push_back(xp);
            VertexSet o3 = set_union(l2, VertexSet{yp});
            seq.insert(seq.end(), o3.begin(), o3.end());
            seq.push_back(vp);
            seq.insert(seq.end(), ye.begin(), ye.end());
        }
        auto chk = validate_path(h, seq, ell);
        if (!chk.ok())
            throw std::logic_error("connect_all: assembled path failed validation: " + chk.error);
        auto e = ends(*chk.walk);
        if (!((e.head == xe && e.tail == ye) || (e.head == ye && e.tail == xe)))
            throw std::logic_error("connect_all: assembled path has wrong ends");
        forbidden = set_union(forbidden, sorted(seq));
        res.paths.push_back(*chk.walk);
    }
    return res;
}

std::optional<VertexSet> reservoir_select(const Hypergraph& h, double epsilon, double eta, int m,
                                          uint64_t seed, const ReservoirParams& params) {
    int n = h.n(), k = h.k();
    if (epsilon <= 0 || epsilon > 1) throw std::invalid_argument("reservoir_select: epsilon");
    if (eta <= 0 || eta > 1) throw std::invalid_argument("reservoir_select: eta");
    int size = (int)(epsilon * n);
    if (params.enforce_size_bound && (double)size < 32.0 * k * m / (eta * eta * eta))
        throw std::invalid_argument("reservoir_select: eps*n below 32km/eta^3");
    // the lemma's degree hypothesis on H itself
    double need = eta * (double)binom(n, 2);
    if ((double)h.min_s_degree(k - 2) < need)
        throw std::invalid_argument("reservoir_select: delta_{k-2}(H) below eta*C(n,2)");

    std::mt19937_64 rng(seed);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int attempt = 0; attempt < params.retry_cap; ++attempt) {
        std::vector<int> perm = all;
        for (int i = n - 1; i > 0; --i) {
            int j2 = (int)(rng() % (uint64_t)(i + 1));
            std::swap(perm[i], perm[j2]);
        }
        VertexSet r(perm.begin(), perm.begin() + size);
        std::sort(r.begin(), r.end());
        // inherited degree condition, verified exhaustively over all K
        double bound = (eta / 2.0) * (double)binom(size, 2);
        bool ok = true;
        for_each_subset_until(all, k - 2, [&](const VertexSet& kset) {
            long long cnt = 0;
            for (const auto& [a, b] : h.link_pairs(kset)) {
                if (std::binary_search(r.begin(), r.end(), a) &&
                    std::binary_search(r.begin(), r.end(), b))
                    ++cnt;
            }
            if ((double)cnt < bound) {
                ok = false;
                return true;
            }
            return false;
        });
        if (ok) return r;
    }
    return std::nullopt;
}

}  // namespace hamlab
