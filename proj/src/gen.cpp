#include "hamlab/gen.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hamlab/combin.hpp"

namespace hamlab {

namespace {

void check_kl(int k, int ell) {
    if (!(1 <= ell && 2 * ell < k))
        throw std::invalid_argument("need 1 <= ell < k/2");
}

double unit_double(std::mt19937_64& rng) {
    return (double)(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int extremal_a_size(int n, int k, int ell) {
    check_kl(k, ell);
    // ceil(n/(2(k-l)) - 1) = ceil((n - 2(k-l)) / (2(k-l)))
    long long q = 2ll * (k - ell);
    long long p = n - q;
    long long a = p > 0 ? (p + q - 1) / q : p / q;  // integer ceil, both signs
    return (int)std::max(0ll, a);
}

Hypergraph extremal_example(int n, int k, int ell) {
    check_kl(k, ell);
    if (n < k) throw std::invalid_argument("extremal_example: n < k");
    int a = extremal_a_size(n, k, ell);
    std::vector<VertexSet> edges;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for_each_subset(all, k, [&](const VertexSet& e) {
        if (e.front() < a) edges.push_back(e);  // sorted, so e meets A iff min < a
    });
    return Hypergraph::from_edges(n, k, std::move(edges));
}

Hypergraph cherry(int k, int ell) {
    check_kl(k, ell);
    int t = 2 * k - 2 * ell;
    VertexSet e1(k), e2(k);
    for (int i = 0; i < k; ++i) e1[i] = i;
    for (int i = 0; i < k; ++i) e2[i] = k - 2 * ell + i;
    return Hypergraph::from_edges(t, k, {e1, e2});
}

RandomMindegResult random_mindeg(int n, int k, int ell, const Frac& delta_fraction,
                                 uint64_t seed, std::optional<double> p) {
    check_kl(k, ell);
    if (n < k) throw std::invalid_argument("random_mindeg: n < k");
    if (delta_fraction < Frac(0) || delta_fraction > Frac(1))
        throw std::invalid_argument("random_mindeg: delta_fraction outside [0,1]");

    unsigned long long pairs = binom(n, 2);
    Frac t = delta_fraction * Frac((long long)pairs);
    long long target = t.floor_div(Frac(1));
    if (!t.multiple_of(Frac(1))) ++target;  // ceil

    double pr = p.value_or(delta_fraction.to_double());
    std::mt19937_64 rng(seed);
    std::vector<VertexSet> edges;
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for_each_subset(all, k, [&](const VertexSet& e) {
        if (unit_double(rng) < pr) edges.push_back(e);
    });

    // incremental (k-2)-set degree table
    std::map<VertexSet, unsigned long long> deg;
    for_each_subset(all, k - 2, [&](const VertexSet& s) { deg[s] = 0; });
    std::set<VertexSet> present(edges.begin(), edges.end());
    auto bump = [&](const VertexSet& e) {
        for_each_subset(e, k - 2, [&](const VertexSet& s) { ++deg[s]; });
    };
    for (const auto& e : edges) bump(e);

    int added = 0;
    bool reached = true;
    while (true) {
        // deficient (k-2)-sets in (degree, lex) order; fix the worst addable one
        std::vector<std::pair<unsigned long long, const VertexSet*>> deficient;
        for (const auto& [s, d] : deg)
            if (d < (unsigned long long)target) deficient.emplace_back(d, &s);
        if (deficient.empty()) break;
        std::sort(deficient.begin(), deficient.end(),
                  [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first < b.first : *a.second < *b.second;
                  });
        bool placed = false;
        for (const auto& [d, s] : deficient) {
            VertexSet pool = set_difference(all, *s);
            placed = for_each_subset_until(pool, 2, [&](const VertexSet& pair) {
                VertexSet e = set_union(*s, pair);
                if (present.count(e)) return false;
                present.insert(e);
                edges.push_back(e);
                bump(e);
                ++added;
                return true;
            });
            if (placed) break;
        }
        if (!placed) {  // every deficient set saturated: target unattainable
            reached = false;
            break;
        }
    }

    unsigned long long achieved = ULLONG_MAX;
    for (const auto& [s, d] : deg) achieved = std::min(achieved, d);
    if (deg.empty()) achieved = 0;
    RandomMindegResult r{Hypergraph::from_edges(n, k, std::move(edges)), achieved,
                         (unsigned long long)target, added, reached};
    return r;
}

namespace {

struct SwapState {
    const Hypergraph* h;
    std::vector<std::vector<int>> incident;  // vertex -> edge indices
    std::vector<int> inside_count;           // per edge: |e cap B|
    std::vector<char> in_b;
    unsigned long long e_b = 0;

    void init(const Hypergraph& hg, const VertexSet& b) {
        h = &hg;
        const auto& es = hg.edges();
        incident.assign(hg.n(), {});
        inside_count.assign(es.size(), 0);
        in_b.assign(hg.n(), 0);
        for (Vertex v : b) in_b[v] = 1;
        e_b = 0;
        for (size_t i = 0; i < es.size(); ++i) {
            for (Vertex v : es[i]) {
                incident[v].push_back((int)i);
                if (in_b[v]) ++inside_count[i];
            }
            if (inside_count[i] == hg.k()) ++e_b;
        }
    }
    // e(B) after swapping u (in B) for v (outside); state unchanged
    unsigned long long probe(Vertex u, Vertex v) const {
        long long delta = 0;
        for (int ei : incident[u]) {
            if (inside_count[ei] == h->k()) --delta;  // u leaves a full edge
        }
        for (int ei : incident[v]) {
            int c = inside_count[ei];
            bool has_u = false;
            for (Vertex w : h->edges()[ei])
                if (w == u) { has_u = true; break; }
            if (c - (has_u ? 1 : 0) == h->k() - 1) ++delta;  // v completes it
        }
        return e_b + delta;
    }
    void apply(Vertex u, Vertex v) {
        e_b = probe(u, v);
        for (int ei : incident[u]) --inside_count[ei];
        for (int ei : incident[v]) ++inside_count[ei];
        in_b[u] = 0;
        in_b[v] = 1;
    }
};

}  // namespace

std::string ExtremalityVerdict::json_line() const {
    std::ostringstream os;
    const char* ans = extremal == Answer::Yes          ? "yes"
                      : extremal == Answer::No         ? "no"
                                                       : "inconclusive";
    os << "{\"extremal\":\"" << ans << "\"";
    os << ",\"mode\":\"" << (mode == ExtremalityMode::Exhaustive ? "exhaustive" : "local-search")
       << "\"";
    os << ",\"b_size\":" << b_size;
    if (witness) {
        os << ",\"witness\":[";
        for (size_t i = 0; i < witness->size(); ++i) os << (i ? "," : "") << (*witness)[i];
        os << "],\"e_b\":" << e_b << ",\"density\":" << density;
        if (tie_count) os << ",\"ties\":" << tie_count;
    }
    os << "}";
    return os.str();
}

ExtremalityVerdict extremality_check(const Hypergraph& h, int ell, double xi,
                                     ExtremalityMode mode, const ExtremalityParams& params) {
    check_kl(h.k(), ell);
    if (!(0.0 < xi && xi <= 1.0)) throw std::invalid_argument("extremality_check: xi in (0,1]");
    int n = h.n(), k = h.k();
    long long b_size = (long long)(2 * (k - ell) - 1) * n / (2 * (k - ell));
    ExtremalityVerdict v;
    v.mode = mode;
    v.b_size = (int)b_size;
    if (b_size < 0 || b_size > n) {
        v.extremal = ExtremalityVerdict::Answer::No;
        return v;
    }
    long double bound = (long double)xi * (long double)binom(n, k);

    if (mode == ExtremalityMode::Exhaustive) {
        if (n > params.exhaustive_cap)
            throw std::length_error("extremality_check: exhaustive mode refused above cap");
        unsigned long long best = ULLONG_MAX, ties = 0;
        VertexSet best_b;
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        for_each_subset(all, (int)b_size, [&](const VertexSet& b) {
            unsigned long long e = h.edge_count_within(b);
            if (e < best) {
                best = e;
                best_b = b;
                ties = 1;
            } else if (e == best) {
                ++ties;
            }
        });
        v.witness = best_b;
        v.e_b = best;
        v.density = (double)best / (double)binom(n, k);
        v.tie_count = ties;
        v.extremal = ((long double)best <= bound) ? ExtremalityVerdict::Answer::Yes
                                                  : ExtremalityVerdict::Answer::No;
        if (v.extremal == ExtremalityVerdict::Answer::No) v.witness.reset();
        return v;
    }

    // local search: seeded swap descent; Yes with witness or Inconclusive,
    // never No
    Hypergraph mat = h.backing() == Hypergraph::Backing::Explicit ? h : h.materialized();
    std::mt19937_64 rng(params.seed);
    unsigned long long best = ULLONG_MAX;
    VertexSet best_b;
    for (int r = 0; r < params.restarts; ++r) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) {
            int j = (int)(rng() % (uint64_t)(i + 1));
            std::swap(perm[i], perm[j]);
        }
        VertexSet b(perm.begin(), perm.begin() + b_size);
        std::sort(b.begin(), b.end());
        SwapState st;
        st.init(mat, b);
        bool improved = true;
        while (improved) {
            improved = false;
            unsigned long long cur = st.e_b;
            Vertex bu = -1, bv = -1;
            unsigned long long bval = cur;
            for (Vertex u = 0; u < n && bval > 0; ++u) {
                if (!st.in_b[u]) continue;
                for (Vertex w = 0; w < n; ++w) {
                    if (st.in_b[w]) continue;
                    unsigned long long val = st.probe(u, w);
                    if (val < bval) {
                        bval = val;
                        bu = u;
                        bv = w;
                    }
                }
            }
            if (bu >= 0) {
                st.apply(bu, bv);
                improved = true;
            }
        }
        VertexSet cur_b;
        for (Vertex x = 0; x < n; ++x)
            if (st.in_b[x]) cur_b.push_back(x);
        if (st.e_b < best || (st.e_b == best && cur_b < best_b)) {
            best = st.e_b;
            best_b = cur_b;
        }
    }
    if ((long double)best <= bound) {
        v.extremal = ExtremalityVerdict::Answer::Yes;
        v.witness = best_b;
        v.e_b = best;
        v.density = (double)best / (double)binom(n, k);
    } else {
        v.extremal = ExtremalityVerdict::Answer::Inconclusive;
    }
    return v;
}

}  // namespace hamlab
