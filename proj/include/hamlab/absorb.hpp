#ifndef HAMLAB_ABSORB_HPP
#define HAMLAB_ABSORB_HPP

#include <optional>
#include <string>
#include <vector>

#include "hamlab/walks.hpp"

namespace hamlab {

// split of the absorption target S = S1 u S2 with s3 = |S1 n S2|
struct TargetSplit {
    VertexSet S1, S2;
    int s1 = 0, s2 = 0, s3 = 0;
};

// Deterministic split satisfying |S1| >= |S2| >= |S1|-1 and
// max{0, 3l-k} <= s3 < l, with s3 minimal and then s1 minimal.
TargetSplit split_target(const VertexSet& s, int k, int ell);

// A 3-edge l-path P = (e1,e2,e3) that absorbs the (k-l)-set S: the 4-edge
// path P' = (e1,f1,f2,e3) has the same ends and V(P') = V(P) u S.
struct Absorber {
    VertexSet S, S1, S2;
    int s1 = 0, s2 = 0, s3 = 0;
    VertexSet X, Y;            // completions: f1 = X u S1, f2 = S2 u F u Y
    VertexSet L1, L2, F, F1, F2;
    VertexSet L1p, L2p;        // (l-1)-subsets seeding e2
    Vertex x1 = -1, x2 = -1;   // pair completing e2; x1 sits in e1, x2 in e3
    VertexSet e1, e2, e3, f1, f2;
    EllWalk P, Pprime;
};

// Executes the construction steps: choose X with X u S1 an edge, Y with
// S2 u F u Y an edge, the pair {x1,x2} completing e2, and disjoint edges
// e1, e3 around {x1} u L1 and {x2} u L2. All choices scan lexicographically
// and avoid S, forbidden and earlier picks. Returns nullopt when the scan
// space (capped at attempt_cap candidate tuples) is exhausted.
std::optional<Absorber> find_absorber(const Hypergraph& h, const VertexSet& s,
                                      const VertexSet& forbidden = {},
                                      unsigned long long attempt_cap = 4000000);

// All type invariants of Absorber, as named checks; empty result = all hold.
std::vector<std::string> check_absorber(const Absorber& a, const Hypergraph& h);

// Complete search for an l-path on exactly the vertex set w with the given
// unordered end sets. Shared engine of absorbs_check and count_absorbers.
std::optional<EllWalk> find_path_on(const Hypergraph& h, const VertexSet& w,
                                    const VertexSet& head, const VertexSet& tail, int ell);

// Q with ends(Q) = ends(P) and V(Q) = V(P) u U, or nullopt. |U| must be a
// multiple of (k-l) and |V(P) u U| at most vertex_cap.
std::optional<EllWalk> absorbs_check(const Hypergraph& h, const EllWalk& p, const VertexSet& u,
                                     int vertex_cap = 16);

// Exact count of ordered q-tuples (q = 3k-2l) that form 3-edge l-paths
// absorbing S. Enumerates edge-wise block structures and multiplies by the
// number of orderings realizing each structure with admissible ends.
unsigned long long count_absorbers(const Hypergraph& h, const VertexSet& s, int n_cap = 13);

}  // namespace hamlab

#endif
