#ifndef HAMLAB_CONNECT_HPP
#define HAMLAB_CONNECT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/walks.hpp"

namespace hamlab {

struct ConnectRequest {
    std::vector<std::pair<VertexSet, VertexSet>> pairs;  // (X_i, Y_i), disjoint l-sets
    VertexSet reservoir;                                 // interior vertices come from here
    double eta = 0.0;                                    // extendability threshold parameter
};

// (x, L, y) whose end-augmented links into the reservoir are large
struct ExtendableTriple {
    Vertex x = -1;
    VertexSet L;  // (l-1)-set
    Vertex y = -1;
    long long side_x = 0;  // |N_{R\F}(X u L u {x})|
    long long side_y = 0;  // |N_{R\F}(Y u L u {y})|
};

enum class ConnectStage { SingleEdge, Observation, MSelection, FinalEdge };

struct ConnectFailure {
    int pair_index = -1;
    ConnectStage stage = ConnectStage::SingleEdge;
    std::string message;
};

struct ConnectResult {
    std::vector<EllWalk> paths;
    std::optional<ConnectFailure> failure;
    bool ok() const { return !failure.has_value(); }
};

// Connects every (X_i, Y_i) by vertex-disjoint l-paths of size at most four
// whose interiors come from the reservoir minus everything already used.
// Case k-2 >= 2l places a single edge X u Y u Z u M; case 2l = k-1 builds
// the four-edge gadget through two disjoint extendable triples. Pairs are
// processed in input order, candidates lexicographically.
ConnectResult connect_all(const Hypergraph& h, const ConnectRequest& req);

// Enumerates extendable triples for fixed end-sets X, Y (2l = k-1 case).
// Thresholds are eta*|R|/4 with side counts taken inside R \ F.
std::vector<ExtendableTriple> find_extendable_triples(const Hypergraph& h, const VertexSet& x_end,
                                                      const VertexSet& y_end, const VertexSet& r,
                                                      const VertexSet& f, double eta,
                                                      size_t limit = SIZE_MAX);

struct ReservoirParams {
    int retry_cap = 100;
    // the lemma's asymptotic size bound eps*n >= 32km/eta^3; unattainable at
    // desk-scale n, so the explicit verification below stands in for it
    bool enforce_size_bound = false;
};

// Samples uniform floor(epsilon*n)-subsets until one satisfies
// |N(K) n C(R,2)| >= (eta/2) C(|R|,2) for every (k-2)-set K; the Chernoff
// argument is replaced by this explicit post-hoc verification.
std::optional<VertexSet> reservoir_select(const Hypergraph& h, double epsilon, double eta, int m,
                                          uint64_t seed, const ReservoirParams& params = {});

}  // namespace hamlab

#endif
