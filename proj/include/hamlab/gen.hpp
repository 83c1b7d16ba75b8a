#ifndef HAMLAB_GEN_HPP
#define HAMLAB_GEN_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hamlab/frac.hpp"
#include "hamlab/hgraph.hpp"

namespace hamlab {

// H_{k,l}: all k-sets meeting A = {0,...,a-1}, a = ceil(n/(2(k-l)) - 1).
// Contains no Hamiltonian l-cycle and has delta_{k-1} = a.
Hypergraph extremal_example(int n, int k, int ell);

// size of the set A above
int extremal_a_size(int n, int k, int ell);

// the cherry C_l: 2k-2l vertices, edges {0..k-1} and {k-2l..2k-2l-1}
Hypergraph cherry(int k, int ell);

struct RandomMindegResult {
    Hypergraph h;
    unsigned long long achieved_delta;  // delta_{k-2} of the result
    unsigned long long target;          // ceil(delta_fraction * C(n,2))
    int edges_added;                    // greedy repairs on top of the random start
    bool target_reached;                // false: target above C(n-k+2,2), result is maximal
};

// Seeded deterministic generator: Bernoulli(p) start, then greedily add the
// lexicographically least missing edge on a most-deficient (k-2)-set until
// delta_{k-2} >= delta_fraction * C(n,2). p defaults to delta_fraction.
// Targets above the attainable maximum saturate to the complete hypergraph
// and are flagged unreachable via target_reached.
RandomMindegResult random_mindeg(int n, int k, int ell, const Frac& delta_fraction,
                                 uint64_t seed, std::optional<double> p = std::nullopt);

enum class ExtremalityMode { Exhaustive, LocalSearch };

struct ExtremalityVerdict {
    enum class Answer { Yes, No, Inconclusive };
    Answer extremal = Answer::Inconclusive;
    std::optional<VertexSet> witness;   // minimizing B (lexicographically least)
    unsigned long long e_b = 0;         // edges induced by the witness
    double density = 0.0;               // e(B) / C(n,k)
    ExtremalityMode mode = ExtremalityMode::Exhaustive;
    unsigned long long tie_count = 0;   // number of minimizing B (exhaustive only)
    int b_size = 0;
    std::string json_line() const;
};

struct ExtremalityParams {
    int exhaustive_cap = 14;  // refuse exhaustive enumeration above this n
    int restarts = 50;        // local search
    uint64_t seed = 1;
};

// (l,xi)-extremality: is there B, |B| = floor((2(k-l)-1)/(2(k-l)) n), with
// e(B) <= xi*C(n,k)?  Exhaustive mode may answer No; local search never does.
ExtremalityVerdict extremality_check(const Hypergraph& h, int ell, double xi,
                                     ExtremalityMode mode, const ExtremalityParams& params = {});

}  // namespace hamlab

#endif
