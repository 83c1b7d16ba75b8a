#ifndef HAMLAB_SOLVER_HPP
#define HAMLAB_SOLVER_HPP

#include <functional>
#include <optional>

#include "hamlab/walks.hpp"

namespace hamlab {

struct SearchBudget {
    unsigned long long max_nodes = 0;  // 0 = unlimited
    long long max_millis = 0;          // 0 = unlimited
};

struct SearchStats {
    enum class Outcome { Found, Exhausted, Timeout };
    unsigned long long nodes = 0;
    int max_depth = 0;
    long long millis = 0;
    Outcome outcome = Outcome::Exhausted;
};

struct SolveResult {
    std::optional<EllWalk> cycle;
    SearchStats stats;
};

// Complete decision search for a Hamiltonian l-cycle. The cyclic ordering is
// built block by block (overlap blocks of size l, interior blocks of size
// k-2l); the block holding vertex 0 is pinned to kill rotation symmetry and
// reflections are rejected canonically. Outcome Exhausted certifies
// non-existence; Timeout is reported distinctly.
SolveResult hamiltonian_cycle(const Hypergraph& h, int ell, const SearchBudget& budget = {});

// Brute force over anchored vertex orderings; independent of the solver's
// search. Hard cap n <= 10.
bool hamiltonian_cycle_oracle(const Hypergraph& h, int ell);

// Streams every ordered vertex sequence realizing an l-path of exactly m
// edges (ordered-tuple semantics: each edge in every admissible order).
void enumerate_paths(const Hypergraph& h, int ell, int m,
                     const std::function<void(const std::vector<Vertex>&)>& fn);

unsigned long long count_paths(const Hypergraph& h, int ell, int m);

}  // namespace hamlab

#endif
