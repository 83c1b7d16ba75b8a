#ifndef HAMLAB_TILING_HPP
#define HAMLAB_TILING_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/frac.hpp"
#include "hamlab/hgraph.hpp"

namespace hamlab {

// Homomorphism from the cherry C_l (vertices 0..2k-2l-1, edges {0..k-1} and
// {k-2l..2k-2l-1}) into a hypergraph, stored as its image vector. Vertices
// may repeat across the two cherry edges but never within one.
struct CherryHom {
    std::vector<Vertex> image;  // image[i] = phi(i), size 2k-2l

    VertexSet first_edge_image(int k, int ell) const;
    VertexSet second_edge_image(int k, int ell) const;
    bool is_hom(const Hypergraph& r, int ell) const;  // both edge images are edges
    bool injective() const;                           // globally injective
    bool operator==(const CherryHom&) const = default;
};

struct TilingEntry {
    CherryHom hom;
    long long units = 0;  // weight = units * beta, units >= 1
};

// beta-hom(C_l)-tiling: weighted multiset of cherry homomorphisms with
// per-vertex load at most 1 and weights positive multiples of beta.
struct HomTiling {
    int k = 0, ell = 0, t = 0;  // t = |V(R)|
    Frac beta;
    std::vector<TilingEntry> entries;

    int cherry_order() const { return 2 * k - 2 * ell; }
    Frac entry_weight(size_t i) const { return Frac(entries[i].units) * beta; }
    std::vector<Frac> vertex_loads() const;  // w_h(v) for every v
    Frac total_weight() const;               // w(h) = sum_v w_h(v)

    void write(std::ostream& out) const;  // header "beta k ell t", entries "w: v0 v1 ..."
    static HomTiling parse(std::istream& in);
};

struct TilingCheck {
    bool ok = true;
    std::string error;
    int bad_entry = -1;
    Vertex bad_vertex = -1;
    Frac total;  // recomputed w(h)
};

TilingCheck tiling_validate(const Hypergraph& r, const HomTiling& h);

enum class BlockVariant { Skewed, Even };

// The single-edge building block. Skewed: per-vertex weight q on the first
// k-2 vertices and q(k-2)/(2(k-l-1)) on the last two, granularity
// q/(2(k-l-1)). Even: weight q on all k vertices, granularity q/(2(k-l)).
HomTiling building_block(const Hypergraph& r, const VertexSet& e, int ell, const Frac& q,
                         BlockVariant variant);

// Variant with an explicit choice of the two light vertices (skewed case);
// the improvement moves orient blocks toward the cherry vertices.
HomTiling building_block_oriented(const Hypergraph& r, const VertexSet& e, int ell, const Frac& q,
                                  BlockVariant variant, const VertexSet& light_pair);

struct MaxTilingOptions {
    int t_cap = 16;
    bool include_noninjective = false;  // admit homs whose exteriors collide
};

struct MaxTilingResult {
    HomTiling tiling;
    Frac rounded_weight;        // w(h) of the beta-granular tiling
    Frac fractional_optimum;    // exact LP value (valid when fractional_exact)
    bool fractional_exact = false;
    long double fractional_ld = 0.0L;
    size_t columns = 0;  // LP columns (hom classes by load vector)
};

// Enumerates cherry homomorphisms as aligned edge pairs, solves the exact
// fractional relaxation, floors to beta multiples and greedily tops up.
MaxTilingResult max_tiling_lp(const Hypergraph& r, int ell, const Frac& beta,
                              const MaxTilingOptions& opts = {});

struct MoveResult {
    HomTiling tiling;
    char move = '?';       // 'a' 3-matching, 'b' four-distinct-neighbours, 'c' weight-shift
    Frac weight_gain;      // strictly positive
    // move 'c' details, for checking the shift identity
    Vertex shifted_vertex = -1;
    Frac shift_amount;     // reduction at shifted_vertex before the block
    VertexSet block_edge;  // edge receiving the final even block
    Frac block_q;
};

struct MoveParams {
    unsigned long long attempt_cap = 2000000;
};

// Searches the three local moves over pairs of tiled cherries (plus virtual
// constant padders on unsaturated vertices) and low-weight (k-2)-sets K;
// returns the first strictly improving tiling or nullopt.
std::optional<MoveResult> improvement_moves(const Hypergraph& r, const HomTiling& h,
                                            const MoveParams& params = {});

struct FracExtremalWitness {
    std::vector<double> b;  // per vertex, in {0} u [beta, 1]
    double mass = 0.0;      // sum b(v)
    double edge_mass = 0.0; // sum_e prod_{v in e} b(v)
};

enum class FracExtremalMode { BinaryExhaustive, ContinuousLocalSearch };

struct FracExtremalResult {
    std::optional<FracExtremalWitness> witness;
    bool exhaustive = false;  // nullopt from local search is inconclusive
};

struct FracExtremalParams {
    int binary_cap = 14;
    int restarts = 50;
    uint64_t seed = 1;
};

// Witness b with sum b(v) >= (2(k-l)-1)/(2(k-l)) t and weighted edge mass
// at most xi*C(t,k), or none. Binary mode restricts b to {0,1} and
// enumerates; continuous mode runs seeded projected descent.
FracExtremalResult fractional_extremality(const Hypergraph& r, int ell, const Frac& beta,
                                          double xi, FracExtremalMode mode,
                                          const FracExtremalParams& params = {});

}  // namespace hamlab

#endif
