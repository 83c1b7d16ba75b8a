#ifndef HAMLAB_WALKS_HPP
#define HAMLAB_WALKS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/hgraph.hpp"

namespace hamlab {

// An l-path or l-cycle, stored as the vertex sequence that realizes it.
// Path with m edges: |seq| = k + (m-1)(k-l); cycle: |seq| = m(k-l), windows
// start at multiples of (k-l) (cyclically for cycles).
struct EllWalk {
    enum class Kind { Path, Cycle };
    std::vector<Vertex> seq;
    int ell = 0;
    int k = 0;
    Kind kind = Kind::Path;

    int size() const {  // number of edges
        if (kind == Kind::Path) return 1 + ((int)seq.size() - k) / (k - ell);
        return (int)seq.size() / (k - ell);
    }
    VertexSet window(int j) const;  // j-th window as a sorted set
    std::string line() const;       // "path|cycle ell v0 v1 ..."
    static EllWalk parse_line(const std::string& line, int k);
};

struct WalkEnds {
    VertexSet head;
    VertexSet tail;
    bool operator==(const WalkEnds&) const = default;
};

// validation result; on failure window_index pinpoints the first bad window
// (-1 for arity/divisibility problems)
struct WalkCheck {
    std::optional<EllWalk> walk;
    std::string error;
    int window_index = -1;
    bool ok() const { return walk.has_value(); }
};

WalkCheck validate_path(const Hypergraph& h, const std::vector<Vertex>& seq, int ell);
WalkCheck validate_cycle(const Hypergraph& h, const std::vector<Vertex>& seq, int ell);

// first/last l vertices of a path, as unordered sets
WalkEnds ends(const EllWalk& w);

}  // namespace hamlab

#endif
