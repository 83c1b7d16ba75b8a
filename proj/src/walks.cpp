#include "hamlab/walks.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace hamlab {

VertexSet EllWalk::window(int j) const {
    int step = k - ell;
    VertexSet w(k);
    int nseq = (int)seq.size();
    for (int i = 0; i < k; ++i) {
        int pos = j * step + i;
        w[i] = seq[kind == Kind::Cycle ? pos % nseq : pos];
    }
    std::sort(w.begin(), w.end());
    return w;
}

std::string EllWalk::line() const {
    std::ostringstream os;
    os << (kind == Kind::Path ? "path" : "cycle") << ' ' << ell;
    for (Vertex v : seq) os << ' ' << v;
    return os.str();
}

EllWalk EllWalk::parse_line(const std::string& line, int k) {
    std::istringstream is(line);
    std::string kindtok;
    int ell;
    if (!(is >> kindtok >> ell)) throw std::runtime_error("walk parse: bad header");
    EllWalk w;
    w.k = k;
    w.ell = ell;
    if (kindtok == "path")
        w.kind = Kind::Path;
    else if (kindtok == "cycle")
        w.kind = Kind::Cycle;
    else
        throw std::runtime_error("walk parse: kind must be 'path' or 'cycle'");
    Vertex v;
    while (is >> v) w.seq.push_back(v);
    return w;
}

namespace {

std::string check_common(const Hypergraph& h, const std::vector<Vertex>& seq, int ell) {
    if (ell < 1 || ell >= h.k()) return "need 1 <= ell < k";
    std::unordered_set<Vertex> seen;
    for (Vertex v : seq) {
        if (v < 0 || v >= h.n()) return "vertex id out of range";
        if (!seen.insert(v).second) return "repeated vertex in sequence";
    }
    return {};
}

}  // namespace

WalkCheck validate_path(const Hypergraph& h, const std::vector<Vertex>& seq, int ell) {
    WalkCheck r;
    if (auto e = check_common(h, seq, ell); !e.empty()) {
        r.error = e;
        return r;
    }
    int k = h.k(), step = k - ell;
    int nseq = (int)seq.size();
    if (nseq < k || (nseq - k) % step != 0) {
        r.error = "arity: |seq| must be k + (m-1)(k-ell) for some m >= 1";
        return r;
    }
    int m = 1 + (nseq - k) / step;
    EllWalk w{seq, ell, k, EllWalk::Kind::Path};
    for (int j = 0; j < m; ++j) {
        if (!h.contains(w.window(j))) {
            r.error = "window " + std::to_string(j) + " is not an edge";
            r.window_index = j;
            return r;
        }
    }
    r.walk = std::move(w);
    return r;
}

WalkCheck validate_cycle(const Hypergraph& h, const std::vector<Vertex>& seq, int ell) {
    WalkCheck r;
    if (auto e = check_common(h, seq, ell); !e.empty()) {
        r.error = e;
        return r;
    }
    int k = h.k(), step = k - ell;
    int nseq = (int)seq.size();
    if (nseq == 0 || nseq % step != 0) {
        r.error = "divisibility: (k-ell) must divide |seq|";
        return r;
    }
    int m = nseq / step;
    if (m < 2) {
        r.error = "cycle needs at least 2 edges";
        return r;
    }
    if (nseq < k) {
        r.error = "sequence shorter than one window";
        return r;
    }
    EllWalk w{seq, ell, k, EllWalk::Kind::Cycle};
    for (int j = 0; j < m; ++j) {
        if (!h.contains(w.window(j))) {
            r.error = "window " + std::to_string(j) + " is not an edge";
            r.window_index = j;
            return r;
        }
    }
    r.walk = std::move(w);
    return r;
}

WalkEnds ends(const EllWalk& w) {
    if (w.kind != EllWalk::Kind::Path)
        throw std::invalid_argument("ends: defined for paths only");
    WalkEnds e;
    e.head.assign(w.seq.begin(), w.seq.begin() + w.ell);
    e.tail.assign(w.seq.end() - w.ell, w.seq.end());
    std::sort(e.head.begin(), e.head.end());
    std::sort(e.tail.begin(), e.tail.end());
    return e;
}

}  // namespace hamlab
