#ifndef HAMLAB_COMBIN_HPP
#define HAMLAB_COMBIN_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hamlab {

inline unsigned long long binom(long long n, long long r) {
    if (r < 0 || n < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    unsigned __int128 acc = 1;
    for (long long i = 1; i <= r; ++i) {
        acc = acc * (unsigned long long)(n - r + i) / (unsigned long long)i;
        if (acc > UINT64_MAX) throw std::overflow_error("binom: overflow");
    }
    return (unsigned long long)acc;
}

// advances a sorted r-combination over [0,n); false when exhausted
inline bool next_combination(std::vector<int>& c, int n) {
    int r = (int)c.size();
    for (int i = r - 1; i >= 0; --i) {
        if (c[i] < n - r + i) {
            ++c[i];
            for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// all r-subsets of pool (sorted pool assumed), invoked as fn(const vector<int>&)
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int r, Fn&& fn) {
    int n = (int)pool.size();
    if (r < 0 || r > n) return;
    if (r == 0) {
        std::vector<int> empty;
        fn(empty);
        return;
    }
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> subset(r);
    while (true) {
        for (int i = 0; i < r; ++i) subset[i] = pool[idx[i]];
        fn(subset);
        if (!next_combination(idx, n)) break;
    }
}

// same but allows the callback to stop early by returning true
template <typename Fn>
bool for_each_subset_until(const std::vector<int>& pool, int r, Fn&& fn) {
    int n = (int)pool.size();
    if (r < 0 || r > n) return false;
    if (r == 0) {
        std::vector<int> empty;
        return fn(empty);
    }
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<int> subset(r);
    while (true) {
        for (int i = 0; i < r; ++i) subset[i] = pool[idx[i]];
        if (fn(subset)) return true;
        if (!next_combination(idx, n)) break;
    }
    return false;
}

}  // namespace hamlab

#endif
