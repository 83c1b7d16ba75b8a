#ifndef HAMLAB_LP_HPP
#define HAMLAB_LP_HPP

#include <utility>
#include <vector>

#include "hamlab/frac.hpp"

namespace hamlab {

struct PackingLpResult {
    std::vector<long long> floored_units;  // floor(x_c / beta) per column
    Frac objective;                        // exact optimum, when representable
    bool objective_exact = false;
    long double objective_ld = 0.0L;
    int iterations = 0;
};

// maximize value * sum_c x_c  subject to  sum_c load_c(v) x_c <= 1, x >= 0.
// Columns are sparse (row, load) lists with small integer loads. Exact
// rational simplex with Bland's rule; the returned units floor each x_c to
// a multiple of beta.
PackingLpResult solve_unit_packing(const std::vector<std::vector<std::pair<int, int>>>& columns,
                                   int rows, const Frac& value, const Frac& beta);

}  // namespace hamlab

#endif
