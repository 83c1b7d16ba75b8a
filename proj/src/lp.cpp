#include "hamlab/lp.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace hamlab {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

Rational to_rational(const Frac& f) { return Rational(f.num(), f.den()); }

}  // namespace

PackingLpResult solve_unit_packing(const std::vector<std::vector<std::pair<int, int>>>& columns,
                                   int rows, const Frac& value, const Frac& beta) {
    if (value <= Frac(0) || beta <= Frac(0))
        throw std::invalid_argument("solve_unit_packing: value and beta must be positive");
    int n = (int)columns.size();
    int total = n + rows;  // structural + slack

    // dense tableau: rows x (total + rhs); slack basis, b = 1 is feasible
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(total + 1, 0));
    for (int c = 0; c < n; ++c) {
        for (auto [r, load] : columns[c]) {
            if (r < 0 || r >= rows) throw std::invalid_argument("solve_unit_packing: bad row");
            a[r][c] = load;
        }
    }
    for (int r = 0; r < rows; ++r) {
        a[r][n + r] = 1;
        a[r][total] = 1;  // rhs
    }
    // objective row: reduced costs start at c_j (maximize sum x_c)
    std::vector<Rational> z(total + 1, 0);
    for (int c = 0; c < n; ++c) z[c] = 1;
    std::vector<int> basis(rows);
    for (int r = 0; r < rows; ++r) basis[r] = n + r;

    PackingLpResult out;
    while (true) {
        // Bland: first column with positive reduced cost
        int enter = -1;
        for (int c = 0; c < total; ++c) {
            if (z[c] > 0) {
                enter = c;
                break;
            }
        }
        if (enter < 0) break;
        // ratio test, ties broken by smallest basis variable
        int leave = -1;
        Rational best;
        for (int r = 0; r < rows; ++r) {
            if (a[r][enter] <= 0) continue;
            Rational ratio = a[r][total] / a[r][enter];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) throw std::logic_error("solve_unit_packing: unbounded packing LP");
        // pivot
        Rational piv = a[leave][enter];
        for (int c = 0; c <= total; ++c) a[leave][c] /= piv;
        for (int r = 0; r < rows; ++r) {
            if (r == leave || a[r][enter] == 0) continue;
            Rational f = a[r][enter];
            for (int c = 0; c <= total; ++c) a[r][c] -= f * a[leave][c];
        }
        Rational fz = z[enter];
        for (int c = 0; c <= total; ++c) z[c] -= fz * a[leave][c];
        basis[leave] = enter;
        ++out.iterations;
        if (out.iterations > 200000)
            throw std::logic_error("solve_unit_packing: iteration cap hit");
    }

    std::vector<Rational> x(n, 0);
    Rational obj = 0;
    for (int r = 0; r < rows; ++r) {
        if (basis[r] < n) {
            x[basis[r]] = a[r][total];
            obj += a[r][total];
        }
    }
    obj *= to_rational(value);

    Rational rb = to_rational(beta);
    out.floored_units.resize(n, 0);
    for (int c = 0; c < n; ++c) {
        if (x[c] == 0) continue;
        Rational q = x[c] / rb;
        Int fl = numerator(q) / denominator(q);  // both positive here
        out.floored_units[c] = fl.convert_to<long long>();
    }

    out.objective_ld = obj.convert_to<long double>();
    Int on = numerator(obj), od = denominator(obj);
    if (on <= INT64_MAX && od <= INT64_MAX) {
        out.objective = Frac(on.convert_to<long long>(), od.convert_to<long long>());
        out.objective_exact = true;
    }
    return out;
}

}  // namespace hamlab
