#include "prockit/assignment.hpp"

#include <limits>
#include <stdexcept>

namespace prockit {

namespace {

// Potential-based Hungarian algorithm, minimization form, n rows <= m cols,
// 1-indexed internally. cost(i, j) callable for i in [1,n], j in [1,m].
template <typename CostFn>
std::vector<int> solve_min_cost(int n, int m, CostFn cost) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> col_to_row(m + 1, 0);  // 0 = free
    std::vector<int> way(m + 1, 0);

    for (int i = 1; i <= n; ++i) {
        col_to_row[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            int i0 = col_to_row[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                double cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[col_to_row[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (col_to_row[j0] != 0);
        // augment along the alternating path
        do {
            int j1 = way[j0];
            col_to_row[j0] = col_to_row[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> row_to_col(n + 1, 0);
    for (int j = 1; j <= m; ++j) {
        if (col_to_row[j] != 0) row_to_col[col_to_row[j]] = j;
    }
    return row_to_col;
}

}  // namespace

Assignment max_weight_assignment(const std::vector<std::vector<double>>& weights) {
    const int n = static_cast<int>(weights.size());
    const int m = n == 0 ? 0 : static_cast<int>(weights.front().size());
    for (const auto& row : weights) {
        if (static_cast<int>(row.size()) != m) {
            throw std::invalid_argument("weight matrix rows have unequal lengths");
        }
    }

    Assignment result;
    result.match.assign(n, -1);
    if (n == 0 || m == 0) return result;

    // Append n zero-weight dummy columns so any row may stay effectively
    // unmatched; keeps the result a true maximum-weight matching even if a
    // caller passes negative weights.
    const bool transposed = n > m;
    const int rows = transposed ? m : n;
    const int cols = (transposed ? n : m) + rows;
    auto weight_at = [&](int r, int c) -> double {
        if (c >= (transposed ? n : m)) return 0.0;
        return transposed ? weights[c][r] : weights[r][c];
    };
    auto cost = [&](int i, int j) -> double { return -weight_at(i - 1, j - 1); };

    std::vector<int> row_to_col = solve_min_cost(rows, cols, cost);

    const int real_cols = transposed ? n : m;
    for (int r = 0; r < rows; ++r) {
        int c = row_to_col[r + 1] - 1;
        if (c < 0 || c >= real_cols) continue;  // dummy column
        double w = weight_at(r, c);
        result.total += w;
        if (transposed) {
            result.match[c] = r;
        } else {
            result.match[r] = c;
        }
    }
    return result;
}

}  // namespace prockit
