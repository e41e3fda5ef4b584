#include "clucmp/assignment.hpp"

#include <limits>

namespace clucmp {

std::int64_t max_weight_assignment(const std::vector<std::vector<std::int64_t>>& weights) {
    if (weights.empty() || weights.front().empty()) {
        return 0;
    }
    const int rows = static_cast<int>(weights.size());
    const int cols = static_cast<int>(weights.front().size());
    const int s = std::max(rows, cols);
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

    // Minimization on negated weights, zero-padded to s x s; 1-based with a
    // virtual column 0.
    auto cost = [&](int i, int j) -> std::int64_t {
        if (i <= rows && j <= cols) {
            return -weights[i - 1][j - 1];
        }
        return 0;
    };

    std::vector<std::int64_t> u(s + 1, 0), v(s + 1, 0), minv(s + 1, 0);
    std::vector<int> match(s + 1, 0), way(s + 1, 0);
    std::vector<bool> used(s + 1, false);

    for (int i = 1; i <= s; ++i) {
        match[0] = i;
        int j0 = 0;
        minv.assign(s + 1, kInf);
        used.assign(s + 1, false);
        do {
            used[j0] = true;
            const int i0 = match[j0];
            std::int64_t delta = kInf;
            int j1 = 0;
            for (int j = 1; j <= s; ++j) {
                if (used[j]) {
                    continue;
                }
                const std::int64_t cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= s; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::int64_t total = 0;
    for (int j = 1; j <= s; ++j) {
        total -= cost(match[j], j);
    }
    return total;
}

}  // namespace clucmp
