#include "krrf/tsp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "krrf/errors.hpp"

namespace krrf {

DistanceMatrix matrix_from_forest(const PairTrajectories& trajectories) {
    const int n = trajectories.size();
    DistanceMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto& traj = trajectories.at(i, j);
            if (!traj)
                throw MissingPair("no trajectory for target pair (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
            m.at(i, j) = traj->total_length;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) throw Error("asymmetric trajectory costs");
    return m;
}

double tour_cost(const DistanceMatrix& d, std::span<const int> order) {
    const std::size_t n = order.size();
    double cost = 0.0;
    for (std::size_t k = 1; k < n; ++k) cost += d.at(order[k - 1], order[k]);
    cost += d.at(order[n - 1], order[0]);
    return cost;
}

void canonicalize_order(std::vector<int>& order) {
    const auto zero = std::find(order.begin(), order.end(), 0);
    std::rotate(order.begin(), zero, order.end());
    if (order.size() > 2 && order[1] > order.back())
        std::reverse(order.begin() + 1, order.end());
}

Tour solve_exact(const DistanceMatrix& d) {
    const int n = d.n;
    if (n > 15) throw TooLarge("exact solver limited to 15 targets, got " + std::to_string(n));
    if (n == 2) return {{0, 1}, 2.0 * d.at(0, 1)};

    // Held-Karp over subsets of {1..n-1}; city 0 is the fixed tour start.
    const int m = n - 1;
    const std::size_t masks = std::size_t{1} << m;
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dp(masks * m, inf);
    std::vector<int8_t> parent(masks * m, -1);

    for (int k = 0; k < m; ++k) dp[(std::size_t{1} << k) * m + k] = d.at(0, k + 1);

    for (std::size_t mask = 1; mask < masks; ++mask) {
        for (int last = 0; last < m; ++last) {
            if (!(mask & (std::size_t{1} << last))) continue;
            const double base = dp[mask * m + last];
            if (base == inf) continue;
            for (int next = 0; next < m; ++next) {
                if (mask & (std::size_t{1} << next)) continue;
                const std::size_t nmask = mask | (std::size_t{1} << next);
                const double cand = base + d.at(last + 1, next + 1);
                if (cand < dp[nmask * m + next]) {
                    dp[nmask * m + next] = cand;
                    parent[nmask * m + next] = static_cast<int8_t>(last);
                }
            }
        }
    }

    const std::size_t full = masks - 1;
    double best = inf;
    int best_last = -1;
    for (int last = 0; last < m; ++last) {
        const double cand = dp[full * m + last] + d.at(last + 1, 0);
        if (cand < best) {
            best = cand;
            best_last = last;
        }
    }

    std::vector<int> order;
    order.reserve(n);
    std::size_t mask = full;
    int last = best_last;
    while (last >= 0) {
        order.push_back(last + 1);
        const int prev = parent[mask * m + last];
        mask ^= std::size_t{1} << last;
        last = prev;
    }
    order.push_back(0);
    std::reverse(order.begin(), order.end());
    canonicalize_order(order);
    return {std::move(order), best};
}

namespace {

std::vector<int> nearest_neighbor_tour(const DistanceMatrix& d, int start) {
    const int n = d.n;
    std::vector<int> order;
    order.reserve(n);
    std::vector<bool> used(n, false);
    int cur = start;
    order.push_back(cur);
    used[cur] = true;
    for (int step = 1; step < n; ++step) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand]) continue;
            if (d.at(cur, cand) < best_d) {
                best_d = d.at(cur, cand);
                best = cand;
            }
        }
        order.push_back(best);
        used[best] = true;
        cur = best;
    }
    return order;
}

// One full pass of 2-opt moves (first-improvement); true if anything improved.
bool two_opt_pass(const DistanceMatrix& d, std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    bool improved = false;
    for (int i = 0; i < n - 1; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = order[i], b = order[(i + 1) % n];
            const int c = order[j], e = order[(j + 1) % n];
            if (a == c || b == e || a == e) continue;
            const double delta = d.at(a, c) + d.at(b, e) - d.at(a, b) - d.at(c, e);
            if (delta < -1e-12) {
                std::reverse(order.begin() + i + 1, order.begin() + j + 1);
                improved = true;
            }
        }
    }
    return improved;
}

// One pass of Or-opt: relocate segments of length 1..3 (both orientations).
bool or_opt_pass(const DistanceMatrix& d, std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    bool improved = false;
    for (int len = 1; len <= 3 && len < n - 1; ++len) {
        for (int i = 0; i < n; ++i) {
            // segment order[i..i+len-1] (cyclic), its neighbors p and s
            std::vector<int> seg(len);
            for (int k = 0; k < len; ++k) seg[k] = order[(i + k) % n];
            const int p = order[(i + n - 1) % n];
            const int s = order[(i + len) % n];
            if (p == seg.back() || s == seg.front()) continue;
            const double removed =
                d.at(p, seg.front()) + d.at(seg.back(), s) - d.at(p, s);

            for (int j = 0; j < n; ++j) {
                const int a = order[j];
                const int b = order[(j + 1) % n];
                // insertion edge must lie outside the segment and its seams
                bool inside = a == p;
                for (int k = 0; k < len && !inside; ++k) inside = a == seg[k];
                if (inside) continue;
                const double fwd = d.at(a, seg.front()) + d.at(seg.back(), b) - d.at(a, b);
                const double rev = d.at(a, seg.back()) + d.at(seg.front(), b) - d.at(a, b);
                const bool reverse_seg = rev < fwd;
                const double added = reverse_seg ? rev : fwd;
                if (added - removed < -1e-12) {
                    std::vector<int> next;
                    next.reserve(n);
                    std::vector<bool> in_seg(n, false);
                    for (int v : seg) in_seg[v] = true;
                    for (int k = 0; k < n; ++k) {
                        const int v = order[k];
                        if (in_seg[v]) continue;
                        next.push_back(v);
                        if (v == a) {
                            if (reverse_seg)
                                next.insert(next.end(), seg.rbegin(), seg.rend());
                            else
                                next.insert(next.end(), seg.begin(), seg.end());
                        }
                    }
                    order = std::move(next);
                    improved = true;
                    break;
                }
            }
            if (improved) break;
        }
        if (improved) break;
    }
    return improved;
}

} // namespace

double local_search(const DistanceMatrix& d, std::vector<int>& order) {
    bool improved = true;
    while (improved) {
        improved = two_opt_pass(d, order);
        if (!improved) improved = or_opt_pass(d, order);
    }
    return tour_cost(d, order);
}

Tour solve_heuristic(const DistanceMatrix& d, Rng& rng) {
    const int n = d.n;
    if (n == 2) return {{0, 1}, 2.0 * d.at(0, 1)};

    std::vector<int> best_order;
    double best_cost = std::numeric_limits<double>::infinity();
    for (int start = 0; start < n; ++start) {
        std::vector<int> order = nearest_neighbor_tour(d, start);
        const double cost = local_search(d, order);
        if (cost < best_cost) {
            best_cost = cost;
            best_order = std::move(order);
        }
    }

    // Double-bridge kicks to escape shallow local optima.
    const int kicks = 8 + 2 * n;
    for (int kick = 0; kick < kicks; ++kick) {
        std::vector<int> order = best_order;
        if (n >= 6) {
            const int p1 = 1 + static_cast<int>(rng.uniform_index(n - 3));
            const int p2 = p1 + 1 + static_cast<int>(rng.uniform_index(n - p1 - 2));
            const int p3 = p2 + 1 + static_cast<int>(rng.uniform_index(n - p2 - 1));
            std::vector<int> kicked;
            kicked.reserve(n);
            kicked.insert(kicked.end(), order.begin(), order.begin() + p1);
            kicked.insert(kicked.end(), order.begin() + p2, order.begin() + p3);
            kicked.insert(kicked.end(), order.begin() + p1, order.begin() + p2);
            kicked.insert(kicked.end(), order.begin() + p3, order.end());
            order = std::move(kicked);
        } else {
            const int a = 1 + static_cast<int>(rng.uniform_index(n - 1));
            int b = 1 + static_cast<int>(rng.uniform_index(n - 1));
            if (a == b) b = 1 + (b % (n - 1));
            std::swap(order[a], order[b]);
        }
        const double cost = local_search(d, order);
        if (cost < best_cost) {
            best_cost = cost;
            best_order = std::move(order);
        }
    }

    canonicalize_order(best_order);
    return {std::move(best_order), best_cost};
}

} // namespace krrf
