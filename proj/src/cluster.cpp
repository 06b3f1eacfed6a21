#include "netdiv/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netdiv/error.hpp"

namespace netdiv {

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw Error("pearson: length mismatch");
    double sx = 0, sy = 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::isnan(x[i]) || std::isnan(y[i])) continue;
        sx += x[i];
        sy += y[i];
        ++n;
    }
    if (n < 3)
        throw UndefinedCorrelationError(
            "pearson: fewer than 3 pairwise-complete cells (" + std::to_string(n) + ")");
    double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, syy = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::isnan(x[i]) || std::isnan(y[i])) continue;
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw UndefinedCorrelationError("pearson: zero variance after deletion");
    double r = sxy / std::sqrt(sxx * syy);
    return std::clamp(r, -1.0, 1.0);
}

std::vector<std::vector<double>> correlation_matrix(const ProfileMatrix& profiles) {
    std::size_t n = profiles.vectors.size();
    if (n < 2) throw Error("correlation_matrix: need at least 2 networks");
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r;
            try {
                r = pearson(profiles.vectors[i], profiles.vectors[j]);
            } catch (const UndefinedCorrelationError&) {
                r = std::numeric_limits<double>::quiet_NaN();
            }
            m[i][j] = m[j][i] = r;
        }
    }
    return m;
}

namespace {

double transform_distance(double r, DistanceTransform t) {
    return t == DistanceTransform::one_minus_r ? 1.0 - r : (1.0 - r) / 2.0;
}

}  // namespace

Dendrogram ward_cluster(const std::vector<std::vector<double>>& corr,
                        const WardOptions& opts) {
    const std::size_t n = corr.size();
    if (n < 2) throw Error("ward_cluster: need at least 2 items");

    // Column means over defined off-diagonal cells, for imputation.
    std::vector<double> col_mean(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double sum = 0;
        std::size_t cnt = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || std::isnan(corr[i][j])) continue;
            sum += corr[i][j];
            ++cnt;
        }
        col_mean[j] = cnt > 0 ? sum / static_cast<double>(cnt) : 0.0;
    }

    // Working distance matrix over active clusters.
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = corr[i][j];
            if (std::isnan(r)) {
                r = (col_mean[i] + col_mean[j]) / 2.0;
                if (opts.imputed)
                    opts.imputed->emplace_back(static_cast<std::uint32_t>(i),
                                               static_cast<std::uint32_t>(j));
            }
            dist[i][j] = dist[j][i] = transform_distance(r, opts.transform);
        }
    }

    std::vector<std::uint32_t> cluster_id(n);
    std::vector<std::uint32_t> cluster_size(n, 1);
    std::vector<bool> active(n, true);
    for (std::size_t i = 0; i < n; ++i) cluster_id[i] = static_cast<std::uint32_t>(i);

    Dendrogram dend;
    dend.leaf_count = static_cast<std::uint32_t>(n);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children(n - 1);

    for (std::size_t step = 0; step + 1 < n; ++step) {
        // Find the closest active pair; ties toward the smallest id pair.
        std::size_t bi = 0, bj = 0;
        double best = std::numeric_limits<double>::infinity();
        std::uint32_t best_a = 0, best_b = 0;
        bool found = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!active[j]) continue;
                double d = dist[i][j];
                std::uint32_t a = std::min(cluster_id[i], cluster_id[j]);
                std::uint32_t b = std::max(cluster_id[i], cluster_id[j]);
                if (!found || d < best ||
                    (d == best && (a < best_a || (a == best_a && b < best_b)))) {
                    found = true;
                    best = d;
                    bi = i;
                    bj = j;
                    best_a = a;
                    best_b = b;
                }
            }
        }

        auto new_id = static_cast<std::uint32_t>(n + step);
        Merge m;
        m.cluster_a = best_a;
        m.cluster_b = best_b;
        m.height = best;
        m.merged_size = cluster_size[bi] + cluster_size[bj];
        dend.merges.push_back(m);
        children[step] = {best_a, best_b};

        // Lance-Williams Ward update against every other active cluster.
        double ni = cluster_size[bi], nj = cluster_size[bj];
        for (std::size_t k = 0; k < n; ++k) {
            if (!active[k] || k == bi || k == bj) continue;
            double nk = cluster_size[k];
            double d2 = ((ni + nk) * dist[bi][k] * dist[bi][k] +
                         (nj + nk) * dist[bj][k] * dist[bj][k] -
                         nk * dist[bi][bj] * dist[bi][bj]) /
                        (ni + nj + nk);
            double d = std::sqrt(std::max(d2, 0.0));
            dist[bi][k] = dist[k][bi] = d;
        }
        cluster_size[bi] += cluster_size[bj];
        cluster_id[bi] = new_id;
        active[bj] = false;
    }

    // Leaf order: at every internal node, the subtree containing the smaller
    // minimum leaf comes first.
    std::vector<std::uint32_t> min_leaf(2 * n - 1);
    for (std::size_t i = 0; i < n; ++i) min_leaf[i] = static_cast<std::uint32_t>(i);
    for (std::size_t s = 0; s + 1 < n; ++s)
        min_leaf[n + s] = std::min(min_leaf[children[s].first], min_leaf[children[s].second]);

    dend.leaf_order.reserve(n);
    std::vector<std::uint32_t> stack{static_cast<std::uint32_t>(2 * n - 2)};
    while (!stack.empty()) {
        std::uint32_t node = stack.back();
        stack.pop_back();
        if (node < n) {
            dend.leaf_order.push_back(node);
            continue;
        }
        auto [a, b] = children[node - n];
        std::uint32_t first = min_leaf[a] <= min_leaf[b] ? a : b;
        std::uint32_t second = first == a ? b : a;
        stack.push_back(second);  // LIFO: first child visited first
        stack.push_back(first);
    }
    return dend;
}

std::vector<std::uint32_t> flat_clusters(const Dendrogram& dend, std::uint32_t k) {
    std::uint32_t n = dend.leaf_count;
    if (k < 1 || k > n) throw Error("flat_clusters: k out of range");

    std::vector<std::uint32_t> parent(2 * n - 1);
    for (std::uint32_t i = 0; i < parent.size(); ++i) parent[i] = i;
    auto find = [&](std::uint32_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (std::uint32_t s = 0; s < n - k; ++s) {
        const Merge& m = dend.merges[s];
        std::uint32_t root = n + s;
        parent[find(m.cluster_a)] = root;
        parent[find(m.cluster_b)] = root;
    }

    std::vector<std::uint32_t> labels(n, 0);
    std::vector<std::int64_t> label_of_root(2 * n - 1, -1);
    std::uint32_t next = 0;
    for (std::uint32_t leaf : dend.leaf_order) {
        std::uint32_t root = find(leaf);
        if (label_of_root[root] < 0) label_of_root[root] = next++;
        labels[leaf] = static_cast<std::uint32_t>(label_of_root[root]);
    }
    return labels;
}

}  // namespace netdiv
