#pragma once

#include <algorithm>
#include <functional>
#include <queue>
#include <vector>

namespace minioncore::detail {

// Tarjan's algorithm. Component ids are assigned in completion order, so an
// edge u -> v always has comp[u] >= comp[v].
inline std::vector<int> tarjan_scc(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on_stack(n, false);
    int counter = 0;
    int components = 0;

    auto visit = [&](auto&& self, int v) -> void {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
        for (int w : adj[v]) {
            if (index[w] < 0) {
                self(self, w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack[w]) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] == index[v]) {
            while (true) {
                const int w = stack.back();
                stack.pop_back();
                on_stack[w] = false;
                comp[w] = components;
                if (w == v) {
                    break;
                }
            }
            ++components;
        }
    };
    for (int v = 0; v < n; ++v) {
        if (index[v] < 0) {
            visit(visit, v);
        }
    }
    return comp;
}

// Position of every component in the topological order of the condensation
// that always takes the available component with the smallest member node.
inline std::vector<int> canonical_topological_positions(const std::vector<std::vector<int>>& adj,
                                                        const std::vector<int>& comp) {
    const int n = static_cast<int>(adj.size());
    const int c = n == 0 ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> smallest(c, n), indegree(c, 0);
    std::vector<std::vector<int>> out(c);
    for (int v = 0; v < n; ++v) {
        smallest[comp[v]] = std::min(smallest[comp[v]], v);
        for (int w : adj[v]) {
            if (comp[v] != comp[w]) {
                out[comp[v]].push_back(comp[w]);
                ++indegree[comp[w]];
            }
        }
    }
    using Entry = std::pair<int, int>;  // (smallest node, component)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (int i = 0; i < c; ++i) {
        if (indegree[i] == 0) {
            ready.push({smallest[i], i});
        }
    }
    std::vector<int> position(c, -1);
    int next = 0;
    while (!ready.empty()) {
        const int i = ready.top().second;
        ready.pop();
        position[i] = next++;
        for (int j : out[i]) {
            if (--indegree[j] == 0) {
                ready.push({smallest[j], j});
            }
        }
    }
    return position;
}

}  // namespace minioncore::detail
