#pragma once

#include <vector>

namespace opvr {

/// Min-cost flow with node supplies, successive shortest paths with
/// potentials. Deterministic for a fixed arc insertion order.
class MinCostFlow {
public:
    explicit MinCostFlow(int n);
    int add_arc(int u, int v, int cap, int cost);
    void add_supply(int node, int amount);  // positive = source
    /// Routes all supply; false if some supply cannot reach a deficit.
    bool solve();
    int flow_on(int arc) const;
    long long total_cost() const;

private:
    struct Arc {
        int to, cap, cost, flow = 0;
    };
    int n_;
    std::vector<Arc> arcs_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> supply_;
};

}  // namespace opvr
