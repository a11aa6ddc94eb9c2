#include "opvr/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace opvr {

MinCostFlow::MinCostFlow(int n) : n_(n), adj_(size_t(n)), supply_(size_t(n), 0) {}

int MinCostFlow::add_arc(int u, int v, int cap, int cost) {
    int id = int(arcs_.size());
    arcs_.push_back({v, cap, cost});
    adj_[size_t(u)].push_back(id);
    arcs_.push_back({u, 0, -cost});
    adj_[size_t(v)].push_back(id + 1);
    return id;
}

void MinCostFlow::add_supply(int node, int amount) { supply_[size_t(node)] += amount; }

bool MinCostFlow::solve() {
    // super source/sink appended at n_, n_+1
    int s = n_, t = n_ + 1;
    adj_.resize(size_t(n_ + 2));
    long long need = 0;
    for (int v = 0; v < n_; ++v) {
        if (supply_[size_t(v)] > 0) {
            add_arc(s, v, supply_[size_t(v)], 0);
            need += supply_[size_t(v)];
        } else if (supply_[size_t(v)] < 0) {
            add_arc(v, t, -supply_[size_t(v)], 0);
        }
    }

    const long long inf = std::numeric_limits<long long>::max() / 4;
    std::vector<long long> pot(size_t(n_ + 2), 0), dist(size_t(n_ + 2));
    std::vector<int> pre_arc(size_t(n_ + 2));
    long long routed = 0;
    while (routed < need) {
        std::fill(dist.begin(), dist.end(), inf);
        dist[size_t(s)] = 0;
        std::set<std::pair<long long, int>> pq{{0, s}};
        while (!pq.empty()) {
            auto [d, u] = *pq.begin();
            pq.erase(pq.begin());
            if (d > dist[size_t(u)]) continue;
            for (int id : adj_[size_t(u)]) {
                const Arc& a = arcs_[size_t(id)];
                if (a.cap - a.flow <= 0) continue;
                long long nd = d + a.cost + pot[size_t(u)] - pot[size_t(a.to)];
                if (nd < dist[size_t(a.to)]) {
                    pq.erase({dist[size_t(a.to)], a.to});
                    dist[size_t(a.to)] = nd;
                    pre_arc[size_t(a.to)] = id;
                    pq.insert({nd, a.to});
                }
            }
        }
        if (dist[size_t(t)] >= inf) return false;
        for (int v = 0; v < n_ + 2; ++v)
            if (dist[size_t(v)] < inf) pot[size_t(v)] += dist[size_t(v)];
        int push = std::numeric_limits<int>::max();
        for (int v = t; v != s;) {
            const Arc& a = arcs_[size_t(pre_arc[size_t(v)])];
            push = std::min(push, a.cap - a.flow);
            v = arcs_[size_t(pre_arc[size_t(v)] ^ 1)].to;
        }
        for (int v = t; v != s;) {
            arcs_[size_t(pre_arc[size_t(v)])].flow += push;
            arcs_[size_t(pre_arc[size_t(v)] ^ 1)].flow -= push;
            v = arcs_[size_t(pre_arc[size_t(v)] ^ 1)].to;
        }
        routed += push;
    }
    return true;
}

int MinCostFlow::flow_on(int arc) const { return arcs_[size_t(arc)].flow; }

long long MinCostFlow::total_cost() const {
    long long c = 0;
    for (size_t i = 0; i < arcs_.size(); i += 2) c += (long long)arcs_[i].flow * arcs_[i].cost;
    return c;
}

}  // namespace opvr
