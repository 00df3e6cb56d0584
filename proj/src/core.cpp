#include "mpp/core.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace mpp {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
             std::vector<std::string> labels)
    : num_vertices_(num_vertices), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (num_vertices_ <= 0) throw std::invalid_argument("graph needs at least one vertex");
    if (labels_.empty()) labels_.resize(num_vertices_);
    if (static_cast<int>(labels_.size()) != num_vertices_)
        throw std::invalid_argument("label count does not match vertex count");
    std::unordered_set<std::string> seen_labels;
    for (const auto& l : labels_) {
        if (l.empty()) continue;
        if (!seen_labels.insert(l).second)
            throw std::invalid_argument("duplicate vertex label: " + l);
    }
    adj_.assign(num_vertices_, {});
    std::unordered_set<std::uint64_t> seen_edges;
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= num_vertices_ || v < 0 || v >= num_vertices_)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop not allowed");
        if (!seen_edges.insert(edge_key(u, v)).second)
            throw std::invalid_argument("duplicate edge");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    // connectivity
    std::vector<char> visited(num_vertices_, 0);
    std::deque<int> queue{0};
    visited[0] = 1;
    int count = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                queue.push_back(w);
            }
    }
    if (count != num_vertices_) throw std::invalid_argument("graph is not connected");
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::vertex_by_label(const std::string& label) const {
    for (int v = 0; v < num_vertices_; ++v)
        if (labels_[v] == label) return v;
    return -1;
}

std::vector<int> Graph::distances_from(int source) const {
    std::vector<int> dist(num_vertices_, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int Graph::shortest_distance(int u, int v) const {
    if (u == v) return 0;
    return distances_from(u)[v];
}

int shortest_distance(const Graph& graph, int u, int v) {
    return graph.shortest_distance(u, v);
}

MppInstance::MppInstance(Graph g, std::vector<Robot> r,
                         std::map<int, std::vector<int>> grp)
    : graph(std::move(g)), robots(std::move(r)), groups(std::move(grp)) {
    const int n = static_cast<int>(robots.size());
    if (n == 0) throw std::invalid_argument("instance needs at least one robot");
    std::unordered_set<int> starts, goals;
    std::unordered_map<int, int> group_sizes;
    for (int i = 0; i < n; ++i) {
        const Robot& rb = robots[i];
        if (rb.id != i) throw std::invalid_argument("robot ids must be dense 0..n-1");
        if (rb.start < 0 || rb.start >= graph.num_vertices())
            throw std::invalid_argument("robot start out of range");
        if (!starts.insert(rb.start).second)
            throw std::invalid_argument("start configuration not injective");
        if (rb.goal.has_value() == rb.group.has_value())
            throw std::invalid_argument("robot needs exactly one of goal or group");
        if (rb.goal) {
            if (*rb.goal < 0 || *rb.goal >= graph.num_vertices())
                throw std::invalid_argument("robot goal out of range");
            if (!goals.insert(*rb.goal).second)
                throw std::invalid_argument("goal configuration not injective");
        } else {
            if (!groups.count(*rb.group))
                throw std::invalid_argument("robot references unknown group");
            group_sizes[*rb.group]++;
        }
    }
    for (auto& [gid, goal_set] : groups) {
        std::vector<int> sorted = goal_set;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("group goal set has duplicates");
        for (int v : sorted) {
            if (v < 0 || v >= graph.num_vertices())
                throw std::invalid_argument("group goal out of range");
            if (!goals.insert(v).second)
                throw std::invalid_argument("goal configuration not injective across groups");
        }
        if (static_cast<int>(sorted.size()) != group_sizes[gid])
            throw std::invalid_argument("group goal count must equal group size");
        goal_set = std::move(sorted);
    }
}

Configuration MppInstance::start_configuration() const {
    Configuration c(robots.size());
    for (size_t i = 0; i < robots.size(); ++i) c[i] = robots[i].start;
    return c;
}

int MppInstance::goal_of(int robot) const {
    if (!robots[robot].goal) throw std::invalid_argument("robot has no individual goal");
    return *robots[robot].goal;
}

Semantics semantics_of(const MppInstance& instance) {
    return instance.grouped() ? Semantics::Grouped : Semantics::Labeled;
}

std::string to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::BadStart: return "bad-start";
        case ViolationKind::IllegalMove: return "illegal-move";
        case ViolationKind::MeetCollision: return "meet-collision";
        case ViolationKind::HeadOnCollision: return "head-on-collision";
        case ViolationKind::NoArrival: return "no-arrival";
        case ViolationKind::FreezeViolation: return "freeze-violation";
        case ViolationKind::GroupGoalUncovered: return "group-goal-uncovered";
    }
    return "unknown";
}

std::string describe(const ValidationReport& report) {
    if (report.ok) return "OK";
    std::ostringstream out;
    for (const auto& v : report.violations) {
        out << to_string(v.kind) << " t=" << v.time << " robot=" << v.robot_a;
        if (v.robot_b >= 0) out << "," << v.robot_b;
        if (!v.detail.empty()) out << " (" << v.detail << ")";
        out << "\n";
    }
    return out.str();
}

ValidationReport validate_plan(const MppInstance& instance, const Plan& plan,
                               Semantics semantics) {
    const int n = instance.num_robots();
    if (static_cast<int>(plan.paths.size()) != n)
        throw std::invalid_argument("plan robot set does not match instance");
    for (const auto& path : plan.paths)
        if (static_cast<int>(path.size()) != plan.horizon + 1)
            throw std::invalid_argument("path length does not match horizon");
    if (semantics == Semantics::Grouped && !instance.grouped())
        throw std::invalid_argument("grouped semantics on an instance without groups");

    ValidationReport report;
    auto add = [&](ViolationKind kind, int t, int a, int b, std::string detail) {
        report.ok = false;
        report.violations.push_back({kind, t, a, b, std::move(detail)});
    };

    const int T = plan.horizon;
    for (int i = 0; i < n; ++i) {
        if (plan.at(i, 0) != instance.robots[i].start)
            add(ViolationKind::BadStart, 0, i, -1, "");
        for (int t = 0; t < T; ++t) {
            int a = plan.at(i, t), b = plan.at(i, t + 1);
            if (a != b && !instance.graph.has_edge(a, b))
                add(ViolationKind::IllegalMove, t, i, -1,
                    std::to_string(a) + "->" + std::to_string(b));
        }
    }

    // collisions: meets per time slice, head-ons per transition
    for (int t = 0; t <= T; ++t) {
        std::unordered_map<int, int> occupant;
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = occupant.try_emplace(plan.at(i, t), i);
            if (!fresh)
                add(ViolationKind::MeetCollision, t, it->second, i,
                    "vertex " + std::to_string(plan.at(i, t)));
        }
    }
    for (int t = 0; t < T; ++t) {
        std::unordered_map<std::uint64_t, int> movers;  // directed move -> robot
        for (int i = 0; i < n; ++i) {
            int a = plan.at(i, t), b = plan.at(i, t + 1);
            if (a == b) continue;
            movers[(static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b)] = i;
        }
        for (auto [key, i] : movers) {
            int a = static_cast<int>(key >> 32), b = static_cast<int>(key & 0xffffffffu);
            if (a < b) continue;  // report each swapped pair once
            auto rev = movers.find((static_cast<std::uint64_t>(b) << 32) | static_cast<std::uint32_t>(a));
            if (rev != movers.end())
                add(ViolationKind::HeadOnCollision, t, rev->second, i,
                    "edge " + std::to_string(b) + "-" + std::to_string(a));
        }
    }

    // goal semantics
    for (int i = 0; i < n; ++i) {
        const Robot& rb = instance.robots[i];
        if (rb.goal) {
            int goal = *rb.goal;
            int first = -1;
            for (int t = 0; t <= T; ++t)
                if (plan.at(i, t) == goal) {
                    first = t;
                    break;
                }
            if (first < 0) {
                add(ViolationKind::NoArrival, T, i, -1, "");
                continue;
            }
            for (int t = first + 1; t <= T; ++t)
                if (plan.at(i, t) != goal)
                    add(ViolationKind::FreezeViolation, t, i, -1, "");
        }
    }
    if (semantics == Semantics::Grouped) {
        for (const auto& [gid, goal_set] : instance.groups) {
            std::vector<int> final_positions;
            for (int i = 0; i < n; ++i)
                if (instance.robots[i].group && *instance.robots[i].group == gid)
                    final_positions.push_back(plan.at(i, T));
            std::sort(final_positions.begin(), final_positions.end());
            if (final_positions != goal_set)
                add(ViolationKind::GroupGoalUncovered, T, -1, -1,
                    "group " + std::to_string(gid));
        }
    }
    return report;
}

ValidationReport validate_plan(const MppInstance& instance, const Plan& plan) {
    return validate_plan(instance, plan, semantics_of(instance));
}

CostVector evaluate_costs(const MppInstance& instance, const Plan& plan) {
    ValidationReport report = validate_plan(instance, plan);
    if (!report.ok)
        throw std::invalid_argument("evaluate_costs on invalid plan:\n" + describe(report));
    const int n = instance.num_robots();
    const int T = plan.horizon;
    CostVector costs;
    for (int i = 0; i < n; ++i) {
        std::int64_t arrival = 0;
        if (instance.robots[i].goal) {
            int goal = *instance.robots[i].goal;
            for (int t = 0; t <= T; ++t)
                if (plan.at(i, t) == goal) {
                    arrival = t;
                    break;
                }
        } else {
            for (int t = 1; t <= T; ++t)
                if (plan.at(i, t) != plan.at(i, t - 1)) arrival = t;
        }
        std::int64_t length = 0;
        for (int t = 0; t < T; ++t)
            if (plan.at(i, t) != plan.at(i, t + 1)) ++length;
        costs.total_arrival_time += arrival;
        costs.makespan = std::max(costs.makespan, arrival);
        costs.total_distance += length;
        costs.max_distance = std::max(costs.max_distance, length);
    }
    return costs;
}

Plan reverse_plan(const Plan& plan) {
    Plan rev;
    rev.horizon = plan.horizon;
    rev.paths.reserve(plan.paths.size());
    for (const auto& path : plan.paths)
        rev.paths.emplace_back(path.rbegin(), path.rend());
    return rev;
}

MppInstance swap_start_goal(const MppInstance& instance) {
    if (instance.grouped())
        throw std::invalid_argument("swap_start_goal requires individual goals");
    std::vector<Robot> robots = instance.robots;
    for (auto& rb : robots) {
        int s = rb.start;
        rb.start = *rb.goal;
        rb.goal = s;
    }
    return MppInstance(instance.graph, std::move(robots));
}

}  // namespace mpp
