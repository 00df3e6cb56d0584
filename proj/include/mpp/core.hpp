#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Core model for multi-robot path planning on graphs: synchronous moves of
// labeled robots on a connected undirected simple graph, with "meet" and
// "head-on" collisions forbidden and rotations along fully occupied cycles
// allowed.

namespace mpp {

class Graph {
public:
    // Vertices are dense ids 0..n-1. Labels are optional; when present they
    // must be unique. Throws std::invalid_argument on self-loops, duplicate
    // edges, or a disconnected graph.
    Graph(int num_vertices, std::vector<std::pair<int, int>> edges,
          std::vector<std::string> labels = {});

    int num_vertices() const { return num_vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    // -1 when no vertex carries the label.
    int vertex_by_label(const std::string& label) const;

    // Unweighted shortest path distance; 0 iff u == v.
    int shortest_distance(int u, int v) const;
    // BFS distances from source to every vertex.
    std::vector<int> distances_from(int source) const;

private:
    int num_vertices_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
};

struct Robot {
    int id = 0;
    int start = 0;
    std::optional<int> goal;   // absent when the group supplies goals
    std::optional<int> group;
};

// Placement of all robots at one time step, indexed by robot id.
using Configuration = std::vector<int>;

struct MppInstance {
    Graph graph;
    std::vector<Robot> robots;
    // group id -> goal vertex set (sorted). Disjoint across groups; each set
    // has exactly as many vertices as the group has members.
    std::map<int, std::vector<int>> groups;

    MppInstance(Graph g, std::vector<Robot> r,
                std::map<int, std::vector<int>> grp = {});

    int num_robots() const { return static_cast<int>(robots.size()); }
    bool grouped() const { return !groups.empty(); }
    Configuration start_configuration() const;
    // Throws when called for a robot without an individual goal.
    int goal_of(int robot) const;
};

struct Plan {
    int horizon = 0;                      // T: positions exist for t = 0..T
    std::vector<std::vector<int>> paths;  // per robot, length horizon+1

    const int& at(int robot, int t) const { return paths[robot][t]; }
};

struct CostVector {
    std::int64_t total_arrival_time = 0;
    std::int64_t makespan = 0;
    std::int64_t total_distance = 0;
    std::int64_t max_distance = 0;

    bool operator==(const CostVector&) const = default;
};

enum class Semantics { Labeled, Grouped };

enum class ViolationKind {
    BadStart,          // p_i(0) != start
    IllegalMove,       // consecutive positions neither equal nor an edge
    MeetCollision,     // two robots on one vertex at one time step
    HeadOnCollision,   // two robots traversing one edge in opposite directions
    NoArrival,         // labeled robot never reaches its goal
    FreezeViolation,   // labeled robot leaves its goal after first touch
    GroupGoalUncovered // final configuration misses a group goal
};

struct Violation {
    ViolationKind kind;
    int time = 0;       // step index the violation is observed at
    int robot_a = -1;
    int robot_b = -1;   // second robot for pairwise violations, else -1
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;  // all violations, not just the first
};

std::string to_string(ViolationKind kind);
std::string describe(const ValidationReport& report);

// Checks a plan against the feasibility rules. Labeled semantics enforces the
// freeze rule (first goal touch is permanent); grouped semantics instead
// requires the final configuration to place every group exactly on its goal
// set. Throws std::invalid_argument when the plan's robot set does not match
// the instance or when semantics contradict the instance shape.
ValidationReport validate_plan(const MppInstance& instance, const Plan& plan,
                               Semantics semantics);
// Semantics inferred from the instance (grouped iff it has groups).
ValidationReport validate_plan(const MppInstance& instance, const Plan& plan);

Semantics semantics_of(const MppInstance& instance);

// Objective values of a valid plan. t_i is the first goal touch for labeled
// robots and the time of the last position change for grouped robots; path
// length counts edge traversals only. Throws std::invalid_argument on an
// invalid plan.
CostVector evaluate_costs(const MppInstance& instance, const Plan& plan);

int shortest_distance(const Graph& graph, int u, int v);

// Plan with start/goal roles swapped and every path reversed.
Plan reverse_plan(const Plan& plan);
MppInstance swap_start_goal(const MppInstance& instance);

}  // namespace mpp
