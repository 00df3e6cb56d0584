#include "mpp/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace mpp::io {

using ordered_json = nlohmann::ordered_json;

std::string instance_to_json(const MppInstance& instance) {
    ordered_json j;
    j["vertices"] = ordered_json::array();
    for (int v = 0; v < instance.graph.num_vertices(); ++v) {
        ordered_json vertex;
        vertex["id"] = v;
        if (!instance.graph.label(v).empty()) vertex["label"] = instance.graph.label(v);
        j["vertices"].push_back(vertex);
    }
    j["edges"] = ordered_json::array();
    auto edges = instance.graph.edges();
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
    j["robots"] = ordered_json::array();
    for (const auto& rb : instance.robots) {
        ordered_json robot;
        robot["id"] = rb.id;
        robot["start"] = rb.start;
        if (rb.goal) robot["goal"] = *rb.goal;
        if (rb.group) robot["group"] = *rb.group;
        j["robots"].push_back(robot);
    }
    if (!instance.groups.empty()) {
        ordered_json groups = ordered_json::object();
        for (const auto& [gid, goals] : instance.groups)
            groups[std::to_string(gid)] = goals;
        j["groups"] = groups;
    }
    return j.dump(2) + "\n";
}

MppInstance instance_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("instance JSON parse error: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("edges") || !j.contains("robots"))
        throw std::invalid_argument("instance JSON missing vertices/edges/robots");
    int num_vertices = static_cast<int>(j["vertices"].size());
    std::vector<std::string> labels(num_vertices);
    for (const auto& vertex : j["vertices"]) {
        int id = vertex.at("id").get<int>();
        if (id < 0 || id >= num_vertices)
            throw std::invalid_argument("vertex ids must be dense 0..|V|-1");
        if (vertex.contains("label")) labels[id] = vertex["label"].get<std::string>();
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (e.size() != 2) throw std::invalid_argument("edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<Robot> robots;
    for (const auto& r : j["robots"]) {
        Robot rb;
        rb.id = r.at("id").get<int>();
        rb.start = r.at("start").get<int>();
        if (r.contains("goal")) rb.goal = r["goal"].get<int>();
        if (r.contains("group")) rb.group = r["group"].get<int>();
        robots.push_back(rb);
    }
    std::map<int, std::vector<int>> groups;
    if (j.contains("groups"))
        for (auto it = j["groups"].begin(); it != j["groups"].end(); ++it)
            groups[std::stoi(it.key())] = it.value().get<std::vector<int>>();
    return MppInstance(Graph(num_vertices, std::move(edges), std::move(labels)),
                       std::move(robots), std::move(groups));
}

std::string plan_to_json(const Plan& plan) {
    ordered_json j;
    j["horizon"] = plan.horizon;
    ordered_json paths = ordered_json::object();
    for (size_t i = 0; i < plan.paths.size(); ++i)
        paths[std::to_string(i)] = plan.paths[i];
    j["paths"] = paths;
    return j.dump(2) + "\n";
}

Plan plan_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("plan JSON parse error: ") + e.what());
    }
    Plan plan;
    plan.horizon = j.at("horizon").get<int>();
    if (plan.horizon < 0) throw std::invalid_argument("negative horizon");
    const auto& paths = j.at("paths");
    plan.paths.resize(paths.size());
    for (auto it = paths.begin(); it != paths.end(); ++it) {
        int id = std::stoi(it.key());
        if (id < 0 || id >= static_cast<int>(paths.size()))
            throw std::invalid_argument("plan robot ids must be dense 0..n-1");
        plan.paths[id] = it.value().get<std::vector<int>>();
        if (static_cast<int>(plan.paths[id].size()) != plan.horizon + 1)
            throw std::invalid_argument("path length does not match horizon");
    }
    return plan;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void save_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write file: " + path);
    out << text;
}

MppInstance load_instance(const std::string& path) {
    return instance_from_json(read_text(path));
}

Plan load_plan(const std::string& path) {
    return plan_from_json(read_text(path));
}

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace mpp::io
