#include "mpp/sat3.hpp"

#include <sstream>
#include <stdexcept>

namespace mpp::sat3 {

Sat3Instance parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Sat3Instance instance;
    int declared_clauses = -1;
    bool header_seen = false;
    std::vector<int> pending;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c" || first[0] == 'c') continue;
        if (first == "p") {
            std::string fmt;
            if (!(ls >> fmt >> instance.num_variables >> declared_clauses) || fmt != "cnf")
                throw std::invalid_argument("malformed DIMACS header");
            if (instance.num_variables < 0 || declared_clauses < 0)
                throw std::invalid_argument("malformed DIMACS header");
            header_seen = true;
            continue;
        }
        if (!header_seen) throw std::invalid_argument("clause before DIMACS header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw std::invalid_argument("clause width must be exactly 3, got " +
                                                std::to_string(pending.size()));
                Clause clause;
                for (int k = 0; k < 3; ++k) {
                    int var = std::abs(pending[k]) - 1;
                    if (var < 0 || var >= instance.num_variables)
                        throw std::invalid_argument("literal out of range: " +
                                                    std::to_string(pending[k]));
                    clause.lits[k] = {var, pending[k] < 0};
                }
                if (clause.lits[0].variable == clause.lits[1].variable ||
                    clause.lits[0].variable == clause.lits[2].variable ||
                    clause.lits[1].variable == clause.lits[2].variable)
                    throw std::invalid_argument("clause repeats a variable");
                instance.clauses.push_back(clause);
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!header_seen) throw std::invalid_argument("missing DIMACS header");
    if (!pending.empty()) throw std::invalid_argument("unterminated clause");
    if (declared_clauses != instance.num_clauses())
        throw std::invalid_argument("clause count does not match header");
    return instance;
}

std::string to_dimacs(const Sat3Instance& instance) {
    std::ostringstream out;
    out << "p cnf " << instance.num_variables << " " << instance.num_clauses() << "\n";
    for (const auto& clause : instance.clauses) {
        for (const auto& lit : clause.lits)
            out << (lit.negated ? -(lit.variable + 1) : lit.variable + 1) << " ";
        out << "0\n";
    }
    return out.str();
}

bool evaluate(const Sat3Instance& instance, const Assignment& assignment) {
    if (static_cast<int>(assignment.size()) != instance.num_variables)
        throw std::invalid_argument("assignment length does not match variable count");
    for (const auto& clause : instance.clauses) {
        bool satisfied = false;
        for (const auto& lit : clause.lits)
            if (assignment[lit.variable] != lit.negated) {
                satisfied = true;
                break;
            }
        if (!satisfied) return false;
    }
    return true;
}

namespace {

Assignment decode_mask(std::uint32_t mask, int n) {
    Assignment a(n);
    for (int i = 0; i < n; ++i) a[i] = (mask >> i) & 1u;
    return a;
}

}  // namespace

std::optional<Assignment> solve_brute_force(const Sat3Instance& instance) {
    if (instance.num_variables > 24)
        throw std::invalid_argument("brute-force oracle limited to 24 variables");
    const std::uint32_t limit = 1u << instance.num_variables;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Assignment a = decode_mask(mask, instance.num_variables);
        if (evaluate(instance, a)) return a;
    }
    return std::nullopt;
}

std::vector<Assignment> all_satisfying_assignments(const Sat3Instance& instance) {
    if (instance.num_variables > 24)
        throw std::invalid_argument("brute-force oracle limited to 24 variables");
    std::vector<Assignment> result;
    const std::uint32_t limit = 1u << instance.num_variables;
    for (std::uint32_t mask = 0; mask < limit; ++mask) {
        Assignment a = decode_mask(mask, instance.num_variables);
        if (evaluate(instance, a)) result.push_back(std::move(a));
    }
    return result;
}

}  // namespace mpp::sat3
