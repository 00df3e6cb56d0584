#pragma once

#include <optional>
#include <string>
#include <vector>

// 3SAT model and a brute-force oracle. Clauses carry exactly three literals
// over three distinct variables. Variables are 0-based internally; the DIMACS
// surface is 1-based.

namespace mpp::sat3 {

struct Literal {
    int variable = 0;  // 0-based
    bool negated = false;
};

struct Clause {
    Literal lits[3];
};

struct Sat3Instance {
    int num_variables = 0;
    std::vector<Clause> clauses;

    int num_clauses() const { return static_cast<int>(clauses.size()); }
};

// values[i] is the truth value of variable i.
using Assignment = std::vector<bool>;

// Strict DIMACS CNF subset: every clause has width exactly 3 with three
// distinct variables. Throws std::invalid_argument on malformed input.
Sat3Instance parse_dimacs(const std::string& text);
std::string to_dimacs(const Sat3Instance& instance);

// True iff every clause has a true literal. Throws on length mismatch.
bool evaluate(const Sat3Instance& instance, const Assignment& assignment);

// Exhaustive scan in binary counting order with variable 0 as the least
// significant bit; returns the satisfying assignment with the lowest
// encoding, or nullopt. Requires num_variables <= 24.
std::optional<Assignment> solve_brute_force(const Sat3Instance& instance);

// All satisfying assignments in encoding order (same variable cap).
std::vector<Assignment> all_satisfying_assignments(const Sat3Instance& instance);

}  // namespace mpp::sat3
