#pragma once

#include <string>
#include <vector>

#include "fraccover/errors.hpp"
#include "fraccover/rational.hpp"
#include "fraccover/setops.hpp"

namespace fraccover {

/// Covering LP with all-ones objective and right-hand side and a 0/1
/// constraint matrix: minimize sum(x) subject to, per constraint, the sum of
/// the listed variables being >= 1, and x >= 0.
struct UnaryLP {
    struct Constraint {
        std::string label;
        IdSet vars;  // sorted variable indices, never empty
    };

    std::vector<std::string> variables;
    std::vector<Constraint> constraints;

    int add_variable(const std::string& label);
    void add_constraint(const std::string& label, IdSet vars);
};

/// Unary LPs with no empty constraint are always feasible (the all-ones
/// point), so a solution is always optimal and carries both certificates.
struct LPSolution {
    Rat optimum;
    std::vector<Rat> primal;  // one value per variable, in [0, 1]
    std::vector<Rat> dual;    // one value per constraint, non-negative
};

/// Exact simplex. The dual (a maximization with slack variables on an
/// all-ones right-hand side) starts from the slack basis, so no phase-one is
/// needed; Bland's rule makes the run cycle-free and deterministic. The
/// primal solution is read off the reduced costs of the final basis.
LPSolution solve(const UnaryLP& lp);

/// Pure certificate check: primal feasibility, dual feasibility and equality
/// of the two objective values. No solving.
bool verify(const UnaryLP& lp, const LPSolution& sol);

/// Debug formatting, one line per constraint: "label: v1 + v2 + ... >= 1".
std::string lp_dump(const UnaryLP& lp);

}  // namespace fraccover
