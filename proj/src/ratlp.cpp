#include "fraccover/ratlp.hpp"

#include <sstream>

namespace fraccover {

int UnaryLP::add_variable(const std::string& label) {
    variables.push_back(label);
    return static_cast<int>(variables.size()) - 1;
}

void UnaryLP::add_constraint(const std::string& label, IdSet vars) {
    constraints.push_back({label, std::move(vars)});
}

namespace {

void check_structure(const UnaryLP& lp) {
    const int n = static_cast<int>(lp.variables.size());
    for (const auto& con : lp.constraints) {
        if (con.vars.empty())
            throw Error("constraint '" + con.label + "' has no variables");
        for (int v : con.vars)
            if (v < 0 || v >= n)
                throw Error("constraint '" + con.label + "' references unknown variable");
    }
}

}  // namespace

LPSolution solve(const UnaryLP& lp) {
    check_structure(lp);
    const int n = static_cast<int>(lp.variables.size());  // primal variables
    const int m = static_cast<int>(lp.constraints.size());

    // Dual: maximize sum(y) subject to, per primal variable r,
    // sum of y_i over constraints containing r, plus slack s_r, equal to 1.
    // Rows are indexed by primal variables; columns are m dual variables,
    // then n slacks, then the right-hand side.
    const int cols = m + n + 1;
    std::vector<std::vector<Rat>> tab(n, std::vector<Rat>(cols, Rat(0)));
    for (int i = 0; i < m; ++i)
        for (int r : lp.constraints[i].vars) tab[r][i] = 1;
    for (int r = 0; r < n; ++r) {
        tab[r][m + r] = 1;
        tab[r][cols - 1] = 1;
    }
    std::vector<Rat> obj(cols, Rat(0));
    for (int i = 0; i < m; ++i) obj[i] = 1;
    std::vector<int> basis(n);
    for (int r = 0; r < n; ++r) basis[r] = m + r;

    while (true) {
        // Bland: smallest column with positive reduced cost enters.
        int enter = -1;
        for (int j = 0; j < cols - 1; ++j)
            if (obj[j] > 0) {
                enter = j;
                break;
            }
        if (enter < 0) break;

        int leave = -1;
        Rat best_ratio;
        for (int r = 0; r < n; ++r) {
            if (tab[r][enter] <= 0) continue;
            Rat ratio = tab[r][cols - 1] / tab[r][enter];
            if (leave < 0 || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                best_ratio = ratio;
                leave = r;
            }
        }
        if (leave < 0)
            throw Error("unary LP dual is unbounded; the instance is malformed");

        // Pivot on (leave, enter).
        Rat pivot = tab[leave][enter];
        for (int j = 0; j < cols; ++j) tab[leave][j] /= pivot;
        for (int r = 0; r < n; ++r) {
            if (r == leave || tab[r][enter] == 0) continue;
            Rat factor = tab[r][enter];
            for (int j = 0; j < cols; ++j)
                if (tab[leave][j] != 0) tab[r][j] -= factor * tab[leave][j];
        }
        if (obj[enter] != 0) {
            Rat factor = obj[enter];
            for (int j = 0; j < cols; ++j)
                if (tab[leave][j] != 0) obj[j] -= factor * tab[leave][j];
        }
        basis[leave] = enter;
    }

    LPSolution sol;
    sol.optimum = -obj[cols - 1];
    sol.primal.assign(n, Rat(0));
    sol.dual.assign(m, Rat(0));
    for (int r = 0; r < n; ++r) sol.primal[r] = -obj[m + r];
    for (int r = 0; r < n; ++r)
        if (basis[r] < m) sol.dual[basis[r]] = tab[r][cols - 1];

    // Internal consistency: both objective values must equal the optimum.
    Rat psum(0), dsum(0);
    for (const Rat& x : sol.primal) psum += x;
    for (const Rat& y : sol.dual) dsum += y;
    if (psum != sol.optimum || dsum != sol.optimum)
        throw Error("simplex postcondition failed: objective values disagree");
    return sol;
}

bool verify(const UnaryLP& lp, const LPSolution& sol) {
    check_structure(lp);
    if (sol.primal.size() != lp.variables.size() ||
        sol.dual.size() != lp.constraints.size())
        throw Error("solution labels do not match the LP");

    for (const Rat& x : sol.primal)
        if (x < 0) return false;
    for (const Rat& y : sol.dual)
        if (y < 0) return false;

    Rat psum(0), dsum(0);
    for (const Rat& x : sol.primal) psum += x;
    for (const Rat& y : sol.dual) dsum += y;
    if (psum != sol.optimum || dsum != sol.optimum) return false;

    for (const auto& con : lp.constraints) {
        Rat s(0);
        for (int v : con.vars) s += sol.primal[v];
        if (s < 1) return false;
    }
    // Dual feasibility: each variable's summed dual over the constraints
    // containing it is at most its objective coefficient 1.
    std::vector<Rat> col_sum(lp.variables.size(), Rat(0));
    for (std::size_t i = 0; i < lp.constraints.size(); ++i)
        for (int v : lp.constraints[i].vars) col_sum[v] += sol.dual[i];
    for (const Rat& s : col_sum)
        if (s > 1) return false;
    return true;
}

std::string lp_dump(const UnaryLP& lp) {
    std::ostringstream out;
    for (const auto& con : lp.constraints) {
        out << con.label << ":";
        for (std::size_t i = 0; i < con.vars.size(); ++i)
            out << (i ? " + " : " ") << lp.variables[con.vars[i]];
        out << " >= 1\n";
    }
    return out.str();
}

}  // namespace fraccover
