#pragma once

#include <string>
#include <vector>

#include "tap/rational.hpp"

namespace tap {

enum class RowSense { Ge, Le, Eq };

/// Sparse constraint row over the structural variables.
struct LpRow {
    std::vector<std::pair<int, Rat>> terms;
    RowSense sense = RowSense::Ge;
    Rat rhs;
    std::string name;
};

struct SimplexResult {
    enum class Status { Optimal, Infeasible, Unbounded };
    Status status = Status::Optimal;
    std::vector<Rat> x;   // structural variables only
    Rat objective;
};

/// Minimize c^T x subject to the rows and x >= 0, by a dense two-phase
/// tableau with Bland's anti-cycling rule. Exact rational arithmetic
/// throughout; the returned point is a basic feasible solution (a vertex
/// of the row-defined polyhedron).
SimplexResult simplex_solve(int nvars, const std::vector<Rat>& objective,
                            const std::vector<LpRow>& rows);

}  // namespace tap
