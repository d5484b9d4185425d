#include "tap/simplex.hpp"

#include <cassert>
#include <stdexcept>

namespace tap {

namespace {

struct Tableau {
    int ncols = 0;
    std::vector<std::vector<Rat>> a;  // m x ncols
    std::vector<Rat> b;               // m
    std::vector<int> basis;           // m, column index of the basic variable
    std::vector<Rat> obj;             // reduced-cost row
    Rat obj_rhs;                      // negative of the current objective value
    std::vector<char> allowed;        // columns eligible to enter

    int rows() const { return (int)a.size(); }

    void pivot(int r, int s) {
        Rat piv = a[r][s];
        assert(piv != 0);
        for (Rat& v : a[r]) v /= piv;
        b[r] /= piv;
        for (int i = 0; i < rows(); ++i) {
            if (i == r || a[i][s] == 0) continue;
            Rat f = a[i][s];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        if (obj[s] != 0) {
            Rat f = obj[s];
            for (int j = 0; j < ncols; ++j) obj[j] -= f * a[r][j];
            obj_rhs -= f * b[r];
        }
        basis[r] = s;
    }

    // Bland: entering = lowest-index allowed column with negative reduced
    // cost; leaving = min ratio, ties by lowest basic variable index.
    // Returns Optimal when no entering column exists.
    SimplexResult::Status run() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < ncols; ++j)
                if (allowed[j] && obj[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter < 0) return SimplexResult::Status::Optimal;
            int leave = -1;
            Rat best;
            for (int i = 0; i < rows(); ++i) {
                if (a[i][enter] <= 0) continue;
                Rat ratio = b[i] / a[i][enter];
                if (leave < 0 || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave < 0) return SimplexResult::Status::Unbounded;
            pivot(leave, enter);
        }
    }

    void set_objective(const std::vector<Rat>& c) {
        obj = c;
        obj.resize(ncols, Rat(0));
        obj_rhs = 0;
        for (int i = 0; i < rows(); ++i) {
            int bi = basis[i];
            if (obj[bi] == 0) continue;
            Rat f = obj[bi];
            for (int j = 0; j < ncols; ++j) obj[j] -= f * a[i][j];
            obj_rhs -= f * b[i];
        }
    }
};

}  // namespace

SimplexResult simplex_solve(int nvars, const std::vector<Rat>& objective,
                            const std::vector<LpRow>& rows) {
    int m = (int)rows.size();
    Tableau t;

    // columns: structural | one slack or surplus per inequality | artificials
    std::vector<int> aux_col(m, -1);
    int col = nvars;
    for (int i = 0; i < m; ++i)
        if (rows[i].sense != RowSense::Eq) aux_col[i] = col++;
    std::vector<int> art_col(m, -1);
    int first_art = col;

    // build raw rows, normalizing to rhs >= 0
    std::vector<std::vector<Rat>> raw(m, std::vector<Rat>(nvars, Rat(0)));
    std::vector<Rat> rhs(m);
    std::vector<RowSense> sense(m);
    for (int i = 0; i < m; ++i) {
        for (auto [j, coeff] : rows[i].terms) {
            if (j < 0 || j >= nvars) throw std::logic_error("LpRow term out of range");
            raw[i][j] += coeff;
        }
        rhs[i] = rows[i].rhs;
        sense[i] = rows[i].sense;
        if (rhs[i] < 0) {
            for (Rat& v : raw[i]) v = -v;
            rhs[i] = -rhs[i];
            if (sense[i] == RowSense::Ge)
                sense[i] = RowSense::Le;
            else if (sense[i] == RowSense::Le)
                sense[i] = RowSense::Ge;
        }
    }
    // artificials: needed for Eq rows and for Ge rows (surplus starts negative)
    for (int i = 0; i < m; ++i)
        art_col[i] = (sense[i] == RowSense::Le) ? -1 : col++;
    t.ncols = col;

    t.a.assign(m, std::vector<Rat>(t.ncols, Rat(0)));
    t.b = rhs;
    t.basis.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < nvars; ++j) t.a[i][j] = raw[i][j];
        if (aux_col[i] >= 0) t.a[i][aux_col[i]] = (sense[i] == RowSense::Le) ? Rat(1) : Rat(-1);
        if (art_col[i] >= 0) {
            t.a[i][art_col[i]] = 1;
            t.basis[i] = art_col[i];
        } else {
            t.basis[i] = aux_col[i];
        }
    }
    t.allowed.assign(t.ncols, 1);

    bool has_artificials = false;
    for (int i = 0; i < m; ++i) has_artificials |= art_col[i] >= 0;

    if (has_artificials) {
        std::vector<Rat> phase1(t.ncols, Rat(0));
        for (int i = 0; i < m; ++i)
            if (art_col[i] >= 0) phase1[art_col[i]] = 1;
        t.set_objective(phase1);
        auto status = t.run();
        assert(status == SimplexResult::Status::Optimal);  // phase 1 is bounded below by 0
        (void)status;
        if (-t.obj_rhs != 0) {
            SimplexResult res;
            res.status = SimplexResult::Status::Infeasible;
            return res;
        }
        // drive any basic artificial out of the basis, or drop its row if redundant
        for (int i = 0; i < t.rows(); ++i) {
            if (t.basis[i] < first_art) continue;
            int s = -1;
            for (int j = 0; j < first_art; ++j)
                if (t.a[i][j] != 0) {
                    s = j;
                    break;
                }
            if (s >= 0) {
                t.pivot(i, s);
            } else {
                t.a.erase(t.a.begin() + i);
                t.b.erase(t.b.begin() + i);
                t.basis.erase(t.basis.begin() + i);
                --i;
            }
        }
        for (int j = first_art; j < t.ncols; ++j) t.allowed[j] = 0;
    }

    std::vector<Rat> phase2 = objective;
    phase2.resize(t.ncols, Rat(0));
    t.set_objective(phase2);
    auto status = t.run();

    SimplexResult res;
    res.status = status;
    if (status != SimplexResult::Status::Optimal) return res;
    res.x.assign(nvars, Rat(0));
    for (int i = 0; i < t.rows(); ++i)
        if (t.basis[i] < nvars) res.x[t.basis[i]] = t.b[i];
    res.objective = -t.obj_rhs;
    return res;
}

}  // namespace tap
