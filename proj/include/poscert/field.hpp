#ifndef POSCERT_FIELD_HPP
#define POSCERT_FIELD_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "poscert/interval.hpp"

namespace poscert {

// One mesh cell: a rigorous volume enclosure and producer-certified
// bounds m_i <= min u on the closed cell, M_i >= max u.  The bounds are
// plain doubles by contract: the producer must already have rounded the
// lower bound down and the upper bound up.
struct Cell {
    Interval volume;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t id = 0;
};

// Cellwise bounds of an approximation over a mesh declared (not
// geometrically re-verified) to cover the closed domain with
// measure-zero overlaps.
struct CellMesh {
    std::vector<Cell> cells;
    int dimension = 2;
    Interval total_volume{0.0};
    bool declared_coverage = true;
    std::string volume_units = "1";

    static CellMesh from_cells(std::vector<Cell> cells, int dimension);
    void validate() const;
};

// Tensor-Legendre coefficient data u(x,y) = sum u_{i,j} phi_i(x) phi_j(y)
// on the unit square, with phi_n(x) = x(1-x) Q_n'(x) / (n(n+1)) and Q_n the
// shifted Legendre polynomial of degree n.
struct LegendreField {
    int degree = 0;                    // M
    std::vector<double> coefficients;  // row-major M x M
    int grid_x = 1;
    int grid_y = 1;
    int subdivision_depth = 3;

    double coeff(int i, int j) const { return coefficients[static_cast<std::size_t>(i) * degree + j]; }
};

// Upper bound of sup u_- over the domain: |min_i min{0, m_i}|.
Interval minus_sup_upper(const CellMesh& mesh);

// Upper bound of |supp u_-|: sum of |K_i| over cells with m_i < 0.
Interval minus_support_vol_upper(const CellMesh& mesh);

// Upper bound of ||u_-||_{L^p}: (sup bound) * (support volume bound)^{1/p}.
Interval minus_norm_upper(const CellMesh& mesh, double p);

// Upper bound of |D(m)| via Lambda_m = {i : m_i <= m}.
Interval dm_vol_upper(const CellMesh& mesh, double m);

// Lower bound of ||u_+||_{L^p(D(m))} via Lambda-bar_m = {i : M_i <= m}
// and the per-cell value max{0, m_i}.  The certified bound is lo.
Interval plus_norm_lower(const CellMesh& mesh, double p, double m);

// Upper bound of ||u||_{L^p} via per-cell max(|m_i|, |M_i|).
Interval uhat_norm_upper(const CellMesh& mesh, double p);

// Rigorous per-cell bounds of a tensor-Legendre field over a rectangular
// grid on [0,1]^2; each cell is split subdivision_depth times per axis and
// the series is evaluated over every sub-box with interval arguments
// (naive evaluation intersected with a mean-value form).
CellMesh legendre_to_mesh(const LegendreField& field);

struct LevelSetSolution {
    double volume = 0.0;
    std::vector<std::size_t> cells;
};

// Exhaustive search for the cell subset of maximal total volume whose
// weighted q-norm stays within c; test oracle for the level-set
// construction (at most 20 cells).
LevelSetSolution oracle_max_levelset(const std::vector<double>& values,
                                     const std::vector<double>& volumes,
                                     double q, double c);

// Greedy smallest-values-first counterpart of oracle_max_levelset.
LevelSetSolution greedy_max_levelset(const std::vector<double>& values,
                                     const std::vector<double>& volumes,
                                     double q, double c);

// File ingestion ("cellmesh/1" and "legendre/1"); numeric fields accept
// plain JSON numbers or hexadecimal float strings.
CellMesh load_cellmesh(const nlohmann::json& j);
LegendreField load_legendre(const nlohmann::json& j);
CellMesh load_cellmesh_file(const std::string& path);
LegendreField load_legendre_file(const std::string& path);

} // namespace poscert

#endif
