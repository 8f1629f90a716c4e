#include "poscert/field.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>

namespace poscert {

namespace {

// x^p for x >= 0 and a point exponent; integer exponents avoid exp/ln.
Interval pow_point(const Interval& x, double p)
{
    if (p == std::floor(p) && std::fabs(p) < 1e9)
        return pow_int(x, static_cast<long>(p));
    return pow_real(x, Interval(p));
}

// x^(1/p) for x >= 0.
Interval root_point(const Interval& x, double p)
{
    if (p == std::floor(p) && p >= 1.0 && p < 1e9)
        return root_n(x, static_cast<long>(p));
    return pow_real(x, div(Interval(1.0), Interval(p)));
}

} // namespace

CellMesh CellMesh::from_cells(std::vector<Cell> cells, int dimension)
{
    CellMesh mesh;
    mesh.cells = std::move(cells);
    mesh.dimension = dimension;
    Interval total(0.0);
    for (std::size_t i = 0; i < mesh.cells.size(); ++i) {
        mesh.cells[i].id = i;
        total = add(total, mesh.cells[i].volume);
    }
    mesh.total_volume = total;
    mesh.validate();
    return mesh;
}

void CellMesh::validate() const
{
    if (dimension < 2)
        throw domain_error("CellMesh: dimension must be >= 2");
    for (const Cell& c : cells) {
        if (!(c.volume.lo > 0.0))
            throw domain_error("CellMesh: cell volume must be strictly positive");
        if (!(c.lower <= c.upper))
            throw domain_error("CellMesh: cell bounds must satisfy lower <= upper");
        if (!std::isfinite(c.lower) || !std::isfinite(c.upper))
            throw domain_error("CellMesh: cell bounds must be finite");
    }
}

Interval minus_sup_upper(const CellMesh& mesh)
{
    if (mesh.cells.empty())
        throw domain_error("minus_sup_upper: empty mesh");
    double worst = 0.0;
    for (const Cell& c : mesh.cells)
        worst = std::min(worst, c.lower);
    return Interval(-worst);
}

Interval minus_support_vol_upper(const CellMesh& mesh)
{
    if (mesh.cells.empty())
        throw domain_error("minus_support_vol_upper: empty mesh");
    Interval sum(0.0);
    for (const Cell& c : mesh.cells)
        if (c.lower < 0.0)
            sum = add(sum, c.volume);
    return sum;
}

Interval minus_norm_upper(const CellMesh& mesh, double p)
{
    if (!(p >= 1.0))
        throw domain_error("minus_norm_upper: p must be >= 1");
    return mul(minus_sup_upper(mesh), root_point(minus_support_vol_upper(mesh), p));
}

Interval dm_vol_upper(const CellMesh& mesh, double m)
{
    Interval sum(0.0);
    for (const Cell& c : mesh.cells)
        if (c.lower <= m)
            sum = add(sum, c.volume);
    return sum;
}

Interval plus_norm_lower(const CellMesh& mesh, double p, double m)
{
    if (!(p >= 1.0))
        throw domain_error("plus_norm_lower: p must be >= 1");
    Interval sum(0.0);
    for (const Cell& c : mesh.cells) {
        if (c.upper <= m) {
            const double floor_value = std::max(0.0, c.lower);
            sum = add(sum, mul(c.volume, pow_point(Interval(floor_value), p)));
        }
    }
    return root_point(sum, p);
}

Interval uhat_norm_upper(const CellMesh& mesh, double p)
{
    if (!(p >= 1.0))
        throw domain_error("uhat_norm_upper: p must be >= 1");
    Interval sum(0.0);
    for (const Cell& c : mesh.cells) {
        const double mag = std::max(std::fabs(c.lower), std::fabs(c.upper));
        sum = add(sum, mul(c.volume, pow_point(Interval(mag), p)));
    }
    return root_point(sum, p);
}

namespace {

// Shifted-Legendre machinery in t = 2x - 1: values, first and second
// derivatives of P_k(t) by the three-term recurrences.
struct BasisTable {
    std::vector<Interval> phi;     // phi_n(x), n = 1..M
    std::vector<Interval> dphi;    // phi_n'(x)
};

BasisTable basis_on(const Interval& x, int degree)
{
    const Interval t = sub(mul(Interval(2.0), x), Interval(1.0));
    std::vector<Interval> p(degree + 2), dp(degree + 2), ddp(degree + 2);
    p[0] = Interval(1.0);
    dp[0] = Interval(0.0);
    ddp[0] = Interval(0.0);
    if (degree >= 0) {
        p[1] = t;
        dp[1] = Interval(1.0);
        ddp[1] = Interval(0.0);
    }
    for (int k = 1; k <= degree; ++k) {
        const Interval kk(static_cast<double>(k));
        const Interval two_k_plus_1(2.0 * k + 1.0);
        p[k + 1] = div(sub(mul(mul(two_k_plus_1, t), p[k]), mul(kk, p[k - 1])),
                       Interval(static_cast<double>(k + 1)));
        dp[k + 1] = add(dp[k - 1], mul(two_k_plus_1, p[k]));
        ddp[k + 1] = add(ddp[k - 1], mul(two_k_plus_1, dp[k]));
    }
    const Interval weight = mul(x, sub(Interval(1.0), x)); // x(1-x)
    const Interval dweight = sub(Interval(1.0), mul(Interval(2.0), x)); // 1-2x
    BasisTable table;
    table.phi.resize(degree + 1);
    table.dphi.resize(degree + 1);
    for (int n = 1; n <= degree; ++n) {
        const Interval norm(static_cast<double>(n) * (n + 1.0));
        // phi_n = x(1-x) Q_n'(x)/(n(n+1)), Q_n'(x) = 2 P_n'(t)
        table.phi[n] = div(mul(weight, mul(Interval(2.0), dp[n])), norm);
        // phi_n' = [(1-2x) 2 P_n'(t) + x(1-x) 4 P_n''(t)]/(n(n+1))
        table.dphi[n] = div(add(mul(dweight, mul(Interval(2.0), dp[n])),
                                mul(weight, mul(Interval(4.0), ddp[n]))),
                            norm);
    }
    return table;
}

Interval series_value(const LegendreField& f, const std::vector<Interval>& phi_x,
                      const std::vector<Interval>& phi_y)
{
    Interval total(0.0);
    for (int i = 1; i <= f.degree; ++i) {
        Interval row(0.0);
        for (int j = 1; j <= f.degree; ++j) {
            const double u = f.coeff(i - 1, j - 1);
            if (u != 0.0)
                row = add(row, mul(Interval(u), phi_y[j]));
        }
        total = add(total, mul(phi_x[i], row));
    }
    return total;
}

Interval enclose_on_box(const LegendreField& f, const Interval& x, const Interval& y)
{
    const BasisTable bx = basis_on(x, f.degree);
    const BasisTable by = basis_on(y, f.degree);
    const Interval naive = series_value(f, bx.phi, by.phi);

    // Mean-value form: f(c) + fx(X, Y)(X - cx) + fy(cx, Y)(Y - cy).
    const double cx = x.mid();
    const double cy = y.mid();
    const BasisTable bcx = basis_on(Interval(cx), f.degree);
    const BasisTable bcy = basis_on(Interval(cy), f.degree);
    const Interval at_center = series_value(f, bcx.phi, bcy.phi);
    const Interval fx = series_value(f, bx.dphi, by.phi);
    const Interval fy = series_value(f, bcx.phi, by.dphi);
    const Interval centered = add(at_center,
                                  add(mul(fx, sub(x, Interval(cx))),
                                      mul(fy, sub(y, Interval(cy)))));
    return intersect(naive, centered);
}

} // namespace

CellMesh legendre_to_mesh(const LegendreField& field)
{
    if (field.degree < 1 || field.degree > 80)
        throw domain_error("legendre_to_mesh: degree must be in [1, 80]");
    if (field.grid_x < 1 || field.grid_y < 1)
        throw domain_error("legendre_to_mesh: grid must be >= 1 per axis");
    if (field.subdivision_depth < 0 || field.subdivision_depth > 8)
        throw domain_error("legendre_to_mesh: subdivision depth must be in [0, 8]");
    if (field.coefficients.size() !=
        static_cast<std::size_t>(field.degree) * static_cast<std::size_t>(field.degree))
        throw domain_error("legendre_to_mesh: coefficient count must be degree^2");
    for (double c : field.coefficients)
        if (!std::isfinite(c))
            throw domain_error("legendre_to_mesh: coefficients must be finite");

    const int parts = 1 << field.subdivision_depth;
    const Interval nx(static_cast<double>(field.grid_x));
    const Interval ny(static_cast<double>(field.grid_y));
    const Interval cell_volume = mul(div(Interval(1.0), nx), div(Interval(1.0), ny));

    std::vector<Cell> cells;
    cells.reserve(static_cast<std::size_t>(field.grid_x) * field.grid_y);
    const int sub_x_total = field.grid_x * parts;
    const int sub_y_total = field.grid_y * parts;

    for (int ci = 0; ci < field.grid_x; ++ci) {
        for (int cj = 0; cj < field.grid_y; ++cj) {
            bool first = true;
            Interval bounds(0.0);
            for (int si = 0; si < parts; ++si) {
                const int gx = ci * parts + si;
                const Interval x(div(Interval(static_cast<double>(gx)), Interval(static_cast<double>(sub_x_total))).lo,
                                 div(Interval(static_cast<double>(gx + 1)), Interval(static_cast<double>(sub_x_total))).hi);
                for (int sj = 0; sj < parts; ++sj) {
                    const int gy = cj * parts + sj;
                    const Interval y(div(Interval(static_cast<double>(gy)), Interval(static_cast<double>(sub_y_total))).lo,
                                     div(Interval(static_cast<double>(gy + 1)), Interval(static_cast<double>(sub_y_total))).hi);
                    const Interval e = enclose_on_box(field, x, y);
                    bounds = first ? e : hull(bounds, e);
                    first = false;
                }
            }
            Cell cell;
            cell.volume = cell_volume;
            cell.lower = bounds.lo;
            cell.upper = bounds.hi;
            cells.push_back(cell);
        }
    }
    return CellMesh::from_cells(std::move(cells), 2);
}

namespace {

// Canonical constraint evaluation shared by the oracle and the greedy
// construction: index-order accumulation, then the q-th root.
double subset_norm(const std::vector<double>& values, const std::vector<double>& volumes,
                   double q, const std::vector<bool>& selected)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (selected[i])
            sum += std::pow(values[i], q) * volumes[i];
    return std::pow(sum, 1.0 / q);
}

double subset_volume(const std::vector<double>& volumes, const std::vector<bool>& selected)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < volumes.size(); ++i)
        if (selected[i])
            sum += volumes[i];
    return sum;
}

} // namespace

LevelSetSolution oracle_max_levelset(const std::vector<double>& values,
                                     const std::vector<double>& volumes,
                                     double q, double c)
{
    const std::size_t n = values.size();
    if (n != volumes.size())
        throw domain_error("oracle_max_levelset: values/volumes size mismatch");
    if (n > 20)
        throw domain_error("oracle_max_levelset: brute force capped at 20 cells");
    if (!(q >= 1.0))
        throw domain_error("oracle_max_levelset: q must be >= 1");

    LevelSetSolution best;
    std::vector<bool> selected(n, false);
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i)
            selected[i] = (mask >> i) & 1ULL;
        if (subset_norm(values, volumes, q, selected) > c)
            continue;
        const double vol = subset_volume(volumes, selected);
        if (vol > best.volume) {
            best.volume = vol;
            best.cells.clear();
            for (std::size_t i = 0; i < n; ++i)
                if (selected[i])
                    best.cells.push_back(i);
        }
    }
    return best;
}

LevelSetSolution greedy_max_levelset(const std::vector<double>& values,
                                     const std::vector<double>& volumes,
                                     double q, double c)
{
    const std::size_t n = values.size();
    if (n != volumes.size())
        throw domain_error("greedy_max_levelset: values/volumes size mismatch");
    if (!(q >= 1.0))
        throw domain_error("greedy_max_levelset: q must be >= 1");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<bool> selected(n, false);
    LevelSetSolution result;
    for (std::size_t k = 0; k < n; ++k) {
        selected[order[k]] = true;
        if (subset_norm(values, volumes, q, selected) > c) {
            selected[order[k]] = false;
            break;
        }
    }
    result.volume = subset_volume(volumes, selected);
    for (std::size_t i = 0; i < n; ++i)
        if (selected[i])
            result.cells.push_back(i);
    return result;
}

namespace {

double json_number(const nlohmann::json& j, const char* field)
{
    if (!j.contains(field))
        throw config_error(std::string("missing field: ") + field);
    const auto& v = j.at(field);
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        char* end = nullptr;
        const double d = std::strtod(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0')
            throw config_error(std::string("unparseable numeric field: ") + field);
        return d;
    }
    throw config_error(std::string("field must be a number or hex-float string: ") + field);
}

nlohmann::json parse_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw config_error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

} // namespace

CellMesh load_cellmesh(const nlohmann::json& j)
{
    if (!j.contains("format") || j.at("format") != "cellmesh/1")
        throw config_error("cellmesh: expected format \"cellmesh/1\"");
    if (!j.contains("declared_coverage") || !j.at("declared_coverage").get<bool>())
        throw config_error("cellmesh: declared_coverage must be true");
    CellMesh mesh;
    mesh.dimension = j.at("dimension").get<int>();
    mesh.declared_coverage = true;
    mesh.volume_units = j.value("volume_units", std::string("1"));
    std::vector<Cell> cells;
    for (const auto& cj : j.at("cells")) {
        Cell c;
        c.volume = Interval(json_number(cj, "volume_lo"), json_number(cj, "volume_hi"));
        c.lower = json_number(cj, "lower");
        c.upper = json_number(cj, "upper");
        cells.push_back(c);
    }
    CellMesh result = CellMesh::from_cells(std::move(cells), mesh.dimension);
    result.volume_units = mesh.volume_units;
    return result;
}

LegendreField load_legendre(const nlohmann::json& j)
{
    if (!j.contains("format") || j.at("format") != "legendre/1")
        throw config_error("legendre: expected format \"legendre/1\"");
    LegendreField f;
    f.degree = j.at("degree").get<int>();
    const auto& grid = j.at("grid");
    if (!grid.is_array() || grid.size() != 2)
        throw config_error("legendre: grid must be [nx, ny]");
    f.grid_x = grid.at(0).get<int>();
    f.grid_y = grid.at(1).get<int>();
    f.subdivision_depth = j.value("subdivision_depth", 3);
    for (const auto& cj : j.at("coefficients")) {
        if (cj.is_number())
            f.coefficients.push_back(cj.get<double>());
        else if (cj.is_string())
            f.coefficients.push_back(std::strtod(cj.get<std::string>().c_str(), nullptr));
        else
            throw config_error("legendre: coefficients must be numbers");
    }
    return f;
}

CellMesh load_cellmesh_file(const std::string& path) { return load_cellmesh(parse_file(path)); }
LegendreField load_legendre_file(const std::string& path) { return load_legendre(parse_file(path)); }

} // namespace poscert
