#include <CLI11.hpp>
#include <json.hpp>

#include "radspec/format.hpp"
#include "radspec/model.hpp"
#include "radspec/ritz.hpp"
#include "radspec/rpm.hpp"
#include "radspec/spectra.hpp"
#include "radspec/truncation.hpp"

#include "golden_tables.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace radspec;

namespace {

constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGoldenMismatch = 3;

void write_output(const std::string& content, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

// ---------------------------------------------------------------------------
// Table builders

struct TableCells {
    std::vector<int> index;                          // N or D per row
    std::vector<std::vector<std::string>> cells;     // formatted, "" = blank
    std::vector<std::vector<std::optional<double>>> values;
};

std::string table_csv(const TableCells& t, const std::string& index_name, std::size_t columns) {
    std::vector<std::string> header{index_name};
    for (std::size_t c = 0; c < columns; ++c) header.push_back("W_" + std::to_string(c));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t r = 0; r < t.index.size(); ++r) {
        std::vector<std::string> row{std::to_string(t.index[r])};
        for (std::size_t c = 0; c < columns; ++c)
            row.push_back(c < t.cells[r].size() ? t.cells[r][c] : "");
        rows.push_back(std::move(row));
    }
    return emit_csv(header, rows);
}

TableCells ritz_table(const BigReal& s, const BigReal& alpha, std::size_t n_max,
                      std::size_t levels) {
    TableCells t;
    for (std::size_t n = 2; n <= n_max; ++n) {
        RitzResult r = ritz_spectrum(s, alpha, n);
        t.index.push_back(static_cast<int>(n));
        std::vector<std::string> cells;
        std::vector<std::optional<double>> vals;
        for (std::size_t c = 0; c < levels; ++c) {
            if (c < r.eigenvalues.size()) {
                cells.push_back(format_significant(r.eigenvalues[c]));
                vals.push_back(r.eigenvalues[c].to_double());
            } else {
                cells.emplace_back();
                vals.emplace_back();
            }
        }
        t.cells.push_back(std::move(cells));
        t.values.push_back(std::move(vals));
    }
    return t;
}

/// Per-dimension RPM roots. Columns are the variational levels of the
/// same (s, alpha) problem; each row shows the determinant root nearest
/// that level. The determinant also carries roots of the sign-flipped
/// alpha problem plus drifting low-D artifacts, which a raw root list
/// would interleave with the converging ones.
TableCells rpm_table_cells(const BigReal& s, const BigReal& alpha, std::size_t d_min,
                           std::size_t d_max, std::size_t offset, const BigReal& w_lo,
                           const BigReal& w_hi, std::size_t grid_points, std::size_t levels) {
    std::vector<BigReal> anchors = converged_ritz(s, alpha, levels).result.eigenvalues;
    anchors.resize(std::min<std::size_t>(anchors.size(), levels));
    BigReal half_gap = w_hi - w_lo;
    for (std::size_t c = 1; c < anchors.size(); ++c)
        half_gap = min(half_gap, (anchors[c] - anchors[c - 1]) / BigReal(2L));

    std::vector<RpmResult> rows = rpm_table(s, alpha, d_min, d_max, offset, w_lo, w_hi, grid_points);
    TableCells t;
    for (const auto& res : rows) {
        t.index.push_back(static_cast<int>(res.dim));
        std::vector<std::string> cells(anchors.size());
        std::vector<std::optional<double>> vals(anchors.size());
        for (std::size_t c = 0; c < anchors.size(); ++c) {
            if (anchors[c] < w_lo || anchors[c] > w_hi) continue;
            const RpmRoot* best = nullptr;
            for (const auto& r : res.roots) {
                if (abs(r.w - anchors[c]) >= half_gap) continue;
                if (!best || abs(r.w - anchors[c]) < abs(best->w - anchors[c])) best = &r;
            }
            if (best) {
                cells[c] = format_significant(best->w);
                vals[c] = best->w.to_double();
            }
        }
        t.cells.push_back(std::move(cells));
        t.values.push_back(std::move(vals));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Golden comparison

template <std::size_t N>
int check_against(const TableCells& got, const std::array<golden::TableRow, N>& want,
                  const std::string& name) {
    constexpr double kRelTol = 5e-10;
    int mismatches = 0;
    for (const auto& row : want) {
        auto it = std::find(got.index.begin(), got.index.end(), row.index);
        if (it == got.index.end()) {
            std::cerr << name << ": missing row " << row.index << "\n";
            ++mismatches;
            continue;
        }
        std::size_t r = static_cast<std::size_t>(it - got.index.begin());
        for (std::size_t c = 0; c < row.w.size(); ++c) {
            if (row.w[c].empty()) continue;
            double expected = std::strtod(std::string(row.w[c]).c_str(), nullptr);
            if (c >= got.values[r].size() || !got.values[r][c].has_value()) {
                std::cerr << name << ": row " << row.index << " col " << c << ": missing value, "
                          << "expected " << row.w[c] << "\n";
                ++mismatches;
                continue;
            }
            double actual = *got.values[r][c];
            double tol = kRelTol * std::max(1.0, std::abs(expected));
            if (std::abs(actual - expected) > tol) {
                std::cerr << name << ": row " << row.index << " col " << c << ": got "
                          << got.cells[r][c] << ", expected " << row.w[c] << "\n";
                ++mismatches;
            }
        }
    }
    return mismatches;
}

// ---------------------------------------------------------------------------
// Subcommand drivers

int run_map(long l, double phi1, double m, double moment, double b0, double omega, double k,
            const std::string& out_path) {
    PhysicalParams p;
    p.l = l;
    p.phi1 = BigReal(phi1);
    p.m = BigReal(m);
    p.moment = BigReal(moment);
    p.b0 = BigReal(b0);
    p.omega = BigReal(omega);
    p.k = BigReal(k);
    DimensionlessProblem dp = dimensionless_from_physical(p);
    json j{{"gamma", dp.gamma.to_double()}, {"s", dp.s.to_double()}, {"alpha", dp.alpha.to_double()}};
    write_output(j.dump(2) + "\n", out_path);
    return 0;
}

int run_truncate(long n, double s, const std::string& format, const std::string& out_path) {
    auto sols = truncation_solutions(n, BigReal(s));
    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& sol : sols)
            rows.push_back({std::to_string(sol.n), std::to_string(sol.i),
                            format_significant(sol.alpha_root), format_significant(sol.w)});
        write_output(emit_csv({"n", "i", "alpha", "W"}, rows), out_path);
    } else {
        json arr = json::array();
        for (const auto& sol : sols) {
            json coeffs = json::array();
            for (const auto& a : sol.coeffs) coeffs.push_back(a.to_double());
            arr.push_back({{"n", sol.n},
                           {"i", sol.i},
                           {"alpha", sol.alpha_root.to_double()},
                           {"W", sol.w.to_double()},
                           {"coeffs", coeffs},
                           {"nodes", count_nodes(sol)}});
        }
        write_output(arr.dump(2) + "\n", out_path);
    }
    return 0;
}

int run_reproduce(const std::string& which, bool check, const std::string& out_path) {
    const BigReal zero(0L);
    const BigReal root2 = sqrt(BigReal(2L));
    int mismatches = 0;
    std::string output;

    auto do_table = [&](const std::string& name) {
        if (name == "table1") {
            TableCells t = ritz_table(zero, -root2, 10, 4);
            output += table_csv(t, "N", 4);
            if (check) mismatches += check_against(t, golden::kTable1, name);
        } else if (name == "table2") {
            TableCells t = ritz_table(zero, root2, 13, 4);
            output += table_csv(t, "N", 4);
            if (check) mismatches += check_against(t, golden::kTable2, name);
        } else if (name == "table3") {
            TableCells t = rpm_table_cells(zero, -root2, 8, 15, 0, BigReal(0L), BigReal(20L), 400, 4);
            output += table_csv(t, "D", 4);
            if (check) mismatches += check_against(t, golden::kTable3, name);
        } else if (name == "table4") {
            TableCells t = rpm_table_cells(zero, root2, 8, 15, 0, BigReal(-5L), BigReal(15L), 400, 4);
            output += table_csv(t, "D", 4);
            if (check) mismatches += check_against(t, golden::kTable4, name);
        }
    };

    auto do_figure1 = [&]() {
        const std::size_t points = 81, levels = 7;
        std::vector<BigReal> grid;
        for (std::size_t g = 0; g < points; ++g)
            grid.push_back(BigReal(-8L) + BigReal(16L) * BigReal(static_cast<long>(g)) /
                                              BigReal(static_cast<long>(points - 1)));
        SpectralCurveSet set = sweep(zero, std::move(grid), levels);
        auto overlay = truncation_overlay(zero, 6);

        std::vector<std::string> header{"alpha"};
        for (std::size_t j = 0; j < levels; ++j) header.push_back("W_" + std::to_string(j));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t g = 0; g < set.alpha_grid.size(); ++g) {
            std::vector<std::string> row{format_significant(set.alpha_grid[g])};
            for (std::size_t j = 0; j < levels; ++j)
                row.push_back(set.failed[g] ? "" : format_significant(set.curves[j][g]));
            rows.push_back(std::move(row));
        }
        write_output(emit_csv(header, rows), "figure1_curves.csv");

        std::vector<std::vector<std::string>> prow;
        for (const auto& p : overlay)
            prow.push_back({std::to_string(p.n), std::to_string(p.i), format_significant(p.alpha),
                            format_significant(p.w), format_significant(p.residual, 3)});
        write_output(emit_csv({"n", "i", "alpha", "W", "residual"}, prow), "figure1_points.csv");

        if (check) {
            for (std::size_t g = 0; g < set.alpha_grid.size(); ++g)
                if (set.failed[g]) {
                    std::cerr << "figure1: sweep failed at grid point " << g << "\n";
                    ++mismatches;
                }
            for (std::size_t j = 0; j < levels; ++j) {
                for (std::size_t g = 1; g < set.alpha_grid.size(); ++g)
                    if (!(set.curves[j][g] < set.curves[j][g - 1])) {
                        std::cerr << "figure1: curve " << j << " not decreasing at point " << g << "\n";
                        ++mismatches;
                    }
                if (j + 1 < levels)
                    for (std::size_t g = 0; g < set.alpha_grid.size(); ++g)
                        if (!(set.curves[j][g] < set.curves[j + 1][g])) {
                            std::cerr << "figure1: curves " << j << " and " << j + 1
                                      << " cross at point " << g << "\n";
                            ++mismatches;
                        }
            }
            const BigReal lo(0L), hi(1e-8);
            for (const auto& p : overlay)
                if (p.residual < lo || p.residual > hi) {
                    std::cerr << "figure1: overlay residual out of range at n=" << p.n
                              << " i=" << p.i << ": " << p.residual.to_double() << "\n";
                    ++mismatches;
                }
        }
    };

    if (which == "all") {
        for (const char* t : {"table1", "table2", "table3", "table4"}) do_table(t);
        do_figure1();
    } else if (which == "figure1") {
        do_figure1();
    } else {
        do_table(which);
    }
    if (!output.empty()) write_output(output, out_path);
    return mismatches == 0 ? 0 : kExitGoldenMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"High-precision spectral solvers for the radial oscillator-plus-Coulomb model"};
    app.require_subcommand(1);

    unsigned precision = 256;
    std::string out_path = "-";
    app.add_option("--precision", precision, "working precision in bits (>= 64)")
        ->envname("RADSPEC_PRECISION_BITS")
        ->check(CLI::Range(64u, 1u << 20));
    app.add_option("-o,--output", out_path, "output path ('-' = stdout)");

    // map
    auto* map_cmd = app.add_subcommand("map", "physical parameters -> dimensionless (gamma, s, alpha)");
    long map_l = 0;
    double map_phi1 = 0, map_m = 1, map_moment = 1, map_b0 = 1, map_omega = 1, map_k = 0;
    map_cmd->add_option("--l", map_l, "angular momentum quantum number");
    map_cmd->add_option("--phi1", map_phi1, "geometric quantum phase");
    map_cmd->add_option("--m", map_m, "particle mass")->check(CLI::PositiveNumber);
    map_cmd->add_option("--M", map_moment, "magnetic quadrupole moment magnitude");
    map_cmd->add_option("--B0", map_b0, "current-density constant");
    map_cmd->add_option("--omega", map_omega, "oscillator frequency")->check(CLI::PositiveNumber);
    map_cmd->add_option("--k", map_k, "axial wavenumber");

    // truncate
    auto* trunc_cmd = app.add_subcommand("truncate", "exact polynomial solutions for degree n");
    long trunc_n = 1;
    double trunc_s = 0;
    std::string trunc_format = "json";
    trunc_cmd->add_option("--n", trunc_n, "polynomial degree")->required()->check(CLI::NonNegativeNumber);
    trunc_cmd->add_option("--s", trunc_s, "s = |gamma|")->check(CLI::NonNegativeNumber);
    trunc_cmd->add_option("--format", trunc_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // ritz
    auto* ritz_cmd = app.add_subcommand("ritz", "Rayleigh-Ritz eigenvalues vs basis size");
    double ritz_s = 0, ritz_alpha = 0;
    std::size_t ritz_nmax = 10, ritz_levels = 4;
    ritz_cmd->add_option("--s", ritz_s)->check(CLI::NonNegativeNumber);
    ritz_cmd->add_option("--alpha", ritz_alpha)->required();
    ritz_cmd->add_option("--nmax", ritz_nmax)->check(CLI::Range(std::size_t(2), std::size_t(64)));
    ritz_cmd->add_option("--levels", ritz_levels)->check(CLI::Range(std::size_t(1), std::size_t(16)));

    // rpm
    auto* rpm_cmd = app.add_subcommand("rpm", "Riccati-Pade eigenvalues vs Hankel dimension");
    double rpm_s = 0, rpm_alpha = 0, rpm_wmin = -5, rpm_wmax = 20;
    std::size_t rpm_dmax = 15, rpm_dmin = 8, rpm_offset = 0, rpm_grid = 400, rpm_levels = 4;
    rpm_cmd->add_option("--s", rpm_s)->check(CLI::NonNegativeNumber);
    rpm_cmd->add_option("--alpha", rpm_alpha)->required();
    rpm_cmd->add_option("--dmax", rpm_dmax)->check(CLI::Range(std::size_t(2), std::size_t(40)));
    rpm_cmd->add_option("--dmin", rpm_dmin);
    rpm_cmd->add_option("--d", rpm_offset, "Hankel entry offset");
    rpm_cmd->add_option("--wmin", rpm_wmin);
    rpm_cmd->add_option("--wmax", rpm_wmax);
    rpm_cmd->add_option("--grid", rpm_grid, "scan grid points")->check(CLI::Range(std::size_t(100), std::size_t(100000)));
    rpm_cmd->add_option("--levels", rpm_levels);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "spectral curves W_j(alpha) with truncation overlay");
    double sw_s = 0, sw_amin = -8, sw_amax = 8;
    std::size_t sw_points = 81, sw_levels = 7;
    long sw_overlay = 6;
    std::string sw_curves = "sweep_curves.csv", sw_points_out = "sweep_points.csv";
    sweep_cmd->add_option("--s", sw_s)->check(CLI::NonNegativeNumber);
    sweep_cmd->add_option("--amin", sw_amin);
    sweep_cmd->add_option("--amax", sw_amax);
    sweep_cmd->add_option("--points", sw_points)->check(CLI::Range(std::size_t(2), std::size_t(10000)));
    sweep_cmd->add_option("--levels", sw_levels)->check(CLI::Range(std::size_t(1), std::size_t(16)));
    sweep_cmd->add_option("--overlay-nmax", sw_overlay, "-1 disables the overlay");
    sweep_cmd->add_option("--curves-out", sw_curves);
    sweep_cmd->add_option("--points-out", sw_points_out);

    // reproduce
    auto* rep_cmd = app.add_subcommand("reproduce", "regenerate the reference tables and figure data");
    std::string rep_which;
    bool rep_check = false;
    rep_cmd->add_option("target", rep_which, "table1|table2|table3|table4|figure1|all")
        ->required()
        ->check(CLI::IsMember({"table1", "table2", "table3", "table4", "figure1", "all"}));
    rep_cmd->add_flag("--check", rep_check, "diff against embedded reference values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        set_precision_bits(precision);
        if (map_cmd->parsed())
            return run_map(map_l, map_phi1, map_m, map_moment, map_b0, map_omega, map_k, out_path);
        if (trunc_cmd->parsed()) return run_truncate(trunc_n, trunc_s, trunc_format, out_path);
        if (ritz_cmd->parsed()) {
            TableCells t = ritz_table(BigReal(ritz_s), BigReal(ritz_alpha), ritz_nmax, ritz_levels);
            write_output(table_csv(t, "N", ritz_levels), out_path);
            return 0;
        }
        if (rpm_cmd->parsed()) {
            TableCells t = rpm_table_cells(BigReal(rpm_s), BigReal(rpm_alpha), rpm_dmin, rpm_dmax,
                                     rpm_offset, BigReal(rpm_wmin), BigReal(rpm_wmax), rpm_grid,
                                     rpm_levels);
            write_output(table_csv(t, "D", rpm_levels), out_path);
            return 0;
        }
        if (sweep_cmd->parsed()) {
            std::vector<BigReal> grid;
            const BigReal lo(sw_amin), hi(sw_amax);
            for (std::size_t g = 0; g < sw_points; ++g)
                grid.push_back(lo + (hi - lo) * BigReal(static_cast<long>(g)) /
                                        BigReal(static_cast<long>(sw_points - 1)));
            SpectralCurveSet set = sweep(BigReal(sw_s), std::move(grid), sw_levels);

            std::vector<std::string> header{"alpha"};
            for (std::size_t j = 0; j < sw_levels; ++j) header.push_back("W_" + std::to_string(j));
            std::vector<std::vector<std::string>> rows;
            for (std::size_t g = 0; g < set.alpha_grid.size(); ++g) {
                std::vector<std::string> row{format_significant(set.alpha_grid[g])};
                for (std::size_t j = 0; j < sw_levels; ++j)
                    row.push_back(set.failed[g] ? "" : format_significant(set.curves[j][g]));
                rows.push_back(std::move(row));
            }
            write_output(emit_csv(header, rows), sw_curves);

            if (sw_overlay >= 0) {
                auto overlay = truncation_overlay(BigReal(sw_s), sw_overlay);
                std::vector<std::vector<std::string>> prow;
                for (const auto& p : overlay)
                    prow.push_back({std::to_string(p.n), std::to_string(p.i),
                                    format_significant(p.alpha), format_significant(p.w),
                                    format_significant(p.residual, 3)});
                write_output(emit_csv({"n", "i", "alpha", "W", "residual"}, prow), sw_points_out);
            }
            return 0;
        }
        if (rep_cmd->parsed()) return run_reproduce(rep_which, rep_check, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
