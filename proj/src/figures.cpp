#include "bmw/figures.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

#include "bmw/errors.hpp"
#include "bmw/numerics.hpp"

namespace bmw {

CurveFunc parse_curve_func(std::string_view name) {
    if (name == "pdf") return CurveFunc::Pdf;
    if (name == "cdf") return CurveFunc::Cdf;
    if (name == "survival") return CurveFunc::Survival;
    if (name == "hazard") return CurveFunc::Hazard;
    if (name == "quantile") return CurveFunc::Quantile;
    std::ostringstream msg;
    msg << "unknown function '" << name
        << "' (expected pdf|cdf|survival|hazard|quantile)";
    throw DomainError(msg.str());
}

std::string_view curve_func_name(CurveFunc f) {
    switch (f) {
        case CurveFunc::Pdf: return "pdf";
        case CurveFunc::Cdf: return "cdf";
        case CurveFunc::Survival: return "survival";
        case CurveFunc::Hazard: return "hazard";
        case CurveFunc::Quantile: return "quantile";
    }
    return "?";
}

CurveTable eval_curve(CurveFunc f, const Bmw6Params& p,
                      const std::vector<double>& grid) {
    p.check();
    CurveTable table;
    table.x = grid;
    std::vector<double> col;
    col.reserve(grid.size());
    for (const double x : grid) {
        switch (f) {
            case CurveFunc::Pdf: col.push_back(pdf(x, p)); break;
            case CurveFunc::Cdf: col.push_back(cdf(x, p)); break;
            case CurveFunc::Survival: col.push_back(survival(x, p)); break;
            case CurveFunc::Quantile: col.push_back(quantile(x, p)); break;
            case CurveFunc::Hazard:
                try {
                    col.push_back(hazard(x, p));
                } catch (const OverflowError&) {
                    // survival underflowed to zero: no representable value
                    col.push_back(std::numeric_limits<double>::quiet_NaN());
                }
                break;
        }
    }
    table.columns.emplace_back(std::string(curve_func_name(f)), std::move(col));
    return table;
}

const std::vector<FigureSet>& builtin_figure_sets() {
    // Parameters listed in (a, b, lambda, beta, gamma, tau) order.
    auto make = [](const char* label, FigurePanel panel, double a, double b,
                   double lambda, double beta, double gamma, double tau) {
        return FigureSet{label, panel,
                         Bmw6Params{{a, b}, {gamma, beta, lambda, tau}}};
    };
    static const std::vector<FigureSet> sets = {
        make("BW", FigurePanel::FigA, 0.8, 0.8, 0.8, 0.8, 1.5, 1.0),
        make("BE", FigurePanel::FigA, 0.7, 0.7, 0.7, 1.3, 1.0, 1.0),
        make("N1", FigurePanel::FigA, 1.5, 0.8, 1.2, 0.8, 1.2, 2.0),
        make("N2", FigurePanel::FigA, 1.5, 3.5, 0.5, 1.5, 4.0, 4.0),
        make("N3", FigurePanel::FigA, 0.5, 0.5, 0.5, 0.5, 0.5, 0.5),
        make("GMW", FigurePanel::FigB, 0.2, 1.0, 0.001, 2.4, 3.5, 3.5),
        make("WE", FigurePanel::FigB, 1.5, 1.0, 1.9, 0.6, 1.4, 1.0),
        make("GR", FigurePanel::FigB, 0.25, 1.0, 0.001, 1.0, 2.0, 1.0),
        make("W", FigurePanel::FigB, 1.0, 1.0, 0.5, 0.2, 0.6, 1.0),
        make("EE", FigurePanel::FigB, 0.4, 1.0, 3.5, 3.0, 1.0, 1.0),
        make("E", FigurePanel::FigB, 1.0, 1.0, 0.5, 1.5, 1.0, 1.0),
    };
    return sets;
}

CurveTable figure_curve(const FigureSet& set) {
    const std::vector<double> grid = log_grid(1e-3, 8.0, 400);
    CurveTable table = eval_curve(CurveFunc::Pdf, set.params, grid);
    CurveTable hz = eval_curve(CurveFunc::Hazard, set.params, grid);
    table.columns.push_back(std::move(hz.columns.front()));
    return table;
}

std::string figure_filename(const FigureSet& set) {
    const char* panel = set.panel == FigurePanel::FigA ? "FigA" : "FigB";
    return std::string(panel) + "_" + set.label + ".csv";
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const CurveTable& table, std::ostream& out) {
    out << "x";
    for (const auto& [name, col] : table.columns)
        out << "," << name;
    out << "\n";
    for (std::size_t i = 0; i < table.x.size(); ++i) {
        out << format_csv_value(table.x[i]);
        for (const auto& [name, col] : table.columns)
            out << "," << format_csv_value(col[i]);
        out << "\n";
    }
}

} // namespace bmw
