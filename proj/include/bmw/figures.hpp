#ifndef BMW_FIGURES_HPP
#define BMW_FIGURES_HPP

// Curve tables (x grid plus named columns) and the built-in parameter sets
// behind the `figure` command, serialized as CSV with full round-trip
// precision.

#include <iosfwd>
#include <string>
#include <vector>

#include "bmw/beta_modified_weibull.hpp"

namespace bmw {

struct CurveTable {
    std::vector<double> x;
    std::vector<std::pair<std::string, std::vector<double>>> columns;
};

enum class CurveFunc { Pdf, Cdf, Survival, Hazard, Quantile };

/// Parses "pdf", "cdf", "survival", "hazard", "quantile"; throws DomainError
/// on anything else.
CurveFunc parse_curve_func(std::string_view name);
std::string_view curve_func_name(CurveFunc f);

/// One column of f evaluated over the grid. Hazard cells where the survival
/// function has underflowed to zero are recorded as NaN (the library call
/// itself refuses to produce a value there).
CurveTable eval_curve(CurveFunc f, const Bmw6Params& p,
                      const std::vector<double>& grid);

enum class FigurePanel { FigA, FigB };

struct FigureSet {
    std::string label;
    FigurePanel panel;
    Bmw6Params params;
};

/// The eleven built-in parameter sets, in panel order.
const std::vector<FigureSet>& builtin_figure_sets();

/// pdf and hazard columns for one set on the standard 400-point log grid
/// over [1e-3, 8].
CurveTable figure_curve(const FigureSet& set);

/// "<panel>_<label>.csv", e.g. "FigA_BW.csv".
std::string figure_filename(const FigureSet& set);

/// CSV: comma delimiter, '.' decimal point, LF line endings, header row,
/// 17 significant digits (doubles round-trip exactly).
void write_csv(const CurveTable& table, std::ostream& out);

/// Value formatting used by write_csv, exposed so other emitters match it.
std::string format_csv_value(double v);

} // namespace bmw

#endif
