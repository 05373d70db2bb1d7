#ifndef CNLS_REPORT_HPP
#define CNLS_REPORT_HPP

#include <cnls/model.hpp>

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace cnls {

enum class CurveId {
    Q_of_Omega,
    E_of_Omega,
    LogOmega_of_Q,
    Omega_of_Q,
    E_of_Q,
    M_of_Omega,
    M_of_Q,
};

enum class Spacing { Linear, Log };

struct Marker {
    std::string name;
    double x;
    double y;
};

/// A sampled curve: strictly increasing abscissae, all inside the curve's
/// legal domain, plus critical-point markers consistent with the closed-form
/// constants.
struct CurveTable {
    CurveId id;
    ModelParams params;
    std::vector<std::pair<double, double>> samples;
    std::vector<Marker> markers;
};

std::string curve_name(CurveId id);

/// Parses "q-of-omega" etc. (the curve_name spelling); throws
/// std::domain_error on unknown names.
CurveId curve_from_name(const std::string& name);

/// Samples the curve on [x_min, x_max] with n points and injects the
/// focusing critical-point marker when it falls inside the range. The range
/// must sit strictly inside the curve's legal domain.
CurveTable sample_curve(CurveId id, const ModelParams& p, double x_min, double x_max, int n,
                        Spacing spacing);

/// Canonical data file name for a table, e.g. "e_of_omega_focusing.dat".
std::string table_filename(const CurveTable& table);

/// Writes the table as '#'-prefixed metadata lines followed by
/// tab-separated x, y rows at 17 significant digits. Deterministic:
/// identical tables produce byte-identical files.
void write_table(const CurveTable& table, const std::filesystem::path& path);

/// Emits a gnuplot script with one plot directive per table, one panel each,
/// referencing the canonical table_filename() of every table relative to the
/// script's directory. The table list must be nonempty.
void write_plot_script(const std::vector<CurveTable>& tables,
                       const std::filesystem::path& path);

/// Same, but with an explicit data-file name per table.
void write_plot_script(const std::vector<CurveTable>& tables,
                       const std::vector<std::string>& data_files,
                       const std::filesystem::path& path);

}  // namespace cnls

#endif
