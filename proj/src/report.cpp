#include <cnls/report.hpp>

#include <cnls/waves.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace cnls {

namespace {

bool x_is_frequency(CurveId id) {
    return id == CurveId::Q_of_Omega || id == CurveId::E_of_Omega || id == CurveId::M_of_Omega;
}

double evaluate(CurveId id, const ModelParams& p, double x) {
    switch (id) {
        case CurveId::Q_of_Omega: return charge_of_frequency(p, x);
        case CurveId::E_of_Omega: return energy_of_frequency(p, x);
        case CurveId::M_of_Omega: return mass_of_frequency(p, x);
        case CurveId::LogOmega_of_Q: return std::log(frequency_of_charge(p, x));
        case CurveId::Omega_of_Q: return frequency_of_charge(p, x);
        case CurveId::E_of_Q: return energy_of_charge(p, x);
        case CurveId::M_of_Q: return mass_of_charge(p, x);
    }
    throw std::logic_error("evaluate: unreachable curve id");
}

std::string format17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string curve_name(CurveId id) {
    switch (id) {
        case CurveId::Q_of_Omega: return "q-of-omega";
        case CurveId::E_of_Omega: return "e-of-omega";
        case CurveId::M_of_Omega: return "m-of-omega";
        case CurveId::LogOmega_of_Q: return "log-omega-of-q";
        case CurveId::Omega_of_Q: return "omega-of-q";
        case CurveId::E_of_Q: return "e-of-q";
        case CurveId::M_of_Q: return "m-of-q";
    }
    throw std::logic_error("curve_name: unreachable curve id");
}

CurveId curve_from_name(const std::string& name) {
    for (CurveId id : {CurveId::Q_of_Omega, CurveId::E_of_Omega, CurveId::M_of_Omega,
                       CurveId::LogOmega_of_Q, CurveId::Omega_of_Q, CurveId::E_of_Q,
                       CurveId::M_of_Q}) {
        if (curve_name(id) == name)
            return id;
    }
    throw std::domain_error("unknown curve name: " + name);
}

CurveTable sample_curve(CurveId id, const ModelParams& p, double x_min, double x_max, int n,
                        Spacing spacing) {
    if (n < 2)
        throw std::domain_error("sample_curve: need at least 2 samples");
    if (!(x_min < x_max))
        throw std::domain_error("sample_curve: empty or reversed range");
    if (!(x_min > 0.0))
        throw std::domain_error("sample_curve: range must be positive");

    CurveTable t;
    t.id = id;
    t.params = p;
    t.samples.reserve(n);
    // Domain legality of the endpoints (and hence of every interior point,
    // the domains being intervals) is enforced by the evaluations themselves.
    for (int i = 0; i < n; ++i) {
        const double s = static_cast<double>(i) / (n - 1);
        double x;
        if (i == 0)
            x = x_min;
        else if (i == n - 1)
            x = x_max;
        else if (spacing == Spacing::Log)
            x = std::exp(std::log(x_min) + s * (std::log(x_max) - std::log(x_min)));
        else
            x = x_min + s * (x_max - x_min);
        t.samples.emplace_back(x, evaluate(id, p, x));
    }

    if (p.regime == Regime::Focusing) {
        const CriticalConstants cc = critical_constants(p);
        Marker m;
        switch (id) {
            case CurveId::Q_of_Omega: m = {"omega_bar", *cc.omega_bar, *cc.q_bar}; break;
            case CurveId::E_of_Omega: m = {"omega_bar", *cc.omega_bar, *cc.lambda_threshold}; break;
            case CurveId::M_of_Omega: m = {"omega_bar", *cc.omega_bar, *cc.mu_bar}; break;
            case CurveId::LogOmega_of_Q: m = {"q_bar", *cc.q_bar, std::log(*cc.omega_bar)}; break;
            case CurveId::Omega_of_Q: m = {"q_bar", *cc.q_bar, *cc.omega_bar}; break;
            case CurveId::E_of_Q: m = {"q_bar", *cc.q_bar, *cc.lambda_threshold}; break;
            case CurveId::M_of_Q: m = {"q_bar", *cc.q_bar, *cc.mu_bar}; break;
        }
        if (m.x >= x_min && m.x <= x_max)
            t.markers.push_back(m);
    }
    return t;
}

std::string table_filename(const CurveTable& table) {
    std::string name = curve_name(table.id);
    for (char& c : name)
        if (c == '-')
            c = '_';
    name += table.params.regime == Regime::Focusing ? "_focusing" : "_defocusing";
    return name + ".dat";
}

void write_table(const CurveTable& table, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_table: cannot open " + path.string());
    out << "# curve " << curve_name(table.id) << "\n";
    out << "# sigma " << format17(table.params.sigma) << " beta " << format17(table.params.beta)
        << "\n";
    for (const Marker& m : table.markers)
        out << "# marker " << m.name << " " << format17(m.x) << " " << format17(m.y) << "\n";
    out << "# columns x y\n";
    for (const auto& [x, y] : table.samples)
        out << format17(x) << "\t" << format17(y) << "\n";
    if (!out.flush())
        throw std::runtime_error("write_table: write failed for " + path.string());
}

void write_plot_script(const std::vector<CurveTable>& tables,
                       const std::filesystem::path& path) {
    std::vector<std::string> names;
    names.reserve(tables.size());
    for (const CurveTable& t : tables)
        names.push_back(table_filename(t));
    write_plot_script(tables, names, path);
}

void write_plot_script(const std::vector<CurveTable>& tables,
                       const std::vector<std::string>& data_files,
                       const std::filesystem::path& path) {
    if (tables.empty())
        throw std::domain_error("write_plot_script: need at least one table");
    if (tables.size() != data_files.size())
        throw std::domain_error("write_plot_script: one data file per table required");

    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("write_plot_script: cannot open " + path.string());

    out << "# gnuplot script; run from this directory: gnuplot " << path.filename().string()
        << "\n";
    out << "set terminal pngcairo size " << 600 * tables.size() << ",480\n";
    out << "set output '" << path.stem().string() << ".png'\n";
    out << "set grid\n";
    if (tables.size() > 1)
        out << "set multiplot layout 1," << tables.size() << "\n";
    for (std::size_t i = 0; i < tables.size(); ++i) {
        const CurveTable& t = tables[i];
        out << "set title '" << curve_name(t.id)
            << (t.params.regime == Regime::Focusing ? " (focusing)" : " (defocusing)") << "'\n";
        for (const Marker& m : t.markers)
            out << "set label at " << format17(m.x) << "," << format17(m.y)
                << " point pt 7 ps 1.5\n";
        out << "plot '" << data_files[i] << "' using 1:2 with lines notitle\n";
        out << "unset label\n";
    }
    if (tables.size() > 1)
        out << "unset multiplot\n";
    if (!out.flush())
        throw std::runtime_error("write_plot_script: write failed for " + path.string());
}

}  // namespace cnls
