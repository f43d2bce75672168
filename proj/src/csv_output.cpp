#include "ptbox/csv_output.hpp"

#include <cstdio>

namespace ptbox {

std::string format_number(double value)
{
    char buf[40];
    // -0 (e.g. Ldot at t = 0) prints as 0 so diffs between equivalent runs stay clean.
    std::snprintf(buf, sizeof buf, "%.17g", value == 0.0 ? 0.0 : value);
    return buf;
}

void write_observables_csv(std::ostream& out, const ObservableSeries& series, int first_mode)
{
    const std::size_t modes = series.empty() ? 0 : series.front().populations.size();
    out << "t,L,Ldot,N,E_raw,E_over_N,F,x_avg";
    for (std::size_t k = 0; k < modes; ++k)
        out << ",pop_" << first_mode + static_cast<int>(k);
    out << '\n';
    for (const auto& row : series) {
        out << format_number(row.t) << ',' << format_number(row.length) << ',' << format_number(row.length_rate)
            << ',' << format_number(row.norm) << ',' << format_number(row.energy) << ','
            << format_number(row.energy_over_norm) << ',' << format_number(row.force) << ','
            << format_number(row.x_avg);
        for (double p : row.populations)
            out << ',' << format_number(p);
        out << '\n';
    }
}

void write_spectrum_csv(std::ostream& out, std::span<const StaticEigenstate> states)
{
    out << "n,E_n,A_n\n";
    for (const auto& s : states)
        out << s.n << ',' << format_number(s.energy) << ',' << format_number(s.normalization) << '\n';
}

void write_berry_csv(std::ostream& out, std::span<const BerryPhaseResult> results)
{
    out << "n,re_gamma_analytic,im_gamma_analytic,re_gamma_numeric,im_gamma_numeric,discrepancy\n";
    for (const auto& r : results)
        out << r.n << ',' << format_number(r.gamma_analytic.real()) << ',' << format_number(r.gamma_analytic.imag())
            << ',' << format_number(r.gamma_numeric.real()) << ',' << format_number(r.gamma_numeric.imag()) << ','
            << format_number(r.discrepancy) << '\n';
}

} // namespace ptbox
