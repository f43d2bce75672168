#pragma once

#include <ostream>
#include <span>
#include <string>

#include "ptbox/berry.hpp"
#include "ptbox/observables.hpp"
#include "ptbox/static_spectrum.hpp"

namespace ptbox {

/// Shortest round-trippable text for a double (%.17g).
std::string format_number(double value);

/// Columns: t, L, Ldot, N, E_raw, E_over_N, F, x_avg, pop_<first>..pop_<first+N-1>.
void write_observables_csv(std::ostream& out, const ObservableSeries& series, int first_mode = 0);

/// Columns: n, E_n, A_n.
void write_spectrum_csv(std::ostream& out, std::span<const StaticEigenstate> states);

/// Columns: n, re_gamma_analytic, im_gamma_analytic, re_gamma_numeric, im_gamma_numeric, discrepancy.
void write_berry_csv(std::ostream& out, std::span<const BerryPhaseResult> results);

} // namespace ptbox
