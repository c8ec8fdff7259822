#pragma once

#include <iosfwd>
#include <span>

#include "casimir/cli/config.hpp"
#include "casimir/cli/output.hpp"
#include "casimir/sweep.hpp"

namespace casimir::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitNonConvergence = 2 };

/// Force or pressure curve for the configured materials. The low section uses
/// the dc-conducting description when low_freq_model is b.
lifshitz::Curve run_sweep(const SweepConfig& config);

/// Runs the sweep under both low-frequency models and compares their gap with
/// the zero-frequency closed form. Needs a low material with a finite static
/// permittivity and a probe that conducts at zero frequency.
ComparisonReport compare_models(const SweepConfig& config);

PermittivityTable permittivity_table(const materials::PermittivityModel& model, std::span<const double> xi_grid);

/// Entry point shared by the executable and the tests. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
