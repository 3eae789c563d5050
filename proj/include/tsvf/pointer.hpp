#pragma once

#include <span>
#include <vector>

#include "tsvf/qcore.hpp"
#include "tsvf/two_state.hpp"

namespace tsvf {

/// Von Neumann pointer: an initial Gaussian of position spread delta,
/// impulsively shifted by g times the measured eigenvalue. grid_halfwidth
/// must cover 6*(delta + |g|*max|eigenvalue|) so truncation is negligible.
struct PointerConfig {
    double delta = 1.0;
    double g = 0.01;
    double grid_halfwidth = 40.0;
    int grid_points = 8192;
};

/// Post-selected pointer wavefunction on the uniform grid, unnormalized;
/// position moments by quadrature, momentum mean from the analytic
/// Gaussian-superposition form.
struct PointerOutcome {
    std::vector<double> grid_x;
    std::vector<cplx> wavefunction;
    double total_weight = 0.0;
    double mean_x = 0.0;
    double var_x = 0.0;
    double mean_p = 0.0;
};

PointerOutcome simulate_measurement(const TwoStateVector& tsv, const SpectralDecomposition& spectral,
                                    const PointerConfig& cfg);

/// Fraction of |phi|^2 mass landing nearest to each eigenvalue's shift
/// g*o_i (in spectral order). In the strong-coupling regime these match
/// the ABL probabilities.
std::vector<double> captured_weights(const PointerOutcome& outcome,
                                     const SpectralDecomposition& spectral, const PointerConfig& cfg);

struct SweepPoint {
    double ratio = 0.0;  // g / delta
    double mean_x_over_g = 0.0;
    double mean_p = 0.0;
};

/// Pointer response across coupling strengths; mean_x/g approaches
/// Re(O_w) as g/delta -> 0 and mean_p approaches 2 g Var_p Im(O_w)
/// with Var_p = 1/(4 delta^2).
std::vector<SweepPoint> coupling_sweep(const TwoStateVector& tsv, const SpectralDecomposition& spectral,
                                       std::span<const double> gs, const PointerConfig& base);

struct AnomalyReport {
    double eigenvalue_min = 0.0;
    double eigenvalue_max = 0.0;
    cplx weak_val;
    double weak_limit_mean_over_g = 0.0;
    bool anomalous = false;
};

/// Shows a pointer reading outside the eigenvalue range: reports the
/// range, Re(O_w), the weak-limit pointer mean, and whether the weak
/// value escapes the spectrum by more than 1e-9.
AnomalyReport weak_value_anomaly_demo(const TwoStateVector& tsv, const OperatorSum& op,
                                      const PointerConfig& cfg);

/// Widens grid_halfwidth (and grid_points, keeping spacing fine relative
/// to delta) until the truncation invariant holds for this coupling.
PointerConfig auto_config(PointerConfig base, double g, double max_abs_eigenvalue);

}  // namespace tsvf
