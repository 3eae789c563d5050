#include "tsvf/pointer.hpp"

#include <algorithm>
#include <cmath>

#include "tsvf/weak_values.hpp"

namespace tsvf {

namespace {

constexpr double kPi = 3.14159265358979323846;

double gaussian_amp(double x, double delta) {
    return std::pow(2.0 * kPi * delta * delta, -0.25) * std::exp(-x * x / (4.0 * delta * delta));
}

struct Shifts {
    std::vector<cplx> amplitudes;  // <post|P_i|pre>
    std::vector<double> positions; // g * o_i
    double max_abs_eigenvalue = 0.0;
};

Shifts selection_shifts(const TwoStateVector& tsv, const SpectralDecomposition& spectral, double g) {
    Shifts shifts;
    for (std::size_t i = 0; i < spectral.size(); ++i) {
        shifts.amplitudes.push_back(spectral.selection_amplitude(i, tsv.post, tsv.pre));
        shifts.positions.push_back(g * spectral.spaces[i].value);
        shifts.max_abs_eigenvalue = std::max(shifts.max_abs_eigenvalue, std::abs(spectral.spaces[i].value));
    }
    return shifts;
}

void validate_config(const PointerConfig& cfg, double max_abs_eigenvalue) {
    if (cfg.delta <= 0.0) throw BadParams("pointer spread delta must be positive");
    if (cfg.grid_points < 256) throw GridTooSmall("grid_points must be at least 256");
    const double needed = 6.0 * (cfg.delta + std::abs(cfg.g) * max_abs_eigenvalue);
    if (cfg.grid_halfwidth < needed) {
        throw GridTooSmall("grid_halfwidth " + std::to_string(cfg.grid_halfwidth) +
                           " below required " + std::to_string(needed));
    }
}

}  // namespace

PointerConfig auto_config(PointerConfig base, double g, double max_abs_eigenvalue) {
    base.g = g;
    const double needed = 6.0 * (base.delta + std::abs(g) * max_abs_eigenvalue);
    base.grid_halfwidth = std::max(base.grid_halfwidth, 1.1 * needed);
    // keep the spacing at or below delta/10
    const double spacing_target = base.delta / 10.0;
    int points = base.grid_points;
    while ((2.0 * base.grid_halfwidth) / (points - 1) > spacing_target && points < (1 << 22)) {
        points *= 2;
    }
    base.grid_points = points;
    return base;
}

PointerOutcome simulate_measurement(const TwoStateVector& tsv, const SpectralDecomposition& spectral,
                                    const PointerConfig& cfg) {
    const Shifts shifts = selection_shifts(tsv, spectral, cfg.g);
    validate_config(cfg, shifts.max_abs_eigenvalue);

    const int n = cfg.grid_points;
    const double h = 2.0 * cfg.grid_halfwidth / (n - 1);

    PointerOutcome out;
    out.grid_x.resize(n);
    out.wavefunction.resize(n);
    for (int j = 0; j < n; ++j) {
        const double x = -cfg.grid_halfwidth + j * h;
        out.grid_x[j] = x;
        cplx phi{0, 0};
        for (std::size_t i = 0; i < shifts.amplitudes.size(); ++i) {
            phi += shifts.amplitudes[i] * gaussian_amp(x - shifts.positions[i], cfg.delta);
        }
        out.wavefunction[j] = phi;
    }

    // Trapezoid quadrature; the integrand decays like a Gaussian well
    // inside the grid, so this converges spectrally.
    double w0 = 0.0, w1 = 0.0, w2 = 0.0;
    for (int j = 0; j < n; ++j) {
        const double density = std::norm(out.wavefunction[j]);
        const double weight = (j == 0 || j == n - 1) ? 0.5 * h : h;
        w0 += weight * density;
        w1 += weight * density * out.grid_x[j];
        w2 += weight * density * out.grid_x[j] * out.grid_x[j];
    }
    out.total_weight = w0;
    if (out.total_weight <= 1e-28) {
        throw PostSelectionImpossible("post-selected pointer carries no weight");
    }
    out.mean_x = w1 / w0;
    out.var_x = w2 / w0 - out.mean_x * out.mean_x;

    // <p> in closed form from the Gaussian superposition.
    cplx num_p{0, 0};
    cplx den_p{0, 0};
    const double four_d2 = 4.0 * cfg.delta * cfg.delta;
    for (std::size_t i = 0; i < shifts.amplitudes.size(); ++i) {
        for (std::size_t j = 0; j < shifts.amplitudes.size(); ++j) {
            const double d = shifts.positions[i] - shifts.positions[j];
            const double overlap = std::exp(-d * d / (2.0 * four_d2));
            const cplx cc = shifts.amplitudes[i] * std::conj(shifts.amplitudes[j]);
            den_p += cc * overlap;
            num_p += cc * overlap * cplx{0, -d / four_d2};
        }
    }
    out.mean_p = (num_p / den_p).real();
    return out;
}

std::vector<double> captured_weights(const PointerOutcome& outcome,
                                     const SpectralDecomposition& spectral, const PointerConfig& cfg) {
    std::vector<double> positions;
    for (const auto& space : spectral.spaces) positions.push_back(cfg.g * space.value);

    const int n = static_cast<int>(outcome.grid_x.size());
    const double h = outcome.grid_x[1] - outcome.grid_x[0];
    std::vector<double> mass(positions.size(), 0.0);
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
        const double x = outcome.grid_x[j];
        std::size_t nearest = 0;
        for (std::size_t i = 1; i < positions.size(); ++i) {
            if (std::abs(x - positions[i]) < std::abs(x - positions[nearest])) nearest = i;
        }
        const double weight = ((j == 0 || j == n - 1) ? 0.5 * h : h) * std::norm(outcome.wavefunction[j]);
        mass[nearest] += weight;
        total += weight;
    }
    for (double& m : mass) m /= total;
    return mass;
}

std::vector<SweepPoint> coupling_sweep(const TwoStateVector& tsv, const SpectralDecomposition& spectral,
                                       std::span<const double> gs, const PointerConfig& base) {
    std::vector<SweepPoint> points;
    points.reserve(gs.size());
    double max_abs = 0.0;
    for (const auto& space : spectral.spaces) max_abs = std::max(max_abs, std::abs(space.value));

    for (const double g : gs) {
        if (g == 0.0) throw BadParams("coupling sweep needs nonzero g");
        const PointerConfig cfg = auto_config(base, g, max_abs);
        const PointerOutcome outcome = simulate_measurement(tsv, spectral, cfg);
        points.push_back({g / cfg.delta, outcome.mean_x / g, outcome.mean_p});
    }
    return points;
}

AnomalyReport weak_value_anomaly_demo(const TwoStateVector& tsv, const OperatorSum& op,
                                      const PointerConfig& cfg) {
    const SpectralDecomposition spectral = eigendecompose(op, tsv.pre.n_sites);

    AnomalyReport report;
    report.eigenvalue_min = spectral.min_eigenvalue();
    report.eigenvalue_max = spectral.max_eigenvalue();
    report.weak_val = weak_value(tsv, op).value;

    const double g_weak = 1e-4 * cfg.delta;
    double max_abs = std::max(std::abs(report.eigenvalue_min), std::abs(report.eigenvalue_max));
    const PointerConfig weak_cfg = auto_config(cfg, g_weak, max_abs);
    report.weak_limit_mean_over_g = simulate_measurement(tsv, spectral, weak_cfg).mean_x / g_weak;

    const double re = report.weak_val.real();
    report.anomalous = re < report.eigenvalue_min - 1e-9 || re > report.eigenvalue_max + 1e-9;
    return report;
}

}  // namespace tsvf
