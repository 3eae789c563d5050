#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tsvf/qcore.hpp"
#include "tsvf/two_state.hpp"

namespace tsvf {

inline constexpr double kSelectionTol = 1e-12;   // |<post|pre>| below this is orthogonal
inline constexpr double kCertaintyTol = 1e-10;   // ABL probability >= 1 - tol is certain

/// Weak value with the two halves of the defining ratio kept for
/// diagnostics: value = numerator / denominator.
struct WeakValueResult {
    cplx value;
    cplx numerator;
    cplx denominator;
};

/// Conditional outcome distribution of one intermediate strong measurement
/// on a pre- and post-selected system.
struct ABLResult {
    std::vector<std::pair<std::string, double>> outcomes;
    double denominator_weight = 0.0;

    double probability(std::size_t i) const { return outcomes.at(i).second; }
};

/// <post|O|pre> / <post|pre>. Throws OrthogonalSelection when the
/// denominator magnitude is at most 1e-12.
WeakValueResult weak_value(const TwoStateVector& tsv, const OperatorSum& op);

/// sum_i alpha_i <post_i|O|pre_i> / sum_i alpha_i <post_i|pre_i>; equals
/// weak_value when there is a single unit-weight term.
WeakValueResult weak_value_generalized(const GeneralizedTwoStateVector& gtsv, const OperatorSum& op);

/// Conditional probabilities for a complete set of orthogonal projectors:
/// p(j) proportional to |<post|P_j|pre>|^2. Validates that every operator
/// is a projector (NotProjector) and that they sum to the identity
/// (IncompleteSet); throws ZeroDenominator when every selection amplitude
/// is at most 1e-14.
ABLResult abl_probabilities(const TwoStateVector& tsv, std::span<const OperatorSum> projectors,
                            std::span<const std::string> labels = {});

/// Same rule over the eigenspaces of a decomposed observable; outcome
/// labels are the eigenvalues.
ABLResult abl_from_spectral(const TwoStateVector& tsv, const SpectralDecomposition& spectral);

/// Eigendecomposes O and returns the eigenvalue whose ABL probability is
/// at least 1 - 1e-10, if any.
std::optional<double> check_certainty(const TwoStateVector& tsv, const OperatorSum& op);

enum class Box { A, B };

enum class InteractionVariant {
    same_box,          // sum_{n<m} V (PA_n PA_m + PB_n PB_m)
    literal_cross_box  // sum_{n!=m} V PA_n PB_m, exactly as printed
};

/// P_A or P_B at `site`, conjugated through the site's box dictionary.
LocalOperator box_projector(Box box, int site, const SiteUnitary& map = kIdentityMap);

/// Projector onto "exactly `count` particles in `box`" over all sites.
OperatorSum box_number_projector(int n_sites, Box box, int count,
                                 std::span<const SiteUnitary> box_maps = {});

/// Weak value of the pairwise interaction energy over N box particles.
/// Both operator readings are available; see InteractionVariant.
WeakValueResult interaction_energy_weak_value(const TwoStateVector& tsv, double v,
                                              InteractionVariant variant,
                                              std::span<const SiteUnitary> box_maps = {});

/// ((sum_n P_box_n)_w, (prod_n P_box_n)_w) for an N-box two-state vector.
std::pair<WeakValueResult, WeakValueResult> projector_sum_and_product(
    const TwoStateVector& tsv, Box box, std::span<const SiteUnitary> box_maps = {});

}  // namespace tsvf
