#include "tsvf/weak_values.hpp"

#include <cmath>
#include <cstdio>

namespace tsvf {

namespace {

const SiteUnitary& map_for_site(std::span<const SiteUnitary> maps, int site) {
    if (maps.empty()) return kIdentityMap;
    return maps[static_cast<std::size_t>(site)];
}

std::string format_eigenvalue(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", value);
    return buf;
}

ABLResult probabilities_from_amplitudes(std::vector<std::pair<std::string, cplx>> amplitudes) {
    double total = 0.0;
    double max_abs = 0.0;
    for (const auto& [label, amp] : amplitudes) {
        total += std::norm(amp);
        max_abs = std::max(max_abs, std::abs(amp));
    }
    if (max_abs <= 1e-14) {
        throw ZeroDenominator("post-selection impossible given this measurement");
    }

    ABLResult result;
    result.denominator_weight = total;
    result.outcomes.reserve(amplitudes.size());
    for (auto& [label, amp] : amplitudes) {
        result.outcomes.emplace_back(std::move(label), std::norm(amp) / total);
    }
    return result;
}

}  // namespace

WeakValueResult weak_value(const TwoStateVector& tsv, const OperatorSum& op) {
    const cplx den = inner(tsv.post, tsv.pre);
    if (std::abs(den) <= kSelectionTol) {
        throw OrthogonalSelection("post-selection orthogonal to pre-selection");
    }
    const cplx num = inner(tsv.post, apply(op, tsv.pre));
    return {num / den, num, den};
}

WeakValueResult weak_value_generalized(const GeneralizedTwoStateVector& gtsv, const OperatorSum& op) {
    if (gtsv.terms.empty()) {
        throw Error("generalized two-state vector has no terms");
    }
    const int n_sites = gtsv.terms.front().pre.n_sites;
    cplx num{0, 0};
    cplx den{0, 0};
    for (const auto& term : gtsv.terms) {
        if (term.pre.n_sites != n_sites || term.post.n_sites != n_sites) {
            throw DimensionMismatch("generalized terms disagree on n_sites");
        }
        den += term.alpha * inner(term.post, term.pre);
        num += term.alpha * inner(term.post, apply(op, term.pre));
    }
    if (std::abs(den) <= kSelectionTol) {
        throw OrthogonalSelection("generalized selection denominator vanishes");
    }
    return {num / den, num, den};
}

ABLResult abl_probabilities(const TwoStateVector& tsv, std::span<const OperatorSum> projectors,
                            std::span<const std::string> labels) {
    if (projectors.empty()) {
        throw IncompleteSet("no projectors given");
    }
    const int n = tsv.pre.n_sites;
    const std::size_t dim = std::size_t{1} << n;

    // Validate against the dense oracle: Hermitian, idempotent, complete.
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& projector : projectors) {
        const Eigen::MatrixXcd mat = dense_matrix(projector, n);
        if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
            throw NotProjector("projector is not Hermitian within 1e-10");
        }
        if ((mat * mat - mat).cwiseAbs().maxCoeff() > 1e-10) {
            throw NotProjector("operator is not idempotent within 1e-10");
        }
        sum += mat;
    }
    if ((sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-10) {
        throw IncompleteSet("projectors do not sum to the identity within 1e-10");
    }

    std::vector<std::pair<std::string, cplx>> amplitudes;
    for (std::size_t j = 0; j < projectors.size(); ++j) {
        std::string label = j < labels.size() ? labels[j] : "P" + std::to_string(j);
        amplitudes.emplace_back(std::move(label), inner(tsv.post, apply(projectors[j], tsv.pre)));
    }
    return probabilities_from_amplitudes(std::move(amplitudes));
}

ABLResult abl_from_spectral(const TwoStateVector& tsv, const SpectralDecomposition& spectral) {
    std::vector<std::pair<std::string, cplx>> amplitudes;
    for (std::size_t i = 0; i < spectral.size(); ++i) {
        amplitudes.emplace_back(format_eigenvalue(spectral.spaces[i].value),
                                spectral.selection_amplitude(i, tsv.post, tsv.pre));
    }
    return probabilities_from_amplitudes(std::move(amplitudes));
}

std::optional<double> check_certainty(const TwoStateVector& tsv, const OperatorSum& op) {
    const SpectralDecomposition spectral = eigendecompose(op, tsv.pre.n_sites);
    const ABLResult abl = abl_from_spectral(tsv, spectral);
    for (std::size_t i = 0; i < abl.outcomes.size(); ++i) {
        if (abl.outcomes[i].second >= 1.0 - kCertaintyTol) {
            return spectral.spaces[i].value;
        }
    }
    return std::nullopt;
}

LocalOperator box_projector(Box box, int site, const SiteUnitary& map) {
    std::array<cplx, 4> diag{};
    diag[box == Box::A ? 0 : 3] = cplx{1, 0};
    return local_in_mapped_basis(site, map, diag);
}

OperatorSum box_number_projector(int n_sites, Box box, int count,
                                 std::span<const SiteUnitary> box_maps) {
    if (count < 0 || count > n_sites) {
        throw IndexOutOfRange("particle count out of range");
    }
    const Box other = box == Box::A ? Box::B : Box::A;
    OperatorSum op;
    for (std::size_t subset = 0; subset < (std::size_t{1} << n_sites); ++subset) {
        if (__builtin_popcountll(subset) != count) continue;
        OperatorTerm term;
        for (int site = 0; site < n_sites; ++site) {
            const bool in_box = (subset >> site) & 1;
            term.factors.push_back(
                box_projector(in_box ? box : other, site, map_for_site(box_maps, site)));
        }
        op.terms.push_back(std::move(term));
    }
    return op;
}

WeakValueResult interaction_energy_weak_value(const TwoStateVector& tsv, double v,
                                              InteractionVariant variant,
                                              std::span<const SiteUnitary> box_maps) {
    const int n = tsv.pre.n_sites;
    if (n < 2) throw BadN("interaction energy needs at least two particles");

    OperatorSum op;
    if (variant == InteractionVariant::same_box) {
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                for (const Box box : {Box::A, Box::B}) {
                    OperatorTerm term;
                    term.coeff = cplx{v, 0};
                    term.factors = {box_projector(box, k, map_for_site(box_maps, k)),
                                    box_projector(box, l, map_for_site(box_maps, l))};
                    op.terms.push_back(std::move(term));
                }
            }
        }
    } else {
        for (int k = 0; k < n; ++k) {
            for (int l = 0; l < n; ++l) {
                if (k == l) continue;
                OperatorTerm term;
                term.coeff = cplx{v, 0};
                term.factors = {box_projector(Box::A, k, map_for_site(box_maps, k)),
                                box_projector(Box::B, l, map_for_site(box_maps, l))};
                op.terms.push_back(std::move(term));
            }
        }
    }
    return weak_value(tsv, op);
}

std::pair<WeakValueResult, WeakValueResult> projector_sum_and_product(
    const TwoStateVector& tsv, Box box, std::span<const SiteUnitary> box_maps) {
    const int n = tsv.pre.n_sites;

    OperatorSum sum;
    OperatorTerm product_term;
    for (int site = 0; site < n; ++site) {
        const LocalOperator projector = box_projector(box, site, map_for_site(box_maps, site));
        sum.terms.push_back(OperatorTerm{cplx{1, 0}, {projector}});
        product_term.factors.push_back(projector);
    }
    OperatorSum product;
    product.terms.push_back(std::move(product_term));

    return {weak_value(tsv, sum), weak_value(tsv, product)};
}

}  // namespace tsvf
