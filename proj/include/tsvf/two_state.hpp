#pragma once

#include <vector>

#include "tsvf/qcore.hpp"

namespace tsvf {

/// Pre- and post-selected pair <post| |pre> describing a system between
/// two selections.
struct TwoStateVector {
    StateVector pre;
    StateVector post;
};

/// One weighted term alpha_i <post_i| |pre_i> of a generalized two-state
/// vector. States are kept exactly as constructed (possibly unnormalized);
/// weak values are ratios and do not care.
struct GeneralizedTerm {
    cplx alpha{1.0, 0.0};
    StateVector post;
    StateVector pre;
};

struct GeneralizedTwoStateVector {
    std::vector<GeneralizedTerm> terms;
};

}  // namespace tsvf
