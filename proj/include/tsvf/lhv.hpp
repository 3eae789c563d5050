#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tsvf/errors.hpp"

namespace tsvf::lhv {

enum class Axis : std::uint8_t { x, y };

/// Simultaneous +/-1 valuation of the x and y spin components of every
/// particle, the premise a local hidden variable theory must grant.
struct Assignment {
    std::vector<int> sx;
    std::vector<int> sy;

    int n_particles() const { return static_cast<int>(sx.size()); }

    /// Enumeration encoding: bit 2p is sx of particle p, bit 2p+1 its sy
    /// (particle 0 sx least significant); bit 0 means value +1.
    static Assignment from_index(std::uint64_t index, int n_particles);
    std::uint64_t to_index() const;
};

/// Product of the named spin components equals rhs (+1 or -1).
struct ParityConstraint {
    std::vector<std::pair<int, Axis>> factors;
    int rhs = 1;
};

struct SearchResult {
    bool satisfiable = false;
    std::optional<Assignment> witness;
    std::uint64_t assignments_checked = 0;
};

/// Unsatisfiability certificate: every (particle, axis) occurs an even
/// number of times across the constraints while the rhs product is -1,
/// so the product of all left-hand sides is +1 and no assignment works.
struct ParityCertificate {
    std::vector<std::pair<std::pair<int, Axis>, int>> factor_counts;
    int rhs_product = -1;
};

/// The four GHZ constraints for a chosen particle triplet: all-x with
/// rhs +1 plus the three two-y variants with rhs -1.
std::vector<ParityConstraint> ghz_constraints(int n_particles, const std::array<int, 3>& triplet);

bool check(const Assignment& assignment, std::span<const ParityConstraint> constraints);

/// Enumerates all 2^(2N) assignments (N <= 12). Returns the first witness
/// in index order when satisfiable.
SearchResult exhaustive_search(int n_particles, std::span<const ParityConstraint> constraints);

std::optional<ParityCertificate> parity_obstruction(std::span<const ParityConstraint> constraints);

}  // namespace tsvf::lhv
