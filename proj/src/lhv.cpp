#include "tsvf/lhv.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

namespace tsvf::lhv {

namespace {

void validate_constraints(std::span<const ParityConstraint> constraints, int n_particles) {
    for (const auto& constraint : constraints) {
        if (constraint.rhs != 1 && constraint.rhs != -1) {
            throw Error("constraint rhs must be +1 or -1");
        }
        for (std::size_t i = 0; i < constraint.factors.size(); ++i) {
            const int particle = constraint.factors[i].first;
            if (particle < 0 || (n_particles >= 0 && particle >= n_particles)) {
                throw IndexOutOfRange("constraint references particle " + std::to_string(particle));
            }
            for (std::size_t j = i + 1; j < constraint.factors.size(); ++j) {
                if (constraint.factors[j].first == particle) {
                    throw DuplicateSite("constraint repeats particle " + std::to_string(particle));
                }
            }
        }
    }
}

std::uint64_t factor_bit(int particle, Axis axis) {
    return std::uint64_t{1} << (2 * particle + (axis == Axis::y ? 1 : 0));
}

}  // namespace

Assignment Assignment::from_index(std::uint64_t index, int n_particles) {
    Assignment a;
    a.sx.resize(n_particles);
    a.sy.resize(n_particles);
    for (int p = 0; p < n_particles; ++p) {
        a.sx[p] = ((index >> (2 * p)) & 1) ? -1 : 1;
        a.sy[p] = ((index >> (2 * p + 1)) & 1) ? -1 : 1;
    }
    return a;
}

std::uint64_t Assignment::to_index() const {
    std::uint64_t index = 0;
    for (int p = 0; p < n_particles(); ++p) {
        if (sx[p] < 0) index |= std::uint64_t{1} << (2 * p);
        if (sy[p] < 0) index |= std::uint64_t{1} << (2 * p + 1);
    }
    return index;
}

std::vector<ParityConstraint> ghz_constraints(int n_particles, const std::array<int, 3>& triplet) {
    const auto [s, t, r] = triplet;
    if (n_particles < 3) throw BadTriplet("GHZ constraints need at least three particles");
    for (const int p : triplet) {
        if (p < 0 || p >= n_particles) throw BadTriplet("triplet particle out of range");
    }
    if (s == t || s == r || t == r) throw BadTriplet("triplet particles must be distinct");

    std::vector<ParityConstraint> constraints;

    ParityConstraint all_x;
    all_x.rhs = 1;
    for (int p = 0; p < n_particles; ++p) all_x.factors.emplace_back(p, Axis::x);
    constraints.push_back(std::move(all_x));

    const std::array<std::pair<int, int>, 3> pairs = {{{s, t}, {s, r}, {t, r}}};
    for (const auto& [a, b] : pairs) {
        ParityConstraint c;
        c.rhs = -1;
        for (int p = 0; p < n_particles; ++p) {
            c.factors.emplace_back(p, (p == a || p == b) ? Axis::y : Axis::x);
        }
        constraints.push_back(std::move(c));
    }
    return constraints;
}

bool check(const Assignment& assignment, std::span<const ParityConstraint> constraints) {
    validate_constraints(constraints, assignment.n_particles());
    for (const auto& constraint : constraints) {
        int product = 1;
        for (const auto& [particle, axis] : constraint.factors) {
            product *= (axis == Axis::x) ? assignment.sx[particle] : assignment.sy[particle];
        }
        if (product != constraint.rhs) return false;
    }
    return true;
}

SearchResult exhaustive_search(int n_particles, std::span<const ParityConstraint> constraints) {
    if (n_particles > 12) throw TooLarge("exhaustive search capped at 12 particles");
    if (n_particles < 1) throw BadN("need at least one particle");
    validate_constraints(constraints, n_particles);

    // Compile each constraint into a bitmask; the product over an
    // assignment is the popcount parity of (index & mask).
    std::vector<std::pair<std::uint64_t, int>> compiled;
    compiled.reserve(constraints.size());
    for (const auto& constraint : constraints) {
        std::uint64_t mask = 0;
        for (const auto& [particle, axis] : constraint.factors) mask |= factor_bit(particle, axis);
        compiled.emplace_back(mask, constraint.rhs);
    }

    const std::uint64_t total = std::uint64_t{1} << (2 * n_particles);
    for (std::uint64_t index = 0; index < total; ++index) {
        bool ok = true;
        for (const auto& [mask, rhs] : compiled) {
            const int sign = (std::popcount(index & mask) & 1) ? -1 : 1;
            if (sign != rhs) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return {true, Assignment::from_index(index, n_particles), index + 1};
        }
    }
    return {false, std::nullopt, total};
}

std::optional<ParityCertificate> parity_obstruction(std::span<const ParityConstraint> constraints) {
    validate_constraints(constraints, -1);

    std::map<std::pair<int, Axis>, int> counts;
    int rhs_product = 1;
    for (const auto& constraint : constraints) {
        rhs_product *= constraint.rhs;
        for (const auto& factor : constraint.factors) ++counts[factor];
    }
    if (rhs_product != -1) return std::nullopt;
    for (const auto& [factor, count] : counts) {
        if (count % 2 != 0) return std::nullopt;
    }

    ParityCertificate certificate;
    certificate.rhs_product = rhs_product;
    certificate.factor_counts.assign(counts.begin(), counts.end());
    return certificate;
}

}  // namespace tsvf::lhv
