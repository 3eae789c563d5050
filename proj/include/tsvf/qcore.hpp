#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tsvf/errors.hpp"

namespace tsvf {

using cplx = std::complex<double>;

inline constexpr double kNormTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-12;
inline constexpr double kHermitianTol = 1e-10;
inline constexpr int kMaxSites = 20;        // structured path
inline constexpr int kMaxDenseSites = 12;   // dense oracle path

/// Pure state of n_sites two-level systems, stored over the computational
/// basis. Site k is bit k of the basis index (site 0 = least significant
/// bit); bit value 0 means |up_z> (box A under a declared basis map), 1
/// means |down_z> (box B).
///
/// States built through make_state are unit-norm; operator application
/// returns unnormalized vectors on purpose.
struct StateVector {
    int n_sites = 0;
    std::vector<cplx> amps;

    std::size_t dim() const { return std::size_t{1} << n_sites; }
    double norm() const;
    double norm_sq() const;
};

/// A 2x2 operator acting on a single site. Matrix is row-major:
/// m[0]=<0|M|0>, m[1]=<0|M|1>, m[2]=<1|M|0>, m[3]=<1|M|1>.
struct LocalOperator {
    std::array<cplx, 4> m{};
    int site = 0;
};

/// One tensor-product term of an OperatorSum. An empty factor list is the
/// identity. Factors must act on pairwise distinct sites.
struct OperatorTerm {
    cplx coeff{1.0, 0.0};
    std::vector<LocalOperator> factors;
};

/// Weighted sum of tensor products of single-site operators, e.g. a Pauli
/// string, a sum of box projectors, or a pairwise interaction energy.
struct OperatorSum {
    std::vector<OperatorTerm> terms;

    static OperatorSum identity();
    static OperatorSum single(const LocalOperator& op);
    static OperatorSum product(std::vector<LocalOperator> factors);

    OperatorSum& operator+=(const OperatorSum& rhs);
    OperatorSum& operator-=(const OperatorSum& rhs);
    OperatorSum& operator*=(const cplx& scale);
};

OperatorSum operator+(OperatorSum lhs, const OperatorSum& rhs);
OperatorSum operator-(OperatorSum lhs, const OperatorSum& rhs);
OperatorSum operator*(const cplx& scale, OperatorSum op);
bool operator==(const LocalOperator& a, const LocalOperator& b);
bool operator==(const OperatorTerm& a, const OperatorTerm& b);
bool operator==(const OperatorSum& a, const OperatorSum& b);

// Single-site building blocks, all in the storage basis of the site.
LocalOperator pauli_x(int site);
LocalOperator pauli_y(int site);
LocalOperator pauli_z(int site);
LocalOperator local_identity(int site);
LocalOperator projector_up(int site);    // |0><0|, box A in box storage
LocalOperator projector_down(int site);  // |1><1|, box B in box storage

/// 2x2 change-of-basis matrix for one site; row 0 is the bra of the new
/// basis state labeled 0 (box A), row 1 the bra of state 1 (box B),
/// both expressed in the computational basis.
using SiteUnitary = std::array<cplx, 4>;

inline constexpr SiteUnitary kIdentityMap = {cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}};

/// Conjugates a 2x2 operator written in the mapped basis back into the
/// storage basis: returns U^dagger M U at `site`.
LocalOperator local_in_mapped_basis(int site, const SiteUnitary& map, const std::array<cplx, 4>& m);

/// Normalized superposition of computational basis states. Duplicate
/// indices are summed before normalization. Throws ZeroVector when the
/// entries cancel, IndexOutOfRange for indices >= 2^n_sites.
StateVector make_state(int n_sites, std::span<const std::pair<std::size_t, cplx>> entries);
StateVector make_state(int n_sites, std::initializer_list<std::pair<std::size_t, cplx>> entries);

/// <bra|ket>; conjugate-linear in bra.
cplx inner(const StateVector& bra, const StateVector& ket);

/// op|s>, unnormalized. O(terms * factors * 2^N).
StateVector apply(const OperatorSum& op, const StateVector& s);

/// Applies a single-site unitary (rows = new-basis bras). Norm preserving;
/// throws NotUnitary when the matrix fails U U^dagger = 1 within 1e-12.
StateVector site_basis_change(const StateVector& s, int site, const SiteUnitary& u);

/// Dense-matrix realization of an OperatorSum; the slow oracle against
/// which the structured path is checked. Capped at n_sites <= 12.
Eigen::MatrixXcd dense_matrix(const OperatorSum& op, int n_sites);

/// Spectral decomposition of a Hermitian OperatorSum: distinct eigenvalues
/// in ascending order, each with an orthonormal basis of its eigenspace
/// (projector = basis * basis^dagger).
struct SpectralDecomposition {
    struct Eigenspace {
        double value = 0.0;
        Eigen::MatrixXcd basis;  // dim x rank, orthonormal columns
    };

    int n_sites = 0;
    std::vector<Eigenspace> spaces;

    std::size_t size() const { return spaces.size(); }
    Eigen::MatrixXcd projector(std::size_t i) const;
    double min_eigenvalue() const;
    double max_eigenvalue() const;

    /// <post|P_i|pre> for eigenspace i.
    cplx selection_amplitude(std::size_t i, const StateVector& post, const StateVector& pre) const;
};

SpectralDecomposition eigendecompose(const OperatorSum& op, int n_sites);

Eigen::VectorXcd to_eigen(const StateVector& s);
StateVector from_eigen(int n_sites, const Eigen::VectorXcd& v);

}  // namespace tsvf
