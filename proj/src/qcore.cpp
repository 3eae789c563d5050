#include "tsvf/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace tsvf {

namespace {

using Mat2 = std::array<cplx, 4>;

Mat2 mat2_mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat2_adjoint(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

void check_finite(const cplx& v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error("non-finite amplitude");
    }
}

void validate_operator(const OperatorSum& op, int n_sites) {
    if (op.terms.empty()) {
        throw InvalidOperator("OperatorSum has no terms");
    }
    for (const auto& term : op.terms) {
        for (std::size_t i = 0; i < term.factors.size(); ++i) {
            const int site = term.factors[i].site;
            if (site < 0 || site >= n_sites) {
                throw DimensionMismatch("factor site " + std::to_string(site) +
                                        " out of range for n_sites=" + std::to_string(n_sites));
            }
            for (std::size_t j = i + 1; j < term.factors.size(); ++j) {
                if (term.factors[j].site == site) {
                    throw InvalidOperator("two factors share site " + std::to_string(site));
                }
            }
        }
    }
}

// In-place action of a 2x2 matrix on one site of an amplitude vector.
void apply_local(std::vector<cplx>& amps, int n_sites, int site, const Mat2& m) {
    const std::size_t stride = std::size_t{1} << site;
    const std::size_t dim = std::size_t{1} << n_sites;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
        for (std::size_t low = 0; low < stride; ++low) {
            const std::size_t i0 = base + low;
            const std::size_t i1 = i0 + stride;
            const cplx a0 = amps[i0];
            const cplx a1 = amps[i1];
            amps[i0] = m[0] * a0 + m[1] * a1;
            amps[i1] = m[2] * a0 + m[3] * a1;
        }
    }
}

}  // namespace

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const cplx& a : amps) s += std::norm(a);
    return s;
}

double StateVector::norm() const { return std::sqrt(norm_sq()); }

OperatorSum OperatorSum::identity() {
    OperatorSum op;
    op.terms.push_back(OperatorTerm{});
    return op;
}

OperatorSum OperatorSum::single(const LocalOperator& lop) {
    OperatorSum op;
    op.terms.push_back(OperatorTerm{cplx{1, 0}, {lop}});
    return op;
}

OperatorSum OperatorSum::product(std::vector<LocalOperator> factors) {
    OperatorSum op;
    op.terms.push_back(OperatorTerm{cplx{1, 0}, std::move(factors)});
    return op;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& rhs) {
    terms.insert(terms.end(), rhs.terms.begin(), rhs.terms.end());
    return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& rhs) {
    for (const auto& term : rhs.terms) {
        terms.push_back(term);
        terms.back().coeff *= -1.0;
    }
    return *this;
}

OperatorSum& OperatorSum::operator*=(const cplx& scale) {
    for (auto& term : terms) term.coeff *= scale;
    return *this;
}

OperatorSum operator+(OperatorSum lhs, const OperatorSum& rhs) { return lhs += rhs; }
OperatorSum operator-(OperatorSum lhs, const OperatorSum& rhs) { return lhs -= rhs; }
OperatorSum operator*(const cplx& scale, OperatorSum op) { return op *= scale; }

bool operator==(const LocalOperator& a, const LocalOperator& b) {
    return a.site == b.site && a.m == b.m;
}
bool operator==(const OperatorTerm& a, const OperatorTerm& b) {
    return a.coeff == b.coeff && a.factors == b.factors;
}
bool operator==(const OperatorSum& a, const OperatorSum& b) { return a.terms == b.terms; }

LocalOperator pauli_x(int site) { return {{cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}}, site}; }
LocalOperator pauli_y(int site) { return {{cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0}}, site}; }
LocalOperator pauli_z(int site) { return {{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{-1, 0}}, site}; }
LocalOperator local_identity(int site) {
    return {{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}, site};
}
LocalOperator projector_up(int site) {
    return {{cplx{1, 0}, cplx{0, 0}, cplx{0, 0}, cplx{0, 0}}, site};
}
LocalOperator projector_down(int site) {
    return {{cplx{0, 0}, cplx{0, 0}, cplx{0, 0}, cplx{1, 0}}, site};
}

LocalOperator local_in_mapped_basis(int site, const SiteUnitary& map, const std::array<cplx, 4>& m) {
    return {mat2_mul(mat2_adjoint(map), mat2_mul(m, map)), site};
}

StateVector make_state(int n_sites, std::span<const std::pair<std::size_t, cplx>> entries) {
    if (n_sites < 1) throw BadN("n_sites must be >= 1");
    if (n_sites > kMaxSites) throw TooLarge("n_sites > " + std::to_string(kMaxSites));

    StateVector s;
    s.n_sites = n_sites;
    s.amps.assign(std::size_t{1} << n_sites, cplx{0, 0});

    double max_abs = 0.0;
    for (const auto& [index, amp] : entries) {
        if (index >= s.dim()) {
            throw IndexOutOfRange("basis index " + std::to_string(index) + " >= 2^n_sites");
        }
        check_finite(amp);
        s.amps[index] += amp;
        max_abs = std::max(max_abs, std::abs(amp));
    }

    const double nrm = s.norm();
    if (nrm <= 1e-14 * max_abs || nrm == 0.0) {
        throw ZeroVector("entries cancel to the zero vector");
    }
    for (cplx& a : s.amps) a /= nrm;
    return s;
}

StateVector make_state(int n_sites, std::initializer_list<std::pair<std::size_t, cplx>> entries) {
    return make_state(n_sites, std::span<const std::pair<std::size_t, cplx>>(entries.begin(), entries.size()));
}

cplx inner(const StateVector& bra, const StateVector& ket) {
    if (bra.n_sites != ket.n_sites) {
        throw DimensionMismatch("inner product of states with different n_sites");
    }
    cplx acc{0, 0};
    for (std::size_t i = 0; i < bra.amps.size(); ++i) {
        acc += std::conj(bra.amps[i]) * ket.amps[i];
    }
    return acc;
}

StateVector apply(const OperatorSum& op, const StateVector& s) {
    validate_operator(op, s.n_sites);

    StateVector out;
    out.n_sites = s.n_sites;
    out.amps.assign(s.dim(), cplx{0, 0});

    std::vector<cplx> scratch;
    for (const auto& term : op.terms) {
        scratch = s.amps;
        for (const auto& factor : term.factors) {
            apply_local(scratch, s.n_sites, factor.site, factor.m);
        }
        for (std::size_t i = 0; i < scratch.size(); ++i) {
            out.amps[i] += term.coeff * scratch[i];
        }
    }
    return out;
}

StateVector site_basis_change(const StateVector& s, int site, const SiteUnitary& u) {
    if (site < 0 || site >= s.n_sites) {
        throw DimensionMismatch("basis-change site out of range");
    }
    const Mat2 uu = mat2_mul(u, mat2_adjoint(u));
    const double dev = std::max(std::max(std::abs(uu[0] - cplx{1, 0}), std::abs(uu[3] - cplx{1, 0})),
                                std::max(std::abs(uu[1]), std::abs(uu[2])));
    if (dev > kUnitaryTol) {
        throw NotUnitary("basis map is not unitary within 1e-12");
    }
    StateVector out = s;
    apply_local(out.amps, out.n_sites, site, u);
    return out;
}

Eigen::MatrixXcd dense_matrix(const OperatorSum& op, int n_sites) {
    if (n_sites > kMaxDenseSites) {
        throw TooLarge("dense path capped at n_sites <= " + std::to_string(kMaxDenseSites));
    }
    if (n_sites < 1) throw BadN("n_sites must be >= 1");
    validate_operator(op, n_sites);

    const std::size_t dim = std::size_t{1} << n_sites;
    Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                                  static_cast<Eigen::Index>(dim));

    for (const auto& term : op.terms) {
        // Columns differ from the row only at factor sites; all other
        // sites contribute identity.
        const std::size_t f = term.factors.size();
        std::size_t mask = 0;
        for (const auto& factor : term.factors) mask |= std::size_t{1} << factor.site;

        for (std::size_t row = 0; row < dim; ++row) {
            for (std::size_t sub = 0; sub < (std::size_t{1} << f); ++sub) {
                std::size_t col = row & ~mask;
                cplx val = term.coeff;
                for (std::size_t k = 0; k < f; ++k) {
                    const auto& factor = term.factors[k];
                    const std::size_t col_bit = (sub >> k) & 1;
                    const std::size_t row_bit = (row >> factor.site) & 1;
                    col |= col_bit << factor.site;
                    val *= factor.m[row_bit * 2 + col_bit];
                }
                mat(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) += val;
            }
        }
    }
    return mat;
}

Eigen::MatrixXcd SpectralDecomposition::projector(std::size_t i) const {
    const auto& basis = spaces.at(i).basis;
    return basis * basis.adjoint();
}

double SpectralDecomposition::min_eigenvalue() const { return spaces.front().value; }
double SpectralDecomposition::max_eigenvalue() const { return spaces.back().value; }

cplx SpectralDecomposition::selection_amplitude(std::size_t i, const StateVector& post,
                                                const StateVector& pre) const {
    if (post.n_sites != n_sites || pre.n_sites != n_sites) {
        throw DimensionMismatch("selection amplitude with mismatched n_sites");
    }
    const auto& basis = spaces.at(i).basis;
    const Eigen::VectorXcd post_v = to_eigen(post);
    const Eigen::VectorXcd pre_v = to_eigen(pre);
    return (post_v.adjoint() * basis * (basis.adjoint() * pre_v)).value();
}

SpectralDecomposition eigendecompose(const OperatorSum& op, int n_sites) {
    Eigen::MatrixXcd mat = dense_matrix(op, n_sites);

    const double herm_dev = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > kHermitianTol) {
        throw NotHermitian("operator deviates from Hermitian by " + std::to_string(herm_dev));
    }
    mat = 0.5 * (mat + mat.adjoint().eval());

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
    if (solver.info() != Eigen::Success) {
        throw Error("eigensolver failed to converge");
    }
    const Eigen::VectorXd values = solver.eigenvalues();  // ascending
    const Eigen::MatrixXcd vectors = solver.eigenvectors();

    const double scale = std::max(1.0, std::max(std::abs(values(0)), std::abs(values(values.size() - 1))));
    const double group_tol = 1e-8 * scale;

    SpectralDecomposition dec;
    dec.n_sites = n_sites;
    Eigen::Index begin = 0;
    while (begin < values.size()) {
        Eigen::Index end = begin + 1;
        while (end < values.size() && values(end) - values(end - 1) <= group_tol) ++end;
        SpectralDecomposition::Eigenspace space;
        space.value = values.segment(begin, end - begin).mean();
        space.basis = vectors.middleCols(begin, end - begin);
        dec.spaces.push_back(std::move(space));
        begin = end;
    }
    return dec;
}

Eigen::VectorXcd to_eigen(const StateVector& s) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(s.dim()));
    for (std::size_t i = 0; i < s.amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = s.amps[i];
    return v;
}

StateVector from_eigen(int n_sites, const Eigen::VectorXcd& v) {
    StateVector s;
    s.n_sites = n_sites;
    s.amps.assign(v.data(), v.data() + v.size());
    if (s.amps.size() != s.dim()) {
        throw DimensionMismatch("vector length is not 2^n_sites");
    }
    return s;
}

}  // namespace tsvf
