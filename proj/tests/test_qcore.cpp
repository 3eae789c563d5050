#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracle.hpp"
#include "tsvf/qcore.hpp"

using namespace tsvf;
using doctest::Approx;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

StateVector ghz(int n) {
    return make_state(n, {{std::size_t{0}, cplx{1, 0}}, {(std::size_t{1} << n) - 1, cplx{1, 0}}});
}

double max_amp_dev(const StateVector& a, const StateVector& b) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.amps.size(); ++i) {
        dev = std::max(dev, std::abs(a.amps[i] - b.amps[i]));
    }
    return dev;
}
}  // namespace

TEST_CASE("make_state basis states and normalization") {
    const StateVector up = make_state(1, {{std::size_t{0}, cplx{1, 0}}});
    CHECK(up.amps[0] == cplx{1, 0});
    CHECK(up.amps[1] == cplx{0, 0});

    const StateVector bell = make_state(2, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{3}, cplx{1, 0}}});
    CHECK(bell.amps[0].real() == Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(bell.amps[3].real() == Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(std::abs(bell.amps[1]) == 0.0);
    CHECK(std::abs(bell.amps[2]) == 0.0);

    const StateVector g = ghz(3);
    CHECK(g.norm() == Approx(1.0).epsilon(1e-13));
    int nonzero = 0;
    for (const auto& a : g.amps) {
        if (std::abs(a) > 0) ++nonzero;
    }
    CHECK(nonzero == 2);
    CHECK(std::abs(g.amps[0]) == Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(std::abs(g.amps[7]) == Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("make_state sums duplicate indices before normalizing") {
    const StateVector s =
        make_state(1, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{0}, cplx{1, 0}}, {std::size_t{1}, cplx{2, 0}}});
    CHECK(s.amps[0].real() == Approx(kInvSqrt2).epsilon(1e-14));
    CHECK(s.amps[1].real() == Approx(kInvSqrt2).epsilon(1e-14));
}

TEST_CASE("make_state error paths") {
    CHECK_THROWS_AS(make_state(1, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{0}, cplx{-1, 0}}}), ZeroVector);
    CHECK_THROWS_AS(make_state(1, {{std::size_t{2}, cplx{1, 0}}}), IndexOutOfRange);
    CHECK_THROWS_AS(make_state(0, {{std::size_t{0}, cplx{1, 0}}}), BadN);
    CHECK_THROWS_AS(make_state(21, {{std::size_t{0}, cplx{1, 0}}}), TooLarge);
}

TEST_CASE("inner products") {
    const StateVector up = make_state(1, {{std::size_t{0}, cplx{1, 0}}});
    const StateVector up_x = make_state(1, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{1}, cplx{1, 0}}});

    CHECK(inner(up, up) == cplx{1, 0});
    CHECK(inner(up_x, up).real() == Approx(kInvSqrt2).epsilon(1e-14));

    // Two particles in two boxes: (|AB>+|BA>+|BB>)/sqrt(3) against
    // (|A>-|B>)(|A>-|B>)/2. Expanding by hand: only |AB>, |BA>, |BB>
    // survive with bra weights -1/2, -1/2, +1/2, so the overlap is
    // (-1/2 - 1/2 + 1/2)/sqrt(3) = -1/(2 sqrt 3).
    const StateVector pre = make_state(
        2, {{std::size_t{1}, cplx{1, 0}}, {std::size_t{2}, cplx{1, 0}}, {std::size_t{3}, cplx{1, 0}}});
    const StateVector post = make_state(2, {{std::size_t{0}, cplx{1, 0}},
                                            {std::size_t{1}, cplx{-1, 0}},
                                            {std::size_t{2}, cplx{-1, 0}},
                                            {std::size_t{3}, cplx{1, 0}}});
    const cplx overlap = inner(post, pre);
    CHECK(std::abs(overlap) == Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-13));
    CHECK(overlap.real() == Approx(-1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-13));

    CHECK_THROWS_AS(inner(up, pre), DimensionMismatch);
}

TEST_CASE("inner conjugate symmetry on random states") {
    oracle::Rng rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(1, 5);
        const StateVector a = oracle::random_state(rng, n);
        const StateVector b = oracle::random_state(rng, n);
        const cplx ab = inner(a, b);
        const cplx ba = inner(b, a);
        CHECK(std::abs(ab - std::conj(ba)) <= 1e-14);
    }
}

TEST_CASE("apply: GHZ eigen-operator identities") {
    const StateVector g = ghz(3);

    const OperatorSum all_x = OperatorSum::product({pauli_x(0), pauli_x(1), pauli_x(2)});
    CHECK(max_amp_dev(apply(all_x, g), g) <= 1e-12);

    const OperatorSum xyy = OperatorSum::product({pauli_x(0), pauli_y(1), pauli_y(2)});
    StateVector minus_g = g;
    for (auto& a : minus_g.amps) a = -a;
    CHECK(max_amp_dev(apply(xyy, g), minus_g) <= 1e-12);

    CHECK(max_amp_dev(apply(OperatorSum::identity(), g), g) == 0.0);
}

TEST_CASE("apply: eigen-identities for N=3..10 and all sigma_y pairs") {
    for (int n = 3; n <= 10; ++n) {
        const StateVector g = ghz(n);

        std::vector<LocalOperator> xs;
        for (int k = 0; k < n; ++k) xs.push_back(pauli_x(k));
        CHECK(max_amp_dev(apply(OperatorSum::product(xs), g), g) <= 1e-12);

        StateVector minus_g = g;
        for (auto& a : minus_g.amps) a = -a;
        for (int k = 0; k < n; ++k) {
            for (int l = k + 1; l < n; ++l) {
                std::vector<LocalOperator> factors;
                for (int j = 0; j < n; ++j) {
                    if (j == k || j == l) {
                        factors.push_back(pauli_y(j));
                    } else {
                        factors.push_back(pauli_x(j));
                    }
                }
                CHECK(max_amp_dev(apply(OperatorSum::product(factors), g), minus_g) <= 1e-12);
            }
        }
    }
}

TEST_CASE("apply validates sites") {
    const StateVector up = make_state(1, {{std::size_t{0}, cplx{1, 0}}});
    CHECK_THROWS_AS(apply(OperatorSum::single(pauli_x(1)), up), DimensionMismatch);
    CHECK_THROWS_AS(apply(OperatorSum::product({pauli_x(0), pauli_z(0)}), up), InvalidOperator);
    CHECK_THROWS_AS(apply(OperatorSum{}, up), InvalidOperator);
}

TEST_CASE("apply agrees with the dense oracle on random operators") {
    oracle::Rng rng(777);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.integer(1, 8);
        const StateVector s = oracle::random_state(rng, n);
        const OperatorSum op = oracle::random_operator(rng, n, false);

        const StateVector fast = apply(op, s);
        const Eigen::VectorXcd via_lib = dense_matrix(op, n) * to_eigen(s);
        const Eigen::VectorXcd via_kron = oracle::kron_dense(op, n) * to_eigen(s);

        CHECK((to_eigen(fast) - via_lib).cwiseAbs().maxCoeff() <= 1e-10);
        CHECK((to_eigen(fast) - via_kron).cwiseAbs().maxCoeff() <= 1e-10);
    }
}

TEST_CASE("site_basis_change maps spin-y states to box labels") {
    // Rows of the map are <A| and <B| with A = up_y, B = down_y.
    const SiteUnitary y_map = {cplx{kInvSqrt2, 0}, cplx{0, -kInvSqrt2},
                               cplx{kInvSqrt2, 0}, cplx{0, kInvSqrt2}};

    const StateVector up_y = make_state(1, {{std::size_t{0}, cplx{1, 0}}, {std::size_t{1}, cplx{0, 1}}});
    const StateVector boxed = site_basis_change(up_y, 0, y_map);
    CHECK(std::abs(boxed.amps[0] - cplx{1, 0}) <= 1e-14);
    CHECK(std::abs(boxed.amps[1]) <= 1e-14);

    const StateVector up = make_state(1, {{std::size_t{0}, cplx{1, 0}}});
    CHECK(max_amp_dev(site_basis_change(up, 0, kIdentityMap), up) == 0.0);

    // x-basis map on |up_z>: amplitudes (<up_x|up_z>, <down_x|up_z>) = (1,1)/sqrt(2).
    const SiteUnitary x_map = {cplx{kInvSqrt2, 0}, cplx{kInvSqrt2, 0},
                               cplx{kInvSqrt2, 0}, cplx{-kInvSqrt2, 0}};
    const StateVector in_x = site_basis_change(up, 0, x_map);
    CHECK(std::abs(in_x.amps[0] - cplx{kInvSqrt2, 0}) <= 1e-14);
    CHECK(std::abs(in_x.amps[1] - cplx{kInvSqrt2, 0}) <= 1e-14);

    const SiteUnitary not_unitary = {cplx{1, 0}, cplx{1, 0}, cplx{0, 0}, cplx{1, 0}};
    CHECK_THROWS_AS(site_basis_change(up, 0, not_unitary), NotUnitary);
}

TEST_CASE("site_basis_change preserves norm on random states") {
    oracle::Rng rng(4242);
    const double theta = 0.7;
    const SiteUnitary rot = {cplx{std::cos(theta), 0}, cplx{std::sin(theta), 0},
                             cplx{-std::sin(theta), 0}, cplx{std::cos(theta), 0}};
    for (int trial = 0; trial < 10; ++trial) {
        const int n = rng.integer(1, 6);
        const StateVector s = oracle::random_state(rng, n);
        const StateVector t = site_basis_change(s, rng.integer(0, n - 1), rot);
        CHECK(t.norm() == Approx(1.0).epsilon(1e-13));
    }
}

TEST_CASE("dense_matrix small cases") {
    const Eigen::MatrixXcd z = dense_matrix(OperatorSum::single(pauli_z(0)), 1);
    CHECK(z(0, 0) == cplx{1, 0});
    CHECK(z(1, 1) == cplx{-1, 0});
    CHECK(z(0, 1) == cplx{0, 0});
    CHECK(z(1, 0) == cplx{0, 0});

    const Eigen::MatrixXcd pa = dense_matrix(OperatorSum::single(projector_up(0)), 1);
    CHECK(pa(0, 0) == cplx{1, 0});
    CHECK(pa(1, 1) == cplx{0, 0});

    // Product of sigma_x over three sites is the bit-complement permutation:
    // ones exactly on the anti-diagonal.
    const Eigen::MatrixXcd flip =
        dense_matrix(OperatorSum::product({pauli_x(0), pauli_x(1), pauli_x(2)}), 3);
    for (int r = 0; r < 8; ++r) {
        for (int c = 0; c < 8; ++c) {
            const cplx want = (c == 7 - r) ? cplx{1, 0} : cplx{0, 0};
            CHECK(std::abs(flip(r, c) - want) == 0.0);
        }
    }

    CHECK_THROWS_AS(dense_matrix(OperatorSum::identity(), 13), TooLarge);
}

TEST_CASE("dense_matrix matches the Kronecker oracle on random operators") {
    oracle::Rng rng(999);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = rng.integer(1, 6);
        const OperatorSum op = oracle::random_operator(rng, n, false);
        const Eigen::MatrixXcd a = dense_matrix(op, n);
        const Eigen::MatrixXcd b = oracle::kron_dense(op, n);
        CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("eigendecompose simple spectra") {
    const SpectralDecomposition sx = eigendecompose(OperatorSum::single(pauli_x(0)), 1);
    REQUIRE(sx.size() == 2);
    CHECK(sx.spaces[0].value == Approx(-1.0).epsilon(1e-12));
    CHECK(sx.spaces[1].value == Approx(1.0).epsilon(1e-12));
    CHECK(sx.spaces[0].basis.cols() == 1);
    CHECK(sx.spaces[1].basis.cols() == 1);

    const SpectralDecomposition pa = eigendecompose(OperatorSum::single(projector_up(0)), 1);
    REQUIRE(pa.size() == 2);
    CHECK(pa.spaces[0].value == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(pa.spaces[1].value == Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eigendecompose of P_A sigma_x on a spatial+spin particle") {
    // Spectrum {-1, 0, 0, +1}; the characteristic polynomial is
    // lambda^4 - lambda^2, checked through trace powers and determinant.
    const OperatorSum op = OperatorSum::product({projector_up(0), pauli_x(1)});
    const SpectralDecomposition dec = eigendecompose(op, 2);

    REQUIRE(dec.size() == 3);
    CHECK(dec.spaces[0].value == Approx(-1.0).epsilon(1e-12));
    CHECK(dec.spaces[1].value == Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(dec.spaces[2].value == Approx(1.0).epsilon(1e-12));
    CHECK(dec.spaces[0].basis.cols() == 1);
    CHECK(dec.spaces[1].basis.cols() == 2);
    CHECK(dec.spaces[2].basis.cols() == 1);

    const Eigen::MatrixXcd m = dense_matrix(op, 2);
    CHECK(std::abs(m.trace()) <= 1e-12);
    CHECK(std::abs((m * m).trace() - cplx{2, 0}) <= 1e-12);
    CHECK(std::abs((m * m * m).trace()) <= 1e-12);
    CHECK(std::abs((m * m * m * m).trace() - cplx{2, 0}) <= 1e-12);
    CHECK(std::abs(m.determinant()) <= 1e-12);
}

TEST_CASE("eigendecompose rejects non-Hermitian operators") {
    OperatorSum op = OperatorSum::single(pauli_x(0));
    op.terms[0].coeff = cplx{0, 1};
    CHECK_THROWS_AS(eigendecompose(op, 1), NotHermitian);
}

TEST_CASE("eigendecompose reconstructs random Hermitian operators") {
    oracle::Rng rng(2024);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.integer(1, 5);
        const OperatorSum op = oracle::random_operator(rng, n, true);
        const SpectralDecomposition dec = eigendecompose(op, n);
        const Eigen::MatrixXcd m = dense_matrix(op, n);

        Eigen::MatrixXcd rebuilt = Eigen::MatrixXcd::Zero(m.rows(), m.cols());
        for (std::size_t i = 0; i < dec.size(); ++i) {
            rebuilt += dec.spaces[i].value * dec.projector(i);
        }
        CHECK((rebuilt - m).cwiseAbs().maxCoeff() <= 1e-8);

        for (std::size_t i = 0; i < dec.size(); ++i) {
            const Eigen::MatrixXcd pi = dec.projector(i);
            CHECK((pi * pi - pi).cwiseAbs().maxCoeff() <= 1e-8);
            for (std::size_t j = i + 1; j < dec.size(); ++j) {
                CHECK((pi * dec.projector(j)).cwiseAbs().maxCoeff() <= 1e-8);
            }
            if (i + 1 < dec.size()) {
                CHECK(dec.spaces[i].value < dec.spaces[i + 1].value);
            }
        }
    }
}
