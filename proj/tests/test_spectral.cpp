#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "eccspec/ecc_matrix.hpp"
#include "eccspec/errors.hpp"
#include "eccspec/spectral.hpp"
#include "test_support.hpp"

using namespace eccspec;
using doctest::Approx;
using eccspec::testing::path;
using eccspec::testing::random_connected_graph;

namespace {

// Independent reference eigensolver.
std::vector<double> reference_eigenvalues(const RealMatrix& m)
{
    Eigen::MatrixXd a(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c) a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + m.size());
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

RealMatrix random_symmetric(std::size_t n, std::mt19937& rng)
{
    std::uniform_int_distribution<int> dist(-5, 5);
    RealMatrix m(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = dist(rng);
    return m;
}

}  // namespace

TEST_CASE("symmetric_eigenvalues")
{
    SUBCASE("rotated diagonal")
    {
        const double th = 0.7;
        const double ph = -1.3;
        // Q = R_xy(th) * R_yz(ph); M = Q diag(3,1,-2) Q^T.
        RealMatrix rxy(3), ryz(3);
        rxy(0, 0) = std::cos(th), rxy(0, 1) = -std::sin(th), rxy(1, 0) = std::sin(th), rxy(1, 1) = std::cos(th), rxy(2, 2) = 1;
        ryz(0, 0) = 1, ryz(1, 1) = std::cos(ph), ryz(1, 2) = -std::sin(ph), ryz(2, 1) = std::sin(ph), ryz(2, 2) = std::cos(ph);
        const double diag[3] = {3, 1, -2};
        RealMatrix q(3), m(3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) q(i, j) += rxy(i, k) * ryz(k, j);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) m(i, j) += q(i, k) * diag[k] * q(j, k);
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) m(i, j) = m(j, i) = 0.5 * (m(i, j) + m(j, i));
        auto eig = symmetric_eigenvalues(m);
        REQUIRE(eig.size() == 3);
        CHECK(eig[0] == Approx(3).epsilon(1e-12));
        CHECK(eig[1] == Approx(1).epsilon(1e-12));
        CHECK(eig[2] == Approx(-2).epsilon(1e-12));
    }
    SUBCASE("K4 eccentricity matrix")
    {
        auto eig = symmetric_eigenvalues(eccentricity_matrix(complete(4)).values);
        CHECK(eig[0] == Approx(3));
        for (int i = 1; i < 4; ++i) CHECK(eig[static_cast<std::size_t>(i)] == Approx(-1));
    }
    SUBCASE("CS(2,2)")
    {
        auto eig = symmetric_eigenvalues(eccentricity_matrix(complete_split(2, 2)).values);
        CHECK(eig[0] == Approx((3 + std::sqrt(17.0)) / 2).epsilon(1e-12));
        CHECK(eig[1] == Approx((3 - std::sqrt(17.0)) / 2).epsilon(1e-12));
        CHECK(eig[2] == Approx(-1).epsilon(1e-12));
        CHECK(eig[3] == Approx(-2).epsilon(1e-12));
    }
    SUBCASE("zero and 1x1 matrices")
    {
        CHECK(symmetric_eigenvalues(RealMatrix(3)) == std::vector<double>{0, 0, 0});
        RealMatrix one(1, 4.5);
        CHECK(symmetric_eigenvalues(one) == std::vector<double>{4.5});
        CHECK(symmetric_eigenvalues(RealMatrix()).empty());
    }
    SUBCASE("non-symmetric input")
    {
        RealMatrix m(2);
        m(0, 1) = 1;
        CHECK_THROWS_AS(symmetric_eigenvalues(m), NonSymmetricInput);
    }
    SUBCASE("agrees with a reference solver")
    {
        std::mt19937 rng(42);
        for (int trial = 0; trial < 40; ++trial) {
            RealMatrix m = random_symmetric(1 + static_cast<std::size_t>(trial) % 25, rng);
            auto ours = symmetric_eigenvalues(m);
            auto ref = reference_eigenvalues(m);
            const double tol = 1e-10 * std::max(1.0, frobenius_norm(m));
            for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref[i]) <= tol);
        }
    }
    SUBCASE("trace identities on eccentricity matrices")
    {
        std::mt19937 rng(8);
        for (int trial = 0; trial < 30; ++trial) {
            auto e = eccentricity_matrix(random_connected_graph(2 + static_cast<std::size_t>(trial) % 30, 0.2, rng));
            auto eig = symmetric_eigenvalues(e.values);
            CHECK(eig.size() == e.size());
            CHECK(check_trace_identities(e.values, eig).ok);
        }
    }
}

TEST_CASE("group_spectrum")
{
    const std::vector<double> eig{3.0000000001, 2.9999999999, -6};
    auto s = group_spectrum(eig, 1e-8);
    REQUIRE(s.groups.size() == 2);
    CHECK(s.groups[0].value == Approx(3).epsilon(1e-15));
    CHECK(s.groups[0].multiplicity == 2);
    CHECK(s.groups[1].value == -6);
    CHECK(s.groups[1].multiplicity == 1);
    CHECK(s.dimension == 3);

    auto empty = group_spectrum(std::vector<double>{}, 1e-8);
    CHECK(empty.empty());
    CHECK(empty.groups.empty());

    auto star = spectrum_of(eccentricity_matrix(eccspec::star(4)).values);
    REQUIRE(star.groups.size() == 3);
    CHECK(star.groups[0].value == Approx(2 + std::sqrt(7.0)));
    CHECK(star.groups[1].value == Approx(2 - std::sqrt(7.0)));
    CHECK(star.groups[2].value == Approx(-2));
    CHECK(star.groups[2].multiplicity == 2);

    // Multiplicities sum to n.
    std::mt19937 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        auto e = eccentricity_matrix(random_connected_graph(10, 0.3, rng));
        auto sp = spectrum_of(e.values);
        int total = 0;
        for (const auto& g : sp.groups) total += g.multiplicity;
        CHECK(total == 10);
    }
}

TEST_CASE("energy and spectral radius")
{
    auto k4 = spectrum_of(eccentricity_matrix(complete(4)).values);
    CHECK(energy(k4) == Approx(6));
    CHECK(spectral_radius(k4) == Approx(3));

    auto c4 = spectrum_of(eccentricity_matrix(build_multipartite(MultipartiteSpec({2, 2}))).values);
    CHECK(energy(c4) == Approx(8));
    CHECK(spectral_radius(c4) == Approx(2));

    auto cs = spectrum_of(eccentricity_matrix(complete_split(2, 2)).values);
    CHECK(energy(cs) == Approx(3 + std::sqrt(17.0)).epsilon(1e-12));

    auto st = spectrum_of(eccentricity_matrix(star(4)).values);
    CHECK(spectral_radius(st) == Approx(2 + std::sqrt(7.0)).epsilon(1e-12));

    CHECK_THROWS_AS(spectral_radius(Spectrum{}), EmptySpectrum);

    SUBCASE("energy is twice the positive part and at least twice the radius")
    {
        std::mt19937 rng(23);
        for (int trial = 0; trial < 25; ++trial) {
            auto e = eccentricity_matrix(random_connected_graph(2 + static_cast<std::size_t>(trial) % 15, 0.35, rng));
            auto sp = spectrum_of(e.values);
            double positive = 0.0;
            for (double x : sp.eigenvalues) positive += std::max(x, 0.0);
            CHECK(energy(sp) == Approx(2 * positive).epsilon(1e-9));
            CHECK(energy(sp) >= 2 * spectral_radius(sp) - 1e-9);
            // Perron: the radius is the largest eigenvalue for these inputs.
            CHECK(spectral_radius(sp) == Approx(sp.eigenvalues.front()).epsilon(1e-9));
        }
    }
}

TEST_CASE("quotient_matrix")
{
    SUBCASE("complete split graph")
    {
        for (auto [p1, p2] : {std::pair{2, 2}, {4, 3}, {5, 1}, {3, 6}}) {
            auto e = eccentricity_matrix(complete_split(p1, p2));
            std::vector<std::vector<std::size_t>> part(2);
            for (std::size_t i = 0; i < static_cast<std::size_t>(p1 + p2); ++i) part[i < static_cast<std::size_t>(p1) ? 0 : 1].push_back(i);
            auto q = quotient_matrix(e.values, part);
            CHECK(q.equitable);
            CHECK(q.values(0, 0) == 2.0 * (p1 - 1));
            CHECK(q.values(0, 1) == p2);
            CHECK(q.values(1, 0) == p1);
            CHECK(q.values(1, 1) == p2 - 1);

            // Quotient eigenvalues sit inside the full spectrum.
            auto full = spectrum_of(e.values);
            const double tr = q.values(0, 0) + q.values(1, 1);
            const double det = q.values(0, 0) * q.values(1, 1) - q.values(0, 1) * q.values(1, 0);
            const double disc = std::sqrt(tr * tr - 4 * det);
            CHECK(full.contains((tr + disc) / 2, 1e-8));
            CHECK(full.contains((tr - disc) / 2, 1e-8));
        }
    }
    SUBCASE("singletons reproduce the matrix")
    {
        auto e = eccentricity_matrix(path(5)).values;
        std::vector<std::vector<std::size_t>> part;
        for (std::size_t i = 0; i < 5; ++i) part.push_back({i});
        auto q = quotient_matrix(e, part);
        CHECK(q.equitable);
        CHECK(q.values == e.cast<double>());
    }
    SUBCASE("P4 halves are not equitable")
    {
        auto q = quotient_matrix(eccentricity_matrix(path(4)).values, {{0, 1}, {2, 3}});
        CHECK_FALSE(q.equitable);
        CHECK(q.values(0, 1) == Approx(3.5));
    }
    SUBCASE("invalid partitions")
    {
        auto e = eccentricity_matrix(path(4)).values;
        CHECK_THROWS_AS(quotient_matrix(e, {{0, 1}, {2}}), InvalidPartition);
        CHECK_THROWS_AS(quotient_matrix(e, {{0, 1}, {1, 2, 3}}), InvalidPartition);
        CHECK_THROWS_AS(quotient_matrix(e, {{0, 1, 2, 3}, {}}), InvalidPartition);
        CHECK_THROWS_AS(quotient_matrix(e, {{0, 1, 2, 4}}), InvalidPartition);
    }
}

TEST_CASE("abs_root_sum")
{
    CHECK(abs_root_sum(5, 6) == 5);
    CHECK(abs_root_sum(4, 4) == 4);
    // Split quadratic at p1 = 5, p2 = 4: x^2 - 11x + 4.
    const double b = 2 * 5 + 4 - 3;
    const double c = 5 * 4 - 2 * 5 - 2 * 4 + 2;
    const double r = std::sqrt(b * b - 4 * c);
    CHECK(abs_root_sum(b, c) == Approx(std::abs((b + r) / 2) + std::abs((b - r) / 2)));
    // At p1 = 4, p2 = 3 the constant term vanishes, outside the c > 0 hypothesis.
    CHECK_THROWS_AS(abs_root_sum(8, 0), PreconditionViolated);
    CHECK_THROWS_AS(abs_root_sum(-1, 2), PreconditionViolated);
    CHECK_THROWS_AS(abs_root_sum(2, 2), PreconditionViolated);
}
