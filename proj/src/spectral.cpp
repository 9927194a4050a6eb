#include "eccspec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "eccspec/errors.hpp"

namespace eccspec {

namespace {

constexpr int max_sweeps = 100;
constexpr double off_diagonal_rel_tol = 1e-12;

double off_diagonal_norm(const RealMatrix& a)
{
    double s = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c)
            if (r != c) s += a(r, c) * a(r, c);
    return std::sqrt(s);
}

// Zeroes a(p,q) with the rotation from Golub & Van Loan's sym.schur2.
void rotate(RealMatrix& a, std::size_t p, std::size_t q)
{
    const double apq = a(p, q);
    if (apq == 0.0) return;
    const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = c * akp - s * akq;
        a(k, q) = s * akp + c * akq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const double apk = a(p, k);
        const double aqk = a(q, k);
        a(p, k) = c * apk - s * aqk;
        a(q, k) = s * apk + c * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

bool Spectrum::contains(double x, double tol) const
{
    return std::any_of(groups.begin(), groups.end(),
                       [&](const SpectrumGroup& g) { return std::abs(g.value - x) <= tol; });
}

double frobenius_norm(const RealMatrix& m)
{
    double s = 0.0;
    for (std::size_t r = 0; r < m.size(); ++r)
        for (double x : m.row(r)) s += x * x;
    return std::sqrt(s);
}

std::vector<double> symmetric_eigenvalues(const RealMatrix& m)
{
    if (!m.is_symmetric()) throw NonSymmetricInput("eigensolver input is not symmetric");

    RealMatrix a = m;
    const std::size_t n = a.size();
    const double threshold = off_diagonal_rel_tol * frobenius_norm(m);

    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (++sweep > max_sweeps) throw ConvergenceFailure("Jacobi sweep cap reached");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, p, q);
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
}

std::vector<double> symmetric_eigenvalues(const IntMatrix& m)
{
    return symmetric_eigenvalues(m.cast<double>());
}

double default_group_tolerance(double matrix_norm)
{
    return 1e-8 * std::max(1.0, matrix_norm);
}

Spectrum group_spectrum(std::span<const double> eigenvalues, double tol)
{
    Spectrum s;
    s.eigenvalues.assign(eigenvalues.begin(), eigenvalues.end());
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
    s.dimension = s.eigenvalues.size();

    double sum = 0.0;
    int count = 0;
    for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
        const double x = s.eigenvalues[i];
        if (count > 0 && s.eigenvalues[i - 1] - x > tol) {
            s.groups.push_back({sum / count, count});
            sum = 0.0;
            count = 0;
        }
        sum += x;
        ++count;
    }
    if (count > 0) s.groups.push_back({sum / count, count});
    return s;
}

Spectrum spectrum_of(const IntMatrix& m, double tol)
{
    const RealMatrix real = m.cast<double>();
    const auto eig = symmetric_eigenvalues(real);
    return group_spectrum(eig, tol > 0.0 ? tol : default_group_tolerance(frobenius_norm(real)));
}

double energy(const Spectrum& s)
{
    double e = 0.0;
    for (const auto& g : s.groups) e += std::abs(g.value) * g.multiplicity;
    return e;
}

double spectral_radius(const Spectrum& s)
{
    if (s.empty()) throw EmptySpectrum();
    return std::max(std::abs(s.eigenvalues.front()), std::abs(s.eigenvalues.back()));
}

QuotientMatrix quotient_matrix(const IntMatrix& m, const std::vector<std::vector<std::size_t>>& partition)
{
    const std::size_t n = m.size();
    std::vector<char> seen(n, 0);
    std::size_t covered = 0;
    for (const auto& block : partition) {
        if (block.empty()) throw InvalidPartition("partition has an empty block");
        for (std::size_t i : block) {
            if (i >= n) throw InvalidPartition("partition index out of range");
            if (seen[i]) throw InvalidPartition("partition blocks overlap");
            seen[i] = 1;
            ++covered;
        }
    }
    if (covered != n) throw InvalidPartition("partition does not cover every index");

    const std::size_t k = partition.size();
    QuotientMatrix out{RealMatrix(k), {}, true};
    for (const auto& block : partition) out.block_sizes.push_back(block.size());
    for (std::size_t bi = 0; bi < k; ++bi) {
        for (std::size_t bj = 0; bj < k; ++bj) {
            long long total = 0;
            long long first_row = 0;
            for (std::size_t r = 0; r < partition[bi].size(); ++r) {
                long long row_sum = 0;
                for (std::size_t c : partition[bj]) row_sum += m(partition[bi][r], c);
                if (r == 0) first_row = row_sum;
                else if (row_sum != first_row) out.equitable = false;
                total += row_sum;
            }
            out.values(bi, bj) = static_cast<double>(total) / static_cast<double>(partition[bi].size());
        }
    }
    return out;
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q)
{
    const std::size_t k = q.values.size();
    RealMatrix sym(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double scale = std::sqrt(static_cast<double>(q.block_sizes[i]) / static_cast<double>(q.block_sizes[j]));
            sym(i, j) = q.values(i, j) * scale;
        }
    }
    // Exact for block sums of a symmetric matrix up to rounding in the scale.
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) sym(i, j) = sym(j, i) = 0.5 * (sym(i, j) + sym(j, i));
    return symmetric_eigenvalues(sym);
}

double abs_root_sum(double b, double c)
{
    if (b <= 0.0) throw PreconditionViolated("abs_root_sum needs b > 0");
    if (c <= 0.0) throw PreconditionViolated("abs_root_sum needs c > 0");
    if (b * b - 4.0 * c < 0.0) throw PreconditionViolated("abs_root_sum needs real roots");
    return b;
}

TraceCheck check_trace_identities(const IntMatrix& m, std::span<const double> eigenvalues)
{
    TraceCheck tc;
    double frob_sq = 0.0;
    for (std::size_t r = 0; r < m.size(); ++r)
        for (int x : m.row(r)) frob_sq += static_cast<double>(x) * x;
    const double sum = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0);
    const double sum_sq = std::transform_reduce(eigenvalues.begin(), eigenvalues.end(), 0.0, std::plus<>(),
                                                [](double x) { return x * x; });
    tc.trace_error = std::abs(sum - static_cast<double>(m.trace()));
    tc.frobenius_error = std::abs(sum_sq - frob_sq);
    tc.frobenius_sq = frob_sq;
    tc.ok = eigenvalues.size() == m.size() && tc.trace_error < 1e-9 * static_cast<double>(std::max<std::size_t>(m.size(), 1)) &&
            tc.frobenius_error <= 1e-8 * frob_sq;
    return tc;
}

}  // namespace eccspec
