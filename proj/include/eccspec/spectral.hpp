#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "eccspec/matrix.hpp"

namespace eccspec {

/// One distinct eigenvalue and how often it occurs.
struct SpectrumGroup {
    double value = 0.0;
    int multiplicity = 0;
};

/// Eigenvalues sorted descending, plus their tolerance clustering.
struct Spectrum {
    std::vector<double> eigenvalues;
    std::vector<SpectrumGroup> groups;
    std::size_t dimension = 0;

    bool empty() const { return eigenvalues.empty(); }
    /// True if some group lies within tol of x.
    bool contains(double x, double tol) const;
};

double frobenius_norm(const RealMatrix& m);

/// All eigenvalues of a symmetric matrix, sorted descending, by cyclic Jacobi
/// rotations. Stops once the off-diagonal Frobenius norm drops below
/// 1e-12 * ||m||_F; throws ConvergenceFailure after 100 sweeps.
std::vector<double> symmetric_eigenvalues(const RealMatrix& m);
std::vector<double> symmetric_eigenvalues(const IntMatrix& m);

/// 1e-8 * max(1, ||m||_F).
double default_group_tolerance(double matrix_norm);

/// Merges neighbouring eigenvalues closer than tol; each group reports the
/// mean of its members.
Spectrum group_spectrum(std::span<const double> eigenvalues, double tol);

/// Eigenvalues of an integer matrix grouped at tol, or at the default
/// tolerance when tol <= 0.
Spectrum spectrum_of(const IntMatrix& m, double tol = 0.0);

/// Sum of |value| * multiplicity over the groups.
double energy(const Spectrum& s);

/// max(|largest|, |smallest|). Throws EmptySpectrum.
double spectral_radius(const Spectrum& s);

struct QuotientMatrix {
    RealMatrix values;
    std::vector<std::size_t> block_sizes;
    bool equitable = false;
};

/// Block-average quotient of m for a partition of its index set. The
/// equitable flag is decided exactly: every block must have constant row sums.
/// Throws InvalidPartition unless the blocks are non-empty, disjoint and cover
/// 0..n-1.
QuotientMatrix quotient_matrix(const IntMatrix& m, const std::vector<std::vector<std::size_t>>& partition);

/// Eigenvalues of a quotient of a symmetric matrix, sorted descending. The
/// quotient is similar to the symmetric matrix with entries
/// q_ij * sqrt(|B_i| / |B_j|), which is what gets diagonalized.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

/// |r1| + |r2| for the real roots of x^2 - b x + c with b, c > 0. Both roots
/// are positive there, so the sum is b.
double abs_root_sum(double b, double c);

/// Trace and Frobenius identities between a matrix and its computed spectrum.
struct TraceCheck {
    double trace_error = 0.0;      // |sum(l) - tr(M)|
    double frobenius_error = 0.0;  // |sum(l^2) - ||M||_F^2|
    double frobenius_sq = 0.0;
    bool ok = false;
};

/// ok iff trace_error < 1e-9 * n and frobenius_error <= 1e-8 * ||M||_F^2.
TraceCheck check_trace_identities(const IntMatrix& m, std::span<const double> eigenvalues);

}  // namespace eccspec
