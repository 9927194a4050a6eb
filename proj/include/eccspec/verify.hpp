#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "eccspec/closed_form.hpp"
#include "eccspec/graph.hpp"

namespace eccspec {

/// One failed comparison.
struct Violation {
    std::string spec;
    std::string check;
    std::string expected;
    std::string actual;
};

/// An extremal graph found by exhaustive search.
struct Witness {
    std::string spec;
    double value = 0.0;
    bool unique = true;
};

struct VerificationReport {
    std::string theorem;
    int n_min = 0;
    int n_max = 0;
    int cases = 0;
    double max_dev = 0.0;
    std::vector<Violation> violations;
    std::map<std::string, Witness> witnesses;
    /// Findings that are reported but never fail the run.
    std::vector<std::string> notes;

    bool pass() const { return violations.empty(); }

    void add_violation(std::string spec, std::string check, double expected, double actual);
    void record_deviation(double dev);
    /// Appends other's cases, violations, witnesses and notes; widens the n range.
    void merge(const VerificationReport& other);
};

/// {theorem, n, n_min, cases, max_dev, violations[], witnesses{}, notes[], pass}
nlohmann::json to_json(const VerificationReport& report);

struct VerifyOptions {
    /// Clustering tolerance for numeric spectra; <= 0 picks 1e-8 max(1, ||M||).
    double group_tol = 0.0;
    /// Eigenvalue agreement tolerance between closed form and numerics.
    double eig_tol = 1e-8;
    ClosedFormOptions closed;
};

/// Every partition of n in non-increasing order, largest first part first.
/// With connected_only the single-part partition [n] is dropped.
std::vector<MultipartiteSpec> enumerate_partitions(int n, bool connected_only = false);

/// Closed-form spectra against the numeric eigensolver for every connected
/// spec of n, plus the complement identity on specs with all parts >= 2, the
/// quotient containment on split specs, and the trace identities of every
/// numeric spectrum.
VerificationReport verify_closed_forms(int n, const VerifyOptions& opts = {});

/// 2 A(complement(G)) == eccentricity matrix, entrywise, for all-parts->=2 specs.
VerificationReport verify_complement_identity(int n);

/// Radius bound and its unique extremal graph K_{n-1,1}.
VerificationReport verify_radius_bound(int n, const VerifyOptions& opts = {});

/// Energy bounds, the extremal graphs, and an audit of the claimed minimizers
/// K_n and CS(2, n-2).
VerificationReport verify_energy_bounds(int n, const VerifyOptions& opts = {});

VerificationReport verify_bounds_and_extremals(int n, const VerifyOptions& opts = {});

/// Product spectra of K_{k,..,k} x K_h against the antipodal closed form for
/// k in 2..n_max.
VerificationReport verify_product_spectra(int n_max, const VerifyOptions& opts = {});

/// The K_{n,n} x K_2 versus K_{n+i,n,n,n-i} pairs for n in 2..n_max, and
/// equal energy of all-parts->=2 specs sharing n and p.
VerificationReport verify_equienergetic(int n_max, const VerifyOptions& opts = {});

/// Runs a per-n verifier over n_min..n_max and merges the reports.
template <typename Fn>
VerificationReport verify_range(int n_min, int n_max, Fn&& per_n)
{
    VerificationReport total = per_n(n_min);
    for (int n = n_min + 1; n <= n_max; ++n) total.merge(per_n(n));
    return total;
}

}  // namespace eccspec
