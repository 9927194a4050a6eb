#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eccspec/graph.hpp"
#include "eccspec/spectral.hpp"

namespace eccspec {

/// (rational + coefficient * sqrt(radicand)) / denominator, kept in lowest
/// terms with a square-free radicand.
struct QuadraticSurd {
    long long rational = 0;
    long long coefficient = 0;
    long long radicand = 0;
    long long denominator = 1;

    static QuadraticSurd integer(long long v) { return {v, 0, 0, 1}; }
    /// (b + sign * sqrt(disc)) / 2, normalized.
    static QuadraticSurd quadratic_root(long long b, long long disc, int sign);

    double value() const;
    std::string to_string() const;

    friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct ClosedFormEntry {
    double value = 0.0;
    std::optional<QuadraticSurd> exact;  // empty for roots found numerically
    int multiplicity = 0;
};

enum class SpectrumCase { AllPartsAtLeastTwo, CompleteGraph, SplitMixed, ProductAntipodal };

const char* to_string(SpectrumCase c);

/// Sign branch of the split-case energy argument, decided by the constant
/// term c of x^2 - b x + c: Case 1 when the roots have opposite signs (c < 0).
enum class EnergyBranch { NotApplicable, OppositeSigns, SameSign };

const char* to_string(EnergyBranch b);

struct ClosedFormParameters {
    int n = 0;
    int p = 0;
    // Split case: p1 vertices in parts >= 2 (large_parts of them), p2 in
    // singleton parts, and the quadratic x^2 - b x + c for p1 = sum of large
    // parts, in the single-large-part form.
    int p1 = 0;
    int p2 = 0;
    int large_parts = 0;
    long long split_b = 0;
    long long split_c = 0;
    /// The split quadratic describes the spectrum only with one large part.
    bool split_quadratic_applies = false;
    bool below_scope = false;  // n < 4
    // Strong-product case.
    int m = 0;
    int a = 0;
    int d = 0;
    int n_h = 0;
};

struct ClosedFormSpectrum {
    std::vector<ClosedFormEntry> entries;  // sorted descending by value
    SpectrumCase case_tag = SpectrumCase::AllPartsAtLeastTwo;
    ClosedFormParameters params;

    int total_multiplicity() const;
    double trace() const;
    EnergyBranch energy_branch() const;
    /// Expands multiplicities into a grouped Spectrum.
    Spectrum to_spectrum() const;
};

/// Fault-injection hooks for exercising the verification harness.
struct ClosedFormOptions {
    long long split_constant_offset = 0;
};

/// Exact eccentricity spectrum of K_{n_1,...,n_p}.
///
/// * all parts >= 2: 2(n_i - 1) once per part, -2 with multiplicity n - p;
/// * all parts 1 (K_n): n - 1 once, -1 with multiplicity n - 1;
/// * otherwise, with p1 vertices in the large parts and p2 singletons:
///   -2 with multiplicity p1 - (#large parts), -1 with multiplicity p2 - 1,
///   2(s - 1) with multiplicity c_s - 1 for each large size s occurring c_s
///   times, and the roots of the equitable quotient over {large classes of
///   each size, singletons}. With one large part this is
///   x^2 - (2p1 + p2 - 3) x + p1 p2 - 2p1 - 2p2 + 2.
///
/// Throws DisconnectedSpec for a single part with n >= 2 and
/// PreconditionViolated for n = 1.
ClosedFormSpectrum multipartite_spectrum_closed(const MultipartiteSpec& spec, const ClosedFormOptions& opts = {});

/// The single-quadratic split formula: one quadratic in p1 = sum of
/// large parts, -2 with multiplicity p1 - 1 and -1 with multiplicity p2 - 1,
/// whatever the number of large parts. Used to audit where it breaks down.
ClosedFormSpectrum split_formula_single_quadratic(const MultipartiteSpec& spec);

double multipartite_energy_closed(const MultipartiteSpec& spec, const ClosedFormOptions& opts = {});

/// (n - 2) + sqrt(n^2 - 3n + 3); attained only by the star K_{n-1,1}.
double radius_upper_bound(int n, bool allow_below_scope = false);

struct EnergyBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// [2n - 2, 2(n - 2) + 2 sqrt(n^2 - 3n + 3)].
EnergyBounds energy_bounds(int n, bool allow_below_scope = false);

/// Spectrum of G x H (strong product) for an a-antipodal G of order m and
/// diameter d, and a connected H of order n_h with diam(H) < d:
/// d n_h (a-1) x m/a, 0 x m(n_h - 1), -d n_h x (m/a)(a-1).
ClosedFormSpectrum antipodal_product_spectrum(int m, int a, int d, int n_h);

struct EquienergeticPair {
    Graph product;               // K_{n,n} x K_2
    MultipartiteSpec partition;  // [n+i, n, n, n-i]
    Graph multipartite;
    double predicted_energy = 0.0;  // 16(n - 1)
    /// i = 0, or n >= 4 as the usual family requires.
    bool within_usual_range = false;
};

/// Throws PreconditionViolated unless n >= 2 and 0 <= i <= n - 2.
EquienergeticPair equienergetic_pair(int n, int i);

}  // namespace eccspec
