#include "eccspec/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "eccspec/errors.hpp"

namespace eccspec {

namespace {

ClosedFormEntry exact_entry(const QuadraticSurd& s, int mult)
{
    return {s.value(), s, mult};
}

ClosedFormEntry integer_entry(long long v, int mult)
{
    return exact_entry(QuadraticSurd::integer(v), mult);
}

// Drops empty entries, merges coincident values and sorts descending.
void canonicalize(std::vector<ClosedFormEntry>& entries)
{
    std::erase_if(entries, [](const ClosedFormEntry& e) { return e.multiplicity <= 0; });
    std::sort(entries.begin(), entries.end(),
              [](const ClosedFormEntry& x, const ClosedFormEntry& y) { return x.value > y.value; });
    std::vector<ClosedFormEntry> merged;
    for (auto& e : entries) {
        if (!merged.empty() && std::abs(merged.back().value - e.value) <= 1e-12 * std::max(1.0, std::abs(e.value))) {
            merged.back().multiplicity += e.multiplicity;
            if (merged.back().exact != e.exact) merged.back().exact.reset();
        } else {
            merged.push_back(e);
        }
    }
    entries = std::move(merged);
}

// Both roots of x^2 - b x + c.
void push_quadratic_roots(std::vector<ClosedFormEntry>& out, long long b, long long c)
{
    const long long disc = b * b - 4 * c;
    if (disc < 0) throw PreconditionViolated("quadratic has complex roots");
    out.push_back(exact_entry(QuadraticSurd::quadratic_root(b, disc, +1), 1));
    out.push_back(exact_entry(QuadraticSurd::quadratic_root(b, disc, -1), 1));
}

// Eigenvalues of the symmetrized arrow matrix [diag(poles), z; z^T, corner]
// with distinct poles. They are the roots of
//   f(x) = x - corner - sum z_i^2 / (x - pole_i),
// one strictly between consecutive poles and one beyond each end, and f is
// increasing on every such interval, so plain bisection finds each.
std::vector<double> arrow_eigenvalues(std::vector<double> poles, std::vector<double> z_sq, double corner)
{
    std::vector<std::size_t> order(poles.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return poles[i] < poles[j]; });
    std::vector<double> d, w;
    for (std::size_t i : order) {
        d.push_back(poles[i]);
        w.push_back(z_sq[i]);
    }
    const double z_norm = std::sqrt(std::accumulate(w.begin(), w.end(), 0.0));
    const double lo = std::min(d.front(), corner) - z_norm - 1.0;
    const double hi = std::max(d.back(), corner) + z_norm + 1.0;

    auto f = [&](double x) {
        double s = x - corner;
        for (std::size_t i = 0; i < d.size(); ++i) s -= w[i] / (x - d[i]);
        return s;
    };

    std::vector<double> bounds{lo};
    bounds.insert(bounds.end(), d.begin(), d.end());
    bounds.push_back(hi);

    std::vector<double> roots;
    for (std::size_t k = 0; k + 1 < bounds.size(); ++k) {
        double a = bounds[k];
        double b = bounds[k + 1];
        for (int it = 0; it < 400; ++it) {
            const double mid = 0.5 * (a + b);
            if (mid <= a || mid >= b) break;
            (f(mid) < 0.0 ? a : b) = mid;
        }
        roots.push_back(0.5 * (a + b));
    }
    return roots;
}

}  // namespace

QuadraticSurd QuadraticSurd::quadratic_root(long long b, long long disc, int sign)
{
    if (disc < 0) throw PreconditionViolated("negative discriminant");
    // Pull square factors out of the radicand.
    long long coef = 1;
    long long rad = disc;
    for (long long f = 2; f * f <= rad; ++f) {
        while (rad % (f * f) == 0) {
            rad /= f * f;
            coef *= f;
        }
    }
    QuadraticSurd s;
    if (rad == 1 || rad == 0) {
        s.rational = b + sign * coef * (rad == 1 ? 1 : 0);
        s.coefficient = 0;
        s.radicand = 0;
    } else {
        s.rational = b;
        s.coefficient = sign * coef;
        s.radicand = rad;
    }
    s.denominator = 2;
    long long g = std::gcd(std::gcd(s.rational, s.coefficient), s.denominator);
    if (g > 1) {
        s.rational /= g;
        s.coefficient /= g;
        s.denominator /= g;
    }
    return s;
}

double QuadraticSurd::value() const
{
    const double root = radicand > 0 ? std::sqrt(static_cast<double>(radicand)) : 0.0;
    return (static_cast<double>(rational) + static_cast<double>(coefficient) * root) / static_cast<double>(denominator);
}

std::string QuadraticSurd::to_string() const
{
    std::string num;
    if (coefficient == 0 || radicand == 0) {
        num = std::to_string(rational);
    } else {
        const long long mag = std::llabs(coefficient);
        std::string surd = (mag == 1 ? std::string() : std::to_string(mag) + "*") + "sqrt(" + std::to_string(radicand) + ")";
        if (rational == 0)
            num = (coefficient < 0 ? "-" : "") + surd;
        else
            num = std::to_string(rational) + (coefficient < 0 ? "-" : "+") + surd;
    }
    if (denominator == 1) return num;
    const bool compound = coefficient != 0 && radicand != 0 && rational != 0;
    return (compound ? "(" + num + ")" : num) + "/" + std::to_string(denominator);
}

const char* to_string(SpectrumCase c)
{
    switch (c) {
    case SpectrumCase::AllPartsAtLeastTwo: return "ALL_PARTS_GE_2";
    case SpectrumCase::CompleteGraph: return "COMPLETE_GRAPH";
    case SpectrumCase::SplitMixed: return "SPLIT_MIXED";
    case SpectrumCase::ProductAntipodal: return "PRODUCT_THM5";
    }
    return "?";
}

const char* to_string(EnergyBranch b)
{
    switch (b) {
    case EnergyBranch::NotApplicable: return "n/a";
    case EnergyBranch::OppositeSigns: return "opposite-signs";
    case EnergyBranch::SameSign: return "same-sign";
    }
    return "?";
}

int ClosedFormSpectrum::total_multiplicity() const
{
    int total = 0;
    for (const auto& e : entries) total += e.multiplicity;
    return total;
}

double ClosedFormSpectrum::trace() const
{
    double t = 0.0;
    for (const auto& e : entries) t += e.value * e.multiplicity;
    return t;
}

EnergyBranch ClosedFormSpectrum::energy_branch() const
{
    if (case_tag != SpectrumCase::SplitMixed) return EnergyBranch::NotApplicable;
    return params.split_c < 0 ? EnergyBranch::OppositeSigns : EnergyBranch::SameSign;
}

Spectrum ClosedFormSpectrum::to_spectrum() const
{
    Spectrum s;
    for (const auto& e : entries) {
        s.groups.push_back({e.value, e.multiplicity});
        s.eigenvalues.insert(s.eigenvalues.end(), static_cast<std::size_t>(e.multiplicity), e.value);
    }
    s.dimension = s.eigenvalues.size();
    return s;
}

namespace {

ClosedFormParameters base_parameters(const MultipartiteSpec& spec)
{
    ClosedFormParameters params;
    params.n = spec.order();
    params.p = spec.part_count();
    params.below_scope = spec.order() < 4;
    for (int part : spec.parts()) {
        if (part >= 2) {
            params.p1 += part;
            ++params.large_parts;
        } else {
            params.p2 += part;
        }
    }
    return params;
}

void require_connected_spec(const MultipartiteSpec& spec)
{
    if (spec.part_count() == 1) {
        if (spec.order() == 1) throw PreconditionViolated("closed-form spectra need n >= 2");
        throw DisconnectedSpec("single-part spec " + spec.to_string() + " has no edges");
    }
}

}  // namespace

ClosedFormSpectrum multipartite_spectrum_closed(const MultipartiteSpec& spec, const ClosedFormOptions& opts)
{
    require_connected_spec(spec);
    ClosedFormSpectrum out;
    out.params = base_parameters(spec);
    auto& prm = out.params;
    auto& entries = out.entries;

    if (spec.all_parts_at_least_two()) {
        out.case_tag = SpectrumCase::AllPartsAtLeastTwo;
        for (int part : spec.parts()) entries.push_back(integer_entry(2LL * (part - 1), 1));
        entries.push_back(integer_entry(-2, prm.n - prm.p));
    } else if (spec.all_parts_one()) {
        out.case_tag = SpectrumCase::CompleteGraph;
        entries.push_back(integer_entry(prm.n - 1, 1));
        entries.push_back(integer_entry(-1, prm.n - 1));
    } else {
        out.case_tag = SpectrumCase::SplitMixed;
        const long long p1 = prm.p1;
        const long long p2 = prm.p2;
        prm.split_b = 2 * p1 + p2 - 3;
        prm.split_c = p1 * p2 - 2 * p1 - 2 * p2 + 2;
        prm.split_quadratic_applies = prm.large_parts == 1;

        entries.push_back(integer_entry(-2, prm.p1 - prm.large_parts));
        entries.push_back(integer_entry(-1, prm.p2 - 1));

        if (prm.split_quadratic_applies) {
            prm.split_c += opts.split_constant_offset;
            push_quadratic_roots(entries, prm.split_b, prm.split_c);
        } else {
            // Large classes of equal size s collapse to one quotient row;
            // the differences between them give 2(s - 1) directly.
            std::map<int, int> size_count;
            for (int part : spec.parts())
                if (part >= 2) ++size_count[part];
            for (auto [size, count] : size_count) entries.push_back(integer_entry(2LL * (size - 1), count - 1));

            if (size_count.size() == 1) {
                const auto [s, c] = *size_count.begin();
                const long long trace = 2LL * (s - 1) + p2 - 1;
                const long long det = 2LL * (s - 1) * (p2 - 1) - static_cast<long long>(c) * s * p2;
                push_quadratic_roots(entries, trace, det);
            } else {
                std::vector<double> poles, z_sq;
                for (auto [size, count] : size_count) {
                    poles.push_back(2.0 * (size - 1));
                    z_sq.push_back(static_cast<double>(p2) * count * size);
                }
                for (double r : arrow_eigenvalues(poles, z_sq, static_cast<double>(p2 - 1)))
                    entries.push_back({r, std::nullopt, 1});
            }
        }
    }
    canonicalize(entries);
    return out;
}

ClosedFormSpectrum split_formula_single_quadratic(const MultipartiteSpec& spec)
{
    require_connected_spec(spec);
    ClosedFormSpectrum out;
    out.params = base_parameters(spec);
    auto& prm = out.params;
    if (prm.large_parts == 0 || prm.p2 == 0) throw PreconditionViolated("spec is not a split-case spec");
    out.case_tag = SpectrumCase::SplitMixed;
    const long long p1 = prm.p1;
    const long long p2 = prm.p2;
    prm.split_b = 2 * p1 + p2 - 3;
    prm.split_c = p1 * p2 - 2 * p1 - 2 * p2 + 2;
    prm.split_quadratic_applies = prm.large_parts == 1;
    out.entries.push_back(integer_entry(-2, prm.p1 - 1));
    out.entries.push_back(integer_entry(-1, prm.p2 - 1));
    push_quadratic_roots(out.entries, prm.split_b, prm.split_c);
    canonicalize(out.entries);
    return out;
}

double multipartite_energy_closed(const MultipartiteSpec& spec, const ClosedFormOptions& opts)
{
    return energy(multipartite_spectrum_closed(spec, opts).to_spectrum());
}

double radius_upper_bound(int n, bool allow_below_scope)
{
    if (n < 4 && !(allow_below_scope && n >= 2))
        throw PreconditionViolated("radius bound is stated for n >= 4");
    const double nn = n;
    return (nn - 2.0) + std::sqrt(nn * nn - 3.0 * nn + 3.0);
}

EnergyBounds energy_bounds(int n, bool allow_below_scope)
{
    return {2.0 * n - 2.0, 2.0 * radius_upper_bound(n, allow_below_scope)};
}

ClosedFormSpectrum antipodal_product_spectrum(int m, int a, int d, int n_h)
{
    if (m < 1 || a < 1 || n_h < 1) throw PreconditionViolated("m, a and n_h must be positive");
    if (m % a != 0) throw NotDivisible("fibre size " + std::to_string(a) + " does not divide " + std::to_string(m));
    if (d < 2) throw PreconditionViolated("antipodal diameter must be >= 2");

    ClosedFormSpectrum out;
    out.case_tag = SpectrumCase::ProductAntipodal;
    out.params.m = m;
    out.params.a = a;
    out.params.d = d;
    out.params.n_h = n_h;
    out.params.n = m * n_h;
    const long long fibres = m / a;
    out.entries.push_back(integer_entry(static_cast<long long>(d) * n_h * (a - 1), static_cast<int>(fibres)));
    out.entries.push_back(integer_entry(0, m * (n_h - 1)));
    out.entries.push_back(integer_entry(-static_cast<long long>(d) * n_h, static_cast<int>(fibres * (a - 1))));
    canonicalize(out.entries);
    return out;
}

EquienergeticPair equienergetic_pair(int n, int i)
{
    if (n < 2) throw PreconditionViolated("equienergetic pair needs n >= 2");
    if (i < 0 || i > n - 2) throw PreconditionViolated("shift i must satisfy 0 <= i <= n - 2");
    MultipartiteSpec parts({n + i, n, n, n - i});
    return EquienergeticPair{
        strong_product(build_multipartite(MultipartiteSpec({n, n})), complete(2)),
        parts,
        build_multipartite(parts),
        16.0 * (n - 1),
        i == 0 || n >= 4,
    };
}

}  // namespace eccspec
