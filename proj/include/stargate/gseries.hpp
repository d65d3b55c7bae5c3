#pragma once

#include <optional>
#include <vector>

#include "stargate/rational.hpp"

namespace stargate {

struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& q) const { return lo <= q && q <= hi; }
};

/// Truncation a_0 + a_1 x + ... + a_N x^N of a power series over Q.
struct TruncatedSeries {
    RatVector coeffs;

    std::size_t order() const;
};

/// Non-certified per-place convergence radius estimate read off a truncation;
/// prime = 0 marks the archimedean place.
struct PlaceEstimate {
    Integer prime;
    double radius = 0.0;
    bool certified = false;
};

struct GrowthDiagnostics {
    std::vector<Integer> d_seq;
    /// Smallest cap c with d_n <= c^n throughout, bracketed exactly.
    RationalInterval c_estimate;
    std::vector<PlaceEstimate> radii;
};

struct GSeriesVerdict {
    bool accept = false;
    GrowthDiagnostics diagnostics;
};

/// d_n = lcm of the coefficient denominators up to index n.
std::vector<Integer> denominator_sequence(const TruncatedSeries& y);

/// Accept iff d_n <= c_cap^n for 1 <= n <= N, by exact integer comparison.
GSeriesVerdict g_series_candidate(const TruncatedSeries& y, const Rational& c_cap,
                                  const std::vector<Integer>& finite_places = {});

/// Indices of places with |xi|_v < min(1, R_v).
std::vector<std::size_t> v_adic_closeness(const std::vector<Rational>& xi_abs,
                                          const std::vector<Rational>& radii);

struct HeightBoundInput {
    Rational c1;
    Rational c2;
    unsigned delta = 1;
    unsigned m = 1;
    unsigned mu = 1;
};

/// Certified enclosure of ln(x) for rational x > 0, width < 10^-13.
RationalInterval ln_interval(const Rational& x);

/// c1 * delta^{3(m-1)} * (ln delta + 1), or c2 * delta^m * (ln delta + 1)
/// for the strong variant; exact except for the certified ln enclosure.
RationalInterval hasse_height_bound(const HeightBoundInput& input, bool strong);

struct InflationBound {
    Integer value; // ceil((631 mu^2 / 100)^{mu^2})
    double log10 = 0.0;
};

InflationBound degree_inflation_bound(unsigned mu);

} // namespace stargate
