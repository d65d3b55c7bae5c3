#include "stargate/gseries.hpp"

#include <cmath>
#include <limits>

#include "stargate/error.hpp"
#include "stargate/modpoly.hpp"

namespace stargate {

std::size_t TruncatedSeries::order() const {
    if (coeffs.size() < 2) throw argument_error("series must carry order >= 1");
    return coeffs.size() - 1;
}

std::vector<Integer> denominator_sequence(const TruncatedSeries& y) {
    std::vector<Integer> d;
    Integer acc = 1;
    for (const auto& a : y.coeffs) {
        mpz_lcm(acc.get_mpz_t(), acc.get_mpz_t(), a.get_den().get_mpz_t());
        d.push_back(acc);
    }
    return d;
}

namespace {

/// d <= (p/q)^n as the exact integer comparison d q^n <= p^n.
bool growth_ok(const Integer& d, const Rational& cap, unsigned long n) {
    Integer pn, qn;
    mpz_pow_ui(pn.get_mpz_t(), cap.get_num().get_mpz_t(), n);
    mpz_pow_ui(qn.get_mpz_t(), cap.get_den().get_mpz_t(), n);
    return d * qn <= pn;
}

bool cap_accepts(const std::vector<Integer>& d_seq, const Rational& cap) {
    if (cap <= 0) return false;
    for (std::size_t n = 1; n < d_seq.size(); ++n)
        if (!growth_ok(d_seq[n], cap, static_cast<unsigned long>(n))) return false;
    return true;
}

RationalInterval bracket_c_estimate(const std::vector<Integer>& d_seq) {
    Rational hi = 1;
    if (cap_accepts(d_seq, hi)) return {hi, hi};
    while (!cap_accepts(d_seq, hi)) hi *= 2;
    Rational lo = hi / 2;
    for (int step = 0; step < 40; ++step) {
        Rational mid = (lo + hi) / 2;
        if (cap_accepts(d_seq, mid))
            hi = mid;
        else
            lo = mid;
    }
    return {lo, hi};
}

double finite_radius_estimate(const TruncatedSeries& y, const Integer& l) {
    double ld = l.get_d();
    double min_slope = 0.0;
    for (std::size_t n = 1; n < y.coeffs.size(); ++n) {
        const Rational& a = y.coeffs[n];
        if (a == 0) continue;
        long v = 0;
        Integer num = a.get_num(), den = a.get_den();
        while (num % l == 0) { num /= l; ++v; }
        while (den % l == 0) { den /= l; --v; }
        double slope = static_cast<double>(v) / static_cast<double>(n);
        if (slope < min_slope) min_slope = slope;
    }
    return std::pow(ld, min_slope);
}

double archimedean_radius_estimate(const TruncatedSeries& y) {
    double max_root = 0.0;
    for (std::size_t n = 1; n < y.coeffs.size(); ++n) {
        double a = std::abs(y.coeffs[n].get_d());
        if (a == 0) continue;
        double root = std::pow(a, 1.0 / static_cast<double>(n));
        if (root > max_root) max_root = root;
    }
    return max_root == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / max_root;
}

} // namespace

GSeriesVerdict g_series_candidate(const TruncatedSeries& y, const Rational& c_cap,
                                  const std::vector<Integer>& finite_places) {
    if (y.order() < 10) throw precondition_error("order must be at least 10");
    if (c_cap <= 0) throw argument_error("cap must be positive");
    GSeriesVerdict out;
    out.diagnostics.d_seq = denominator_sequence(y);
    out.accept = cap_accepts(out.diagnostics.d_seq, c_cap);
    out.diagnostics.c_estimate = bracket_c_estimate(out.diagnostics.d_seq);
    out.diagnostics.radii.push_back({0, archimedean_radius_estimate(y), false});
    for (const auto& l : finite_places) {
        if (!is_prime(l)) throw argument_error("finite place must be prime");
        out.diagnostics.radii.push_back({l, finite_radius_estimate(y, l), false});
    }
    return out;
}

std::vector<std::size_t> v_adic_closeness(const std::vector<Rational>& xi_abs,
                                          const std::vector<Rational>& radii) {
    if (xi_abs.size() != radii.size()) throw argument_error("place lists of unequal length");
    std::vector<std::size_t> close;
    for (std::size_t v = 0; v < xi_abs.size(); ++v) {
        Rational threshold = radii[v] < 1 ? radii[v] : Rational(1);
        if (xi_abs[v] < threshold) close.push_back(v);
    }
    return close;
}

namespace {

/// Enclosure of 2 atanh(t) = ln((1+t)/(1-t)) for rational 0 <= t <= 1/2.
RationalInterval atanh_twice(const Rational& t, const Rational& eps) {
    Rational sum = 0, power = t;
    Rational t2 = t * t;
    unsigned long k = 0;
    Rational tail;
    for (;;) {
        sum += power / (2 * k + 1);
        power *= t2;
        ++k;
        tail = power / ((2 * k + 1) * (1 - t2));
        if (2 * tail < eps) break;
    }
    return {2 * sum, 2 * (sum + tail)};
}

} // namespace

RationalInterval ln_interval(const Rational& x) {
    if (x <= 0) throw argument_error("ln needs a positive argument");
    if (x < 1) {
        RationalInterval inv = ln_interval(1 / x);
        return {-inv.hi, -inv.lo};
    }
    Rational eps = rat(1, 1000000) / Integer(10000000); // 10^-13
    Rational r = x;
    long halvings = 0;
    while (r > 2) {
        r /= 2;
        ++halvings;
    }
    RationalInterval out = atanh_twice((r - 1) / (r + 1), eps / 2);
    if (halvings > 0) {
        RationalInterval ln2 = atanh_twice(rat(1, 3), eps / (2 * halvings));
        out.lo += halvings * ln2.lo;
        out.hi += halvings * ln2.hi;
    }
    return out;
}

RationalInterval hasse_height_bound(const HeightBoundInput& input, bool strong) {
    if (input.delta < 1 || input.m < 1) throw argument_error("need delta >= 1 and m >= 1");
    const Rational& c = strong ? input.c2 : input.c1;
    if (c <= 0) throw argument_error("leading constant must be positive");
    unsigned long e = strong ? input.m : 3 * (input.m - 1);
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), input.delta, e);
    RationalInterval ln = ln_interval(Rational(static_cast<long>(input.delta)));
    Rational scale = c * power;
    return {scale * (ln.lo + 1), scale * (ln.hi + 1)};
}

InflationBound degree_inflation_bound(unsigned mu) {
    if (mu < 1) throw argument_error("mu must be at least 1");
    unsigned long e = static_cast<unsigned long>(mu) * mu;
    Rational base = rat(631, 100) * Integer(e);
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
    InflationBound out;
    mpz_cdiv_q(out.value.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.log10 = static_cast<double>(e) * std::log10(base.get_d());
    return out;
}

} // namespace stargate
