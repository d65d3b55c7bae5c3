#pragma once

#include <vector>

#include "stargate/intpoly.hpp"
#include "stargate/rational.hpp"

namespace stargate {

bool is_prime(const Integer& n);

/// Monic-friendly polynomial over F_p, coefficients ascending in [0, p).
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(Integer p, std::vector<Integer> coeffs);
    static ModPoly reduce(const IntPoly& f, const Integer& p);
    /// Reduction of a rational polynomial; throws when p divides a denominator.
    static ModPoly reduce(const QPoly& f, const Integer& p);
    static ModPoly x(const Integer& p);
    static ModPoly constant(const Integer& p, const Integer& c);

    const Integer& modulus() const { return p_; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    bool operator==(const ModPoly& rhs) const = default;

    ModPoly monic() const;
    ModPoly derivative() const;
    ModPoly rem(const ModPoly& divisor) const;
    ModPoly quot(const ModPoly& divisor) const;
    static ModPoly gcd(ModPoly a, ModPoly b);
    /// this^e mod m.
    ModPoly powmod(const Integer& e, const ModPoly& m) const;
    /// this(g) mod m.
    ModPoly compose_mod(const ModPoly& g, const ModPoly& m) const;

    /// Symmetric lift to Z, coefficients in (-p/2, p/2].
    IntPoly lift_symmetric() const;
    /// Lift to Z with coefficients in [0, p).
    IntPoly lift() const;

    /// Canonical order: degree, then coefficient vector (constant term first).
    static bool canonical_less(const ModPoly& a, const ModPoly& b);

private:
    void normalize();
    Integer p_;
    std::vector<Integer> coeffs_;
};

struct ModFactor {
    ModPoly factor; // monic irreducible
    unsigned multiplicity;
};

/// Full factorization over F_p, canonically ordered and deterministic.
/// Throws argument_error for non-prime p, degenerate_input_error when
/// poly vanishes mod p.
std::vector<ModFactor> factor_mod_p(const IntPoly& poly, const Integer& p);

} // namespace stargate
