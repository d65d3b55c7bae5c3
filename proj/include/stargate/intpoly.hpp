#pragma once

#include <vector>

#include "stargate/rational.hpp"

namespace stargate {

/// Polynomial over Z, coefficients ascending, canonical (no trailing zeros).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);
    static IntPoly from_longs(std::vector<long> coeffs);
    static IntPoly x();

    const std::vector<Integer>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 for zero
    Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
    bool is_monic() const { return leading() == 1; }

    IntPoly operator+(const IntPoly& rhs) const;
    IntPoly operator-(const IntPoly& rhs) const;
    IntPoly operator*(const IntPoly& rhs) const;
    bool operator==(const IntPoly& rhs) const = default;

    IntPoly derivative() const;
    Integer eval(const Integer& x) const;
    Rational eval(const Rational& x) const;

    /// Exact division by a monic divisor; throws when not divisible.
    IntPoly divide_exact_monic(const IntPoly& divisor) const;
    bool divisible_by_monic(const IntPoly& divisor) const;

    /// disc(f) up to the usual sign/leading normalization: Res(f, f') / lc(f).
    Integer discriminant() const;

    std::string to_pretty_string() const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Polynomial over Q (used for Sturm chains and composition mod a min poly).
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(const IntPoly& p);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    QPoly operator+(const QPoly& rhs) const;
    QPoly operator-(const QPoly& rhs) const;
    QPoly operator*(const QPoly& rhs) const;
    bool operator==(const QPoly& rhs) const = default;

    QPoly derivative() const;
    Rational eval(const Rational& x) const;

    /// Euclidean remainder.
    QPoly rem(const QPoly& divisor) const;
    QPoly quot(const QPoly& divisor) const;

    /// this(g) reduced mod m.
    static QPoly compose_mod(const QPoly& f, const QPoly& g, const QPoly& m);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Number of real roots of p (squarefree or not), by Sturm's theorem on (-inf, inf).
int real_root_count(const IntPoly& p);

/// Res(f, g) over Q via the Sylvester matrix.
Rational resultant(const QPoly& f, const QPoly& g);

} // namespace stargate
