#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stargate/matrix.hpp"

namespace stargate {

/// Laurent polynomial in one formal transcendental lambda over Q.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c) { set(0, c); }
    static LaurentPoly lambda_power(long k) {
        LaurentPoly p;
        p.set(k, 1);
        return p;
    }

    const std::map<long, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly operator+(const LaurentPoly& rhs) const;
    LaurentPoly operator-(const LaurentPoly& rhs) const;
    LaurentPoly operator*(const LaurentPoly& rhs) const;
    bool operator==(const LaurentPoly& rhs) const = default;

    std::string to_string() const;

private:
    void set(long e, const Rational& c) {
        if (c == 0)
            terms_.erase(e);
        else
            terms_[e] = c;
    }
    friend LaurentPoly add_scaled(const LaurentPoly&, const LaurentPoly&, const Rational&);

    std::map<long, Rational> terms_;
};

/// Square matrix over Q[lambda, lambda^-1].
class LaurentMatrix {
public:
    LaurentMatrix() = default;
    explicit LaurentMatrix(std::size_t n) : n_(n), data_(n * n) {}
    static LaurentMatrix from_rational(const RatMatrix& m);

    std::size_t size() const { return n_; }
    LaurentPoly& at(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    LaurentMatrix transpose() const;
    LaurentMatrix operator*(const LaurentMatrix& rhs) const;
    LaurentMatrix scaled(const LaurentPoly& s) const;
    bool operator==(const LaurentMatrix& rhs) const = default;

private:
    std::size_t n_ = 0;
    std::vector<LaurentPoly> data_;
};

/// Q^mu with the standard symplectic form J = [[0,-I],[I,0]].
class SymplecticSpace {
public:
    explicit SymplecticSpace(std::size_t dimension);

    std::size_t dimension() const { return mu_; }
    const RatMatrix& gram() const { return gram_; }
    Rational pairing(const RatVector& u, const RatVector& v) const;

private:
    std::size_t mu_ = 0;
    RatMatrix gram_;
};

RatMatrix standard_symplectic_gram(std::size_t mu);

/// The scalar s with tM J M = s J, when one exists.
std::optional<LaurentPoly> riemann_scale(const LaurentMatrix& m);

/// True iff tM J M = lambda^power J identically in lambda.
bool riemann_check(const LaurentMatrix& m, std::size_t mu, long power);
bool riemann_check(const LaurentMatrix& m, std::size_t mu, const Rational& scalar);

bool is_isotropic(const std::vector<RatVector>& vectors, const SymplecticSpace& space);

/// Basis (e_1..e_g, f_1..f_g) with Gram exactly J, e_i = vectors[i] for the
/// given isotropic prefix.
struct SymplecticBasis {
    std::vector<RatVector> e;
    std::vector<RatVector> f;

    std::vector<RatVector> flat() const;
};

SymplecticBasis extend_isotropic(const std::vector<RatVector>& vectors,
                                 const SymplecticSpace& space);

enum class BlockPairing { SelfPaired, PairedWithPartner };

struct SplittingBlock {
    std::string label;
    std::vector<RatVector> basis;
    BlockPairing pairing = BlockPairing::SelfPaired;
    std::string partner; // label of the conjugate block when paired
};

/// Decomposition into mutually skew-orthogonal symplectic pieces: self-paired
/// symplectic blocks and conjugate pairs of transverse Lagrangian blocks.
struct LabeledSplitting {
    SymplecticSpace ambient;
    std::vector<SplittingBlock> blocks;
};

std::vector<std::string> validate_splitting(const LabeledSplitting& split);

/// Symplectic basis with e_j = gamma_j and f_j inside the block labeled tau,
/// for j below h = dim of that block. Requires the gamma components in the
/// conjugate block to be independent.
SymplecticBasis labeled_basis(const LabeledSplitting& split,
                              const std::vector<RatVector>& gamma,
                              const std::string& tau);

/// A Lagrangian assembled block-by-block: one block of each conjugate pair
/// plus a Lagrangian half of every self-paired block.
std::vector<RatVector> splitting_lagrangian(const LabeledSplitting& split);

struct VarRef {
    unsigned row = 0;
    unsigned col = 0;
    auto operator<=>(const VarRef&) const = default;
};

/// Monomials are sorted lists of 1 or 2 variable references.
using Monomial = std::vector<VarRef>;

/// Homogeneous polynomial of degree 1 or 2 in the entries of a mu x h matrix
/// of indeterminates.
struct QuadraticRelation {
    std::map<Monomial, Rational> terms;

    void add(Monomial m, const Rational& c);
    bool is_zero() const { return terms.empty(); }
    /// 1 or 2; throws argument_error when terms mix degrees.
    int degree() const;
};

struct TrivialGenerator {
    unsigned i = 0;
    unsigned j = 0;
    QuadraticRelation relation;
    bool identically_zero = false;
};

/// The relations tb_i J b_j for 1 <= i <= j <= h among the columns b_i of a
/// mu x h matrix of indeterminates; i = j entries vanish and are flagged.
std::vector<TrivialGenerator> trivial_ideal_generators(std::size_t mu, std::size_t h);

/// Degree-2 span membership against the nonzero generators; degree-1 forms
/// are trivial only when identically zero.
bool is_trivial_relation(const QuadraticRelation& rel, std::size_t mu, std::size_t h);

} // namespace stargate
