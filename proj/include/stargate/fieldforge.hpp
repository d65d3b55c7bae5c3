#pragma once

#include <vector>

#include "stargate/albert.hpp"
#include "stargate/intpoly.hpp"
#include "stargate/numberfield.hpp"

namespace stargate {

/// Smallest prime p with p = 1 mod 2*beta; scan bounded at 10^6.
Integer find_prime_mod(unsigned beta);

/// Minimal polynomial of the degree-beta subfield of Q(zeta_p) spanned by
/// Gaussian period sums over the index-beta subgroup of (Z/p)^x. Computed
/// numerically, then verified exactly (integer coefficients, irreducible,
/// totally real, discriminant a power of p times a square). Working precision
/// starts at 200 bits (STARGATE_PRECISION_BITS overrides) and doubles once
/// before giving up.
NumberField gaussian_period_field(const Integer& p, unsigned beta);

/// Certified primes l <= bound with a single unramified place of full
/// residue degree in f0.
std::vector<Integer> inert_primes(const NumberField& f0, const Integer& bound);

/// The CM field F = f0(i sqrt(q)) generated by alpha = y + i sqrt(q),
/// where y generates f0; min poly is the characteristic polynomial of
/// multiplication by alpha.
NumberField cm_compositum(const NumberField& f0, const Integer& q);

/// Complex conjugation alpha -> y - i sqrt(q), written in powers of alpha.
QPoly cm_conjugation_poly(const NumberField& f0, const Integer& q);

/// Smallest prime q <= bound, coprime to l1, l2 and to disc(f0), such that
/// both l_j split in f0(i sqrt(q)) into two places of residue degree deg f0.
/// Splitting is decided by the exact residue-field square criterion at the
/// inert place (Euler's test for odd l, the mod-8 rule at 2), cross-checked
/// against the certified factorization of the compositum's min poly where
/// that factorization is squarefree mod l.
Integer choose_q(const NumberField& f0, const Integer& l1, const Integer& l2,
                 const Integer& bound);

struct DesignatedPlace {
    Integer prime;
    std::size_t place = 0;

    bool operator==(const DesignatedPlace& rhs) const = default;
};

/// A CM field F of degree 2*beta over its cyclic totally real subfield f0,
/// with two inert-in-f0 primes l1, l2 that each split into a conjugate pair
/// of designated places of F.
struct ForgeRecipe {
    unsigned beta = 0;
    Integer p;
    Integer l1;
    Integer l2;
    Integer q;
    NumberField f0;
    NumberField f;
    QPoly sigma;
    /// (l1, 0), (l1, 1), (l2, 0), (l2, 1) in canonical factor order;
    /// sigma swaps each pair.
    std::vector<DesignatedPlace> designated_places;
};

/// Assembles the full recipe. The q scan keeps only candidates whose
/// splitting at both l_j is certified by factoring the min poly of the
/// canonical generator, so the designated places are well-indexed. l = 2 is
/// unusable here (the generator's conjugate pairs differ by 2 i sqrt(q), so
/// its discriminant is always even) even though choose_q accepts it.
ForgeRecipe forge_recipe(unsigned beta, const Integer& l1, const Integer& l2,
                         const Integer& q_bound = 200);

/// True when desc is a valid type-IV algebra over recipe.f of degree d with
/// non-integral invariant at all four designated places.
bool d_iv_membership(const AlbertDescriptor& desc, const ForgeRecipe& recipe, unsigned d);

struct Cor1Verdict {
    bool dim_ok = false;
    Integer divisor;
    bool divisor_ok = false;
    bool member = false;
};

/// Checks 2*beta*h >= dim V_k for h the largest graded dimension, then that
/// the degree-dependent divisor (4*beta*m for d = 2, m*d*beta for d >= 3,
/// m*beta for d = 1) divides no positive graded dimension.
Cor1Verdict corollary1_check(const HodgeSummand& summand, const ForgeRecipe& recipe,
                             const std::vector<unsigned>& hodge_dims);

} // namespace stargate
