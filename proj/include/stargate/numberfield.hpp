#pragma once

#include <vector>

#include "stargate/intpoly.hpp"
#include "stargate/modpoly.hpp"

namespace stargate {

/// Irreducibility of a monic integer polynomial over Q, certified
/// deterministically for degree <= 12.
bool is_irreducible_over_q(const IntPoly& f);

/// Number field Q[x]/(min_poly); min_poly monic irreducible, degree <= 12.
class NumberField {
public:
    /// The rationals, Q[x]/(x).
    NumberField() : NumberField(IntPoly::x()) {}
    explicit NumberField(IntPoly min_poly);

    const IntPoly& min_poly() const { return min_poly_; }
    unsigned degree() const { return static_cast<unsigned>(min_poly_.degree()); }
    const Integer& discriminant() const { return disc_; }

    bool operator==(const NumberField& rhs) const { return min_poly_ == rhs.min_poly_; }

private:
    IntPoly min_poly_;
    Integer disc_;
};

struct Place {
    unsigned residue_degree;     // f_w
    unsigned ramification_index; // e_w
    IntPoly factor;              // monic lift in [0, l)
    unsigned local_degree() const { return residue_degree * ramification_index; }
};

struct SplittingType {
    Integer prime;
    std::vector<Place> places; // canonical factor order
    bool certified;            // false exactly when l | disc(min_poly)
};

/// Splitting of l in F read off from min_poly mod l.
SplittingType splitting_type(const NumberField& field, const Integer& l);

/// Number of real embeddings (Sturm count of min_poly).
unsigned real_embedding_count(const NumberField& field);

struct PlacePermutation {
    std::vector<std::size_t> mapping; // place index -> place index
    bool certified;
};

/// Action of an order-2 automorphism sigma (alpha -> sigma_poly(alpha))
/// on the places over l.
PlacePermutation conjugation_action_on_places(const NumberField& field,
                                              const QPoly& sigma_poly,
                                              const Integer& l);

/// True when sigma_poly defines an automorphism of the field with
/// sigma∘sigma = id.
bool is_order_two_automorphism(const NumberField& field, const QPoly& sigma_poly);

/// Dimension of the subfield fixed by an order-2 automorphism.
unsigned fixed_field_degree(const NumberField& field, const QPoly& sigma_poly);

} // namespace stargate
