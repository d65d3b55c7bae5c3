#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stargate/numberfield.hpp"

namespace stargate {

enum class AlbertType { I, II, III, IV };

std::string to_string(AlbertType t);
AlbertType albert_type_from_string(const std::string& s);

/// Hasse invariant at one finite place, as a fraction taken mod 1.
struct HasseInvariant {
    Integer prime;
    std::size_t place = 0;
    Rational value;
};

/// A simple algebra D with positive involution over a number field center F,
/// d^2 = [D:F], described by its type and local invariants.
struct AlbertDescriptor {
    AlbertType albert_type = AlbertType::I;
    NumberField center;
    unsigned degree_d = 1;
    std::vector<HasseInvariant> invariants;
    std::optional<QPoly> cm_conjugation;
    /// For types II/III: declared behavior at the real places.
    bool real_places_split = true;
    /// Declares F/Q cyclic; enables a shortcut in some divisor scans.
    bool center_cyclic = false;
};

struct HodgeSummand {
    unsigned multiplicity = 1;
    unsigned dim_v = 0;
    AlbertDescriptor albert;
};

struct HodgeAlgebra {
    std::vector<HodgeSummand> summands;
};

/// Local data of D at one place w | l: D tensor F_w = M_r(D') with
/// [D':F_w] = d_prime^2 and d_prime the denominator of inv_w.
struct LocalStructure {
    Integer prime;
    std::size_t place = 0;
    unsigned local_degree = 1;
    unsigned r = 1;
    unsigned d_prime = 1;
};

struct LocalSplitting {
    Integer prime;
    bool certified = false;
    std::vector<LocalStructure> places;
};

/// Reduces a fraction into [0, 1).
Rational mod_one(const Rational& q);

/// Invariant of desc at each place over l, unlisted places defaulting to 0.
std::vector<Rational> invariants_at(const AlbertDescriptor& desc, const Integer& l);

/// Consistency check; returns human-readable violations (empty = valid).
std::vector<std::string> validate_albert(const AlbertDescriptor& desc);

/// Violations for the algebra as a whole against the ambient dimension mu.
/// Non-fatal observations are appended to *warnings when provided.
std::vector<std::string> validate_hodge_algebra(const HodgeAlgebra& alg, unsigned mu,
                                                std::vector<std::string>* warnings = nullptr);

LocalSplitting local_structure(const AlbertDescriptor& desc, const Integer& l);

/// Sum of m_i * f_i over the summands.
unsigned max_comm_semisimple_dim(const HodgeAlgebra& alg);

struct EmbeddingCheck {
    Integer divisor;
    /// Least index j with divisor | dims[j]; empty = embedding obstructed.
    std::optional<std::size_t> witness;
};

EmbeddingCheck embedding_obstruction(unsigned multiplicity, const LocalStructure& ls,
                                     const std::vector<unsigned>& dims);

} // namespace stargate
