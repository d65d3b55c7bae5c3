#pragma once

#include <vector>

#include "stargate/matrix.hpp"

namespace stargate {

/// A nilpotent endomorphism of Q^mu; nilpotency is checked at construction.
class NilpotentOperator {
public:
    explicit NilpotentOperator(RatMatrix matrix);

    const RatMatrix& matrix() const { return matrix_; }
    std::size_t size() const { return matrix_.rows(); }
    /// Smallest d with N^d = 0.
    unsigned nilpotency_degree() const { return nilpotency_degree_; }

private:
    RatMatrix matrix_;
    unsigned nilpotency_degree_ = 0;
};

/// Graded dimensions h_0..h_{2n} of a weight filtration centered at n.
struct FiltrationProfile {
    unsigned center = 0;
    std::vector<unsigned> dims;

    unsigned total() const;
    unsigned max_dim() const;
    /// Number of Jordan blocks of size k in any operator realizing the profile.
    unsigned block_count(unsigned k) const;
    bool operator==(const FiltrationProfile&) const = default;
};

void validate_profile(const FiltrationProfile& profile);

/// Ascending chain W_0 <= ... <= W_{2n} = Q^mu satisfying N W_i <= W_{i-2}
/// and N^i : gr_{n+i} ~ gr_{n-i}.
struct WeightFiltration {
    unsigned center = 0;
    std::vector<Subspace> subspaces;
    FiltrationProfile profile;
};

WeightFiltration weight_filtration(const NilpotentOperator& op, unsigned center);

/// Always true: graded dimensions are invariant under conjugation and scaling.
bool profile_invariance_check(const NilpotentOperator& op, const RatMatrix& p,
                              const Rational& a, unsigned center);

struct NilpotentReduction {
    RatMatrix q_left;
    RatMatrix q_right;
    RatMatrix reduced;
};

/// Row/column reduction of a strictly upper triangular matrix by unipotent
/// upper triangular operations, leaving at most one nonzero entry per row
/// and per column.
NilpotentReduction nilpotent_reduce(const NilpotentOperator& op);

struct TorusBoundResult {
    std::size_t bound = 0;
    std::size_t centralizer_torus_dim = 0;
    bool ok = false;
};

TorusBoundResult torus_bound_check(const NilpotentOperator& op);

/// mu - h_n - h_{n+1}, the image dimension of any operator with this profile.
unsigned dim_im_from_profile(const FiltrationProfile& profile);

} // namespace stargate
