#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stargate/albert.hpp"
#include "stargate/filtration.hpp"
#include "stargate/gseries.hpp"
#include "stargate/matrix.hpp"

namespace stargate {

/// A candidate point: ambient dimension mu, weight n, graded profile of the
/// degeneration and the declared algebra of endomorphisms; optionally the
/// explicit nilpotent operator realizing the profile.
struct PointDescriptor {
    unsigned mu = 0;
    unsigned n = 1;
    FiltrationProfile profile;
    HodgeAlgebra algebra;
    std::optional<RatMatrix> nilpotent;
};

/// Throws argument_error on the first violated consistency condition
/// (profile validity, dimension bookkeeping, algebra validity, and the
/// declared-vs-computed profile when the operator is supplied).
void validate_point(const PointDescriptor& point);

/// True iff the maximal commutative semisimple subalgebra fills the ambient
/// space and every summand is a type-IV field (d_i = 1).
bool is_cm_point(const PointDescriptor& point);

/// A scanned condition is "not established within bound" when enlarging the
/// prime scan could still flip it; "provably false" only when the deciding
/// set is finite and fully computed.
enum class StarVerdict { established, not_within_bound, provably_false };

std::string to_string(StarVerdict v);

struct StarCheck {
    StarVerdict verdict = StarVerdict::provably_false;
    /// Witness primes per summand, in scan order; empty for summands where
    /// the side condition fails.
    std::vector<std::vector<Integer>> witnesses;
    /// Primes skipped because the splitting there is uncertified.
    std::vector<Integer> skipped_primes;
    /// Result of the cyclic-center global divisibility shortcut, when a
    /// cyclic quaternion summand is present.
    std::optional<bool> cyclic_shortcut;

    bool established() const { return verdict == StarVerdict::established; }
};

/// sum m_i f_i > mu - dim im N.
bool check_star1(const PointDescriptor& point);

/// Some summand has >= 2 certified primes with a place of local degree
/// exceeding h_max / m_i.
StarCheck check_star2(const PointDescriptor& point, const Integer& prime_bound);

/// Some summand with d_i m_i >= h_max has >= 2 primes that are totally
/// split in its center and carry a non-integral invariant; decided exactly
/// from the invariant list.
StarCheck check_star3(const PointDescriptor& point, const Integer& prime_bound);

/// Some quaternion summand has >= 2 primes with a place of non-integral
/// invariant whose divisor 4 m_i [F_w:Q_l] divides no positive graded
/// dimension; decided exactly from the invariant list.
StarCheck check_star4(const PointDescriptor& point, const Integer& prime_bound);

/// Some quaternion summand has >= 2 primes <= bound with a split place whose
/// divisor 2 m_i [F_w:Q_l] divides no positive graded dimension.
StarCheck check_star5(const PointDescriptor& point, const Integer& prime_bound);

/// Union of the star-4 and star-5 sets reaches 2 for some quaternion summand.
StarCheck check_star6(const PointDescriptor& point, const Integer& prime_bound);

/// Some type-IV summand has >= 2 primes <= bound with a place whose divisor
/// m_i d_i [F_w:Q_l] divides no positive graded dimension.
StarCheck check_star7(const PointDescriptor& point, const Integer& prime_bound);

/// Advisory variant of the type-IV test with the sharp per-place divisor
/// m_i r d'^2 [F_w:Q_l]; reported separately, never substituted for the
/// stated condition.
StarCheck check_star7_sharp(const PointDescriptor& point, const Integer& prime_bound);

struct RemedyVerdict {
    /// h > dim V_j / f_j for some summand j.
    bool cond2 = false;
    /// Some type-IV summand and h >= min over type-IV summands of dim V_i / f_i.
    bool cond3 = false;
};

/// h is the bottom graded dimension, profile.dims[0].
RemedyVerdict remedy_conditions(const PointDescriptor& point);

struct StarReport {
    Integer scan_bound;
    bool star1 = false;
    /// Checks for star-2 .. star-7 at indices 0..5.
    std::array<StarCheck, 6> star;
    StarCheck star7_sharp;
    RemedyVerdict remedy;
    bool sigma_member = false;
    /// Template for the height bound this membership feeds; the caller
    /// supplies the analytic constants.
    HeightBoundInput height_template;

    bool any_star() const;
};

/// Full verdict: some star condition holds and a remedy inequality holds.
StarReport sigma_membership(const PointDescriptor& point, const Integer& prime_bound);

struct ProximityReport {
    Integer excluded_prime;
    /// Star indices (1..7) still holding with all witnesses != p.
    std::vector<unsigned> holding;
    bool exclusion = false;
};

/// Exclusion of v-adic proximity at a place over p: star-1 is prime-free,
/// every other established condition must retain a witness != p.
ProximityReport proximity_exclusion(const PointDescriptor& point, const Integer& p,
                                    const Integer& prime_bound);

} // namespace stargate
