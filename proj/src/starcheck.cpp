#include "stargate/starcheck.hpp"

#include <algorithm>
#include <set>

#include "stargate/error.hpp"

namespace stargate {

std::string to_string(StarVerdict v) {
    switch (v) {
        case StarVerdict::established: return "established";
        case StarVerdict::not_within_bound: return "not_within_bound";
        case StarVerdict::provably_false: return "provably_false";
    }
    throw internal_error("unknown verdict");
}

void validate_point(const PointDescriptor& point) {
    validate_profile(point.profile);
    if (point.profile.total() != point.mu)
        throw argument_error("graded dimensions sum to " + std::to_string(point.profile.total()) +
                             ", expected " + std::to_string(point.mu));
    if (point.profile.center != point.n)
        throw argument_error("profile center does not match the weight");
    auto violations = validate_hodge_algebra(point.algebra, point.mu);
    if (!violations.empty()) throw argument_error(violations.front());
    if (point.nilpotent) {
        NilpotentOperator op(*point.nilpotent);
        if (op.size() != point.mu)
            throw argument_error("operator size does not match the ambient dimension");
        if (weight_filtration(op, point.n).profile != point.profile)
            throw argument_error("operator does not realize the declared profile");
    }
}

bool is_cm_point(const PointDescriptor& point) {
    if (max_comm_semisimple_dim(point.algebra) != point.mu) return false;
    for (const auto& s : point.algebra.summands)
        if (s.albert.albert_type != AlbertType::IV || s.albert.degree_d != 1) return false;
    return true;
}

namespace {

std::vector<unsigned> positive_dims(const FiltrationProfile& profile) {
    std::vector<unsigned> out;
    for (unsigned h : profile.dims)
        if (h > 0) out.push_back(h);
    return out;
}

bool divides_none(const Integer& divisor, const std::vector<unsigned>& dims) {
    for (unsigned h : dims)
        if (Integer(h) % divisor == 0) return false;
    return true;
}

bool is_quaternion(const HodgeSummand& s) { return s.albert.degree_d == 2; }

/// Primes carrying a listed invariant that is nonzero mod 1.
std::vector<Integer> nonintegral_primes(const AlbertDescriptor& desc) {
    std::set<Integer> primes;
    for (const auto& h : desc.invariants)
        if (mod_one(h.value) != 0) primes.insert(h.prime);
    return {primes.begin(), primes.end()};
}

void finish(StarCheck& check, bool any_applicable, bool exact) {
    std::sort(check.skipped_primes.begin(), check.skipped_primes.end());
    check.skipped_primes.erase(
        std::unique(check.skipped_primes.begin(), check.skipped_primes.end()),
        check.skipped_primes.end());
    for (const auto& w : check.witnesses)
        if (w.size() >= 2) {
            check.verdict = StarVerdict::established;
            return;
        }
    if (check.cyclic_shortcut == true) {
        check.verdict = StarVerdict::established;
        return;
    }
    if (!any_applicable || (exact && check.skipped_primes.empty()))
        check.verdict = StarVerdict::provably_false;
    else
        check.verdict = StarVerdict::not_within_bound;
}

template <typename PlaceTest>
StarCheck scan_primes(const PointDescriptor& point, const Integer& prime_bound,
                      bool quaternion_only, bool type_iv_only, PlaceTest test) {
    StarCheck check;
    check.witnesses.resize(point.algebra.summands.size());
    bool any_applicable = false;
    for (std::size_t i = 0; i < point.algebra.summands.size(); ++i) {
        const auto& s = point.algebra.summands[i];
        if (quaternion_only && !is_quaternion(s)) continue;
        if (type_iv_only && s.albert.albert_type != AlbertType::IV) continue;
        any_applicable = true;
        for (Integer l = 2; l <= prime_bound;
             mpz_nextprime(l.get_mpz_t(), l.get_mpz_t())) {
            LocalSplitting local = local_structure(s.albert, l);
            if (!local.certified) {
                check.skipped_primes.push_back(l);
                continue;
            }
            for (const auto& w : local.places)
                if (test(s, w)) {
                    check.witnesses[i].push_back(l);
                    break;
                }
        }
    }
    finish(check, any_applicable, /*exact=*/false);
    return check;
}

StarCheck star4_impl(const PointDescriptor& point, const std::vector<unsigned>& dims) {
    StarCheck check;
    check.witnesses.resize(point.algebra.summands.size());
    bool any_applicable = false;
    for (std::size_t i = 0; i < point.algebra.summands.size(); ++i) {
        const auto& s = point.algebra.summands[i];
        if (!is_quaternion(s)) continue;
        any_applicable = true;
        for (const auto& l : nonintegral_primes(s.albert)) {
            LocalSplitting local = local_structure(s.albert, l);
            if (!local.certified) {
                check.skipped_primes.push_back(l);
                continue;
            }
            for (const auto& w : local.places)
                if (w.d_prime > 1 &&
                    divides_none(Integer(4) * s.multiplicity * w.local_degree, dims)) {
                    check.witnesses[i].push_back(l);
                    break;
                }
        }
    }
    finish(check, any_applicable, /*exact=*/true);
    return check;
}

} // namespace

bool check_star1(const PointDescriptor& point) {
    return max_comm_semisimple_dim(point.algebra) >
           point.mu - dim_im_from_profile(point.profile);
}

StarCheck check_star2(const PointDescriptor& point, const Integer& prime_bound) {
    unsigned h_max = point.profile.max_dim();
    bool attainable = false;
    for (const auto& s : point.algebra.summands)
        if (s.multiplicity * s.albert.center.degree() > h_max) attainable = true;
    if (!attainable) {
        // local degrees never exceed the center degree
        StarCheck check;
        check.witnesses.resize(point.algebra.summands.size());
        check.verdict = StarVerdict::provably_false;
        return check;
    }
    return scan_primes(point, prime_bound, false, false,
                       [h_max](const HodgeSummand& s, const LocalStructure& w) {
                           return s.multiplicity * w.local_degree > h_max;
                       });
}

StarCheck check_star3(const PointDescriptor& point, const Integer&) {
    unsigned h_max = point.profile.max_dim();
    StarCheck check;
    check.witnesses.resize(point.algebra.summands.size());
    bool any_applicable = false;
    for (std::size_t i = 0; i < point.algebra.summands.size(); ++i) {
        const auto& s = point.algebra.summands[i];
        if (s.albert.degree_d * s.multiplicity < h_max) continue;
        any_applicable = true;
        // candidates limited to primes with a nonzero invariant somewhere
        for (const auto& l : nonintegral_primes(s.albert)) {
            LocalSplitting local = local_structure(s.albert, l);
            if (!local.certified) {
                check.skipped_primes.push_back(l);
                continue;
            }
            bool split = local.places.size() == s.albert.center.degree();
            for (const auto& w : local.places)
                if (w.local_degree != 1) split = false;
            bool ramified_in_d = false;
            for (const auto& w : local.places)
                if (w.d_prime > 1) ramified_in_d = true;
            if (split && ramified_in_d) check.witnesses[i].push_back(l);
        }
    }
    finish(check, any_applicable, /*exact=*/true);
    return check;
}

StarCheck check_star4(const PointDescriptor& point, const Integer&) {
    return star4_impl(point, positive_dims(point.profile));
}

StarCheck check_star5(const PointDescriptor& point, const Integer& prime_bound) {
    auto dims = positive_dims(point.profile);
    StarCheck check = scan_primes(point, prime_bound, true, false,
                                  [&dims](const HodgeSummand& s, const LocalStructure& w) {
                                      return w.d_prime == 1 &&
                                             divides_none(Integer(2) * s.multiplicity *
                                                              w.local_degree,
                                                          dims);
                                  });
    bool all_cyclic = true;
    bool has_quaternion = false;
    bool shortcut = false;
    for (const auto& s : point.algebra.summands) {
        if (!is_quaternion(s)) continue;
        has_quaternion = true;
        if (!s.albert.center_cyclic) {
            all_cyclic = false;
            continue;
        }
        if (divides_none(Integer(2) * s.multiplicity * s.albert.center.degree(), dims))
            shortcut = true;
    }
    if (has_quaternion && (all_cyclic || shortcut)) {
        check.cyclic_shortcut = shortcut;
        if (shortcut)
            check.verdict = StarVerdict::established;
        else if (all_cyclic)
            // the shortcut is an equivalence, so a global miss settles it
            check.verdict = StarVerdict::provably_false;
    }
    return check;
}

StarCheck check_star6(const PointDescriptor& point, const Integer& prime_bound) {
    StarCheck r = check_star4(point, prime_bound);
    StarCheck s = check_star5(point, prime_bound);
    StarCheck check;
    check.cyclic_shortcut = s.cyclic_shortcut;
    check.witnesses.resize(point.algebra.summands.size());
    for (std::size_t i = 0; i < check.witnesses.size(); ++i) {
        std::set<Integer> u(r.witnesses[i].begin(), r.witnesses[i].end());
        u.insert(s.witnesses[i].begin(), s.witnesses[i].end());
        check.witnesses[i].assign(u.begin(), u.end());
    }
    check.skipped_primes = r.skipped_primes;
    check.skipped_primes.insert(check.skipped_primes.end(), s.skipped_primes.begin(),
                                s.skipped_primes.end());
    bool any_applicable = false;
    for (const auto& sm : point.algebra.summands)
        if (is_quaternion(sm)) any_applicable = true;
    finish(check, any_applicable, /*exact=*/false);
    if (!check.established() && r.verdict == StarVerdict::provably_false &&
        s.verdict == StarVerdict::provably_false)
        check.verdict = StarVerdict::provably_false;
    return check;
}

StarCheck check_star7(const PointDescriptor& point, const Integer& prime_bound) {
    auto dims = positive_dims(point.profile);
    return scan_primes(point, prime_bound, false, true,
                       [&dims](const HodgeSummand& s, const LocalStructure& w) {
                           return divides_none(Integer(s.multiplicity) * s.albert.degree_d *
                                                   w.local_degree,
                                               dims);
                       });
}

StarCheck check_star7_sharp(const PointDescriptor& point, const Integer& prime_bound) {
    auto dims = positive_dims(point.profile);
    return scan_primes(point, prime_bound, false, true,
                       [&dims](const HodgeSummand& s, const LocalStructure& w) {
                           return !embedding_obstruction(s.multiplicity, w, dims)
                                       .witness.has_value();
                       });
}

RemedyVerdict remedy_conditions(const PointDescriptor& point) {
    if (point.profile.dims.empty()) throw argument_error("empty profile");
    unsigned h = point.profile.dims[0];
    RemedyVerdict v;
    for (const auto& s : point.algebra.summands) {
        unsigned f = s.albert.center.degree();
        if (h * f > s.dim_v) v.cond2 = true;
        if (s.albert.albert_type == AlbertType::IV && h * f >= s.dim_v) v.cond3 = true;
    }
    return v;
}

bool StarReport::any_star() const {
    if (star1) return true;
    for (const auto& c : star)
        if (c.established()) return true;
    return false;
}

StarReport sigma_membership(const PointDescriptor& point, const Integer& prime_bound) {
    validate_point(point);
    StarReport report;
    report.scan_bound = prime_bound;
    report.star1 = check_star1(point);
    report.star[0] = check_star2(point, prime_bound);
    report.star[1] = check_star3(point, prime_bound);
    report.star[2] = check_star4(point, prime_bound);
    report.star[3] = check_star5(point, prime_bound);
    report.star[4] = check_star6(point, prime_bound);
    report.star[5] = check_star7(point, prime_bound);
    report.star7_sharp = check_star7_sharp(point, prime_bound);
    report.remedy = remedy_conditions(point);
    report.sigma_member = report.any_star() && (report.remedy.cond2 || report.remedy.cond3);
    report.height_template = HeightBoundInput{Rational(1), Rational(1), 1, 1, point.mu};
    return report;
}

ProximityReport proximity_exclusion(const PointDescriptor& point, const Integer& p,
                                    const Integer& prime_bound) {
    if (!is_prime(p)) throw argument_error("excluded prime must be prime");
    validate_point(point);
    ProximityReport report;
    report.excluded_prime = p;
    if (check_star1(point)) report.holding.push_back(1);
    const StarCheck checks[] = {
        check_star2(point, prime_bound), check_star3(point, prime_bound),
        check_star4(point, prime_bound), check_star5(point, prime_bound),
        check_star6(point, prime_bound), check_star7(point, prime_bound)};
    for (unsigned k = 0; k < 6; ++k) {
        const StarCheck& c = checks[k];
        if (!c.established()) continue;
        bool survives = c.cyclic_shortcut == true; // an infinite family of witnesses
        for (const auto& w : c.witnesses) {
            if (w.size() < 2) continue;
            for (const auto& l : w)
                if (l != p) survives = true;
        }
        if (survives) report.holding.push_back(k + 2);
    }
    report.exclusion = !report.holding.empty();
    return report;
}

} // namespace stargate
