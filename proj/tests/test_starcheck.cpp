#include "doctest.h"

#include <random>
#include <set>

#include "stargate/error.hpp"
#include "stargate/fieldforge.hpp"
#include "stargate/starcheck.hpp"

using namespace stargate;

namespace {

IntPoly P(std::vector<long> c) { return IntPoly::from_longs(std::move(c)); }

NumberField golden_field() { return NumberField(P({-1, 1, 1})); }

AlbertDescriptor quaternion_over(const ForgeRecipe& r) {
    AlbertDescriptor d;
    d.albert_type = AlbertType::IV;
    d.center = r.f;
    d.degree_d = 2;
    d.cm_conjugation = r.sigma;
    for (const auto& w : r.designated_places)
        d.invariants.push_back({w.prime, w.place, rat(1, 2)});
    return d;
}

// mu = 16, weight 3, one quaternion summand over a quartic CM field with
// nonzero invariants at two designated primes
PointDescriptor showcase_point(const ForgeRecipe& r, std::vector<unsigned> dims) {
    PointDescriptor pt;
    pt.mu = 16;
    pt.n = 3;
    pt.profile = {3, std::move(dims)};
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 16;
    s.albert = quaternion_over(r);
    pt.algebra.summands = {s};
    return pt;
}

// four copies of the same quartic CM field filling mu = 16
PointDescriptor cm_point16() {
    PointDescriptor pt;
    pt.mu = 16;
    pt.n = 3;
    pt.profile = {3, {4, 0, 4, 0, 4, 0, 4}};
    AlbertDescriptor d;
    d.albert_type = AlbertType::IV;
    d.center = cm_compositum(golden_field(), 2);
    d.degree_d = 1;
    d.cm_conjugation = cm_conjugation_poly(golden_field(), 2);
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 4;
    s.albert = d;
    pt.algebra.summands = {s, s, s, s};
    return pt;
}

// quartic cyclotomic CM center, mu = 4
PointDescriptor quartic_cm_point() {
    PointDescriptor pt;
    pt.mu = 4;
    pt.n = 1;
    pt.profile = {1, {1, 2, 1}};
    AlbertDescriptor d;
    d.albert_type = AlbertType::IV;
    d.center = NumberField(P({1, 1, 1, 1, 1}));
    d.degree_d = 1;
    d.cm_conjugation = QPoly(P({-1, -1, -1, -1})); // x -> x^4
    d.center_cyclic = true;
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 4;
    s.albert = d;
    pt.algebra.summands = {s};
    return pt;
}

PointDescriptor generic_point() {
    PointDescriptor pt;
    pt.mu = 16;
    pt.n = 3;
    pt.profile = {3, {4, 0, 4, 0, 4, 0, 4}};
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 16;
    s.albert.albert_type = AlbertType::I;
    s.albert.center = NumberField();
    s.albert.degree_d = 1;
    pt.algebra.summands = {s};
    return pt;
}

// M_2 of a rational quaternion algebra ramified at the given primes
PointDescriptor rational_quaternion_point(const std::vector<Integer>& ramified) {
    PointDescriptor pt;
    pt.mu = 8;
    pt.n = 1;
    pt.profile = {1, {2, 4, 2}};
    AlbertDescriptor d;
    d.albert_type = AlbertType::II;
    d.center = NumberField();
    d.degree_d = 2;
    for (const auto& p : ramified) d.invariants.push_back({p, 0, rat(1, 2)});
    HodgeSummand s;
    s.multiplicity = 2;
    s.dim_v = 4;
    s.albert = d;
    pt.algebra.summands = {s};
    return pt;
}

// everywhere-unramified quaternion algebra over the real quadratic golden field
PointDescriptor golden_quaternion_point(unsigned dim_v, std::vector<unsigned> dims) {
    PointDescriptor pt;
    pt.mu = dim_v;
    pt.n = 1;
    pt.profile = {1, std::move(dims)};
    AlbertDescriptor d;
    d.albert_type = AlbertType::II;
    d.center = golden_field();
    d.degree_d = 2;
    d.center_cyclic = true;
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = dim_v;
    s.albert = d;
    pt.algebra.summands = {s};
    return pt;
}

bool divides_none_of(const Integer& divisor, const std::vector<unsigned>& dims) {
    for (unsigned h : dims)
        if (Integer(h) % divisor == 0) return false;
    return true;
}

unsigned order_mod_5(const Integer& l) {
    Integer x = l % 5;
    for (unsigned k = 1; k <= 4; ++k) {
        if (x == 1) return k;
        x = x * l % 5;
    }
    return 0;
}

} // namespace

TEST_CASE("point validation") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    CHECK_NOTHROW(validate_point(showcase_point(r, {4, 0, 4, 0, 4, 0, 4})));
    CHECK_NOTHROW(validate_point(cm_point16()));
    CHECK_NOTHROW(validate_point(quartic_cm_point()));

    PointDescriptor bad_total = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});
    bad_total.mu = 15;
    CHECK_THROWS_AS(validate_point(bad_total), argument_error);

    PointDescriptor bad_center = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});
    bad_center.n = 2;
    CHECK_THROWS_AS(validate_point(bad_center), argument_error);

    PointDescriptor bad_algebra = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});
    bad_algebra.algebra.summands[0].dim_v = 12;
    CHECK_THROWS_AS(validate_point(bad_algebra), argument_error);

    // one 2-block plus two 1-blocks realizes (1, 2, 1)
    PointDescriptor with_matrix = quartic_cm_point();
    RatMatrix n = RatMatrix::zero(4);
    n.at(0, 1) = 1;
    with_matrix.nilpotent = n;
    CHECK_NOTHROW(validate_point(with_matrix));

    n.at(2, 3) = 1; // two 2-blocks give (2, 0, 2) instead
    with_matrix.nilpotent = n;
    CHECK_THROWS_AS(validate_point(with_matrix), argument_error);
}

TEST_CASE("cm point recognition") {
    CHECK(is_cm_point(cm_point16()));
    CHECK(is_cm_point(quartic_cm_point()));
    CHECK_FALSE(is_cm_point(generic_point()));
    ForgeRecipe r = forge_recipe(2, 3, 7);
    CHECK_FALSE(is_cm_point(showcase_point(r, {4, 0, 4, 0, 4, 0, 4})));

    // full commutative dimension alone is not enough
    PointDescriptor real_full = generic_point();
    real_full.algebra.summands[0].albert.center = golden_field();
    real_full.algebra.summands[0].multiplicity = 8;
    real_full.algebra.summands[0].dim_v = 2;
    CHECK(max_comm_semisimple_dim(real_full.algebra) == 16);
    CHECK_FALSE(is_cm_point(real_full));
}

TEST_CASE("torus dimension comparison") {
    CHECK(check_star1(cm_point16()));       // 16 > 16 - 12
    CHECK(check_star1(quartic_cm_point())); // 4 > 4 - 1
    CHECK_FALSE(check_star1(generic_point()));
    ForgeRecipe r = forge_recipe(2, 3, 7);
    CHECK_FALSE(check_star1(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}))); // 4 = 4
}

TEST_CASE("large local degree scan") {
    // quartic cyclotomic center: 2, 3, 7 stay inert, 5 ramifies
    StarCheck c = check_star2(quartic_cm_point(), 10);
    CHECK(c.established());
    CHECK(c.witnesses[0] == std::vector<Integer>{2, 3, 7});
    CHECK(c.skipped_primes == std::vector<Integer>{5});
    for (const auto& l : c.witnesses[0]) CHECK(order_mod_5(l) == 4);

    StarCheck tight = check_star2(quartic_cm_point(), 2);
    CHECK(tight.verdict == StarVerdict::not_within_bound);
    CHECK(tight.witnesses[0] == std::vector<Integer>{2});

    // local degrees can never beat h_max here
    StarCheck flat = check_star2(generic_point(), 100);
    CHECK(flat.verdict == StarVerdict::provably_false);
    CHECK(flat.witnesses[0].empty());
    ForgeRecipe r = forge_recipe(2, 3, 7);
    CHECK(check_star2(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 100).verdict ==
          StarVerdict::provably_false);
}

TEST_CASE("totally split ramified primes") {
    StarCheck c = check_star3(rational_quaternion_point({2, 3}), 1000);
    CHECK(c.established());
    CHECK(c.witnesses[0] == std::vector<Integer>{2, 3});

    // cardinality threshold: a single such prime settles it negatively
    StarCheck one = check_star3(rational_quaternion_point({2}), 1000);
    CHECK(one.verdict == StarVerdict::provably_false);
    CHECK(one.witnesses[0] == std::vector<Integer>{2});

    // dimension side condition fails: d * m = 2 < 4
    ForgeRecipe r = forge_recipe(2, 3, 7);
    CHECK(check_star3(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 1000).verdict ==
          StarVerdict::provably_false);
}

TEST_CASE("ramified quaternion divisor test") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    StarCheck c = check_star4(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 1000);
    CHECK(c.established());
    CHECK(c.witnesses[0] == std::vector<Integer>{3, 7});

    // the middle-heavy profile absorbs the divisor 8
    StarCheck squashed = check_star4(showcase_point(r, {4, 0, 0, 8, 0, 0, 4}), 1000);
    CHECK(squashed.verdict == StarVerdict::provably_false);
    CHECK(squashed.witnesses[0].empty());

    CHECK(check_star4(cm_point16(), 1000).verdict == StarVerdict::provably_false);
}

TEST_CASE("split quaternion divisor scan and the cyclic shortcut") {
    PointDescriptor pt = golden_quaternion_point(6, {2, 2, 2});
    StarCheck c = check_star5(pt, 10);
    CHECK(c.established());
    CHECK(c.cyclic_shortcut == true);
    CHECK(c.witnesses[0] == std::vector<Integer>{2, 3, 7});
    // witnesses are inert: 5 is a non-residue mod each
    for (const auto& l : c.witnesses[0])
        CHECK(mpz_kronecker_si(l.get_mpz_t(), 5) == -1);

    PointDescriptor absorbed = golden_quaternion_point(8, {2, 4, 2});
    StarCheck miss = check_star5(absorbed, 100);
    CHECK(miss.verdict == StarVerdict::provably_false);
    CHECK(miss.cyclic_shortcut == false);
    CHECK(miss.witnesses[0].empty());

    // nothing quaternionic to scan
    CHECK(check_star5(cm_point16(), 100).verdict == StarVerdict::provably_false);
}

TEST_CASE("union condition") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    StarCheck c = check_star6(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 1000);
    CHECK(c.established());
    CHECK(c.witnesses[0] == std::vector<Integer>{3, 7});

    StarCheck squashed = check_star6(showcase_point(r, {4, 0, 0, 8, 0, 0, 4}), 1000);
    CHECK_FALSE(squashed.established());

    CHECK(check_star6(golden_quaternion_point(6, {2, 2, 2}), 10).established());
    CHECK(check_star6(cm_point16(), 100).verdict == StarVerdict::provably_false);
}

TEST_CASE("full degree divisor scan") {
    // divisor is the inert degree 4, never dividing 1 or 2
    StarCheck c = check_star7(quartic_cm_point(), 10);
    CHECK(c.established());
    CHECK(c.witnesses[0] == std::vector<Integer>{2, 3, 7});
    for (const auto& l : c.witnesses[0]) CHECK(order_mod_5(l) == 4);

    // every local divisor 2 deg divides 4 on the balanced profile
    ForgeRecipe r = forge_recipe(2, 3, 7);
    StarCheck flat = check_star7(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 100);
    CHECK(flat.verdict == StarVerdict::not_within_bound);

    CHECK(check_star7(generic_point(), 100).verdict == StarVerdict::provably_false);
}

TEST_CASE("sharp advisory divisor can outperform the stated one") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    PointDescriptor pt = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});
    CHECK_FALSE(check_star7(pt, 100).established());
    StarCheck sharp = check_star7_sharp(pt, 100);
    CHECK(sharp.established());
    CHECK(sharp.witnesses[0] == std::vector<Integer>{3, 7});
    // the full report keeps the stated condition in the numbered slot
    StarReport report = sigma_membership(pt, 100);
    CHECK_FALSE(report.star[5].established());
    CHECK(report.star7_sharp.established());
}

TEST_CASE("implication and agreement properties on random descriptors") {
    std::mt19937 rng(20260823);
    std::vector<IntPoly> centers = {IntPoly::x(), P({-1, 1, 1}), P({-1, -2, 1, 1})};
    std::vector<Integer> prime_pool = {2, 3, 11, 13, 17, 19};
    for (int trial = 0; trial < 100; ++trial) {
        PointDescriptor pt;
        pt.n = 1 + rng() % 2;
        std::vector<unsigned> dims(2 * pt.n + 1);
        for (auto& h : dims) h = 1 + rng() % 8;
        pt.profile = {pt.n, dims};
        AlbertDescriptor d;
        d.albert_type = rng() % 2 ? AlbertType::II : AlbertType::III;
        d.real_places_split = d.albert_type == AlbertType::II;
        d.center = NumberField(centers[rng() % centers.size()]);
        d.degree_d = 2;
        std::size_t count = rng() % 3;
        for (std::size_t k = 0; k < count; ++k) {
            Integer p = prime_pool[rng() % prime_pool.size()];
            bool dup = false;
            for (const auto& h : d.invariants) dup = dup || h.prime == p;
            if (!dup) d.invariants.push_back({p, 0, rat(1, 2)});
        }
        HodgeSummand s;
        s.multiplicity = 1 + rng() % 3;
        s.dim_v = d.center.degree() * (1 + rng() % 4);
        s.albert = d;
        pt.algebra.summands = {s};
        pt.mu = s.multiplicity * s.dim_v;

        StarCheck c4 = check_star4(pt, 50);
        StarCheck c5 = check_star5(pt, 50);
        StarCheck c6 = check_star6(pt, 50);
        if (c4.established()) CHECK(c6.established());
        if (c5.established()) CHECK(c6.established());
        for (const auto& l : c4.witnesses[0]) {
            bool in_union = false;
            for (const auto& u : c6.witnesses[0]) in_union = in_union || u == l;
            CHECK(in_union);
        }

        // per-place agreement with the generic embedding test
        for (const auto& l : prime_pool) {
            LocalSplitting local = local_structure(d, l);
            if (!local.certified) continue;
            for (const auto& w : local.places) {
                bool embeds = embedding_obstruction(s.multiplicity, w, dims).witness.has_value();
                Integer divisor = w.d_prime > 1
                                      ? Integer(4) * s.multiplicity * w.local_degree
                                      : Integer(2) * s.multiplicity * w.local_degree;
                CHECK(divides_none_of(divisor, dims) == !embeds);
            }
        }
    }
}

TEST_CASE("scan bound monotonicity") {
    for (const Integer& small : {Integer(2), Integer(10), Integer(30)}) {
        StarCheck lo = check_star2(quartic_cm_point(), small);
        StarCheck hi = check_star2(quartic_cm_point(), 100);
        std::set<Integer> larger(hi.witnesses[0].begin(), hi.witnesses[0].end());
        for (const auto& l : lo.witnesses[0]) CHECK(larger.count(l) == 1);
        if (lo.established()) CHECK(hi.established());
    }
}

TEST_CASE("remedy inequalities") {
    RemedyVerdict cm = remedy_conditions(cm_point16());
    CHECK(cm.cond2);
    CHECK(cm.cond3);

    ForgeRecipe r = forge_recipe(2, 3, 7);
    RemedyVerdict show = remedy_conditions(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}));
    CHECK_FALSE(show.cond2); // 4 * 4 = 16, not > 16
    CHECK(show.cond3);       // 16 >= 16

    // a single summand with dim V / f = 8 beats h = 4 on both counts
    PointDescriptor wide;
    wide.mu = 32;
    wide.n = 1;
    wide.profile = {1, {4, 24, 4}};
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 32;
    s.albert = cm_point16().algebra.summands[0].albert;
    wide.algebra.summands = {s};
    RemedyVerdict v = remedy_conditions(wide);
    CHECK_FALSE(v.cond2);
    CHECK_FALSE(v.cond3);

    CHECK_FALSE(remedy_conditions(generic_point()).cond3);
}

TEST_CASE("membership verdicts") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    StarReport member = sigma_membership(showcase_point(r, {4, 0, 4, 0, 4, 0, 4}), 1000);
    CHECK(member.sigma_member);
    CHECK(member.any_star());
    CHECK_FALSE(member.star1);
    CHECK(member.star[2].established()); // the ramified-quaternion route
    CHECK(member.star[2].witnesses[0].size() == 2);
    CHECK(member.height_template.mu == 16);
    CHECK(member.scan_bound == 1000);

    // the middle-heavy profile is not a realizable weight filtration (no
    // block pattern yields h_6 = 4 with h_4 = 0), so the full pipeline
    // rejects it and every star checker comes up empty
    PointDescriptor alt = showcase_point(r, {4, 0, 0, 8, 0, 0, 4});
    CHECK_THROWS_AS(sigma_membership(alt, 1000), argument_error);
    CHECK_FALSE(check_star2(alt, 1000).established());
    CHECK_FALSE(check_star3(alt, 1000).established());
    CHECK_FALSE(check_star4(alt, 1000).established());
    CHECK_FALSE(check_star5(alt, 1000).established());
    CHECK_FALSE(check_star6(alt, 1000).established());
    CHECK_FALSE(check_star7(alt, 1000).established());

    CHECK_FALSE(sigma_membership(generic_point(), 1000).sigma_member);

    StarReport small = sigma_membership(quartic_cm_point(), 100);
    CHECK(small.star1);
    CHECK(small.sigma_member);

    // stars without a remedy inequality are not enough
    StarReport stars_only = sigma_membership(rational_quaternion_point({2, 3}), 1000);
    CHECK(stars_only.any_star());
    CHECK_FALSE(stars_only.remedy.cond2);
    CHECK_FALSE(stars_only.remedy.cond3);
    CHECK_FALSE(stars_only.sigma_member);
}

TEST_CASE("excluding one residue characteristic") {
    ForgeRecipe r = forge_recipe(2, 3, 7);
    PointDescriptor pt = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});

    ProximityReport at3 = proximity_exclusion(pt, 3, 1000);
    CHECK(at3.exclusion); // 7 survives
    CHECK(at3.holding == std::vector<unsigned>{4, 6});

    ProximityReport at11 = proximity_exclusion(pt, 11, 1000);
    CHECK(at11.exclusion);
    CHECK(at11.holding == std::vector<unsigned>{4, 6});

    // a prime-free condition excludes every characteristic
    ProximityReport cm = proximity_exclusion(cm_point16(), 97, 1000);
    CHECK(cm.exclusion);
    CHECK(cm.holding.front() == 1);

    CHECK_FALSE(proximity_exclusion(generic_point(), 5, 1000).exclusion);
    CHECK_THROWS_AS(proximity_exclusion(pt, 6, 1000), argument_error);
}
