#include "stargate/fieldforge.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>

#include <mpfr.h>

#include "stargate/error.hpp"
#include "stargate/matrix.hpp"

namespace stargate {

Integer find_prime_mod(unsigned beta) {
    if (beta < 1) throw argument_error("beta must be at least 1");
    for (Integer n = 2 * beta + 1; n <= 1000000; n += 2 * beta)
        if (is_prime(n)) return n;
    throw not_found_error("no prime = 1 mod 2 beta below 10^6");
}

namespace {

Integer primitive_root(const Integer& p) {
    Integer n = p - 1;
    std::vector<Integer> prime_factors;
    Integer m = n;
    for (Integer d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (Integer g = 2; g < p; ++g) {
        bool ok = true;
        for (const auto& f : prime_factors) {
            Integer e = n / f, r;
            mpz_powm(r.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
            if (r == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw internal_error("no primitive root found");
}

class Real {
public:
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    Real(const Real&) = delete;
    Real& operator=(const Real&) = delete;
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

/// Product over the periods of (x - eta_j) at the given precision; empty
/// when a coefficient lands too far from an integer to round safely.
std::optional<IntPoly> period_poly_at(const Integer& p, unsigned beta, mpfr_prec_t prec) {
    unsigned long pl = mpz_get_ui(p.get_mpz_t());
    Integer g = primitive_root(p);

    Real two_pi(prec);
    mpfr_const_pi(two_pi.get(), MPFR_RNDN);
    mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);

    std::vector<Real> eta;
    for (unsigned j = 0; j < beta; ++j) eta.emplace_back(prec);
    Real angle(prec), c(prec);
    Integer power = 1;
    for (unsigned long e = 0; e + 1 < pl; ++e) {
        mpfr_mul_ui(angle.get(), two_pi.get(), mpz_get_ui(power.get_mpz_t()), MPFR_RNDN);
        mpfr_div_ui(angle.get(), angle.get(), pl, MPFR_RNDN);
        mpfr_cos(c.get(), angle.get(), MPFR_RNDN);
        mpfr_add(eta[e % beta].get(), eta[e % beta].get(), c.get(), MPFR_RNDN);
        power = power * g % p;
    }

    std::vector<Real> coeffs;
    coeffs.emplace_back(prec);
    mpfr_set_ui(coeffs[0].get(), 1, MPFR_RNDN);
    Real tmp(prec);
    for (unsigned j = 0; j < beta; ++j) {
        std::vector<Real> next;
        for (std::size_t i = 0; i <= coeffs.size(); ++i) next.emplace_back(prec);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            mpfr_mul(tmp.get(), coeffs[i].get(), eta[j].get(), MPFR_RNDN);
            mpfr_sub(next[i].get(), next[i].get(), tmp.get(), MPFR_RNDN);
            mpfr_add(next[i + 1].get(), next[i + 1].get(), coeffs[i].get(), MPFR_RNDN);
        }
        coeffs = std::move(next);
    }

    std::vector<Integer> rounded(coeffs.size());
    Real diff(prec);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        mpfr_get_z(rounded[i].get_mpz_t(), coeffs[i].get(), MPFR_RNDN);
        mpfr_sub_z(diff.get(), coeffs[i].get(), rounded[i].get_mpz_t(), MPFR_RNDN);
        mpfr_abs(diff.get(), diff.get(), MPFR_RNDN);
        if (mpfr_cmp_d(diff.get(), 0.25) >= 0) return std::nullopt;
    }
    return IntPoly(std::move(rounded));
}

/// disc(f) = index^2 * disc(K) with disc(K) a positive power of p for a
/// totally real field unramified outside p; so after fixing the sign
/// convention the p-free part must be a positive perfect square.
bool plausibly_ramified_only_at(const IntPoly& f, const Integer& p, unsigned beta) {
    Integer disc = f.discriminant();
    if (beta % 4 == 2 || beta % 4 == 3) disc = -disc; // (-1)^{beta(beta-1)/2}
    if (disc <= 0) return false;
    while (disc % p == 0) disc /= p;
    return mpz_perfect_square_p(disc.get_mpz_t()) != 0;
}

} // namespace

NumberField gaussian_period_field(const Integer& p, unsigned beta) {
    if (beta < 1) throw argument_error("beta must be at least 1");
    if (!is_prime(p) || (p - 1) % (2 * beta) != 0)
        throw precondition_error("need a prime p = 1 mod 2 beta");

    long prec = 200;
    if (const char* env = std::getenv("STARGATE_PRECISION_BITS")) {
        long requested = std::atol(env);
        if (requested >= 64) prec = requested;
    }
    for (int attempt = 0; attempt < 2; ++attempt, prec *= 2) {
        auto poly = period_poly_at(p, beta, static_cast<mpfr_prec_t>(prec));
        if (!poly || !poly->is_monic()) continue;
        if (!is_irreducible_over_q(*poly)) continue;
        if (real_root_count(*poly) != static_cast<int>(beta)) continue;
        if (beta >= 2 && !plausibly_ramified_only_at(*poly, p, beta)) continue;
        return NumberField(*poly);
    }
    throw internal_error("period polynomial failed exact verification");
}

std::vector<Integer> inert_primes(const NumberField& f0, const Integer& bound) {
    std::vector<Integer> out;
    for (Integer l = 2; l <= bound; mpz_nextprime(l.get_mpz_t(), l.get_mpz_t())) {
        SplittingType st = splitting_type(f0, l);
        if (st.certified && st.places.size() == 1 && st.places[0].ramification_index == 1 &&
            st.places[0].residue_degree == f0.degree())
            out.push_back(l);
    }
    return out;
}

namespace {

/// Multiplication by alpha = y + z on the basis {y^a z^b}, with y a root of
/// f0's min poly and z^2 = -q.
RatMatrix multiplication_by_alpha(const NumberField& f0, const Integer& q) {
    unsigned beta = f0.degree();
    unsigned n = 2 * beta;
    const IntPoly& f = f0.min_poly();
    auto idx = [beta](unsigned a, unsigned b) { return a + beta * b; };
    RatMatrix m(n, n);
    for (unsigned b = 0; b < 2; ++b)
        for (unsigned a = 0; a < beta; ++a) {
            unsigned col = idx(a, b);
            if (a + 1 < beta)
                m.at(idx(a + 1, b), col) += 1;
            else
                for (unsigned i = 0; i < beta; ++i) m.at(idx(i, b), col) -= Rational(f.coeff(i));
            if (b == 0)
                m.at(idx(a, 1), col) += 1;
            else
                m.at(idx(a, 0), col) -= Rational(q);
        }
    return m;
}

/// Characteristic polynomial by the Faddeev-LeVerrier recursion; the input
/// matrices here are integral, so the result is too.
IntPoly integer_charpoly(const RatMatrix& m) {
    std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix ak = m;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1) {
            RatMatrix shifted = ak;
            for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
            ak = m * shifted;
        }
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += ak.at(i, i);
        c[n - k] = -tr / Integer(static_cast<long>(k));
    }
    std::vector<Integer> ic(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (!is_integer(c[i])) throw internal_error("characteristic polynomial not integral");
        ic[i] = c[i].get_num();
    }
    return IntPoly(std::move(ic));
}

/// Columns = coordinates of 1, alpha, ..., alpha^{n-1} in the {y^a z^b} basis.
RatMatrix alpha_power_basis(const RatMatrix& mult, std::size_t n) {
    std::vector<RatVector> cols;
    RatVector v(n, Rational(0));
    v[0] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        cols.push_back(v);
        v = mult.apply(v);
    }
    return RatMatrix::from_columns(cols);
}

} // namespace

NumberField cm_compositum(const NumberField& f0, const Integer& q) {
    if (!is_prime(q)) throw argument_error("q must be prime");
    IntPoly charpoly = integer_charpoly(multiplication_by_alpha(f0, q));
    if (!is_irreducible_over_q(charpoly))
        throw internal_error("y + i sqrt(q) does not generate the compositum");
    return NumberField(charpoly);
}

QPoly cm_conjugation_poly(const NumberField& f0, const Integer& q) {
    if (!is_prime(q)) throw argument_error("q must be prime");
    unsigned beta = f0.degree();
    std::size_t n = 2 * beta;
    RatMatrix mult = multiplication_by_alpha(f0, q);
    RatVector target(n, Rational(0));
    if (beta >= 2)
        target[1] = 1; // y
    else
        target[0] = -Rational(f0.min_poly().coeff(0)); // y is rational
    target[beta] -= 1; // -z
    return QPoly(solve(alpha_power_basis(mult, n), target));
}

namespace {

/// Whether the inert place of f0 over l splits in f0(i sqrt(q)): for odd l,
/// -q must be a nonzero square in the residue field F_{l^beta}; at l = 2 the
/// extension is unramified only for q = 3 mod 4, and the Artin-Schreier
/// criterion reduces to the residue of q mod 8 and the parity of beta.
bool splits_at_inert_place(unsigned beta, const Integer& l, const Integer& q) {
    if (l == 2) {
        unsigned long r = mpz_fdiv_ui(q.get_mpz_t(), 8);
        return r == 7 || (r == 3 && beta % 2 == 0);
    }
    if (q % l == 0) return false;
    Integer b = (-q) % l;
    if (b < 0) b += l;
    Integer order;
    mpz_pow_ui(order.get_mpz_t(), l.get_mpz_t(), beta);
    Integer e = (order - 1) / 2;
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), l.get_mpz_t());
    return r == 1;
}

void require_inert(const NumberField& f0, const Integer& l) {
    SplittingType st = splitting_type(f0, l);
    if (!st.certified || st.places.size() != 1 || st.places[0].ramification_index != 1)
        throw argument_error("l1 and l2 must be inert in f0");
}

/// Factorization of l in f is certified and shows exactly two unramified
/// places of residue degree beta.
bool certified_pair_split(const NumberField& f, const Integer& l, unsigned beta) {
    SplittingType st = splitting_type(f, l);
    if (!st.certified || st.places.size() != 2) return false;
    for (const auto& w : st.places)
        if (w.ramification_index != 1 || w.residue_degree != beta) return false;
    return true;
}

} // namespace

Integer choose_q(const NumberField& f0, const Integer& l1, const Integer& l2,
                 const Integer& bound) {
    if (l1 == l2) throw precondition_error("l1 and l2 must be distinct");
    require_inert(f0, l1);
    require_inert(f0, l2);
    unsigned beta = f0.degree();
    for (Integer q = 2; q <= bound; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        if (q == l1 || q == l2 || f0.discriminant() % q == 0) continue;
        if (!splits_at_inert_place(beta, l1, q) || !splits_at_inert_place(beta, l2, q)) continue;
        // Where the canonical generator's factorization is certified it must
        // agree with the residue-field criterion.
        NumberField f = cm_compositum(f0, q);
        for (const Integer& l : {l1, l2}) {
            SplittingType st = splitting_type(f, l);
            if (st.certified && !certified_pair_split(f, l, beta))
                throw internal_error("certified factorization contradicts the split criterion");
        }
        return q;
    }
    throw not_found_error("no admissible q up to the bound");
}

ForgeRecipe forge_recipe(unsigned beta, const Integer& l1, const Integer& l2,
                         const Integer& q_bound) {
    ForgeRecipe r;
    r.beta = beta;
    r.p = find_prime_mod(beta);
    r.f0 = gaussian_period_field(r.p, beta);
    r.l1 = l1;
    r.l2 = l2;
    if (l1 == l2) throw precondition_error("l1 and l2 must be distinct");
    require_inert(r.f0, l1);
    require_inert(r.f0, l2);
    // Designated places are addressed by canonical factor order, so the scan
    // keeps only q whose splitting at both l_j is certified by factorization.
    bool found = false;
    for (Integer q = 2; q <= q_bound; mpz_nextprime(q.get_mpz_t(), q.get_mpz_t())) {
        if (q == l1 || q == l2 || r.f0.discriminant() % q == 0) continue;
        if (!splits_at_inert_place(beta, l1, q) || !splits_at_inert_place(beta, l2, q)) continue;
        NumberField f = cm_compositum(r.f0, q);
        if (!certified_pair_split(f, l1, beta) || !certified_pair_split(f, l2, beta)) continue;
        r.q = q;
        r.f = f;
        found = true;
        break;
    }
    if (!found) throw not_found_error("no q with certified place indexing up to the bound");
    r.sigma = cm_conjugation_poly(r.f0, r.q);
    if (real_embedding_count(r.f) != 0) throw internal_error("CM field has a real embedding");
    if (!is_order_two_automorphism(r.f, r.sigma))
        throw internal_error("conjugation is not an order-2 automorphism");
    if (fixed_field_degree(r.f, r.sigma) != beta)
        throw internal_error("conjugation does not fix exactly the real subfield");
    for (const Integer& l : {l1, l2}) {
        PlacePermutation perm = conjugation_action_on_places(r.f, r.sigma, l);
        if (perm.mapping != std::vector<std::size_t>{1, 0})
            throw internal_error("conjugation does not swap the designated places");
        r.designated_places.push_back({l, 0});
        r.designated_places.push_back({l, 1});
    }
    return r;
}

bool d_iv_membership(const AlbertDescriptor& desc, const ForgeRecipe& recipe, unsigned d) {
    if (desc.center.min_poly() != recipe.f.min_poly())
        throw argument_error("descriptor center does not match the forged field");
    if (desc.albert_type != AlbertType::IV) return false;
    if (desc.degree_d != d) return false;
    if (!validate_albert(desc).empty()) return false;
    for (const auto& w : recipe.designated_places) {
        auto inv = invariants_at(desc, w.prime);
        if (w.place >= inv.size() || mod_one(inv[w.place]) == 0) return false;
    }
    return true;
}

Cor1Verdict corollary1_check(const HodgeSummand& summand, const ForgeRecipe& recipe,
                             const std::vector<unsigned>& hodge_dims) {
    if (summand.albert.center.min_poly() != recipe.f.min_poly())
        throw argument_error("summand center does not match the forged field");
    unsigned h = 0;
    for (unsigned x : hodge_dims) h = std::max(h, x);

    Cor1Verdict out;
    out.dim_ok = h > 0 && Integer(2) * recipe.beta * h >= summand.dim_v;
    unsigned d = summand.albert.degree_d;
    unsigned m = summand.multiplicity;
    if (d == 2)
        out.divisor = Integer(4) * recipe.beta * m;
    else if (d >= 3)
        out.divisor = Integer(m) * d * recipe.beta;
    else
        out.divisor = Integer(m) * recipe.beta;
    out.divisor_ok = true;
    for (unsigned x : hodge_dims)
        if (x > 0 && x % out.divisor == 0) out.divisor_ok = false;
    out.member = out.dim_ok && out.divisor_ok;
    return out;
}

} // namespace stargate
