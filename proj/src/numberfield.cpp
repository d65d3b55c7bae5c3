#include "stargate/numberfield.hpp"

#include <bitset>
#include <set>

#include "stargate/error.hpp"
#include "stargate/matrix.hpp"

namespace stargate {

namespace {

constexpr unsigned kMaxDegree = 12;

bool has_integer_root(const IntPoly& f) {
    Integer c0 = f.coeff(0);
    if (c0 == 0) return true;
    // Monic: rational roots are integers dividing the constant term.
    Integer a = abs(c0);
    std::vector<Integer> divisors;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            divisors.push_back(d);
            divisors.push_back(a / d);
        }
    }
    for (const auto& d : divisors) {
        if (f.eval(d) == 0 || f.eval(Integer(-d)) == 0) return true;
    }
    return false;
}

/// Achievable proper-factor degrees from the degree multiset mod one prime.
std::bitset<kMaxDegree + 1> degree_sums(const std::vector<ModFactor>& factors, int total) {
    std::bitset<kMaxDegree + 1> reachable;
    reachable[0] = true;
    for (const auto& mf : factors) {
        auto next = reachable;
        int d = mf.factor.degree();
        for (int i = 0; i + d <= total; ++i)
            if (reachable[static_cast<std::size_t>(i)]) next[static_cast<std::size_t>(i + d)] = true;
        reachable = next;
    }
    reachable[0] = false;
    reachable[static_cast<std::size_t>(total)] = false;
    return reachable;
}

bool squarefree_mod(const IntPoly& f, const Integer& p) {
    ModPoly fp = ModPoly::reduce(f, p);
    if (fp.degree() != f.degree()) return false;
    return ModPoly::gcd(fp, fp.derivative()).degree() == 0;
}

/// Hensel-free recombination: one prime past twice the Mignotte bound,
/// candidate factors are subset products lifted symmetrically.
bool reducible_by_recombination(const IntPoly& f) {
    int d = f.degree();
    Integer norm_sq = 0;
    for (const auto& c : f.coeffs()) norm_sq += c * c;
    Integer bound = 1;
    mpz_sqrt(bound.get_mpz_t(), norm_sq.get_mpz_t());
    bound += 1;
    bound <<= static_cast<unsigned>(d + 1); // 2 * 2^d * ||f||_2, rounded up
    Integer p = bound;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    while (!squarefree_mod(f, p)) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());

    auto factors = factor_mod_p(f, p);
    std::size_t k = factors.size();
    if (k <= 1) return false;
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << k); ++mask) {
        int deg = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) deg += factors[i].factor.degree();
        if (deg == 0 || deg > d / 2) continue;
        ModPoly prod = ModPoly::constant(p, 1);
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (std::size_t{1} << i)) prod = prod * factors[i].factor;
        IntPoly candidate = prod.lift_symmetric();
        if (f.divisible_by_monic(candidate)) return true;
    }
    return false;
}

} // namespace

bool is_irreducible_over_q(const IntPoly& f) {
    if (!f.is_monic()) throw argument_error("min polys must be monic");
    int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    if (static_cast<unsigned>(d) > kMaxDegree)
        throw precondition_error("degree cap 12 exceeded");
    if (has_integer_root(f)) return false;
    if (d <= 3) return true;

    // Degree-pattern sieve over several good primes.
    std::bitset<kMaxDegree + 1> candidates;
    for (int i = 1; i < d; ++i) candidates[static_cast<std::size_t>(i)] = true;
    Integer p = 2;
    int used = 0;
    while (used < 8 && candidates.any()) {
        if (squarefree_mod(f, p)) {
            candidates &= degree_sums(factor_mod_p(f, p), d);
            ++used;
        }
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    if (candidates.none()) return true;
    return !reducible_by_recombination(f);
}

NumberField::NumberField(IntPoly min_poly) : min_poly_(std::move(min_poly)) {
    if (!min_poly_.is_monic()) throw argument_error("min_poly must be monic");
    if (min_poly_.degree() < 1) throw argument_error("min_poly must be non-constant");
    if (static_cast<unsigned>(min_poly_.degree()) > kMaxDegree)
        throw precondition_error("field degree cap 12 exceeded");
    if (min_poly_.degree() > 1 && !is_irreducible_over_q(min_poly_))
        throw argument_error("min_poly is reducible over Q");
    disc_ = min_poly_.degree() == 1 ? Integer(1) : min_poly_.discriminant();
}

SplittingType splitting_type(const NumberField& field, const Integer& l) {
    if (!is_prime(l)) throw argument_error("l is not prime");
    bool certified = field.discriminant() % l != 0;
    SplittingType st;
    st.prime = l;
    st.certified = certified;
    unsigned total = 0;
    for (const auto& mf : factor_mod_p(field.min_poly(), l)) {
        Place w;
        w.residue_degree = static_cast<unsigned>(mf.factor.degree());
        w.ramification_index = mf.multiplicity;
        w.factor = mf.factor.lift();
        total += w.residue_degree * w.ramification_index;
        st.places.push_back(std::move(w));
    }
    if (total != field.degree())
        throw internal_error("sum e_w * f_w does not reach the field degree");
    if (certified)
        for (const auto& w : st.places)
            if (w.ramification_index != 1)
                throw internal_error("repeated factor at a prime not dividing disc");
    return st;
}

unsigned real_embedding_count(const NumberField& field) {
    int n = real_root_count(field.min_poly());
    return static_cast<unsigned>(n < 0 ? 0 : n);
}

bool is_order_two_automorphism(const NumberField& field, const QPoly& sigma_poly) {
    QPoly m(field.min_poly());
    QPoly s = sigma_poly.rem(m);
    if (!QPoly::compose_mod(m, s, m).is_zero()) return false;
    QPoly ss = QPoly::compose_mod(s, s, m);
    return ss == QPoly(IntPoly::x()).rem(m);
}

unsigned fixed_field_degree(const NumberField& field, const QPoly& sigma_poly) {
    unsigned n = field.degree();
    QPoly m(field.min_poly());
    QPoly s = sigma_poly.rem(m);
    RatMatrix sm(n, n);
    QPoly power(std::vector<Rational>{Rational(1)});
    for (unsigned j = 0; j < n; ++j) {
        for (unsigned i = 0; i < n; ++i) sm.at(i, j) = power.coeff(i);
        power = (power * s).rem(m);
    }
    RatMatrix diff = sm - RatMatrix::identity(n);
    return static_cast<unsigned>(diff.kernel_basis().size());
}

PlacePermutation conjugation_action_on_places(const NumberField& field,
                                              const QPoly& sigma_poly,
                                              const Integer& l) {
    if (!is_order_two_automorphism(field, sigma_poly))
        throw argument_error("sigma is not an order-2 automorphism");
    SplittingType st = splitting_type(field, l);
    PlacePermutation out;
    out.certified = st.certified;
    out.mapping.resize(st.places.size());
    for (std::size_t w = 0; w < st.places.size(); ++w) {
        ModPoly gw = ModPoly::reduce(st.places[w].factor, l);
        ModPoly s = ModPoly::reduce(sigma_poly, l).rem(gw);
        bool found = false;
        for (std::size_t j = 0; j < st.places.size(); ++j) {
            ModPoly gj = ModPoly::reduce(st.places[j].factor, l);
            if (gj.compose_mod(s, gw).is_zero()) {
                out.mapping[w] = j;
                found = true;
                break;
            }
        }
        if (!found) throw internal_error("sigma image matches no place factor");
    }
    return out;
}

} // namespace stargate
