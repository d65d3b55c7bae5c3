#include "stargate/albert.hpp"

#include <map>
#include <set>

#include "stargate/error.hpp"

namespace stargate {

std::string to_string(AlbertType t) {
    switch (t) {
        case AlbertType::I: return "I";
        case AlbertType::II: return "II";
        case AlbertType::III: return "III";
        case AlbertType::IV: return "IV";
    }
    throw internal_error("unknown algebra type");
}

AlbertType albert_type_from_string(const std::string& s) {
    if (s == "I") return AlbertType::I;
    if (s == "II") return AlbertType::II;
    if (s == "III") return AlbertType::III;
    if (s == "IV") return AlbertType::IV;
    throw argument_error("unknown algebra type: " + s);
}

Rational mod_one(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q - Rational(fl);
}

std::vector<Rational> invariants_at(const AlbertDescriptor& desc, const Integer& l) {
    SplittingType st = splitting_type(desc.center, l);
    std::vector<Rational> inv(st.places.size(), Rational(0));
    for (const auto& h : desc.invariants)
        if (h.prime == l) {
            if (h.place >= inv.size()) throw argument_error("invariant place index out of range");
            inv[h.place] = mod_one(h.value);
        }
    return inv;
}

namespace {

bool totally_real(const NumberField& f) {
    return real_embedding_count(f) == f.degree();
}

void validate_type_iv(const AlbertDescriptor& desc, std::vector<std::string>& out) {
    if (real_embedding_count(desc.center) != 0)
        out.push_back("type IV center must have no real embeddings");
    if (!desc.cm_conjugation) {
        out.push_back("type IV requires the conjugation automorphism");
        return;
    }
    if (!is_order_two_automorphism(desc.center, *desc.cm_conjugation)) {
        out.push_back("conjugation is not an order-2 automorphism of the center");
        return;
    }
    if (desc.center.degree() % 2 != 0 ||
        fixed_field_degree(desc.center, *desc.cm_conjugation) != desc.center.degree() / 2)
        out.push_back("conjugation fixed field must have half the center degree");

    std::set<Integer> primes;
    for (const auto& h : desc.invariants) primes.insert(h.prime);
    for (const auto& l : primes) {
        std::vector<Rational> inv;
        try {
            inv = invariants_at(desc, l);
        } catch (const argument_error& e) {
            out.push_back(std::string(e.what()) + " at prime " + l.get_str());
            continue;
        }
        PlacePermutation perm = conjugation_action_on_places(desc.center, *desc.cm_conjugation, l);
        for (std::size_t w = 0; w < inv.size(); ++w) {
            if (perm.mapping[w] == w && inv[w] != 0)
                out.push_back("nonzero invariant at a conjugation-fixed place over " + l.get_str());
            if (mod_one(inv[w] + inv[perm.mapping[w]]) != 0)
                out.push_back("invariants at a conjugate pair of places over " + l.get_str() +
                              " do not sum to an integer");
        }
    }
}

} // namespace

std::vector<std::string> validate_albert(const AlbertDescriptor& desc) {
    std::vector<std::string> out;
    if (desc.degree_d == 0) {
        out.push_back("degree d must be positive");
        return out;
    }
    std::set<std::pair<Integer, std::size_t>> seen;
    for (const auto& h : desc.invariants) {
        if (!is_prime(h.prime)) out.push_back("invariant prime " + h.prime.get_str() + " is not prime");
        if (!seen.insert({h.prime, h.place}).second)
            out.push_back("duplicate invariant at prime " + h.prime.get_str());
        Rational v = mod_one(h.value);
        if (Integer(desc.degree_d) % v.get_den() != 0)
            out.push_back("invariant denominator does not divide d at prime " + h.prime.get_str());
    }
    switch (desc.albert_type) {
        case AlbertType::I:
            if (desc.degree_d != 1) out.push_back("type I requires d = 1");
            if (!totally_real(desc.center)) out.push_back("type I center must be totally real");
            break;
        case AlbertType::II:
            if (desc.degree_d != 2) out.push_back("type II requires d = 2");
            if (!totally_real(desc.center)) out.push_back("type II center must be totally real");
            if (!desc.real_places_split)
                out.push_back("type II must be declared split at all real places");
            break;
        case AlbertType::III:
            if (desc.degree_d != 2) out.push_back("type III requires d = 2");
            if (!totally_real(desc.center)) out.push_back("type III center must be totally real");
            if (desc.real_places_split)
                out.push_back("type III must be declared ramified at all real places");
            break;
        case AlbertType::IV:
            validate_type_iv(desc, out);
            break;
    }
    return out;
}

std::vector<std::string> validate_hodge_algebra(const HodgeAlgebra& alg, unsigned mu,
                                                std::vector<std::string>* warnings) {
    std::vector<std::string> out;
    if (alg.summands.empty()) out.push_back("algebra needs at least one summand");
    unsigned total = 0;
    for (std::size_t i = 0; i < alg.summands.size(); ++i) {
        const auto& s = alg.summands[i];
        std::string tag = "summand " + std::to_string(i) + ": ";
        if (s.multiplicity == 0) out.push_back(tag + "multiplicity must be positive");
        if (s.dim_v == 0) out.push_back(tag + "dim V must be positive");
        total += s.multiplicity * s.dim_v;
        for (auto& v : validate_albert(s.albert)) out.push_back(tag + v);
        unsigned f = s.albert.center.degree();
        if (s.dim_v % f != 0) out.push_back(tag + "center degree must divide dim V");
        unsigned dd = s.albert.degree_d * s.albert.degree_d * f;
        if (warnings && s.dim_v % f == 0 && s.dim_v % dd != 0)
            warnings->push_back(tag + "dim V is not a multiple of d^2 * f");
    }
    if (total != mu)
        out.push_back("summand dimensions sum to " + std::to_string(total) + ", expected " +
                      std::to_string(mu));
    return out;
}

LocalSplitting local_structure(const AlbertDescriptor& desc, const Integer& l) {
    SplittingType st = splitting_type(desc.center, l);
    LocalSplitting out;
    out.prime = l;
    out.certified = st.certified;
    if (!st.certified) return out;
    std::vector<Rational> inv = invariants_at(desc, l);
    for (std::size_t w = 0; w < st.places.size(); ++w) {
        LocalStructure ls;
        ls.prime = l;
        ls.place = w;
        ls.local_degree = st.places[w].residue_degree * st.places[w].ramification_index;
        ls.d_prime = static_cast<unsigned>(inv[w].get_den().get_ui());
        if (desc.degree_d % ls.d_prime != 0)
            throw argument_error("invariant denominator does not divide d");
        ls.r = desc.degree_d / ls.d_prime;
        out.places.push_back(std::move(ls));
    }
    return out;
}

unsigned max_comm_semisimple_dim(const HodgeAlgebra& alg) {
    unsigned total = 0;
    for (const auto& s : alg.summands) total += s.multiplicity * s.albert.center.degree();
    return total;
}

EmbeddingCheck embedding_obstruction(unsigned multiplicity, const LocalStructure& ls,
                                     const std::vector<unsigned>& dims) {
    if (dims.empty()) throw degenerate_input_error("no graded dimensions to test");
    for (unsigned h : dims)
        if (h == 0) throw argument_error("graded dimensions must be strictly positive");
    EmbeddingCheck check;
    check.divisor = Integer(multiplicity) * ls.r * ls.d_prime * ls.d_prime * ls.local_degree;
    for (std::size_t j = 0; j < dims.size(); ++j)
        if (Integer(dims[j]) % check.divisor == 0) {
            check.witness = j;
            break;
        }
    return check;
}

} // namespace stargate
