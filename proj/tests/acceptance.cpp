// Acceptance gate: twelve end-to-end criteria, one pass/fail line each.
// Every oracle here is recomputed locally rather than taken from the library
// under test (exhaustive filtration searches, trial-division factorization,
// Gram recomputation from pairings, span ranks from scratch).

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "stargate/error.hpp"
#include "stargate/fieldforge.hpp"
#include "stargate/filtration.hpp"
#include "stargate/gseries.hpp"
#include "stargate/numberfield.hpp"
#include "stargate/starcheck.hpp"
#include "stargate/symplectic.hpp"

using namespace stargate;

namespace {

IntPoly P(std::vector<long> c) { return IntPoly::from_longs(std::move(c)); }

RatMatrix jordan(const std::vector<unsigned>& blocks) {
    std::size_t mu = 0;
    for (unsigned b : blocks) mu += b;
    RatMatrix m(mu, mu);
    std::size_t off = 0;
    for (unsigned b : blocks) {
        for (unsigned i = 0; i + 1 < b; ++i) m.at(off + i, off + i + 1) = 1;
        off += b;
    }
    return m;
}

RatMatrix random_unimodular(std::size_t mu, std::mt19937& gen) {
    RatMatrix p = RatMatrix::identity(mu);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = gen() % mu, j = gen() % mu;
        if (i == j) continue;
        long c = static_cast<long>(gen() % 5) - 2;
        for (std::size_t k = 0; k < mu; ++k) p.at(i, k) += Rational(c) * p.at(j, k);
    }
    return p;
}

std::vector<std::vector<unsigned>> partitions(unsigned mu) {
    if (mu == 0) return {{}};
    std::vector<std::vector<unsigned>> out;
    for (unsigned first = mu; first >= 1; --first)
        for (auto rest : partitions(mu - first))
            if (rest.empty() || rest.front() <= first) {
                rest.insert(rest.begin(), first);
                out.push_back(rest);
            }
    return out;
}

/// Independent axiom checker, shared by the random and exhaustive passes.
bool chain_satisfies_axioms(const RatMatrix& n_mat, const std::vector<Subspace>& chain,
                            unsigned center) {
    std::size_t mu = n_mat.rows();
    long n = static_cast<long>(center);
    if (chain.back().dim() != mu) return false;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        if (!chain[i + 1].contains(chain[i])) return false;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Subspace pushed = chain[i].apply(n_mat);
        if (i < 2) {
            if (pushed.dim() != 0) return false;
        } else if (!chain[i - 2].contains(pushed)) {
            return false;
        }
    }
    for (long i = 1; i <= n; ++i) {
        std::size_t hi = chain[static_cast<std::size_t>(n + i)].dim() -
                         chain[static_cast<std::size_t>(n + i) - 1].dim();
        std::size_t lo = chain[static_cast<std::size_t>(n - i)].dim() -
                         (n - i > 0 ? chain[static_cast<std::size_t>(n - i) - 1].dim() : 0);
        if (hi != lo) return false;
        RatMatrix power = RatMatrix::identity(mu);
        for (long k = 0; k < i; ++k) power = power * n_mat;
        Subspace pushed = chain[static_cast<std::size_t>(n + i)].apply(power);
        Subspace below = n - i > 0 ? chain[static_cast<std::size_t>(n - i) - 1] : Subspace(mu);
        if (pushed.sum(below) != chain[static_cast<std::size_t>(n - i)]) return false;
    }
    return true;
}

std::vector<Subspace> stable_lattice(const RatMatrix& n_mat) {
    std::size_t mu = n_mat.rows();
    std::vector<Subspace> lattice{Subspace(mu), Subspace::full(mu)};
    RatMatrix power = RatMatrix::identity(mu);
    for (std::size_t e = 1; e <= mu; ++e) {
        power = power * n_mat;
        for (auto s : {Subspace::kernel_of(power), Subspace::image_of(power)})
            if (std::find(lattice.begin(), lattice.end(), s) == lattice.end())
                lattice.push_back(s);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::size_t sz = lattice.size();
        for (std::size_t a = 0; a < sz; ++a)
            for (std::size_t b = a + 1; b < sz; ++b)
                for (auto s : {lattice[a].sum(lattice[b]), lattice[a].intersect(lattice[b])})
                    if (std::find(lattice.begin(), lattice.end(), s) == lattice.end()) {
                        lattice.push_back(s);
                        grew = true;
                    }
    }
    return lattice;
}

void enumerate_chains(const std::vector<Subspace>& lattice, std::size_t length,
                      std::vector<Subspace>& current,
                      const std::function<void(const std::vector<Subspace>&)>& visit) {
    if (current.size() == length) {
        visit(current);
        return;
    }
    for (const auto& s : lattice) {
        if (!current.empty() && !s.contains(current.back())) continue;
        current.push_back(s);
        enumerate_chains(lattice, length, current, visit);
        current.pop_back();
    }
}

RatMatrix random_symplectic(std::size_t mu, std::mt19937& gen) {
    std::size_t g = mu / 2;
    RatMatrix m = RatMatrix::identity(mu);
    int words = 3 + static_cast<int>(gen() % 5);
    for (int w = 0; w < words; ++w) {
        RatMatrix s = RatMatrix::identity(mu);
        switch (gen() % 3) {
            case 0: {
                for (std::size_t i = 0; i < g; ++i)
                    for (std::size_t j = i; j < g; ++j) {
                        long c = static_cast<long>(gen() % 5) - 2;
                        s.at(i, g + j) = c;
                        s.at(j, g + i) = c;
                    }
                break;
            }
            case 1: {
                for (std::size_t i = 0; i < g; ++i)
                    for (std::size_t j = i; j < g; ++j) {
                        long c = static_cast<long>(gen() % 5) - 2;
                        s.at(g + i, j) = c;
                        s.at(g + j, i) = c;
                    }
                break;
            }
            default: {
                RatMatrix a = RatMatrix::identity(g);
                for (std::size_t i = 0; i < g; ++i)
                    for (std::size_t j = i + 1; j < g; ++j)
                        a.at(i, j) = static_cast<long>(gen() % 5) - 2;
                RatMatrix inv_t = a.inverse().transpose();
                for (std::size_t i = 0; i < g; ++i)
                    for (std::size_t j = 0; j < g; ++j) {
                        s.at(i, j) = a.at(i, j);
                        s.at(g + i, g + j) = inv_t.at(i, j);
                    }
                break;
            }
        }
        m = m * s;
    }
    return m;
}

bool gram_is_standard(const SymplecticBasis& basis, const SymplecticSpace& space) {
    auto all = basis.flat();
    if (all.size() != space.dimension()) return false;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            if (space.pairing(all[i], all[j]) != space.gram().at(i, j)) return false;
    return true;
}

/// Exhaustive trial division over F_l: enumerate monic candidates by
/// increasing degree and divide out. Anything left of degree > twice the
/// last tried degree is irreducible.
std::vector<std::pair<ModPoly, unsigned>> trial_division_factor(ModPoly f) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    long l = f.modulus().get_si();
    for (int d = 1; f.degree() > 0; ++d) {
        if (2 * d > f.degree()) {
            out.emplace_back(f.monic(), 1u);
            break;
        }
        std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
        c.back() = 1;
        bool exhausted = false;
        while (!exhausted) {
            ModPoly g(f.modulus(), c);
            unsigned mult = 0;
            while (f.degree() >= d && f.rem(g).is_zero()) {
                f = f.quot(g).monic();
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
            int i = 0;
            while (i < d && ++c[static_cast<std::size_t>(i)] == l) {
                c[static_cast<std::size_t>(i)] = 0;
                ++i;
            }
            exhausted = i == d;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return ModPoly::canonical_less(a.first, b.first); });
    return out;
}

TruncatedSeries geometric(std::size_t order) {
    TruncatedSeries y;
    for (std::size_t n = 0; n <= order; ++n) y.coeffs.push_back(rat(1));
    return y;
}

TruncatedSeries log_series(std::size_t order) {
    TruncatedSeries y;
    y.coeffs.push_back(rat(0));
    for (std::size_t n = 1; n <= order; ++n)
        y.coeffs.push_back(rat(n % 2 ? 1 : -1, static_cast<long>(n)));
    return y;
}

TruncatedSeries exp_series(std::size_t order) {
    TruncatedSeries y;
    Rational a = 1;
    y.coeffs.push_back(a);
    for (std::size_t n = 1; n <= order; ++n) {
        a /= static_cast<unsigned long>(n);
        y.coeffs.push_back(a);
    }
    return y;
}

TruncatedSeries binomial_series(std::size_t order) {
    TruncatedSeries y;
    Rational a = 1;
    y.coeffs.push_back(a);
    for (std::size_t n = 1; n <= order; ++n) {
        a *= rat(2 * static_cast<long>(n) - 1, 2 * static_cast<long>(n));
        y.coeffs.push_back(a);
    }
    return y;
}

PointDescriptor showcase_point(const ForgeRecipe& r, std::vector<unsigned> dims) {
    PointDescriptor pt;
    pt.mu = 16;
    pt.n = 3;
    pt.profile = {3, std::move(dims)};
    HodgeSummand s;
    s.multiplicity = 1;
    s.dim_v = 16;
    s.albert.albert_type = AlbertType::IV;
    s.albert.center = r.f;
    s.albert.degree_d = 2;
    s.albert.cm_conjugation = r.sigma;
    for (const auto& w : r.designated_places)
        s.albert.invariants.push_back({w.prime, w.place, rat(1, 2)});
    pt.algebra.summands = {s};
    return pt;
}

/// Descriptor whose commutative semisimple part fills the ambient space:
/// copies of a single degree-four CM field, multiplicity m each.
PointDescriptor cm_descriptor(unsigned copies, unsigned multiplicity, unsigned dim_v,
                              FiltrationProfile profile) {
    PointDescriptor pt;
    pt.n = profile.center;
    pt.profile = std::move(profile);
    AlbertDescriptor d;
    d.albert_type = AlbertType::IV;
    d.center = NumberField(P({1, 1, 1, 1, 1}));
    d.degree_d = 1;
    d.cm_conjugation = QPoly(P({-1, -1, -1, -1}));
    d.center_cyclic = true;
    HodgeSummand s;
    s.multiplicity = multiplicity;
    s.dim_v = dim_v;
    s.albert = d;
    for (unsigned i = 0; i < copies; ++i) pt.algebra.summands.push_back(s);
    pt.mu = copies * multiplicity * dim_v;
    return pt;
}

// --- the twelve criteria -------------------------------------------------

bool criterion_worked_example() {
    auto start = std::chrono::steady_clock::now();
    ForgeRecipe r = forge_recipe(2, 3, 7);
    PointDescriptor pt = showcase_point(r, {4, 0, 4, 0, 4, 0, 4});
    StarReport report = sigma_membership(pt, 1000);
    bool ok = report.sigma_member;
    bool pair_found = false;
    for (const auto& w : report.star[2].witnesses) pair_found = pair_found || w.size() == 2;
    ok = ok && report.star[2].established() && pair_found;

    PointDescriptor alt = showcase_point(r, {4, 0, 0, 8, 0, 0, 4});
    ok = ok && !check_star4(alt, 1000).established();

    auto elapsed = std::chrono::steady_clock::now() - start;
    return ok && elapsed < std::chrono::seconds(1);
}

bool criterion_filtration_axioms() {
    auto start = std::chrono::steady_clock::now();
    std::mt19937 gen(101);
    bool ok = true;
    int done = 0;
    while (done < 200) {
        unsigned mu = 2 + gen() % 7;
        auto parts = partitions(mu);
        auto blocks = parts[gen() % parts.size()];
        unsigned deg = blocks.front();
        RatMatrix p = random_unimodular(mu, gen);
        RatMatrix n_mat = p * jordan(blocks) * p.inverse();
        unsigned center = deg - 1 + gen() % 2;
        WeightFiltration wf = weight_filtration(NilpotentOperator(n_mat), center);
        ok = ok && wf.profile.total() == mu;
        ok = ok && chain_satisfies_axioms(n_mat, wf.subspaces, center);
        ++done;
    }
    for (unsigned mu = 1; mu <= 4 && ok; ++mu)
        for (const auto& blocks : partitions(mu)) {
            RatMatrix n_mat = jordan(blocks);
            unsigned center = blocks.front() - 1;
            WeightFiltration wf = weight_filtration(NilpotentOperator(n_mat), center);
            auto lattice = stable_lattice(n_mat);
            int matches = 0;
            bool computed_found = false;
            std::vector<Subspace> current;
            enumerate_chains(lattice, 2 * center + 1, current,
                             [&](const std::vector<Subspace>& chain) {
                                 if (!chain_satisfies_axioms(n_mat, chain, center)) return;
                                 ++matches;
                                 if (chain == wf.subspaces) computed_found = true;
                             });
            ok = ok && matches == 1 && computed_found;
        }
    auto elapsed = std::chrono::steady_clock::now() - start;
    return ok && elapsed < std::chrono::seconds(30);
}

bool criterion_profile_invariance() {
    std::mt19937 gen(211);
    bool ok = true;
    for (const auto& blocks :
         {std::vector<unsigned>{2}, std::vector<unsigned>{3, 1}, std::vector<unsigned>{2, 2, 1}}) {
        NilpotentOperator op(jordan(blocks));
        unsigned center = blocks.front() - 1;
        for (int trial = 0; trial < 100; ++trial) {
            RatMatrix p = random_unimodular(op.size(), gen);
            Rational a = rat(static_cast<long>(gen() % 9) + 1, static_cast<long>(gen() % 4) + 1);
            if (gen() % 2) a = -a;
            ok = ok && profile_invariance_check(op, p, a, center);
        }
    }
    return ok;
}

bool criterion_torus_bound() {
    bool ok = true;
    for (unsigned mu = 1; mu <= 6; ++mu)
        for (const auto& blocks : partitions(mu)) {
            RatMatrix n_mat = jordan(blocks);
            auto res = torus_bound_check(NilpotentOperator(n_mat));
            ok = ok && res.ok;
            ok = ok && res.centralizer_torus_dim == res.bound;
            ok = ok && res.centralizer_torus_dim == mu - n_mat.rank();
        }
    return ok;
}

bool criterion_nilpotent_reduce() {
    std::mt19937 gen(307);
    bool ok = true;
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t mu = 2 + gen() % 7;
        RatMatrix r(mu, mu);
        for (std::size_t i = 0; i < mu; ++i)
            for (std::size_t j = i + 1; j < mu; ++j)
                r.at(i, j) = static_cast<long>(gen() % 7) - 3;
        auto out = nilpotent_reduce(NilpotentOperator(r));
        ok = ok && out.q_left * r * out.q_right == out.reduced;
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < mu; ++i) {
            std::size_t in_row = 0, in_col = 0;
            for (std::size_t j = 0; j < mu; ++j) {
                if (out.reduced.at(i, j) != 0) ++in_row, ++nonzero;
                if (out.reduced.at(j, i) != 0) ++in_col;
            }
            ok = ok && in_row <= 1 && in_col <= 1;
        }
        ok = ok && nonzero == r.rank();
    }
    return ok;
}

bool criterion_splitting_oracle() {
    std::vector<NumberField> corpus;
    corpus.emplace_back(P({-1, 1}));
    corpus.emplace_back(P({1, 0, 1}));
    corpus.emplace_back(P({-5, 0, 1}));
    corpus.emplace_back(P({-1, -2, 1, 1}));
    corpus.emplace_back(P({1, 1, 1, 1, 1}));
    corpus.emplace_back(P({-3, 1, 0, 0, 0, 1}));
    bool ok = true;
    for (const auto& field : corpus) {
        for (long l = 2; l <= 100; ++l) {
            if (!is_prime(Integer(l))) continue;
            auto st = splitting_type(field, l);
            unsigned total = 0;
            for (const auto& w : st.places) total += w.local_degree();
            ok = ok && total == field.degree();

            auto oracle = trial_division_factor(ModPoly::reduce(field.min_poly(), l));
            std::vector<std::pair<ModPoly, unsigned>> reported;
            for (const auto& w : st.places)
                reported.emplace_back(ModPoly::reduce(w.factor, l), w.ramification_index);
            std::sort(reported.begin(), reported.end(), [](const auto& a, const auto& b) {
                return ModPoly::canonical_less(a.first, b.first);
            });
            ok = ok && reported.size() == oracle.size();
            for (std::size_t i = 0; ok && i < oracle.size(); ++i) {
                ok = ok && reported[i].first == oracle[i].first;
                ok = ok && reported[i].second == oracle[i].second;
            }
            for (const auto& w : st.places)
                ok = ok && w.residue_degree == static_cast<unsigned>(w.factor.degree());
        }
    }
    return ok;
}

bool criterion_symplectic_suite() {
    std::mt19937 gen(401);
    bool ok = true;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t g = 2 + gen() % 5;
        std::size_t mu = 2 * g;
        RatMatrix s = random_symplectic(mu, gen);
        SymplecticSpace space(mu);

        std::size_t k = 1 + gen() % g;
        std::vector<RatVector> seed;
        for (std::size_t i = 0; i < k; ++i) seed.push_back(s.column(i));
        auto basis = extend_isotropic(seed, space);
        for (std::size_t i = 0; i < k; ++i) ok = ok && basis.e[i] == seed[i];
        ok = ok && gram_is_standard(basis, space);

        std::size_t h = 1 + gen() % (g - 1);
        LabeledSplitting split{space, {}};
        std::vector<RatVector> tau_basis, bar_basis, rest;
        for (std::size_t i = 0; i < h; ++i) {
            bar_basis.push_back(s.column(i));
            tau_basis.push_back(s.column(g + i));
        }
        for (std::size_t i = h; i < g; ++i) {
            rest.push_back(s.column(i));
            rest.push_back(s.column(g + i));
        }
        split.blocks.push_back({"t", tau_basis, BlockPairing::PairedWithPartner, "c"});
        split.blocks.push_back({"c", bar_basis, BlockPairing::PairedWithPartner, "t"});
        if (!rest.empty()) split.blocks.push_back({"r", rest, BlockPairing::SelfPaired, ""});
        std::vector<RatVector> gamma;
        for (std::size_t j = 0; j < h; ++j) {
            RatVector v = bar_basis[j];
            for (std::size_t l = 0; l < j; ++l)
                v = v + scaled(bar_basis[l], static_cast<long>(gen() % 3) - 1);
            gamma.push_back(v);
        }
        auto labeled = labeled_basis(split, gamma, "t");
        for (std::size_t j = 0; j < h; ++j) ok = ok && labeled.e[j] == gamma[j];
        ok = ok && gram_is_standard(labeled, space);
    }

    Rational bumps[] = {rat(1), rat(-1), rat(2), rat(1, 2)};
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t mu = 2 * (1 + gen() % 4);
        RatMatrix m = random_symplectic(mu, gen);
        ok = ok && riemann_check(LaurentMatrix::from_rational(m), mu, 0L);
        RatMatrix jm = standard_symplectic_gram(mu) * m;
        bool perturbed = false;
        for (std::size_t r = 0; r < mu && !perturbed; ++r)
            for (std::size_t c = 0; c < mu && !perturbed; ++c) {
                bool off_support = false;
                for (std::size_t k = 0; k < mu; ++k)
                    if (k != c && jm.at(r, k) != 0) off_support = true;
                if (!off_support) continue;
                RatMatrix broken = m;
                broken.at(r, c) += bumps[gen() % 4];
                ok = ok && !riemann_check(LaurentMatrix::from_rational(broken), mu, 0L);
                perturbed = true;
            }
        ok = ok && perturbed;
    }
    return ok;
}

bool criterion_trivial_ideal() {
    bool ok = true;
    for (auto [mu, h] : {std::pair<std::size_t, std::size_t>{4, 2}, {6, 3}, {8, 2}})
        for (auto& g : trivial_ideal_generators(mu, h))
            ok = ok && is_trivial_relation(g.relation, mu, h);

    std::mt19937 gen(503);
    std::size_t mu = 4, h = 2;
    auto gens = trivial_ideal_generators(mu, h);
    int rejected = 0;
    while (ok && rejected < 50) {
        QuadraticRelation r;
        for (int t = 0; t < 4; ++t) {
            VarRef a{static_cast<unsigned>(gen() % mu), static_cast<unsigned>(gen() % h)};
            VarRef b{static_cast<unsigned>(gen() % mu), static_cast<unsigned>(gen() % h)};
            r.add({a, b}, static_cast<long>(gen() % 7) - 3);
        }
        if (r.is_zero()) continue;

        // span membership recomputed from scratch as a rank question
        std::map<Monomial, std::size_t> idx;
        std::vector<std::map<std::size_t, Rational>> rows;
        auto row_of = [&](const QuadraticRelation& q) {
            std::map<std::size_t, Rational> row;
            for (const auto& [m, c] : q.terms) {
                if (!idx.count(m)) idx.emplace(m, idx.size());
                row[idx[m]] = c;
            }
            return row;
        };
        for (auto& g : gens)
            if (!g.identically_zero) rows.push_back(row_of(g.relation));
        auto target = row_of(r);
        RatMatrix span(rows.size(), idx.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : rows[i]) span.at(i, c) = v;
        RatMatrix with(rows.size() + 1, idx.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : rows[i]) with.at(i, c) = v;
        for (const auto& [c, v] : target) with.at(rows.size(), c) = v;
        bool inside = span.rank() == with.rank();

        ok = ok && is_trivial_relation(r, mu, h) == inside;
        if (!inside) ++rejected;
    }
    return ok;
}

bool criterion_gseries() {
    bool ok = g_series_candidate(geometric(40), rat(2)).accept;
    ok = ok && g_series_candidate(log_series(40), rat(3)).accept;
    ok = ok && !g_series_candidate(exp_series(40), rat(5)).accept;
    ok = ok && g_series_candidate(binomial_series(40), rat(4)).accept;
    return ok;
}

bool criterion_height_values() {
    HeightBoundInput in{rat(1), rat(1), 10, 2, 2};
    auto weak = hasse_height_bound(in, false);
    Rational target = rat(3302585092994046L, 1000000000000L);
    bool ok = abs(weak.midpoint() - target) < rat(1, 1000000000L);
    ok = ok && weak.width() < rat(1, 1000000000L);

    auto strong = hasse_height_bound(in, true);
    Rational target_strong = rat(3302585092994046L, 10000000000000L);
    ok = ok && abs(strong.midpoint() - target_strong) < rat(1, 10000000000L);
    ok = ok && strong.width() < rat(1, 10000000000L);

    // oracle recomputed here: ceil((631 * 4 / 100)^4) = ceil(2524^4 / 10^8)
    Integer num = Integer(2524) * 2524 * 2524 * 2524;
    Integer den = Integer(10) * 10 * 10 * 10 * 10 * 10 * 10 * 10;
    Integer expected = num / den + (num % den != 0 ? 1 : 0);
    ok = ok && expected == 405843;
    ok = ok && degree_inflation_bound(2).value == expected;
    return ok;
}

bool criterion_field_forge() {
    auto start = std::chrono::steady_clock::now();
    struct Case {
        long p;
        unsigned beta;
        IntPoly expected;
    };
    std::vector<Case> cases = {{5, 2, P({-1, 1, 1})},
                               {7, 3, P({-1, -2, 1, 1})},
                               {13, 2, P({-3, 1, 1})}};
    bool ok = true;
    for (const auto& c : cases) {
        NumberField f = gaussian_period_field(c.p, c.beta);
        ok = ok && f.min_poly() == c.expected;
        ok = ok && f.degree() == c.beta;
        ok = ok && real_embedding_count(f) == c.beta;
        // unramified outside p: the defining discriminant is +/- a power of p
        Integer disc = abs(f.discriminant());
        while (disc % c.p == 0) disc /= c.p;
        ok = ok && disc == 1;
    }
    auto elapsed = std::chrono::steady_clock::now() - start;
    return ok && elapsed < std::chrono::seconds(10);
}

bool criterion_cm_path() {
    std::vector<PointDescriptor> points;
    points.push_back(cm_descriptor(4, 1, 4, {3, {4, 0, 4, 0, 4, 0, 4}}));
    points.push_back(cm_descriptor(1, 1, 4, {1, {1, 2, 1}}));
    points.push_back(cm_descriptor(1, 2, 4, {1, {2, 4, 2}}));
    bool ok = true;
    for (const auto& pt : points) {
        ok = ok && is_cm_point(pt);
        unsigned h = pt.profile.dims[0];
        if (h >= 1) ok = ok && remedy_conditions(pt).cond3;
        if (dim_im_from_profile(pt.profile) > 0) ok = ok && check_star1(pt);
    }
    return ok;
}

struct Criterion {
    const char* label;
    std::function<bool()> run;
};

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"worked example verdict and its squashed-profile contrast", criterion_worked_example},
        {"weight filtration axioms and uniqueness", criterion_filtration_axioms},
        {"profile invariance under conjugation and scaling", criterion_profile_invariance},
        {"centralizer torus dimension equals the bound", criterion_torus_bound},
        {"nilpotent reduction shape and rank", criterion_nilpotent_reduce},
        {"splitting oracle vs trial-division factorization", criterion_splitting_oracle},
        {"symplectic bases and riemann relation checks", criterion_symplectic_suite},
        {"trivial-relation ideal membership", criterion_trivial_ideal},
        {"series growth screening on classical series", criterion_gseries},
        {"height bound and degree inflation values", criterion_height_values},
        {"field forge small cases", criterion_field_forge},
        {"cm descriptors satisfy the exclusion conditions", criterion_cm_path},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        bool passed = false;
        std::string note;
        try {
            passed = criteria[i].run();
        } catch (const std::exception& e) {
            note = std::string(" (") + e.what() + ")";
        }
        if (!passed) ++failures;
        std::cout << "criterion " << (i + 1 < 10 ? " " : "") << i + 1 << ": "
                  << (passed ? "PASS" : "FAIL") << "  " << criteria[i].label << note << "\n";
    }
    if (failures) std::cout << failures << " criteria failed\n";
    return failures;
}
