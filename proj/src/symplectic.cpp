#include "stargate/symplectic.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "stargate/error.hpp"

namespace stargate {

LaurentPoly add_scaled(const LaurentPoly& a, const LaurentPoly& b, const Rational& s) {
    LaurentPoly out = a;
    for (const auto& [e, c] : b.terms_) {
        auto it = out.terms_.find(e);
        Rational v = (it == out.terms_.end() ? Rational(0) : it->second) + c * s;
        out.set(e, v);
    }
    return out;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
    return add_scaled(*this, rhs, 1);
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
    return add_scaled(*this, rhs, -1);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
    LaurentPoly out;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : rhs.terms_) {
            auto it = out.terms_.find(ea + eb);
            Rational v = (it == out.terms_.end() ? Rational(0) : it->second) + ca * cb;
            out.set(ea + eb, v);
        }
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str();
        if (e != 0) os << "*l^" << e;
    }
    return os.str();
}

LaurentMatrix LaurentMatrix::from_rational(const RatMatrix& m) {
    if (!m.is_square()) throw argument_error("scalar matrix must be square");
    LaurentMatrix out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c) != 0) out.at(r, c) = LaurentPoly(m.at(r, c));
    return out;
}

LaurentMatrix LaurentMatrix::transpose() const {
    LaurentMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out.at(c, r) = at(r, c);
    return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& rhs) const {
    if (n_ != rhs.n_) throw argument_error("dimension mismatch in product");
    LaurentMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t k = 0; k < n_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < n_; ++c)
                out.at(r, c) = out.at(r, c) + at(r, k) * rhs.at(k, c);
        }
    return out;
}

LaurentMatrix LaurentMatrix::scaled(const LaurentPoly& s) const {
    LaurentMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t c = 0; c < n_; ++c) out.at(r, c) = at(r, c) * s;
    return out;
}

RatMatrix standard_symplectic_gram(std::size_t mu) {
    if (mu % 2 != 0) throw argument_error("symplectic dimension must be even");
    RatMatrix j(mu, mu);
    std::size_t g = mu / 2;
    for (std::size_t i = 0; i < g; ++i) {
        j.at(i, g + i) = -1;
        j.at(g + i, i) = 1;
    }
    return j;
}

SymplecticSpace::SymplecticSpace(std::size_t dimension)
    : mu_(dimension), gram_(standard_symplectic_gram(dimension)) {}

Rational SymplecticSpace::pairing(const RatVector& u, const RatVector& v) const {
    if (u.size() != mu_ || v.size() != mu_)
        throw argument_error("vector of wrong dimension");
    Rational out = 0;
    std::size_t g = mu_ / 2;
    for (std::size_t i = 0; i < g; ++i) out += u[g + i] * v[i] - u[i] * v[g + i];
    return out;
}

std::optional<LaurentPoly> riemann_scale(const LaurentMatrix& m) {
    std::size_t mu = m.size();
    if (mu == 0 || mu % 2 != 0) throw argument_error("symplectic dimension must be even");
    LaurentMatrix j = LaurentMatrix::from_rational(standard_symplectic_gram(mu));
    LaurentMatrix t = m.transpose() * j * m;
    LaurentPoly s = LaurentPoly(Rational(-1)) * t.at(0, mu / 2);
    if (t == j.scaled(s)) return s;
    return std::nullopt;
}

bool riemann_check(const LaurentMatrix& m, std::size_t mu, long power) {
    if (m.size() != mu) throw argument_error("matrix size does not match mu");
    auto s = riemann_scale(m);
    return s && *s == LaurentPoly::lambda_power(power);
}

bool riemann_check(const LaurentMatrix& m, std::size_t mu, const Rational& scalar) {
    if (m.size() != mu) throw argument_error("matrix size does not match mu");
    auto s = riemann_scale(m);
    return s && *s == LaurentPoly(scalar);
}

bool is_isotropic(const std::vector<RatVector>& vectors, const SymplecticSpace& space) {
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (space.pairing(vectors[i], vectors[j]) != 0) return false;
    return true;
}

namespace {

Rational pair_with(const RatMatrix& gram, const RatVector& u, const RatVector& v) {
    Rational out = 0;
    for (std::size_t r = 0; r < gram.rows(); ++r) {
        if (u[r] == 0) continue;
        for (std::size_t c = 0; c < gram.cols(); ++c)
            if (gram.at(r, c) != 0) out += u[r] * gram.at(r, c) * v[c];
    }
    return out;
}

bool in_span(const std::vector<RatVector>& span, const RatVector& v) {
    if (span.empty()) return is_zero(v);
    RatMatrix m = RatMatrix::from_columns(span);
    RatMatrix aug = RatMatrix::from_columns([&] {
        auto cols = span;
        cols.push_back(v);
        return cols;
    }());
    return aug.rank() == m.rank();
}

/// Extends an isotropic independent family to a Lagrangian of (Q^n, gram).
std::vector<RatVector> complete_lagrangian(const RatMatrix& gram,
                                           std::vector<RatVector> e) {
    std::size_t n = gram.rows();
    while (e.size() < n / 2) {
        RatMatrix constraints(e.size(), n);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t c = 0; c < n; ++c) {
                Rational v = 0;
                for (std::size_t r = 0; r < n; ++r) v += e[i][r] * gram.at(r, c);
                constraints.at(i, c) = v;
            }
        bool extended = false;
        auto kernel = e.empty() ? Subspace::full(n).basis() : constraints.kernel_basis();
        for (const auto& k : kernel)
            if (!in_span(e, k)) {
                e.push_back(k);
                extended = true;
                break;
            }
        if (!extended) throw internal_error("isotropic family cannot be extended");
    }
    return e;
}

/// Dual half: f_j with <e_i, f_j> = -delta_ij and <f_i, f_j> = 0.
std::vector<RatVector> dual_half(const RatMatrix& gram, const std::vector<RatVector>& e) {
    std::size_t n = gram.rows(), g = e.size();
    RatMatrix a(g, n);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t c = 0; c < n; ++c) {
            Rational v = 0;
            for (std::size_t r = 0; r < n; ++r) v += e[i][r] * gram.at(r, c);
            a.at(i, c) = v;
        }
    std::vector<RatVector> f;
    for (std::size_t j = 0; j < g; ++j) {
        RatVector b(g);
        b[j] = -1;
        RatVector fj = solve_any(a, b);
        for (std::size_t l = 0; l < f.size(); ++l) {
            Rational c = -pair_with(gram, fj, f[l]);
            if (c != 0) fj = fj + scaled(e[l], -c);
        }
        f.push_back(std::move(fj));
    }
    // the correction above changes <f_j, f_l> by -c * delta... recheck exactly
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            if (pair_with(gram, f[i], f[j]) != 0)
                throw internal_error("dual family is not isotropic");
            Rational want = i == j ? -1 : 0;
            if (pair_with(gram, e[i], f[j]) != want)
                throw internal_error("dual family does not pair correctly");
        }
    return f;
}

SymplecticBasis symplectic_basis_with(const RatMatrix& gram, std::vector<RatVector> seed) {
    SymplecticBasis out;
    out.e = complete_lagrangian(gram, std::move(seed));
    out.f = dual_half(gram, out.e);
    return out;
}

void verify_standard_gram(const SymplecticBasis& basis, const SymplecticSpace& space) {
    RatMatrix j = space.gram();
    auto all = basis.flat();
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t k = 0; k < all.size(); ++k)
            if (space.pairing(all[i], all[k]) != j.at(i, k))
                throw internal_error("basis Gram matrix is not the standard form");
}

} // namespace

std::vector<RatVector> SymplecticBasis::flat() const {
    std::vector<RatVector> all = e;
    all.insert(all.end(), f.begin(), f.end());
    return all;
}

SymplecticBasis extend_isotropic(const std::vector<RatVector>& vectors,
                                 const SymplecticSpace& space) {
    std::size_t mu = space.dimension();
    if (vectors.size() > mu / 2)
        throw precondition_error("more vectors than a Lagrangian can hold");
    for (const auto& v : vectors)
        if (v.size() != mu) throw argument_error("vector of wrong dimension");
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (space.pairing(vectors[i], vectors[j]) != 0)
                throw precondition_error("vectors " + std::to_string(i) + " and " +
                                         std::to_string(j) + " are not skew-orthogonal");
        std::vector<RatVector> prefix(vectors.begin(),
                                      vectors.begin() + static_cast<long>(i));
        if (in_span(prefix, vectors[i]))
            throw precondition_error("vector " + std::to_string(i) +
                                     " depends on the earlier ones");
    }
    SymplecticBasis basis = symplectic_basis_with(space.gram(), vectors);
    verify_standard_gram(basis, space);
    return basis;
}

std::vector<std::string> validate_splitting(const LabeledSplitting& split) {
    std::vector<std::string> out;
    std::size_t mu = split.ambient.dimension();
    std::map<std::string, const SplittingBlock*> by_label;
    std::vector<RatVector> all;
    for (const auto& b : split.blocks) {
        if (b.label.empty()) out.push_back("block with empty label");
        if (!by_label.emplace(b.label, &b).second)
            out.push_back("duplicate block label " + b.label);
        if (b.basis.empty()) out.push_back("block " + b.label + " has empty basis");
        for (const auto& v : b.basis) {
            if (v.size() != mu) {
                out.push_back("block " + b.label + " has a vector of wrong dimension");
                return out;
            }
            all.push_back(v);
        }
    }
    if (all.size() != mu || RatMatrix::from_columns(all).rank() != mu) {
        out.push_back("blocks do not decompose the ambient space");
        return out;
    }
    for (const auto& b : split.blocks) {
        if (b.pairing == BlockPairing::SelfPaired) {
            if (b.basis.size() % 2 != 0)
                out.push_back("self-paired block " + b.label + " has odd dimension");
            RatMatrix gram(b.basis.size(), b.basis.size());
            for (std::size_t i = 0; i < b.basis.size(); ++i)
                for (std::size_t j = 0; j < b.basis.size(); ++j)
                    gram.at(i, j) = split.ambient.pairing(b.basis[i], b.basis[j]);
            if (gram.rank() != b.basis.size())
                out.push_back("self-paired block " + b.label + " is degenerate");
            continue;
        }
        auto it = by_label.find(b.partner);
        if (it == by_label.end() || b.partner == b.label) {
            out.push_back("block " + b.label + " has no partner " + b.partner);
            continue;
        }
        const SplittingBlock& conj = *it->second;
        if (conj.pairing != BlockPairing::PairedWithPartner || conj.partner != b.label)
            out.push_back("blocks " + b.label + " and " + b.partner + " are not mutual partners");
        if (conj.basis.size() != b.basis.size())
            out.push_back("paired blocks " + b.label + ", " + b.partner + " have unequal dims");
        if (!is_isotropic(b.basis, split.ambient))
            out.push_back("paired block " + b.label + " is not isotropic");
        std::vector<RatVector> joint = b.basis;
        joint.insert(joint.end(), conj.basis.begin(), conj.basis.end());
        RatMatrix gram(joint.size(), joint.size());
        for (std::size_t i = 0; i < joint.size(); ++i)
            for (std::size_t j = 0; j < joint.size(); ++j)
                gram.at(i, j) = split.ambient.pairing(joint[i], joint[j]);
        if (gram.rank() != joint.size())
            out.push_back("paired blocks " + b.label + ", " + b.partner +
                          " do not span a symplectic subspace");
    }
    for (std::size_t a = 0; a < split.blocks.size(); ++a)
        for (std::size_t b = a + 1; b < split.blocks.size(); ++b) {
            const auto& ba = split.blocks[a];
            const auto& bb = split.blocks[b];
            bool conjugate = ba.pairing == BlockPairing::PairedWithPartner &&
                             ba.partner == bb.label;
            if (conjugate) continue;
            for (const auto& u : ba.basis)
                for (const auto& v : bb.basis)
                    if (split.ambient.pairing(u, v) != 0) {
                        out.push_back("blocks " + ba.label + " and " + bb.label +
                                      " are not skew-orthogonal");
                        goto next_pair;
                    }
        next_pair:;
        }
    return out;
}

SymplecticBasis labeled_basis(const LabeledSplitting& split,
                              const std::vector<RatVector>& gamma,
                              const std::string& tau) {
    auto violations = validate_splitting(split);
    if (!violations.empty()) throw argument_error("invalid splitting: " + violations.front());
    std::size_t mu = split.ambient.dimension();

    const SplittingBlock* tau_block = nullptr;
    const SplittingBlock* bar_block = nullptr;
    for (const auto& b : split.blocks)
        if (b.label == tau) tau_block = &b;
    if (!tau_block) throw argument_error("no block labeled " + tau);
    if (tau_block->pairing != BlockPairing::PairedWithPartner)
        throw argument_error("block " + tau + " is not one of a conjugate pair");
    for (const auto& b : split.blocks)
        if (b.label == tau_block->partner) bar_block = &b;

    std::size_t h = tau_block->basis.size();
    if (gamma.size() != h)
        throw argument_error("need exactly " + std::to_string(h) + " vectors");
    if (!is_isotropic(gamma, split.ambient))
        throw precondition_error("the given vectors are not isotropic");

    // coordinates of gamma across the blocks; keep only the conjugate part
    std::vector<RatVector> all;
    std::vector<std::size_t> bar_cols;
    for (const auto& b : split.blocks)
        for (const auto& v : b.basis) {
            if (&b == bar_block) bar_cols.push_back(all.size());
            all.push_back(v);
        }
    RatMatrix full = RatMatrix::from_columns(all);
    std::vector<RatVector> components;
    for (const auto& g : gamma) {
        RatVector coords = solve(full, g);
        RatVector w(mu);
        for (std::size_t c : bar_cols) w = w + scaled(all[c], coords[c]);
        components.push_back(std::move(w));
    }
    if (RatMatrix::from_columns(components).rank() != h)
        throw precondition_error(
            "components in the conjugate block are dependent; the degenerate case applies");

    // f_j in the tau block, dual to the conjugate components
    RatMatrix pairings(h, h);
    for (std::size_t j = 0; j < h; ++j)
        for (std::size_t m = 0; m < h; ++m)
            pairings.at(j, m) = split.ambient.pairing(components[j], tau_block->basis[m]);
    std::vector<RatVector> f;
    for (std::size_t l = 0; l < h; ++l) {
        RatVector b(h);
        b[l] = -1;
        RatVector c = solve(pairings, b);
        RatVector fl(mu);
        for (std::size_t m = 0; m < h; ++m) fl = fl + scaled(tau_block->basis[m], c[m]);
        f.push_back(std::move(fl));
    }

    // symplectic completion inside the skew-orthogonal complement
    std::vector<RatVector> chosen = gamma;
    chosen.insert(chosen.end(), f.begin(), f.end());
    RatMatrix constraints(chosen.size(), mu);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        RatVector row = split.ambient.gram().transpose().apply(chosen[i]);
        for (std::size_t c = 0; c < mu; ++c) constraints.at(i, c) = row[c];
    }
    std::vector<RatVector> rest = constraints.kernel_basis();
    RatMatrix rest_gram(rest.size(), rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i)
        for (std::size_t j = 0; j < rest.size(); ++j)
            rest_gram.at(i, j) = split.ambient.pairing(rest[i], rest[j]);
    SymplecticBasis inner = symplectic_basis_with(rest_gram, {});
    auto lift = [&](const RatVector& coords) {
        RatVector v(mu);
        for (std::size_t i = 0; i < rest.size(); ++i) v = v + scaled(rest[i], coords[i]);
        return v;
    };

    SymplecticBasis out;
    out.e = gamma;
    for (const auto& c : inner.e) out.e.push_back(lift(c));
    out.f = f;
    for (const auto& c : inner.f) out.f.push_back(lift(c));
    verify_standard_gram(out, split.ambient);
    return out;
}

std::vector<RatVector> splitting_lagrangian(const LabeledSplitting& split) {
    auto violations = validate_splitting(split);
    if (!violations.empty()) throw argument_error("invalid splitting: " + violations.front());
    std::vector<RatVector> out;
    std::set<std::string> used;
    for (const auto& b : split.blocks) {
        if (used.count(b.label)) continue;
        if (b.pairing == BlockPairing::PairedWithPartner) {
            used.insert(b.label);
            used.insert(b.partner);
            out.insert(out.end(), b.basis.begin(), b.basis.end());
            continue;
        }
        used.insert(b.label);
        RatMatrix gram(b.basis.size(), b.basis.size());
        for (std::size_t i = 0; i < b.basis.size(); ++i)
            for (std::size_t j = 0; j < b.basis.size(); ++j)
                gram.at(i, j) = split.ambient.pairing(b.basis[i], b.basis[j]);
        for (const auto& coords : complete_lagrangian(gram, {})) {
            RatVector v(split.ambient.dimension());
            for (std::size_t i = 0; i < b.basis.size(); ++i)
                v = v + scaled(b.basis[i], coords[i]);
            out.push_back(std::move(v));
        }
    }
    if (out.size() != split.ambient.dimension() / 2 || !is_isotropic(out, split.ambient))
        throw internal_error("assembled subspace is not Lagrangian");
    return out;
}

void QuadraticRelation::add(Monomial m, const Rational& c) {
    if (m.empty() || m.size() > 2) throw argument_error("monomial degree must be 1 or 2");
    std::sort(m.begin(), m.end());
    auto it = terms.find(m);
    Rational v = (it == terms.end() ? Rational(0) : it->second) + c;
    if (v == 0)
        terms.erase(m);
    else
        terms[m] = v;
}

int QuadraticRelation::degree() const {
    if (terms.empty()) return 0;
    std::size_t d = terms.begin()->first.size();
    for (const auto& [m, c] : terms)
        if (m.size() != d) throw argument_error("relation is not homogeneous");
    return static_cast<int>(d);
}

std::vector<TrivialGenerator> trivial_ideal_generators(std::size_t mu, std::size_t h) {
    if (mu % 2 != 0) throw argument_error("mu must be even");
    if (h < 1 || h > mu / 2) throw argument_error("need 1 <= h <= mu/2");
    std::size_t g = mu / 2;
    std::vector<TrivialGenerator> out;
    for (unsigned i = 0; i < h; ++i)
        for (unsigned j = i; j < h; ++j) {
            TrivialGenerator gen;
            gen.i = i;
            gen.j = j;
            for (unsigned a = 0; a < g; ++a) {
                gen.relation.add({{a, i}, {static_cast<unsigned>(g) + a, j}}, -1);
                gen.relation.add({{static_cast<unsigned>(g) + a, i}, {a, j}}, 1);
            }
            gen.identically_zero = gen.relation.is_zero();
            out.push_back(std::move(gen));
        }
    return out;
}

bool is_trivial_relation(const QuadraticRelation& rel, std::size_t mu, std::size_t h) {
    for (const auto& [m, c] : rel.terms)
        for (const auto& v : m)
            if (v.row >= mu || v.col >= h)
                throw argument_error("variable index out of range");
    if (rel.is_zero()) return true;
    int d = rel.degree();
    if (d == 1) return false;

    std::map<Monomial, std::size_t> index;
    auto vectorize = [&](const QuadraticRelation& q, bool grow) {
        RatVector v;
        for (const auto& [m, c] : q.terms) {
            auto it = index.find(m);
            if (it == index.end()) {
                if (!grow) continue;
                it = index.emplace(m, index.size()).first;
            }
            if (it->second >= v.size()) v.resize(index.size());
            v[it->second] = c;
        }
        return v;
    };
    std::vector<QuadraticRelation> gens;
    for (auto& g : trivial_ideal_generators(mu, h))
        if (!g.identically_zero) gens.push_back(std::move(g.relation));
    for (const auto& g : gens) vectorize(g, true);
    vectorize(rel, true);

    RatMatrix span(gens.size(), index.size());
    for (std::size_t r = 0; r < gens.size(); ++r) {
        RatVector v = vectorize(gens[r], false);
        for (std::size_t c = 0; c < v.size(); ++c) span.at(r, c) = v[c];
    }
    RatMatrix with(gens.size() + 1, index.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < index.size(); ++c) with.at(r, c) = span.at(r, c);
    RatVector rv = vectorize(rel, false);
    for (std::size_t c = 0; c < rv.size(); ++c) with.at(gens.size(), c) = rv[c];
    return span.rank() == with.rank();
}

} // namespace stargate
