#include "stargate/modpoly.hpp"

#include <algorithm>

#include "stargate/error.hpp"

namespace stargate {

bool is_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

namespace {

Integer mod_reduce(Integer v, const Integer& p) {
    Integer r;
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t());
    return r;
}

Integer mod_inverse(const Integer& v, const Integer& p) {
    Integer r;
    if (mpz_invert(r.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t()) == 0)
        throw argument_error("non-invertible element mod p");
    return r;
}

/// Deterministic xorshift64*; fixed seed so factorization output is reproducible.
class DeterministicRng {
public:
    explicit DeterministicRng(unsigned long long seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}
    unsigned long long next() {
        state_ ^= state_ >> 12;
        state_ ^= state_ << 25;
        state_ ^= state_ >> 27;
        return state_ * 0x2545f4914f6cdd1dull;
    }
    Integer next_below(const Integer& p) {
        Integer acc = 0;
        // 128 bits of stream folded mod p; plenty for desk-scale primes.
        for (int i = 0; i < 2; ++i) {
            Integer chunk(static_cast<unsigned long>(next() >> 32));
            acc = acc * Integer("4294967296") + chunk;
        }
        return mod_reduce(acc, p);
    }

private:
    unsigned long long state_;
};

} // namespace

ModPoly::ModPoly(Integer p, std::vector<Integer> coeffs)
    : p_(std::move(p)), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = mod_reduce(c, p_);
    normalize();
}

void ModPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Integer& p) {
    return ModPoly(p, f.coeffs());
}

ModPoly ModPoly::reduce(const QPoly& f, const Integer& p) {
    std::vector<Integer> c;
    c.reserve(f.coeffs().size());
    for (const auto& q : f.coeffs()) c.push_back(q.get_num() * mod_inverse(q.get_den(), p));
    return ModPoly(p, std::move(c));
}

ModPoly ModPoly::x(const Integer& p) { return ModPoly(p, {Integer(0), Integer(1)}); }

ModPoly ModPoly::constant(const Integer& p, const Integer& c) { return ModPoly(p, {c}); }

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return ModPoly(p_, {});
    std::vector<Integer> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Integer inv = mod_inverse(leading(), p_);
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeffs_[i] * inv;
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::derivative() const {
    if (coeffs_.size() <= 1) return ModPoly(p_, {});
    std::vector<Integer> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
    return ModPoly(p_, std::move(c));
}

ModPoly ModPoly::rem(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw argument_error("division by zero polynomial mod p");
    std::vector<Integer> r = coeffs_;
    int dd = divisor.degree();
    Integer inv = mod_inverse(divisor.leading(), p_);
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        Integer q = mod_reduce(r[static_cast<std::size_t>(i)] * inv, p_);
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] -=
                q * divisor.coeff(static_cast<std::size_t>(j));
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] =
                mod_reduce(r[static_cast<std::size_t>(i - dd + j)], p_);
    }
    if (static_cast<int>(r.size()) > dd) r.resize(static_cast<std::size_t>(dd > 0 ? dd : 0));
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::quot(const ModPoly& divisor) const {
    if (divisor.is_zero()) throw argument_error("division by zero polynomial mod p");
    int dd = divisor.degree();
    if (degree() < dd) return ModPoly(p_, {});
    std::vector<Integer> r = coeffs_;
    std::vector<Integer> q(static_cast<std::size_t>(degree() - dd + 1));
    Integer inv = mod_inverse(divisor.leading(), p_);
    for (int i = degree(); i >= dd; --i) {
        Integer f = mod_reduce(r[static_cast<std::size_t>(i)] * inv, p_);
        q[static_cast<std::size_t>(i - dd)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] =
                mod_reduce(r[static_cast<std::size_t>(i - dd + j)] -
                               f * divisor.coeff(static_cast<std::size_t>(j)),
                           p_);
    }
    return ModPoly(p_, std::move(q));
}

ModPoly ModPoly::gcd(ModPoly a, ModPoly b) {
    while (!b.is_zero()) {
        ModPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ModPoly ModPoly::powmod(const Integer& e, const ModPoly& m) const {
    ModPoly base = this->rem(m);
    ModPoly acc = ModPoly::constant(p_, 1);
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = (acc * base).rem(m);
        base = (base * base).rem(m);
        k >>= 1;
    }
    return acc;
}

ModPoly ModPoly::compose_mod(const ModPoly& g, const ModPoly& m) const {
    ModPoly acc(p_, {});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = (acc * g).rem(m);
        acc = acc + ModPoly::constant(p_, *it);
    }
    return acc;
}

IntPoly ModPoly::lift_symmetric() const {
    std::vector<Integer> c = coeffs_;
    Integer half = p_ / 2;
    for (auto& v : c)
        if (v > half) v -= p_;
    return IntPoly(std::move(c));
}

IntPoly ModPoly::lift() const { return IntPoly(coeffs_); }

bool ModPoly::canonical_less(const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
    return false;
}

namespace {

/// f = g(x^p) => p-th root is coefficient decimation (Frobenius fixes F_p).
ModPoly pth_root(const ModPoly& f) {
    const Integer& p = f.modulus();
    if (!p.fits_ulong_p()) throw internal_error("p-th root at oversized prime");
    unsigned long pl = p.get_ui();
    std::vector<Integer> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.degree()); i += pl)
        c.push_back(f.coeff(i));
    return ModPoly(p, std::move(c));
}

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f0) {
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly f = f0.monic();
    if (f.degree() <= 0) return out;
    ModPoly fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(f)))
            out.emplace_back(g, m * static_cast<unsigned>(f.modulus().get_ui()));
        return out;
    }
    ModPoly c = ModPoly::gcd(f, fp);
    ModPoly w = f.quot(c);
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = ModPoly::gcd(w, c);
        ModPoly z = w.quot(y);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        w = std::move(y);
        c = c.quot(w);
        ++i;
    }
    if (c.degree() > 0)
        for (auto& [g, m] : squarefree_decomposition(pth_root(c)))
            out.emplace_back(g, m * static_cast<unsigned>(f.modulus().get_ui()));
    return out;
}

/// Distinct-degree decomposition of a squarefree monic f.
std::vector<std::pair<ModPoly, int>> distinct_degree(const ModPoly& f0) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly f = f0;
    const Integer& p = f.modulus();
    ModPoly h = ModPoly::x(p);
    int d = 0;
    while (f.degree() > 0 && f.degree() >= 2 * (d + 1)) {
        ++d;
        h = h.powmod(p, f);
        ModPoly g = ModPoly::gcd(h - ModPoly::x(p), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f.quot(g);
            h = h.rem(f);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

void equal_degree_split(const ModPoly& f, int d, DeterministicRng& rng,
                        std::vector<ModPoly>& out) {
    const Integer& p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    ModPoly g(p, {});
    while (true) {
        std::vector<Integer> c(static_cast<std::size_t>(f.degree()));
        for (auto& v : c) v = rng.next_below(p);
        ModPoly a(p, std::move(c));
        if (a.degree() < 1) continue;
        if (p == 2) {
            // Trace map over F_2^d.
            ModPoly t = a;
            ModPoly sq = a;
            for (int i = 1; i < d; ++i) {
                sq = (sq * sq).rem(f);
                t = t + sq;
            }
            g = ModPoly::gcd(t, f);
        } else {
            Integer e;
            mpz_pow_ui(e.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            ModPoly b = a.powmod(e, f);
            g = ModPoly::gcd(b - ModPoly::constant(p, 1), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree_split(g, d, rng, out);
    equal_degree_split(f.quot(g), d, rng, out);
}

} // namespace

std::vector<ModFactor> factor_mod_p(const IntPoly& poly, const Integer& p) {
    if (!is_prime(p)) throw argument_error("modulus is not prime");
    ModPoly f = ModPoly::reduce(poly, p);
    if (f.is_zero()) throw degenerate_input_error("polynomial vanishes mod p");
    std::vector<ModFactor> factors;
    if (f.degree() == 0) return factors;
    DeterministicRng rng;
    for (const auto& [sf, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, d] : distinct_degree(sf)) {
            std::vector<ModPoly> irr;
            equal_degree_split(prod, d, rng, irr);
            for (auto& g : irr) factors.push_back({std::move(g), mult});
        }
    }
    std::sort(factors.begin(), factors.end(), [](const ModFactor& a, const ModFactor& b) {
        return ModPoly::canonical_less(a.factor, b.factor);
    });
    return factors;
}

} // namespace stargate
