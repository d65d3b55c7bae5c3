#include "stargate/intpoly.hpp"

#include <sstream>

#include "stargate/matrix.hpp"

namespace stargate {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::from_longs(std::vector<long> coeffs) {
    std::vector<Integer> c(coeffs.begin(), coeffs.end());
    return IntPoly(std::move(c));
}

IntPoly IntPoly::x() { return from_longs({0, 1}); }

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::operator+(const IntPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator-(const IntPoly& rhs) const {
    std::vector<Integer> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return IntPoly(std::move(c));
}

IntPoly IntPoly::operator*(const IntPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Integer> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return IntPoly(std::move(c));
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Integer(static_cast<long>(i));
    return IntPoly(std::move(c));
}

Integer IntPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntPoly IntPoly::divide_exact_monic(const IntPoly& divisor) const {
    if (!divisor.is_monic()) throw argument_error("divisor must be monic");
    std::vector<Integer> rem = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) throw argument_error("not divisible (degree)");
    std::vector<Integer> quot(degree() - dd + 1);
    for (int i = degree(); i >= dd; --i) {
        Integer q = rem[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(i - dd)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
    }
    for (int j = 0; j < dd; ++j)
        if (rem[static_cast<std::size_t>(j)] != 0) throw argument_error("not divisible (remainder)");
    return IntPoly(std::move(quot));
}

bool IntPoly::divisible_by_monic(const IntPoly& divisor) const {
    if (degree() < divisor.degree()) return false;
    try {
        divide_exact_monic(divisor);
        return true;
    } catch (const argument_error&) {
        return false;
    }
}

Integer IntPoly::discriminant() const {
    if (degree() < 1) throw argument_error("discriminant needs degree >= 1");
    Rational res = resultant(QPoly(*this), QPoly(derivative()));
    Rational d = res / Rational(leading());
    if (!is_integer(d)) throw internal_error("non-integral discriminant of integer polynomial");
    return d.get_num();
}

std::string IntPoly::to_pretty_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Integer c = coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

QPoly::QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const IntPoly& p) {
    coeffs_.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) coeffs_.emplace_back(c);
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::operator+(const QPoly& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + rhs.coeff(i);
    return QPoly(std::move(c));
}

QPoly QPoly::operator-(const QPoly& rhs) const {
    std::vector<Rational> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - rhs.coeff(i);
    return QPoly(std::move(c));
}

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> c(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            c[i + j] += coeffs_[i] * rhs.coeffs_[j];
    return QPoly(std::move(c));
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> c(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        c[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
    return QPoly(std::move(c));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::rem(const QPoly& divisor) const {
    if (divisor.is_zero()) throw argument_error("division by zero polynomial");
    std::vector<Rational> r = coeffs_;
    int dd = divisor.degree();
    Rational lead_inv = 1 / divisor.leading();
    for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
        Rational q = r[static_cast<std::size_t>(i)] * lead_inv;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coeff(static_cast<std::size_t>(j));
    }
    if (static_cast<int>(r.size()) > dd) r.resize(static_cast<std::size_t>(dd > 0 ? dd : 0));
    return QPoly(std::move(r));
}

QPoly QPoly::quot(const QPoly& divisor) const {
    if (divisor.is_zero()) throw argument_error("division by zero polynomial");
    std::vector<Rational> r = coeffs_;
    int dd = divisor.degree();
    if (degree() < dd) return {};
    std::vector<Rational> q(static_cast<std::size_t>(degree() - dd + 1));
    Rational lead_inv = 1 / divisor.leading();
    for (int i = degree(); i >= dd; --i) {
        Rational f = r[static_cast<std::size_t>(i)] * lead_inv;
        q[static_cast<std::size_t>(i - dd)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeff(static_cast<std::size_t>(j));
    }
    return QPoly(std::move(q));
}

QPoly QPoly::compose_mod(const QPoly& f, const QPoly& g, const QPoly& m) {
    QPoly acc;
    for (auto it = f.coeffs_.rbegin(); it != f.coeffs_.rend(); ++it) {
        acc = (acc * g).rem(m);
        acc = acc + QPoly(std::vector<Rational>{*it});
    }
    return acc;
}

namespace {

int sign_at_infinity(const QPoly& p, bool positive) {
    if (p.is_zero()) return 0;
    Rational lc = p.leading();
    int s = lc > 0 ? 1 : -1;
    if (!positive && p.degree() % 2 == 1) s = -s;
    return s;
}

} // namespace

int real_root_count(const IntPoly& p) {
    if (p.degree() <= 0) return 0;
    // Work with the squarefree part so multiple roots count once each,
    // matching "number of real roots of min_poly" for the irreducible inputs
    // this serves, and staying correct in general.
    QPoly f(p);
    QPoly g = f.derivative();
    QPoly a = f, b = g;
    while (!b.is_zero()) {
        QPoly r = a.rem(b);
        a = b;
        b = r;
    }
    // a = gcd(f, f'); squarefree part = f / a.
    QPoly sf = a.degree() > 0 ? f.quot(a) : f;

    std::vector<QPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2].rem(chain.back());
        // Sturm chain uses negated remainders.
        std::vector<Rational> neg(r.coeffs().size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -r.coeffs()[i];
        chain.emplace_back(std::move(neg));
    }
    chain.pop_back();

    auto variations = [&chain](bool positive) {
        int count = 0, prev = 0;
        for (const auto& q : chain) {
            int s = sign_at_infinity(q, positive);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    };
    return variations(false) - variations(true);
}

Rational resultant(const QPoly& f, const QPoly& g) {
    int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0) {
        Rational r = 1;
        for (int i = 0; i < n; ++i) r *= f.coeff(0);
        return r;
    }
    if (n == 0) {
        Rational r = 1;
        for (int i = 0; i < m; ++i) r *= g.coeff(0);
        return r;
    }
    RatMatrix s(static_cast<std::size_t>(m + n), static_cast<std::size_t>(m + n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= m; ++c)
            s.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + c)) =
                f.coeff(static_cast<std::size_t>(m - c));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c <= n; ++c)
            s.at(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + c)) =
                g.coeff(static_cast<std::size_t>(n - c));
    return s.determinant();
}

} // namespace stargate
