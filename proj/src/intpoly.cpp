#include "tilecoh/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace tilecoh {

namespace {
const Int kZero = 0;
}

double to_double(const Rat& x) { return x.convert_to<double>(); }

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : c_(coeffs) { trim(); }

IntPoly IntPoly::constant(Int c) { return IntPoly{std::vector<Int>{std::move(c)}}; }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(int k) {
    std::vector<Int> c(static_cast<size_t>(k) + 1, 0);
    c.back() = 1;
    return IntPoly{std::move(c)};
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

IntPoly IntPoly::operator-() const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly{};
    std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::operator*(const Int& s) const {
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * s;
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::shifted(int k) const {
    if (is_zero()) return IntPoly{};
    std::vector<Int> r(c_.size() + static_cast<size_t>(k), 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return IntPoly{std::move(r)};
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& c : c_) g = gcd_int(g, c);
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly{};
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPoly{std::move(r)};
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly{};
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
    return IntPoly{std::move(r)};
}

Int IntPoly::eval(const Int& x) const {
    Int v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + Rat(*it);
    return v;
}

RatInterval IntPoly::eval(const RatInterval& iv) const {
    Rat lo = 0, hi = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        Rat a = lo * iv.lo, b = lo * iv.hi, c = hi * iv.lo, d = hi * iv.hi;
        Rat nlo = std::min(std::min(a, b), std::min(c, d));
        Rat nhi = std::max(std::max(a, b), std::max(c, d));
        lo = nlo + Rat(*it);
        hi = nhi + Rat(*it);
    }
    return {lo, hi};
}

IntPoly IntPoly::exact_div(const IntPoly& d) const {
    if (d.is_zero()) throw error("IntPoly::exact_div: division by zero polynomial");
    if (is_zero()) return IntPoly{};
    if (degree() < d.degree()) throw error("IntPoly::exact_div: not divisible (degree)");
    std::vector<Int> rem = c_;
    std::vector<Int> quot(static_cast<size_t>(degree() - d.degree()) + 1, 0);
    for (int k = degree() - d.degree(); k >= 0; --k) {
        Int top = rem[static_cast<size_t>(k + d.degree())];
        if (top == 0) continue;
        if (top % d.leading() != 0) throw error("IntPoly::exact_div: not divisible");
        Int q = top / d.leading();
        quot[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= d.degree(); ++i)
            rem[static_cast<size_t>(k + i)] -= q * d.coeff(i);
    }
    for (const auto& c : rem)
        if (c != 0) throw error("IntPoly::exact_div: nonzero remainder");
    return IntPoly{std::move(quot)};
}

bool IntPoly::divides(const IntPoly& f) const {
    if (is_zero()) return f.is_zero();
    if (f.is_zero()) return true;
    if (f.degree() < degree()) return false;
    auto dm = rat_divmod(to_rat_coeffs(f), to_rat_coeffs(*this));
    for (const auto& r : dm.rem)
        if (r != 0) return false;
    return true;
}

std::string IntPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeff(i);
        if (c == 0) continue;
        Int a = abs_int(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0 || a != 1) os << a;
        if (i > 0) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatPolyDiv rat_divmod(const std::vector<Rat>& f, const std::vector<Rat>& g) {
    auto deg = [](const std::vector<Rat>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    int dg = deg(g);
    if (dg < 0) throw error("rat_divmod: division by zero polynomial");
    std::vector<Rat> rem = f;
    int dr = deg(rem);
    std::vector<Rat> quot;
    if (dr >= dg) quot.assign(static_cast<size_t>(dr - dg) + 1, Rat(0));
    while (dr >= dg) {
        Rat q = rem[static_cast<size_t>(dr)] / g[static_cast<size_t>(dg)];
        quot[static_cast<size_t>(dr - dg)] = q;
        for (int i = 0; i <= dg; ++i)
            rem[static_cast<size_t>(dr - dg + i)] -= q * g[static_cast<size_t>(i)];
        rem[static_cast<size_t>(dr)] = 0;
        dr = deg(rem);
    }
    rem.resize(static_cast<size_t>(std::max(dg, 1)));
    return {std::move(quot), std::move(rem)};
}

std::vector<Rat> to_rat_coeffs(const IntPoly& p) {
    std::vector<Rat> r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rat(p.coeffs()[i]);
    return r;
}

IntPoly from_rat_coeffs_primitive(const std::vector<Rat>& c) {
    Int den = 1;
    for (const auto& x : c) {
        Int d = boost::multiprecision::denominator(x);
        den = den / gcd_int(den, d) * d;
    }
    std::vector<Int> ic(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        Rat v = c[i] * Rat(den);
        ic[i] = boost::multiprecision::numerator(v);
    }
    return IntPoly{std::move(ic)}.primitive_part();
}

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.is_zero() ? IntPoly{} : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    std::vector<Rat> f = to_rat_coeffs(a), g = to_rat_coeffs(b);
    auto is_zero = [](const std::vector<Rat>& p) {
        for (const auto& x : p)
            if (x != 0) return false;
        return true;
    };
    while (!is_zero(g)) {
        auto dm = rat_divmod(f, g);
        f = std::move(g);
        g = std::move(dm.rem);
        // renormalize to keep coefficient growth in check
        Rat big = 0;
        for (const auto& x : g)
            if (boost::multiprecision::abs(x) > big) big = boost::multiprecision::abs(x);
        if (big != 0)
            for (auto& x : g) x /= big;
    }
    return from_rat_coeffs_primitive(f);
}

} // namespace tilecoh
