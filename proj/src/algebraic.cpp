#include "tilecoh/algebraic.hpp"

#include <algorithm>

namespace tilecoh {

FieldContext::FieldContext(IntPoly minpoly, RatInterval root_interval)
    : minpoly_(std::move(minpoly)), root_interval_(std::move(root_interval)) {
    if (minpoly_.degree() < 1) throw error("FieldContext: minimal polynomial must be nonconstant");
    if (minpoly_.leading() < 0) throw error("FieldContext: leading coefficient must be positive");
    if (minpoly_.degree() == 1) {
        Rat root(-minpoly_.coeff(0), minpoly_.coeff(1));
        root_interval_ = {root, root};
        return;
    }
    int slo = sign(minpoly_.eval(root_interval_.lo));
    int shi = sign(minpoly_.eval(root_interval_.hi));
    if (slo == 0 || shi == 0 || slo == shi)
        throw error("FieldContext: interval does not bracket a simple real root");
}

FieldPtr FieldContext::rationals() {
    static FieldPtr q = std::make_shared<FieldContext>(IntPoly{0, 1}, RatInterval{0, 0});
    return q;
}

FieldPtr FieldContext::make(IntPoly minpoly, RatInterval iv) {
    return std::make_shared<FieldContext>(std::move(minpoly), std::move(iv));
}

RatInterval FieldContext::refined_interval(const Rat& w) const {
    RatInterval iv = root_interval_;
    if (degree() == 1) return iv;
    int slo = sign(minpoly_.eval(iv.lo));
    while (iv.width() > w) {
        Rat mid = iv.mid();
        int sm = sign(minpoly_.eval(mid));
        // irreducible of degree >= 2 has no rational roots
        if (sm == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
    return iv;
}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, RatVector coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
    if (!field_) throw error("AlgebraicNumber: null field");
    coords_.resize(static_cast<size_t>(field_->degree()), Rat(0));
}

AlgebraicNumber AlgebraicNumber::from_rational(const FieldPtr& field, Rat value) {
    RatVector c(static_cast<size_t>(field->degree()), Rat(0));
    c[0] = std::move(value);
    return AlgebraicNumber(field, std::move(c));
}

AlgebraicNumber AlgebraicNumber::zero(const FieldPtr& field) {
    return from_rational(field, Rat(0));
}

AlgebraicNumber AlgebraicNumber::one(const FieldPtr& field) {
    return from_rational(field, Rat(1));
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr& field) {
    if (field->degree() == 1) {
        Rat root(-field->minpoly().coeff(0), field->minpoly().coeff(1));
        return from_rational(field, root);
    }
    RatVector c(static_cast<size_t>(field->degree()), Rat(0));
    c[1] = 1;
    return AlgebraicNumber(field, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
    for (const auto& c : coords_)
        if (c != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

Rat AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw error("AlgebraicNumber: not rational");
    return coords_[0];
}

void AlgebraicNumber::check_same_field(const AlgebraicNumber& o) const {
    if (field_ == o.field_) return;
    if (field_->minpoly() == o.field_->minpoly() &&
        field_->root_interval().hi >= o.field_->root_interval().lo &&
        o.field_->root_interval().hi >= field_->root_interval().lo)
        return;
    throw error("AlgebraicNumber: mixed field contexts");
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber& o) const {
    check_same_field(o);
    RatVector c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber& o) const {
    check_same_field(o);
    RatVector c = coords_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    RatVector c = coords_;
    for (auto& x : c) x = -x;
    return AlgebraicNumber(field_, std::move(c));
}

namespace {

// Reduce a rational coefficient vector mod the (primitive, positive-leading)
// minimal polynomial.
RatVector reduce_mod(std::vector<Rat> c, const IntPoly& minpoly) {
    int d = minpoly.degree();
    Rat lead(minpoly.leading());
    for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
        Rat f = c[static_cast<size_t>(k)] / lead;
        if (f == 0) continue;
        for (int i = 0; i <= d; ++i) c[static_cast<size_t>(k - d + i)] -= f * Rat(minpoly.coeff(i));
    }
    c.resize(static_cast<size_t>(d));
    return c;
}

} // namespace

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber& o) const {
    check_same_field(o);
    size_t d = coords_.size();
    std::vector<Rat> prod(2 * d, Rat(0));
    for (size_t i = 0; i < d; ++i) {
        if (coords_[i] == 0) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += coords_[i] * o.coords_[j];
    }
    return AlgebraicNumber(field_, reduce_mod(std::move(prod), field_->minpoly()));
}

AlgebraicNumber AlgebraicNumber::operator*(const Rat& s) const {
    RatVector c = coords_;
    for (auto& x : c) x *= s;
    return AlgebraicNumber(field_, std::move(c));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw error("AlgebraicNumber: division by zero");
    if (field_->degree() == 1) return from_rational(field_, 1 / coords_[0]);
    // extended Euclid over Q[x]: s*self + t*minpoly = gcd = const
    std::vector<Rat> r0 = to_rat_coeffs(field_->minpoly());
    std::vector<Rat> r1 = coords_;
    std::vector<Rat> s0{Rat(0)}, s1{Rat(1)};
    auto deg = [](const std::vector<Rat>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
        return d;
    };
    while (deg(r1) > 0) {
        auto dm = rat_divmod(r0, r1);
        // s_next = s0 - q*s1
        std::vector<Rat> sn = s0;
        size_t need = dm.quot.size() + s1.size();
        if (sn.size() < need) sn.resize(need, Rat(0));
        for (size_t i = 0; i < dm.quot.size(); ++i)
            for (size_t j = 0; j < s1.size(); ++j) sn[i + j] -= dm.quot[i] * s1[j];
        r0 = std::move(r1);
        r1 = std::move(dm.rem);
        s0 = std::move(s1);
        s1 = std::move(sn);
    }
    int d1 = deg(r1);
    if (d1 < 0) throw error("AlgebraicNumber: minimal polynomial not irreducible");
    Rat c = r1[static_cast<size_t>(d1)];
    for (auto& x : s1) x /= c;
    return AlgebraicNumber(field_, reduce_mod(std::move(s1), field_->minpoly()));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber& o) const {
    return *this * o.inverse();
}

bool AlgebraicNumber::operator==(const AlgebraicNumber& o) const {
    check_same_field(o);
    return coords_ == o.coords_;
}

int AlgebraicNumber::sgn() const {
    if (is_zero()) return 0;
    if (field_->degree() == 1 || is_rational()) return sign(coords_[0]);
    RatInterval iv = field_->root_interval();
    int slo = sign(field_->minpoly().eval(iv.lo));
    while (true) {
        // interval Horner on coords
        Rat lo = 0, hi = 0;
        for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
            Rat a = lo * iv.lo, b = lo * iv.hi, c = hi * iv.lo, d = hi * iv.hi;
            Rat nlo = std::min(std::min(a, b), std::min(c, d));
            Rat nhi = std::max(std::max(a, b), std::max(c, d));
            lo = nlo + *it;
            hi = nhi + *it;
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        Rat mid = iv.mid();
        if (sign(field_->minpoly().eval(mid)) == slo)
            iv.lo = mid;
        else
            iv.hi = mid;
    }
}

int AlgebraicNumber::compare(const AlgebraicNumber& o) const { return (*this - o).sgn(); }

RatInterval AlgebraicNumber::enclosure(const Rat& w) const {
    if (is_rational()) return {coords_[0], coords_[0]};
    Rat iw = w / 2;
    while (true) {
        RatInterval iv = field_->refined_interval(iw);
        Rat lo = 0, hi = 0;
        for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
            Rat a = lo * iv.lo, b = lo * iv.hi, c = hi * iv.lo, d = hi * iv.hi;
            lo = std::min(std::min(a, b), std::min(c, d)) + *it;
            hi = std::max(std::max(a, b), std::max(c, d)) + *it;
        }
        if (hi - lo <= w) return {lo, hi};
        iw /= 16;
    }
}

double AlgebraicNumber::approx() const {
    RatInterval iv = enclosure(Rat(1, 1000000000));
    return to_double(iv.mid());
}

AlgebraicNumber AlgebraicNumber::eval_poly(const IntPoly& u, const AlgebraicNumber& alpha) {
    AlgebraicNumber acc = zero(alpha.field());
    for (int i = u.degree(); i >= 0; --i) {
        acc = acc * alpha + from_rational(alpha.field(), Rat(u.coeff(i)));
    }
    return acc;
}

std::vector<AlgebraicNumber> eigenvector_for(const IntMatrix& m, const AlgebraicNumber& lambda) {
    if (!m.is_square()) throw error("eigenvector_for: non-square matrix");
    int n = m.rows();
    const FieldPtr& F = lambda.field();
    // Gaussian elimination of (m - lambda I) over Q(lambda)
    std::vector<std::vector<AlgebraicNumber>> a(
        static_cast<size_t>(n), std::vector<AlgebraicNumber>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                AlgebraicNumber::from_rational(F, Rat(m.at(i, j)));
            if (i == j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] - lambda;
        }
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int p = -1;
        for (int i = r; i < n; ++i)
            if (!a[static_cast<size_t>(i)][static_cast<size_t>(c)].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[static_cast<size_t>(p)], a[static_cast<size_t>(r)]);
        AlgebraicNumber inv = a[static_cast<size_t>(r)][static_cast<size_t>(c)].inverse();
        for (int j = c; j < n; ++j)
            a[static_cast<size_t>(r)][static_cast<size_t>(j)] =
                a[static_cast<size_t>(r)][static_cast<size_t>(j)] * inv;
        for (int i = 0; i < n; ++i) {
            if (i == r) continue;
            AlgebraicNumber f = a[static_cast<size_t>(i)][static_cast<size_t>(c)];
            if (f.is_zero()) continue;
            for (int j = c; j < n; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    a[static_cast<size_t>(i)][static_cast<size_t>(j)] -
                    f * a[static_cast<size_t>(r)][static_cast<size_t>(j)];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r != n - 1)
        throw error("eigenvector_for: eigenspace is not one-dimensional");
    // the single free column
    int free_col = -1;
    {
        size_t pi = 0;
        for (int c = 0; c < n; ++c) {
            if (pi < pivot_col.size() && pivot_col[pi] == c)
                ++pi;
            else
                free_col = c;
        }
    }
    std::vector<AlgebraicNumber> v(static_cast<size_t>(n), AlgebraicNumber::zero(F));
    v[static_cast<size_t>(free_col)] = AlgebraicNumber::one(F);
    for (size_t pi = 0; pi < pivot_col.size(); ++pi)
        v[static_cast<size_t>(pivot_col[pi])] =
            -a[pi][static_cast<size_t>(free_col)];
    return v;
}

} // namespace tilecoh
