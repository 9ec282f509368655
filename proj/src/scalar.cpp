#include "homint/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace homint {

namespace {

using Poly = std::vector<Rational>;  // low-to-high, no trailing zeros guaranteed by trim

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// quotient of exact division (also used for remainder-producing division)
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    Poly q;
    if (den.empty()) throw DivisionByZeroError();
    poly_trim(num);
    if (num.size() >= den.size()) q.assign(num.size() - den.size() + 1, Rational(0));
    while (num.size() >= den.size() && !num.empty()) {
        Rational c = num.back() / den.back();
        size_t shift = num.size() - den.size();
        q[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
        poly_trim(num);
    }
    return {q, num};
}

// monic gcd together with the Bezout cofactor of a: g = u*a + v*m
struct ExtGcd {
    Poly g, u;
};

ExtGcd poly_ext_gcd(Poly a, Poly m) {
    Poly r0 = std::move(a), r1 = std::move(m);
    Poly u0 = {Rational(1)}, u1 = {};
    poly_trim(r0);
    poly_trim(r1);
    while (!r1.empty()) {
        auto [q, r] = poly_divmod(r0, r1);
        Poly u2 = u0;
        Poly qu = poly_mul(q, u1);
        if (u2.size() < qu.size()) u2.resize(qu.size(), Rational(0));
        for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        poly_trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (!r0.empty() && r0.back() != 1) {
        Rational lead = r0.back();
        for (auto& c : r0) c /= lead;
        for (auto& c : u0) c /= lead;
    }
    return {r0, u0};
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::map<unsigned, Poly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto compute = [](auto&& self, unsigned m) -> Poly {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        Poly p(m + 1, Rational(0));  // x^m - 1
        p[0] = -1;
        p[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            auto [q, r] = poly_divmod(p, self(self, d));
            if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
            p = std::move(q);
        }
        cache[m] = p;
        return p;
    };
    return compute(compute, n);
}

Field::Field(unsigned n) : order_(n) {
    // Order 1 is plain Q; any degree-1 modulus works as the carrier.
    min_poly_ = (n == 1) ? Poly{Rational(0), Rational(1)} : cyclotomic_polynomial(n);
}

FieldPtr Field::rationals() {
    static FieldPtr q(new Field(1));
    return q;
}

FieldPtr Field::cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic order must be positive");
    if (n == 1) return rationals();
    static std::map<unsigned, FieldPtr> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    FieldPtr f(new Field(n));
    cache[n] = f;
    return f;
}

Scalar Field::zero() const {
    return Scalar(order_ == 1 ? rationals() : cyclotomic(order_),
                  std::vector<Rational>(degree(), Rational(0)));
}

Scalar Field::one() const { return from(1); }

Scalar Field::from(long v) const { return from(Rational(v)); }

Scalar Field::from(const Rational& v) const {
    std::vector<Rational> c(degree(), Rational(0));
    c[0] = v;
    return Scalar(order_ == 1 ? rationals() : cyclotomic(order_), std::move(c));
}

Scalar Field::root() const {
    if (order_ == 1) return one();
    std::vector<Rational> c(degree(), Rational(0));
    if (degree() >= 2)
        c[1] = 1;
    else
        c[0] = (order_ == 2) ? Rational(-1) : Rational(1);  // degree-1 cyclotomic fields
    return Scalar(cyclotomic(order_), std::move(c));
}

Scalar::Scalar() : field_(Field::rationals()), coeffs_{Rational(0)} {}

Scalar::Scalar(long v) : field_(Field::rationals()), coeffs_{Rational(v)} {}

Scalar::Scalar(const Rational& v) : field_(Field::rationals()), coeffs_{v} {}

Scalar::Scalar(FieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != field_->degree())
        throw std::invalid_argument("scalar coefficient vector has wrong length");
}

bool Scalar::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool Scalar::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

const Rational& Scalar::rat() const {
    if (!is_rational()) throw FieldMismatchError("scalar is not rational");
    return coeffs_[0];
}

// Promote whichever operand lives in Q into the other operand's field.
void Scalar::align_with(const Scalar& o, Scalar& copy_of_o) {
    copy_of_o = o;
    if (field_->order() == o.field_->order()) return;
    if (field_->order() == 1) {
        Rational v = coeffs_[0];
        *this = o.field_->from(v);
        return;
    }
    if (o.field_->order() == 1) {
        copy_of_o = field_->from(o.coeffs_[0]);
        return;
    }
    throw FieldMismatchError("cannot mix cyclotomic fields of different order");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    Scalar rhs;
    align_with(o, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    Scalar rhs;
    align_with(o, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    Scalar rhs;
    align_with(o, rhs);
    if (coeffs_.size() == 1) {
        coeffs_[0] *= rhs.coeffs_[0];
        return *this;
    }
    Poly prod = poly_mul(coeffs_, rhs.coeffs_);
    auto [q, r] = poly_divmod(prod, field_->min_poly());
    (void)q;
    r.resize(field_->degree(), Rational(0));
    coeffs_ = std::move(r);
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    if (coeffs_.size() == 1) {
        Scalar r = *this;
        r.coeffs_[0] = Rational(1) / coeffs_[0];
        return r;
    }
    Poly a = coeffs_;
    ExtGcd eg = poly_ext_gcd(a, field_->min_poly());
    if (eg.g.size() != 1) throw std::logic_error("minimal polynomial not coprime with element");
    Poly u = eg.u;
    for (auto& c : u) c /= eg.g[0];
    auto [q, r] = poly_divmod(u, field_->min_poly());
    (void)q;
    r.resize(field_->degree(), Rational(0));
    return Scalar(field_, std::move(r));
}

Scalar& Scalar::operator/=(const Scalar& o) {
    Scalar rhs;
    align_with(o, rhs);
    return *this *= rhs.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
    Scalar lhs = *this, rhs;
    lhs.align_with(o, rhs);
    return lhs.coeffs_ == rhs.coeffs_;
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(boost::multiprecision::cpp_int(text));
        boost::multiprecision::cpp_int num(text.substr(0, slash));
        boost::multiprecision::cpp_int den(text.substr(slash + 1));
        if (den == 0) throw DivisionByZeroError();
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string Scalar::str() const {
    if (field_->order() == 1) return rational_str(coeffs_[0]);
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += rational_str(coeffs_[i]);
    }
    s += "]@zeta" + std::to_string(field_->order());
    return s;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty scalar literal");
    if (text[0] != '[') return Scalar(parse_rational(text));
    auto close = text.find(']');
    auto at = text.find("@zeta");
    if (close == std::string::npos || at == std::string::npos || at < close)
        throw ParseError("bad cyclotomic literal '" + text + "'");
    unsigned n = 0;
    try {
        n = static_cast<unsigned>(std::stoul(text.substr(at + 5)));
    } catch (const std::exception&) {
        throw ParseError("bad cyclotomic order in '" + text + "'");
    }
    FieldPtr f = Field::cyclotomic(n);
    std::vector<Rational> coeffs;
    std::string body = text.substr(1, close - 1);
    if (!body.empty()) {
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    }
    if (coeffs.size() > f->degree())
        throw ParseError("too many coefficients for zeta" + std::to_string(n));
    coeffs.resize(f->degree(), Rational(0));
    return Scalar(f, std::move(coeffs));
}

}  // namespace homint
