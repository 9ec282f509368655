#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace homint {

using Rational = boost::multiprecision::cpp_rational;

struct DivisionByZeroError : std::runtime_error {
    DivisionByZeroError() : std::runtime_error("division by zero") {}
};

struct FieldMismatchError : std::runtime_error {
    explicit FieldMismatchError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class Field;
class Scalar;
using FieldPtr = std::shared_ptr<const Field>;

/// N-th cyclotomic polynomial, monic, coefficients low-to-high over Z.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

/// Ground field: Q for order 1, Q(zeta_N) otherwise. Instances are cached
/// and immutable; scalars of equal order are interoperable.
class Field {
public:
    static FieldPtr rationals();
    static FieldPtr cyclotomic(unsigned n);

    unsigned order() const { return order_; }
    unsigned degree() const { return static_cast<unsigned>(min_poly_.size() - 1); }
    const std::vector<Rational>& min_poly() const { return min_poly_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from(long v) const;
    Scalar from(const Rational& v) const;
    Scalar root() const;  // zeta_N (1 for the rationals)

private:
    explicit Field(unsigned n);
    unsigned order_;
    std::vector<Rational> min_poly_;
};

/// Exact field element: coefficient vector modulo the field's minimal
/// polynomial. All arithmetic is exact; division by zero throws.
class Scalar {
public:
    Scalar();  // 0 in Q
    Scalar(long v);
    Scalar(const Rational& v);
    Scalar(FieldPtr field, std::vector<Rational> coeffs);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_rational() const;  // all non-constant coordinates vanish
    const Rational& rat() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// "p/q" for rationals, "[c0,c1,...]@zetaN" for cyclotomic elements.
    std::string str() const;
    static Scalar parse(const std::string& text);

private:
    void align_with(const Scalar& o, Scalar& copy_of_o);
    FieldPtr field_;
    std::vector<Rational> coeffs_;  // length = field degree
};

std::string rational_str(const Rational& r);
Rational parse_rational(const std::string& text);

}  // namespace homint
