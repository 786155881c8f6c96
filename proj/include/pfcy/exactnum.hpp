#pragma once

// Exact scalars: arbitrary-precision rationals and the quadratic extension
// Q[θ]/(θ² + uθ + v) used to evaluate functions at a conjugate root pair.

#include <pfcy/errors.hpp>

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace pfcy {

/// Arbitrary-precision fraction, always in lowest terms with a positive
/// denominator. Zero is 0/1.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I n) : value_(static_cast<long>(n)) {}  // NOLINT: implicit by design of numeric literals

    template <std::unsigned_integral I>
    Rational(I n) : value_(static_cast<unsigned long>(n)) {}  // NOLINT

    template <std::integral I, std::integral J>
    Rational(I num, J den) : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw math_error("rational with zero denominator");
        value_ = mpq_class(num, den);
        value_.canonicalize();
    }

    explicit Rational(const mpz_class& n) : value_(n) {}
    explicit Rational(mpq_class q) : value_(std::move(q)) { value_.canonicalize(); }

    /// Accepts "p", "p/q", with an optional sign on p. Rejects anything else.
    static Rational parse(std::string_view text) {
        auto is_digits = [](std::string_view s) {
            if (s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
            return true;
        };
        std::string_view body = text;
        if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
        auto slash = body.find('/');
        std::string_view num = body.substr(0, slash);
        std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
        if (!is_digits(num) || (slash != std::string_view::npos && !is_digits(den)))
            throw invalid_input("malformed rational literal '" + std::string(text) + "'");
        mpz_class n(std::string(num), 10);
        if (!text.empty() && text.front() == '-') n = -n;
        mpz_class d = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
        if (d == 0) throw math_error("rational with zero denominator: '" + std::string(text) + "'");
        return Rational(n, d);
    }

    const mpz_class& numerator() const { return value_.get_num(); }
    const mpz_class& denominator() const { return value_.get_den(); }
    const mpq_class& get_mpq() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    std::string to_string() const {
        if (is_integer()) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    Rational operator-() const { return Rational(mpq_class(-value_)); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw math_error("division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_;
};

inline Rational pow(Rational base, unsigned exp) {
    Rational result(1);
    while (exp) {
        if (exp & 1u) result *= base;
        base *= base;
        exp >>= 1u;
    }
    return result;
}

inline Rational factorial(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

inline Rational conj(const Rational& r) { return r; }

/// The field Q[θ]/(θ² + uθ + v). The quadratic must have no rational roots,
/// which here means negative discriminant: θ is one of a conjugate pair
/// c ± i·d with c = -u/2.
class QuadField {
public:
    QuadField(Rational u, Rational v) : u_(std::move(u)), v_(std::move(v)) {
        if (discriminant().sign() >= 0)
            throw invalid_input("x^2 + (" + u_.to_string() + ")x + (" + v_.to_string() +
                                ") is reducible over the reals (discriminant " + discriminant().to_string() +
                                " >= 0)");
    }

    const Rational& u() const { return u_; }
    const Rational& v() const { return v_; }
    Rational discriminant() const { return u_ * u_ - Rational(4) * v_; }

    friend bool operator==(const QuadField& a, const QuadField& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

private:
    Rational u_;
    Rational v_;
};

/// a + b·θ in a QuadField. θ² reduces to -uθ - v after every product.
class QuadExt {
public:
    QuadExt(std::shared_ptr<const QuadField> field, Rational a = {}, Rational b = {})
        : field_(std::move(field)), a_(std::move(a)), b_(std::move(b)) {
        if (!field_) throw invalid_input("quadratic extension element without a field");
    }
    QuadExt(const QuadField& field, Rational a = {}, Rational b = {})
        : QuadExt(std::make_shared<const QuadField>(field), std::move(a), std::move(b)) {}

    /// The generator θ itself.
    static QuadExt theta(std::shared_ptr<const QuadField> field) { return QuadExt(std::move(field), 0, 1); }

    const QuadField& field() const { return *field_; }
    const std::shared_ptr<const QuadField>& field_ptr() const { return field_; }
    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    bool is_real() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    bool same_field(const QuadExt& o) const { return field_ == o.field_ || *field_ == *o.field_; }

    /// The other root: θ ↦ -u - θ.
    QuadExt conj() const { return QuadExt(field_, a_ - b_ * field_->u(), -b_); }

    /// x·conj(x), always rational.
    Rational norm() const { return a_ * a_ - a_ * b_ * field_->u() + b_ * b_ * field_->v(); }

    QuadExt inv() const {
        if (is_zero()) throw math_error("division by zero in quadratic extension");
        Rational n = norm();
        QuadExt c = conj();
        return QuadExt(field_, c.a_ / n, c.b_ / n);
    }

    QuadExt operator-() const { return QuadExt(field_, -a_, -b_); }

    QuadExt& operator+=(const QuadExt& o) { check(o); a_ += o.a_; b_ += o.b_; return *this; }
    QuadExt& operator-=(const QuadExt& o) { check(o); a_ -= o.a_; b_ -= o.b_; return *this; }
    QuadExt& operator*=(const QuadExt& o) {
        check(o);
        Rational bb = b_ * o.b_;
        Rational na = a_ * o.a_ - field_->v() * bb;
        Rational nb = a_ * o.b_ + b_ * o.a_ - field_->u() * bb;
        a_ = std::move(na);
        b_ = std::move(nb);
        return *this;
    }
    QuadExt& operator/=(const QuadExt& o) { check(o); return *this *= o.inv(); }

    QuadExt& operator+=(const Rational& r) { a_ += r; return *this; }
    QuadExt& operator-=(const Rational& r) { a_ -= r; return *this; }
    QuadExt& operator*=(const Rational& r) { a_ *= r; b_ *= r; return *this; }
    QuadExt& operator/=(const Rational& r) {
        if (r.is_zero()) throw math_error("division by zero");
        a_ /= r; b_ /= r; return *this;
    }

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend QuadExt operator+(QuadExt x, const Rational& r) { return x += r; }
    friend QuadExt operator-(QuadExt x, const Rational& r) { return x -= r; }
    friend QuadExt operator*(QuadExt x, const Rational& r) { return x *= r; }
    friend QuadExt operator/(QuadExt x, const Rational& r) { return x /= r; }
    friend QuadExt operator+(const Rational& r, QuadExt x) { return x += r; }
    friend QuadExt operator*(const Rational& r, QuadExt x) { return x *= r; }
    friend QuadExt operator-(const Rational& r, const QuadExt& x) { return -x + r; }

    /// Elements of different fields compare unequal.
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.same_field(y) && x.a_ == y.a_ && x.b_ == y.b_;
    }

    std::string to_string() const {
        if (is_real()) return a_.to_string();
        std::string bt = b_ == Rational(1) ? "θ" : b_ == Rational(-1) ? "-θ" : b_.to_string() + "*θ";
        if (a_.is_zero()) return bt;
        if (b_.sign() < 0) {
            std::string mag = -b_ == Rational(1) ? "θ" : (-b_).to_string() + "*θ";
            return "(" + a_.to_string() + " - " + mag + ")";
        }
        return "(" + a_.to_string() + " + " + bt + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.to_string(); }

private:
    void check(const QuadExt& o) const {
        if (!same_field(o)) throw invalid_input("quadratic extension field mismatch");
    }

    std::shared_ptr<const QuadField> field_;
    Rational a_;
    Rational b_;
};

inline QuadExt qext_mul(const QuadExt& x, const QuadExt& y) { return x * y; }
inline QuadExt qext_inv(const QuadExt& x) { return x.inv(); }
inline QuadExt qext_conj(const QuadExt& x) { return x.conj(); }
inline QuadExt conj(const QuadExt& x) { return x.conj(); }

// Scalar plumbing shared by the generic univariate code. A QuadExt carries
// its field, so constants are always produced "like" an existing element.

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static Rational zero_like(const Rational&) { return {}; }
    static Rational one_like(const Rational&) { return Rational(1); }
    static Rational embed(const Rational& r, const Rational&) { return r; }
    static bool is_zero(const Rational& r) { return r.is_zero(); }
};

template <>
struct scalar_traits<QuadExt> {
    static QuadExt zero_like(const QuadExt& like) { return QuadExt(like.field_ptr()); }
    static QuadExt one_like(const QuadExt& like) { return QuadExt(like.field_ptr(), 1); }
    static QuadExt embed(const Rational& r, const QuadExt& like) { return QuadExt(like.field_ptr(), r); }
    static QuadExt embed(const QuadExt& x, const QuadExt& like) {
        if (!x.same_field(like)) throw invalid_input("quadratic extension field mismatch");
        return x;
    }
    static bool is_zero(const QuadExt& x) { return x.is_zero(); }
};

template <class S>
concept ExactField = requires(const S& a, const S& b, const Rational& r) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { a * r } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<S>::zero_like(a) } -> std::convertible_to<S>;
};

/// C coefficients can be used where X scalars live (Q inside Q[θ], or X itself).
template <class C, class X>
concept EmbedsInto = ExactField<X> && requires(const C& c, const X& x) {
    { scalar_traits<X>::embed(c, x) } -> std::convertible_to<X>;
};

template <ExactField S>
S zero_like(const S& like) { return scalar_traits<S>::zero_like(like); }

template <ExactField S>
S one_like(const S& like) { return scalar_traits<S>::one_like(like); }

template <ExactField X, class C>
X embed_like(const C& c, const X& like) { return scalar_traits<X>::embed(c, like); }

template <ExactField S>
bool is_zero(const S& s) { return scalar_traits<S>::is_zero(s); }

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const QuadExt& x) { return x.to_string(); }

}  // namespace pfcy
