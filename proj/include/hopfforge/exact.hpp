#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hopfforge {

using Rational = mpq_class;

Rational parse_rational(const std::string& text);

// a + b*sqrt(5)
class QSqrt5 {
public:
    QSqrt5() = default;
    QSqrt5(Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)) {}
    static QSqrt5 sqrt5() { return QSqrt5(0, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }

    QSqrt5 operator+(const QSqrt5& o) const { return QSqrt5(a_ + o.a_, b_ + o.b_); }
    QSqrt5 operator-(const QSqrt5& o) const { return QSqrt5(a_ - o.a_, b_ - o.b_); }
    QSqrt5 operator-() const { return QSqrt5(-a_, -b_); }
    QSqrt5 operator*(const QSqrt5& o) const;
    QSqrt5 operator/(const QSqrt5& o) const;
    QSqrt5 conjugate() const { return QSqrt5(a_, -b_); }
    Rational norm() const { return a_ * a_ - 5 * b_ * b_; }

    bool operator==(const QSqrt5& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const QSqrt5& o) const { return !(*this == o); }
    bool operator<(const QSqrt5& o) const { return (*this - o).sign() < 0; }

    int sign() const;
    double to_double() const;
    std::string str() const;

private:
    Rational a_, b_;
};

QSqrt5 qsqrt5_dot(const std::vector<QSqrt5>& u, const std::vector<QSqrt5>& v);
inline int qsqrt5_sign(const QSqrt5& x) { return x.sign(); }

// Closed interval with MPFR endpoints, outward rounded.
class Interval {
public:
    explicit Interval(mpfr_prec_t bits = 128);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& q, mpfr_prec_t bits);
    static Interval from_double(double x, mpfr_prec_t bits);
    static Interval from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t bits);

    mpfr_prec_t precision() const { return bits_; }
    const mpfr_t& lower() const { return lo_; }
    const mpfr_t& upper() const { return hi_; }
    double lower_double() const;
    double upper_double() const;
    double mid_double() const;
    double width_double() const;

    Interval operator+(const Interval& o) const;
    Interval operator-(const Interval& o) const;
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;
    Interval operator-() const;

    bool contains_zero() const;
    bool contains(const Rational& q) const;
    // -1, +1, or 0 when the interval straddles zero
    int sign() const;
    // smallest |x| over the interval
    double magnitude_lower_double() const;

private:
    mpfr_prec_t bits_;
    mpfr_t lo_, hi_;
};

// Enclosures of (cos, sin) of 2*pi*f*j/n for each frequency f.
std::vector<Interval> interval_trig_point(long long j, long long n, const std::vector<long long>& frequencies,
                                          mpfr_prec_t bits);

enum class SignResult { negative, indeterminate, positive };

// Interval Gaussian elimination; indeterminate when a pivot encloses zero.
SignResult interval_det_sign(std::vector<std::vector<Interval>> m);

struct CertifiedSign {
    SignResult sign;
    mpfr_prec_t bits;
};

// Rebuilds the matrix at each precision of the schedule until the sign resolves.
CertifiedSign certified_sign_det(const std::function<std::vector<std::vector<Interval>>(mpfr_prec_t)>& build,
                                 const std::vector<mpfr_prec_t>& schedule = {64, 128, 256, 512});

// Sparse GF(2) columns given as sorted row indices.
class Gf2Reducer {
public:
    // Reduces the column against the stored pivots; stores it if independent.
    bool add(std::vector<int> column);
    size_t rank() const { return columns_.size(); }
    // Reduced form of a column without storing it.
    std::vector<int> reduce(std::vector<int> column) const;

private:
    std::vector<std::vector<int>> columns_;
    std::vector<int> pivot_row_;
    std::vector<int> pivot_of_row_;   // row -> column index or -1
};

void gf2_xor_into(std::vector<int>& target, const std::vector<int>& other);
size_t gf2_rank(const std::vector<std::vector<int>>& columns);

struct Separation {
    std::vector<Rational> normal;
    Rational offset;   // normal . v >= offset + 1 inside, <= offset - 1 outside
};

std::optional<Separation> strict_separation(const std::vector<std::vector<Rational>>& inside,
                                            const std::vector<std::vector<Rational>>& outside);
inline bool strict_separation_feasible(const std::vector<std::vector<Rational>>& inside,
                                       const std::vector<std::vector<Rational>>& outside)
{
    return strict_separation(inside, outside).has_value();
}

} // namespace hopfforge
