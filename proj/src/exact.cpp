#include "hopfforge/exact.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hopfforge/error.hpp"

namespace hopfforge {

Rational parse_rational(const std::string& text)
{
    try {
        Rational q(text, 10);
        if (q.get_den() == 0) throw Error(ErrorKind::malformed_input, "zero denominator: " + text);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::malformed_input, "not a rational number: " + text);
    }
}

QSqrt5 QSqrt5::operator*(const QSqrt5& o) const
{
    return QSqrt5(a_ * o.a_ + 5 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
}

QSqrt5 QSqrt5::operator/(const QSqrt5& o) const
{
    Rational n = o.norm();
    if (n == 0) throw Error(ErrorKind::malformed_input, "division by zero in Q(sqrt5)");
    QSqrt5 num = *this * o.conjugate();
    return QSqrt5(num.a_ / n, num.b_ / n);
}

int QSqrt5::sign() const
{
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 with 5 b^2
    int cmp_ = sgn(a_ * a_ - 5 * b_ * b_);
    return sa > 0 ? cmp_ : -cmp_;
}

double QSqrt5::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(5.0); }

std::string QSqrt5::str() const
{
    if (b_ == 0) return a_.get_str();
    std::string s = a_ == 0 ? "" : a_.get_str() + (b_ > 0 ? "+" : "");
    return s + b_.get_str() + "*sqrt5";
}

QSqrt5 qsqrt5_dot(const std::vector<QSqrt5>& u, const std::vector<QSqrt5>& v)
{
    if (u.size() != v.size()) throw Error(ErrorKind::malformed_input, "dot product of unequal lengths");
    QSqrt5 s;
    for (size_t i = 0; i < u.size(); ++i) s = s + u[i] * v[i];
    return s;
}

Interval::Interval(mpfr_prec_t bits) : bits_(bits)
{
    mpfr_init2(lo_, bits);
    mpfr_init2(hi_, bits);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& o) : bits_(o.bits_)
{
    mpfr_init2(lo_, bits_);
    mpfr_init2(hi_, bits_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept : Interval(o) {}

Interval& Interval::operator=(const Interval& o)
{
    if (this == &o) return *this;
    if (bits_ != o.bits_) {
        bits_ = o.bits_;
        mpfr_set_prec(lo_, bits_);
        mpfr_set_prec(hi_, bits_);
    }
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept
{
    if (this != &o && bits_ == o.bits_) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
        return *this;
    }
    return *this = static_cast<const Interval&>(o);
}

Interval::~Interval()
{
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_double(double x, mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_set_d(r.lo_, x, MPFR_RNDD);
    mpfr_set_d(r.hi_, x, MPFR_RNDU);
    return r;
}

Interval Interval::from_bounds(mpfr_srcptr lo, mpfr_srcptr hi, mpfr_prec_t bits)
{
    Interval r(bits);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    return r;
}

double Interval::lower_double() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Interval::upper_double() const { return mpfr_get_d(hi_, MPFR_RNDU); }
double Interval::mid_double() const { return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN)); }

double Interval::width_double() const
{
    mpfr_t w;
    mpfr_init2(w, bits_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

Interval Interval::operator+(const Interval& o) const
{
    Interval r(std::max(bits_, o.bits_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-(const Interval& o) const
{
    Interval r(std::max(bits_, o.bits_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator-() const
{
    Interval r(bits_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::operator*(const Interval& o) const
{
    Interval r(std::max(bits_, o.bits_));
    mpfr_t t;
    mpfr_init2(t, r.bits_);
    const mpfr_t* a[2] = {&lo_, &hi_};
    const mpfr_t* b[2] = {&o.lo_, &o.hi_};
    bool first = true;
    for (auto x : a)
        for (auto y : b) {
            mpfr_mul(t, *x, *y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, *x, *y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    return r;
}

Interval Interval::operator/(const Interval& o) const
{
    if (o.contains_zero()) throw Error(ErrorKind::degenerate_hull, "interval division by an interval containing 0");
    Interval inv(o.bits_);
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this * inv;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }

bool Interval::contains(const Rational& q) const
{
    return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

int Interval::sign() const
{
    if (mpfr_sgn(lo_) > 0) return 1;
    if (mpfr_sgn(hi_) < 0) return -1;
    return 0;
}

double Interval::magnitude_lower_double() const
{
    if (contains_zero()) return 0.0;
    return mpfr_sgn(lo_) > 0 ? lower_double() : -upper_double();
}

std::vector<Interval> interval_trig_point(long long j, long long n, const std::vector<long long>& frequencies,
                                          mpfr_prec_t bits)
{
    if (n <= 0) throw Error(ErrorKind::malformed_input, "n must be positive");
    std::vector<Interval> out;
    for (long long f : frequencies) {
        long long r = ((f * j) % n + n) % n;   // angle = 2 pi r / n
        Interval c(bits), s(bits);
        if ((4 * r) % n == 0) {
            static const int cosq[4] = {1, 0, -1, 0};
            static const int sinq[4] = {0, 1, 0, -1};
            int q = static_cast<int>(4 * r / n);
            c = Interval::from_rational(cosq[q], bits);
            s = Interval::from_rational(sinq[q], bits);
        } else {
            mpfr_prec_t wp = bits + 32;
            mpfr_t plo, phi, mid, rad, tmp;
            mpfr_inits2(wp, plo, phi, mid, rad, tmp, static_cast<mpfr_ptr>(nullptr));
            mpfr_const_pi(plo, MPFR_RNDD);
            mpfr_const_pi(phi, MPFR_RNDU);
            mpfr_mul_si(plo, plo, 2 * r, MPFR_RNDD);
            mpfr_mul_si(phi, phi, 2 * r, MPFR_RNDU);
            mpfr_div_si(plo, plo, n, MPFR_RNDD);
            mpfr_div_si(phi, phi, n, MPFR_RNDU);
            mpfr_add(mid, plo, phi, MPFR_RNDN);
            mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
            // cos and sin are 1-Lipschitz: widen the value at mid by the distance to the ends
            mpfr_sub(rad, phi, mid, MPFR_RNDU);
            mpfr_sub(tmp, mid, plo, MPFR_RNDU);
            mpfr_max(rad, rad, tmp, MPFR_RNDU);
            Interval* targets[2] = {&c, &s};
            for (int which = 0; which < 2; ++which) {
                mpfr_t vlo, vhi;
                mpfr_inits2(wp, vlo, vhi, static_cast<mpfr_ptr>(nullptr));
                if (which == 0) {
                    mpfr_cos(vlo, mid, MPFR_RNDD);
                    mpfr_cos(vhi, mid, MPFR_RNDU);
                } else {
                    mpfr_sin(vlo, mid, MPFR_RNDD);
                    mpfr_sin(vhi, mid, MPFR_RNDU);
                }
                mpfr_sub(vlo, vlo, rad, MPFR_RNDD);
                mpfr_add(vhi, vhi, rad, MPFR_RNDU);
                *targets[which] = Interval::from_bounds(vlo, vhi, bits);
                mpfr_clears(vlo, vhi, static_cast<mpfr_ptr>(nullptr));
            }
            mpfr_clears(plo, phi, mid, rad, tmp, static_cast<mpfr_ptr>(nullptr));
        }
        out.push_back(std::move(c));
        out.push_back(std::move(s));
    }
    return out;
}

SignResult interval_det_sign(std::vector<std::vector<Interval>> m)
{
    size_t n = m.size();
    int sign = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t best = k;
        double best_mag = -1;
        for (size_t i = k; i < n; ++i) {
            double mag = m[i][k].magnitude_lower_double();
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
        if (m[best][k].contains_zero()) return SignResult::indeterminate;
        if (best != k) {
            std::swap(m[best], m[k]);
            sign = -sign;
        }
        sign *= m[k][k].sign();
        for (size_t i = k + 1; i < n; ++i) {
            Interval factor = m[i][k] / m[k][k];
            for (size_t j = k + 1; j < n; ++j) m[i][j] = m[i][j] - factor * m[k][j];
        }
    }
    return sign > 0 ? SignResult::positive : SignResult::negative;
}

CertifiedSign certified_sign_det(const std::function<std::vector<std::vector<Interval>>(mpfr_prec_t)>& build,
                                 const std::vector<mpfr_prec_t>& schedule)
{
    CertifiedSign out{SignResult::indeterminate, 0};
    for (mpfr_prec_t bits : schedule) {
        out.bits = bits;
        out.sign = interval_det_sign(build(bits));
        if (out.sign != SignResult::indeterminate) break;
    }
    return out;
}

void gf2_xor_into(std::vector<int>& target, const std::vector<int>& other)
{
    std::vector<int> out;
    out.reserve(target.size() + other.size());
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(), other.end(),
                                  std::back_inserter(out));
    target.swap(out);
}

std::vector<int> Gf2Reducer::reduce(std::vector<int> column) const
{
    while (!column.empty()) {
        int low = column.back();
        if (low >= static_cast<int>(pivot_of_row_.size()) || pivot_of_row_[low] < 0) break;
        gf2_xor_into(column, columns_[pivot_of_row_[low]]);
    }
    return column;
}

bool Gf2Reducer::add(std::vector<int> column)
{
    column = reduce(std::move(column));
    if (column.empty()) return false;
    int low = column.back();
    if (low >= static_cast<int>(pivot_of_row_.size())) pivot_of_row_.resize(low + 1, -1);
    pivot_of_row_[low] = static_cast<int>(columns_.size());
    pivot_row_.push_back(low);
    columns_.push_back(std::move(column));
    return true;
}

size_t gf2_rank(const std::vector<std::vector<int>>& columns)
{
    Gf2Reducer r;
    for (const auto& c : columns) {
        std::vector<int> s = c;
        std::sort(s.begin(), s.end());
        // repeated entries cancel in GF(2)
        std::vector<int> t;
        for (size_t i = 0; i < s.size();) {
            size_t j = i;
            while (j < s.size() && s[j] == s[i]) ++j;
            if ((j - i) % 2) t.push_back(s[i]);
            i = j;
        }
        r.add(std::move(t));
    }
    return r.rank();
}

std::optional<Separation> strict_separation(const std::vector<std::vector<Rational>>& inside,
                                            const std::vector<std::vector<Rational>>& outside)
{
    size_t d = 0;
    for (const auto& v : inside) d = std::max(d, v.size());
    for (const auto& v : outside) d = std::max(d, v.size());
    for (const auto& v : inside)
        if (v.size() != d) throw Error(ErrorKind::malformed_input, "points of mixed dimension");
    for (const auto& v : outside)
        if (v.size() != d) throw Error(ErrorKind::malformed_input, "points of mixed dimension");

    // Variables: a+ (d), a- (d), b+, b-, surplus (m), artificial (m).
    size_t m = inside.size() + outside.size();
    size_t nx = 2 * d + 2;
    size_t ncol = nx + 2 * m;
    std::vector<std::vector<Rational>> t(m, std::vector<Rational>(ncol + 1));
    for (size_t i = 0; i < m; ++i) {
        bool in = i < inside.size();
        const auto& v = in ? inside[i] : outside[i - inside.size()];
        Rational s = in ? 1 : -1;   // in: a.v - b >= 1 ; out: -(a.v - b) >= 1
        for (size_t j = 0; j < d; ++j) {
            t[i][j] = s * v[j];
            t[i][d + j] = -s * v[j];
        }
        t[i][2 * d] = -s;
        t[i][2 * d + 1] = s;
        t[i][nx + i] = -1;
        t[i][nx + m + i] = 1;
        t[i][ncol] = 1;
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = nx + m + i;
    auto cost = [&](size_t j) { return j >= nx + m ? 1 : 0; };

    while (true) {
        // Bland's rule: smallest index with negative reduced cost.
        size_t enter = ncol;
        for (size_t j = 0; j < ncol && enter == ncol; ++j) {
            Rational r = cost(j);
            for (size_t i = 0; i < m; ++i)
                if (cost(basis[i])) r -= t[i][j];
            if (r < 0) enter = j;
        }
        if (enter == ncol) break;
        size_t leave = m;
        Rational best;
        for (size_t i = 0; i < m; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][ncol] / t[i][enter];
            if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == m) break;   // unbounded cannot happen in phase one
        Rational p = t[leave][enter];
        for (auto& x : t[leave]) x /= p;
        for (size_t i = 0; i < m; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (size_t j = 0; j <= ncol; ++j) t[i][j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    std::vector<Rational> x(ncol);
    for (size_t i = 0; i < m; ++i) x[basis[i]] = t[i][ncol];
    for (size_t i = 0; i < m; ++i)
        if (x[nx + m + i] != 0) return std::nullopt;

    Separation sep;
    sep.normal.resize(d);
    for (size_t j = 0; j < d; ++j) sep.normal[j] = x[j] - x[d + j];
    sep.offset = x[2 * d] - x[2 * d + 1];
    auto value = [&](const std::vector<Rational>& v) {
        Rational s = 0;
        for (size_t j = 0; j < d; ++j) s += sep.normal[j] * v[j];
        return s;
    };
    for (const auto& v : inside)
        if (value(v) < sep.offset + 1) throw Error(ErrorKind::structure_error, "separation witness fails");
    for (const auto& v : outside)
        if (value(v) > sep.offset - 1) throw Error(ErrorKind::structure_error, "separation witness fails");
    return sep;
}

} // namespace hopfforge
