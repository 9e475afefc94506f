#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "padicphi4/errors.hpp"
#include "padicphi4/params.hpp"
#include "padicphi4/rng.hpp"

namespace padicphi4 {

// Sentinel for v_p(0) = +infinity and |0| = 0.
inline constexpr int kValuationInfinity = std::numeric_limits<int>::max();
inline constexpr int kNormZero = std::numeric_limits<int>::min();

// Exact rational with p-power denominator, num / p^pow_den.
// fractional_part returns one of these; it always lies in [0,1).
struct PRational {
    long long num = 0;
    int pow_den = 0; // denominator p^pow_den

    double to_double(long p) const {
        double d = 1.0;
        for (int i = 0; i < pow_den; ++i) d *= double(p);
        return double(num) / d;
    }
};

// Truncated p-adic scalar: value = sum_{n>=v} a_n p^n with digits a_n in
// {0,...,p-1}, leading digit nonzero. Digits are known on the window
// [v, v + prec); prec = kExactPrec means every digit beyond the stored ones
// is an exact zero (finite p-adic expansions: integers n * p^v >= 0).
// Arithmetic is closed at the participating windows; truncation follows the
// usual rules (min of absolute precisions for +, min of relative for *).
class PadicScalar {
  public:
    static constexpr int kExactPrec = std::numeric_limits<int>::max();
    static constexpr int kDefaultWindow = 48;
    static constexpr int kMaxDigits = 512;

    PadicScalar() = default; // invalid until assigned; p=0 marks empty
    static PadicScalar zero(long p);
    static PadicScalar from_integer(long p, long long n,
                                    int window = kDefaultWindow);
    // num/den with den != 0; window bounds the digit expansion
    static PadicScalar from_rational(long p, long long num, long long den,
                                     int window = kDefaultWindow);
    // value = digit * p^pos
    static PadicScalar from_digit(long p, int digit, int pos);
    static PadicScalar from_digits(long p, int valuation,
                                   const std::vector<std::uint8_t>& digits,
                                   int prec = kExactPrec);

    long prime() const { return p_; }
    bool is_zero() const { return digits_.empty(); }
    // min index of a nonzero digit; kValuationInfinity for zero
    int valuation() const { return is_zero() ? kValuationInfinity : v_; }
    // |x| = p^norm_exponent(); kNormZero encodes |0| = 0
    int norm_exponent() const { return is_zero() ? kNormZero : -v_; }
    // number of known digit positions starting at the valuation
    int precision() const { return prec_; }
    bool is_exact() const { return prec_ == kExactPrec; }
    // value known modulo p^abs_precision()
    long long abs_precision() const {
        if (is_exact()) return kExactPrec;
        return (long long)v_ + prec_;
    }
    const std::vector<std::uint8_t>& digits() const { return digits_; }
    int digit_at(int pos) const; // 0 outside the stored range

    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator-() const;
    PadicScalar operator*(const PadicScalar& o) const;
    // multiplicative inverse; window applies when the input is exact
    PadicScalar inverse(int window = kDefaultWindow) const;

    // digits at indices >= cut are dropped (value mod p^cut, canonical coset
    // representative); exact result
    PadicScalar truncate_above(int cut) const;
    // sum_{n<0} a_n p^n as an exact rational in [0,1)
    PRational fractional_part() const;

    // equality of represented values (exact digit comparison)
    bool operator==(const PadicScalar& o) const;
    std::strong_ordering operator<=>(const PadicScalar& o) const;

    double to_double() const;
    // base-p digit string, "intpart.fracpart" (digits above the point are
    // most-significant-first); "0" for zero
    std::string to_string() const;
    static PadicScalar parse(long p, const std::string& s);

  private:
    void normalize();
    long p_ = 0;
    int v_ = 0;
    int prec_ = kExactPrec;
    std::vector<std::uint8_t> digits_; // digits_[i] = digit at index v_+i
};

// 3-vector over Q_p; |x| = max of component absolute values.
class PadicVector3 {
  public:
    PadicVector3() = default;
    PadicVector3(PadicScalar x, PadicScalar y, PadicScalar z);
    static PadicVector3 zero(long p);

    const PadicScalar& operator[](int i) const { return c_[i]; }
    PadicScalar& operator[](int i) { return c_[i]; }
    long prime() const { return c_[0].prime(); }

    PadicVector3 operator+(const PadicVector3& o) const;
    PadicVector3 operator-(const PadicVector3& o) const;
    PadicVector3 operator-() const;

    // |x| = p^norm_exponent(); kNormZero for the zero vector
    int norm_exponent() const;
    bool is_zero() const;

    bool operator==(const PadicVector3& o) const;
    std::strong_ordering operator<=>(const PadicVector3& o) const;

  private:
    std::array<PadicScalar, 3> c_;
};

// Coset a + (ball of radius p^scale) in Q_p^3; Haar volume p^{3*scale}.
// The canonical center keeps only digits at indices < -scale.
class Cell {
  public:
    Cell() = default;
    Cell(int scale, const PadicVector3& center);
    static Cell unit_ball(long p);            // Z_p^3, scale 0, center 0
    static Cell centered_ball(long p, int scale); // ball |x| <= p^scale at 0

    int scale() const { return scale_; }
    const PadicVector3& center() const { return center_; }
    long prime() const { return center_.prime(); }
    double volume() const; // p^{3*scale}
    // exponent e with |center| = p^e (kNormZero when centered at 0)
    int center_norm_exponent() const { return center_.norm_exponent(); }

    bool contains(const PadicVector3& x) const;
    bool contains(const Cell& other) const; // other subset-or-equal of this
    bool overlaps(const Cell& other) const; // balls: nested or disjoint
    Cell parent() const;
    Cell child(int dx, int dy, int dz) const;
    std::vector<Cell> children() const; // the p^3 children at scale-1

    Cell translated(const PadicVector3& y) const;

    bool operator==(const Cell& o) const;
    std::strong_ordering operator<=>(const Cell& o) const;

  private:
    int scale_ = 0;
    PadicVector3 center_;
};

// Element of GL_3(Z_p): unit-ball entries, determinant a p-adic unit.
// Norm-preserving, hence maps every cell to a cell of the same scale.
class Rotation {
  public:
    Rotation() = default;
    explicit Rotation(std::array<std::array<PadicScalar, 3>, 3> m);
    static Rotation identity(long p, int precision = PadicScalar::kDefaultWindow);
    static Rotation coordinate_swap(long p, int i, int j,
                                    int precision = PadicScalar::kDefaultWindow);

    const PadicScalar& entry(int i, int j) const { return m_[i][j]; }
    long prime() const { return m_[0][0].prime(); }
    int precision() const; // min entry precision
    bool invertible_mod_p() const;

    PadicVector3 apply(const PadicVector3& x) const;
    Rotation inverse() const;

  private:
    std::array<std::array<PadicScalar, 3>, 3> m_;
};

// ---- module operations -----------------------------------------------------

// v_p(x); kValuationInfinity for x = 0
int valuation(const PadicScalar& x);
// |x| as the exponent e in p^e; kNormZero encodes |0| = 0
int abs_exponent(const PadicScalar& x);
PRational fractional_part(const PadicScalar& x);
int vec_norm_exponent(const PadicVector3& x);

// Uniform digit matrices rejected until invertible mod p.
Rotation random_rotation(RngStream& rng, long p,
                         int precision = PadicScalar::kDefaultWindow);

// Image cell M*c; throws precision_error when the rotation window cannot
// resolve the cell's modulus.
Cell apply_rotation(const Rotation& M, const Cell& c);

// exact fractional part of k.x (3-vector dot product)
PRational dot_fractional(const PadicVector3& k, const PadicVector3& x);

// e^{-2 i pi {t}_p}: the angle is exact, only cos/sin round
std::array<double, 2> character(const PRational& t, long p);

} // namespace padicphi4
