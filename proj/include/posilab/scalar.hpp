#pragma once

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace posilab {

using Rational = mpq_class;
using C64 = std::complex<double>;

// Boundary tolerance for the float backend.  Exact-backend predicates ignore it.
double float_eps();
void set_float_eps(double eps);

// Outcome of a boundary-sensitive predicate.  `marginal` is set by the float
// backend when the decision fell within the configured tolerance band.
struct Decision {
  bool value = false;
  bool marginal = false;

  explicit operator bool() const { return value; }
};

inline Decision operator&&(Decision x, Decision y) {
  return {x.value && y.value, x.marginal || y.marginal};
}
inline Decision operator||(Decision x, Decision y) {
  return {x.value || y.value, x.marginal || y.marginal};
}
inline Decision operator!(Decision x) { return {!x.value, x.marginal}; }

// ---------------------------------------------------------------------------
// Exact complex scalar: rational real and imaginary parts (GMP canonical form).

struct RatC {
  Rational re, im;

  RatC() : re(0), im(0) {}
  RatC(long r) : re(r), im(0) {}
  RatC(const Rational& r) : re(r), im(0) {}
  RatC(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  RatC operator-() const { return {-re, -im}; }
  RatC& operator+=(const RatC& o) { re += o.re; im += o.im; return *this; }
  RatC& operator-=(const RatC& o) { re -= o.re; im -= o.im; return *this; }

  friend RatC operator+(const RatC& x, const RatC& y) { return {x.re + y.re, x.im + y.im}; }
  friend RatC operator-(const RatC& x, const RatC& y) { return {x.re - y.re, x.im - y.im}; }
  friend RatC operator*(const RatC& x, const RatC& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend RatC operator/(const RatC& x, const RatC& y) {
    Rational n = y.re * y.re + y.im * y.im;
    if (n == 0) throw std::domain_error("division by zero RatC");
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  friend bool operator==(const RatC& x, const RatC& y) { return x.re == y.re && x.im == y.im; }
  friend bool operator!=(const RatC& x, const RatC& y) { return !(x == y); }
};

// ---------------------------------------------------------------------------
// Uniform scalar operations over the two backends.

inline RatC conj_c(const RatC& z) { return {z.re, -z.im}; }
inline C64 conj_c(const C64& z) { return std::conj(z); }

inline Rational norm_sq(const RatC& z) { return z.re * z.re + z.im * z.im; }
inline double norm_sq(const C64& z) { return std::norm(z); }

inline Rational re_part(const RatC& z) { return z.re; }
inline double re_part(const C64& z) { return z.real(); }
inline Rational im_part(const RatC& z) { return z.im; }
inline double im_part(const C64& z) { return z.imag(); }

inline bool exactly_zero(const RatC& z) { return z.re == 0 && z.im == 0; }
inline bool exactly_zero(const C64& z) { return z.real() == 0.0 && z.imag() == 0.0; }

inline C64 to_c64(const RatC& z) { return {z.re.get_d(), z.im.get_d()}; }
inline C64 to_c64(const C64& z) { return z; }

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

// Embeds a double exactly (doubles are dyadic rationals).
inline RatC from_c64_exact(const C64& z) { return {Rational(z.real()), Rational(z.imag())}; }

template <class C> struct real_type_of;
template <> struct real_type_of<RatC> { using type = Rational; };
template <> struct real_type_of<C64> { using type = double; };
template <class C> using real_of = typename real_type_of<C>::type;

template <class C> struct is_exact_backend : std::false_type {};
template <> struct is_exact_backend<RatC> : std::true_type {};

// ---------------------------------------------------------------------------
// Tolerance-aware real comparisons.  The rational overloads are exact.

inline Decision less(const Rational& a, const Rational& b) { return {a < b, false}; }
inline Decision leq(const Rational& a, const Rational& b) { return {a <= b, false}; }
inline Decision eq_real(const Rational& a, const Rational& b) { return {a == b, false}; }

inline Decision less(double a, double b) {
  double eps = float_eps();
  return {a < b, std::abs(a - b) <= eps};
}
inline Decision leq(double a, double b) {
  double eps = float_eps();
  return {a <= b + eps, std::abs(a - b) <= eps};
}
inline Decision eq_real(double a, double b) {
  double eps = float_eps();
  double diff = std::abs(a - b);
  return {diff <= eps, diff > eps / 16 && diff <= eps * 16};
}

inline Decision is_zero_c(const RatC& z) { return {exactly_zero(z), false}; }
inline Decision is_zero_c(const C64& z) {
  double eps = float_eps();
  double m = std::abs(z);
  return {m <= eps, m > eps / 16 && m <= eps * 16};
}

// ---------------------------------------------------------------------------
// Exact square roots (rational backend); used to report algebraic fixed points
// exactly when they happen to be rational.

std::optional<Rational> rational_sqrt(const Rational& x);
std::optional<RatC> complex_sqrt_exact(const RatC& z);
inline C64 complex_sqrt(const C64& z) { return std::sqrt(z); }

// Parses "p/q", integers, and decimal literals ("-0.25") into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to胡string_unused();  // (removed)

std::string to_string(const Rational& x);
std::string to_string(const RatC& z);

}  // namespace posilab
