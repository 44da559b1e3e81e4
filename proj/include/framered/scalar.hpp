#pragma once

#include <complex>
#include <type_traits>

namespace framered {

using cplx = std::complex<double>;

enum class Field { real, complex };

template <class T>
struct is_supported_scalar : std::false_type {};
template <>
struct is_supported_scalar<double> : std::true_type {};
template <>
struct is_supported_scalar<cplx> : std::true_type {};

template <class T>
concept Scalar = is_supported_scalar<T>::value;

template <Scalar T>
constexpr Field field_of() {
  return std::is_same_v<T, double> ? Field::real : Field::complex;
}

inline double conjugate(double x) { return x; }
inline cplx conjugate(const cplx& x) { return std::conj(x); }

inline double real_part(double x) { return x; }
inline double real_part(const cplx& x) { return x.real(); }

inline double imag_part(double) { return 0.0; }
inline double imag_part(const cplx& x) { return x.imag(); }

inline double abs_sq(double x) { return x * x; }
inline double abs_sq(const cplx& x) {
  return x.real() * x.real() + x.imag() * x.imag();
}

}  // namespace framered
