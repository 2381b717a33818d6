#pragma once

#include <complex>
#include <type_traits>

#include "radical.hpp"
#include "rational.hpp"

namespace bosonorder {

// Uniform access to the three coefficient types used by the polynomial
// containers: exact Gaussian rationals, exact radicals, and doubles.

inline GaussianRational conj(const GaussianRational& x) { return x.conj(); }
inline RadicalNumber conj(const RadicalNumber& x) { return x.conj(); }
inline std::complex<double> conj(const std::complex<double>& x) { return std::conj(x); }

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }
inline bool is_zero(const RadicalNumber& x) { return x.is_zero(); }
inline bool is_zero(const std::complex<double>& x) { return x == std::complex<double>{}; }

inline std::complex<double> to_complex(const GaussianRational& x) { return x.to_complex(); }
inline std::complex<double> to_complex(const RadicalNumber& x) { return x.to_complex(); }
inline std::complex<double> to_complex(const std::complex<double>& x) { return x; }

template <class T>
concept Scalar = std::is_same_v<T, GaussianRational> || std::is_same_v<T, RadicalNumber> ||
                 std::is_same_v<T, std::complex<double>>;

template <class T>
inline constexpr bool is_exact_v = !std::is_same_v<T, std::complex<double>>;

/// Integer → scalar.
template <Scalar T>
T from_integer(const Integer& n) {
  if constexpr (std::is_same_v<T, std::complex<double>>)
    return {n.convert_to<double>(), 0.0};
  else
    return T(GaussianRational(Rational(n)));
}

}  // namespace bosonorder
