#pragma once

#include "hermex/gaussian.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace hermex {

using Complex = std::complex<double>;

enum class Backend { exact, floating };

inline std::string to_string(Backend b) { return b == Backend::exact ? "exact" : "float"; }

/// Per-backend scalar behaviour. Only Gaussian and Complex are supported.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Gaussian> {
  static constexpr bool exact = true;
  static constexpr Backend backend = Backend::exact;
  static Gaussian zero() { return Gaussian(); }
  static Gaussian one() { return Gaussian(1); }
  static Gaussian from_ratio(long num, long den, long inum = 0, long iden = 1) {
    return Gaussian(mpq_class(num, den), mpq_class(inum, iden));
  }
  static Gaussian conj(const Gaussian& x) { return x.conj(); }
  static bool is_zero(const Gaussian& x) { return x.is_zero(); }
  static double magnitude(const Gaussian& x) { return std::sqrt(x.norm2().get_d()); }
  static Gaussian half() { return Gaussian(mpq_class(1, 2)); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static constexpr Backend backend = Backend::floating;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_ratio(long num, long den, long inum = 0, long iden = 1) {
    return {static_cast<double>(num) / static_cast<double>(den),
            static_cast<double>(inum) / static_cast<double>(iden)};
  }
  static Complex conj(const Complex& x) { return std::conj(x); }
  static bool is_zero(const Complex& x) { return x == Complex{}; }
  static double magnitude(const Complex& x) { return std::abs(x); }
  static Complex half() { return {0.5, 0.0}; }
};

}  // namespace hermex
