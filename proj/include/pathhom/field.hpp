#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "pathhom/error.hpp"

namespace pathhom {

/// Coefficient field: the rationals or GF(p) for a prime p < 2^31.
struct FieldDescriptor {
  enum class kind_t { rational, prime } kind = kind_t::rational;
  std::uint32_t p = 0;

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor prime(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return kind == kind_t::rational ? 0 : p; }
  bool is_rational() const noexcept { return kind == kind_t::rational; }

  /// "Q" or "F<p>".
  std::string name() const { return is_rational() ? "Q" : "F" + std::to_string(p); }

  bool operator==(const FieldDescriptor&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline FieldDescriptor FieldDescriptor::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw error(error_kind::invalid_field, std::to_string(p) + " is not a prime below 2^31");
  }
  return {kind_t::prime, p};
}

/// Accepts "Q", "F<p>", "GF(<p>)" and "Fp" style names, case-insensitive prefix.
inline FieldDescriptor parse_field(std::string_view s) {
  if (s == "Q" || s == "q" || s == "QQ") return FieldDescriptor::rational();
  std::string_view digits;
  if (s.starts_with("GF(") && s.ends_with(")")) {
    digits = s.substr(3, s.size() - 4);
  } else if (s.starts_with("F") || s.starts_with("f")) {
    digits = s.substr(1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos ||
      digits.size() > 10) {
    throw error(error_kind::invalid_field, "unrecognised field \"" + std::string(s) + "\"");
  }
  return FieldDescriptor::prime(static_cast<std::uint32_t>(std::stoull(std::string(digits))));
}

/// Field policy for exact rational arithmetic. Values are always canonical
/// (gmp normalises after every operation).
struct RationalField {
  using value_type = mpq_class;

  static value_type zero() { return 0; }
  static value_type one() { return 1; }
  static value_type from_int(long v) { return v; }
  static value_type from_integer(const mpz_class& v) { return mpq_class(v); }

  static value_type add(const value_type& a, const value_type& b) { return a + b; }
  static value_type sub(const value_type& a, const value_type& b) { return a - b; }
  static value_type mul(const value_type& a, const value_type& b) { return a * b; }
  static value_type div(const value_type& a, const value_type& b) { return a / b; }
  static value_type neg(const value_type& a) { return -a; }
  static bool is_zero(const value_type& a) { return sgn(a) == 0; }
  static bool is_canonical(const value_type& a) {
    return sgn(a.get_den()) > 0 && gcd(a.get_num(), a.get_den()) == 1;
  }
  /// a == +1 or a == -1.
  static bool is_unit_sign(const value_type& a) { return abs(a) == 1; }

  static std::string to_string(const value_type& a) { return a.get_str(); }

  FieldDescriptor descriptor() const { return FieldDescriptor::rational(); }
  std::uint32_t characteristic() const noexcept { return 0; }
};

/// Field policy for GF(p); residues are kept in [0, p).
struct PrimeField {
  using value_type = std::uint32_t;

  std::uint32_t p;

  explicit PrimeField(std::uint32_t prime) : p(prime) {}

  value_type zero() const { return 0; }
  value_type one() const { return 1 % p; }
  value_type from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<value_type>(r < 0 ? r + p : r);
  }
  value_type from_integer(const mpz_class& v) const {
    mpz_class r = v % p;
    if (r < 0) r += p;
    return static_cast<value_type>(r.get_ui());
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p ? s - p : s);
  }
  value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + (p - b); }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>((std::uint64_t{a} * b) % p);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p - a; }
  value_type inverse(value_type a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inverse(b)); }
  bool is_zero(value_type a) const { return a == 0; }
  bool is_canonical(value_type a) const { return a < p; }
  bool is_unit_sign(value_type a) const { return a == 1 % p || a == p - 1; }

  std::string to_string(value_type a) const { return std::to_string(a); }

  FieldDescriptor descriptor() const { return FieldDescriptor::prime(p); }
  std::uint32_t characteristic() const noexcept { return p; }
};

/// Runs fn with the field policy matching the descriptor.
template <class Fn>
decltype(auto) visit_field(const FieldDescriptor& f, Fn&& fn) {
  if (f.is_rational()) return fn(RationalField{});
  return fn(PrimeField{f.p});
}

}  // namespace pathhom
