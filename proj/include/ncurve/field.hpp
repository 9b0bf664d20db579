#ifndef NCURVE_FIELD_HPP
#define NCURVE_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ncurve {

enum class FieldKind { Rationals, PrimeField };

inline constexpr std::uint64_t kDefaultModulus = 2147483647ULL;  // 2^31 - 1

class Field;

/// A scalar of either Q or F_p. The representation is owned by the field
/// that created it; mixing elements of different fields is a logic error.
class FieldElem {
 public:
  FieldElem() = default;

  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.v_ == b.v_; }

 private:
  friend class Field;
  explicit FieldElem(std::uint64_t r) : v_(r) {}
  explicit FieldElem(mpq_class q) : v_(std::move(q)) {}

  std::variant<std::uint64_t, mpq_class> v_{std::uint64_t{0}};
};

/// Runtime field context. All arithmetic goes through the field object,
/// in the style of LinBox/Givaro domains.
class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rationals, 0); }
  /// Throws BadCharacteristic unless p is a prime with 5 <= p < 2^32.
  static Field prime(std::uint64_t p = kDefaultModulus);

  FieldKind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == FieldKind::PrimeField; }
  std::uint64_t modulus() const noexcept { return p_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long v) const;
  FieldElem from_rational(const mpq_class& q) const;
  /// Accepts "a", "-a" and "a/b"; throws ParseError otherwise.
  FieldElem parse(const std::string& text) const;
  std::string to_string(const FieldElem& a) const;

  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  /// Throws SingularMatrix on zero (division by zero is a singular 1x1 system).
  FieldElem inv(const FieldElem& a) const;
  FieldElem div(const FieldElem& a, const FieldElem& b) const { return mul(a, inv(b)); }

  bool is_zero(const FieldElem& a) const;
  bool is_one(const FieldElem& a) const { return a == one(); }

  /// True when the integer v maps to zero in this field.
  bool vanishes(long long v) const;
  /// Throws BadCharacteristic if any integer in [1, bound] vanishes.
  void require_nonvanishing_upto(long long bound, const std::string& context) const;

  /// Residue of an element of F_p; only valid for prime fields.
  std::uint64_t residue(const FieldElem& a) const { return std::get<std::uint64_t>(a.v_); }
  const mpq_class& rational(const FieldElem& a) const { return std::get<mpq_class>(a.v_); }
  FieldElem from_residue(std::uint64_t r) const { return FieldElem(r % p_); }

  /// Uniform element of F_p. Throws UnsupportedField over Q.
  FieldElem random(std::mt19937_64& rng) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;
};

bool is_prime(std::uint64_t p);

}  // namespace ncurve

#endif  // NCURVE_FIELD_HPP
