#include "ncurve/field.hpp"

#include <cctype>

#include "ncurve/error.hpp"

namespace ncurve {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::UnsupportedField: return "UnsupportedField";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::BadCharacteristic: return "BadCharacteristic";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NonFreeProfile: return "NonFreeProfile";
    case ErrorCode::LemmaViolation: return "LemmaViolation";
    case ErrorCode::BadDelta: return "BadDelta";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::OrderingViolated: return "OrderingViolated";
    case ErrorCode::ResampleExhausted: return "ResampleExhausted";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::AssumptionViolated: return "AssumptionViolated";
    case ErrorCode::NotDecreasing: return "NotDecreasing";
    case ErrorCode::Ramified: return "Ramified";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OddK: return "OddK";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::DegenerateConic: return "DegenerateConic";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p < 5 || p >= (1ULL << 32) || !is_prime(p)) {
    throw Error(ErrorCode::BadCharacteristic,
                "modulus " + std::to_string(p) + " must be a prime in [5, 2^32)");
  }
  return Field(FieldKind::PrimeField, p);
}

FieldElem Field::zero() const {
  return is_prime_field() ? FieldElem(std::uint64_t{0}) : FieldElem(mpq_class(0));
}

FieldElem Field::one() const {
  return is_prime_field() ? FieldElem(std::uint64_t{1}) : FieldElem(mpq_class(1));
}

FieldElem Field::from_int(long long v) const {
  if (!is_prime_field()) return FieldElem(mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(p_);
  long long r = v % p;
  if (r < 0) r += p;
  return FieldElem(static_cast<std::uint64_t>(r));
}

FieldElem Field::from_rational(const mpq_class& q) const {
  if (!is_prime_field()) return FieldElem(q);
  mpz_class p(static_cast<unsigned long>(p_));
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw Error(ErrorCode::BadCharacteristic, "denominator vanishes modulo " + std::to_string(p_));
  }
  const FieldElem n(static_cast<std::uint64_t>(num.get_ui()));
  const FieldElem d(static_cast<std::uint64_t>(den.get_ui()));
  return div(n, d);
}

FieldElem Field::parse(const std::string& text) const {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  const auto slash = text.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den)) {
    throw Error(ErrorCode::ParseError, "invalid scalar '" + text + "'");
  }
  mpz_class n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::to_string(const FieldElem& a) const {
  if (is_prime_field()) return std::to_string(residue(a));
  return rational(a).get_str();
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const {
  if (is_prime_field()) {
    std::uint64_t r = residue(a) + residue(b);
    if (r >= p_) r -= p_;
    return FieldElem(r);
  }
  return FieldElem(mpq_class(rational(a) + rational(b)));
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const {
  if (is_prime_field()) {
    const std::uint64_t x = residue(a), y = residue(b);
    return FieldElem(x >= y ? x - y : x + p_ - y);
  }
  return FieldElem(mpq_class(rational(a) - rational(b)));
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const {
  if (is_prime_field()) return FieldElem((residue(a) * residue(b)) % p_);
  return FieldElem(mpq_class(rational(a) * rational(b)));
}

FieldElem Field::neg(const FieldElem& a) const {
  if (is_prime_field()) {
    const std::uint64_t x = residue(a);
    return FieldElem(x == 0 ? 0 : p_ - x);
  }
  return FieldElem(mpq_class(-rational(a)));
}

FieldElem Field::inv(const FieldElem& a) const {
  if (is_zero(a)) throw Error(ErrorCode::SingularMatrix, "inverse of zero");
  if (is_prime_field()) {
    // Fermat: a^(p-2)
    std::uint64_t base = residue(a), e = p_ - 2, r = 1;
    while (e > 0) {
      if (e & 1) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return FieldElem(r);
  }
  return FieldElem(mpq_class(1 / rational(a)));
}

bool Field::is_zero(const FieldElem& a) const {
  if (is_prime_field()) return residue(a) == 0;
  return sgn(rational(a)) == 0;
}

bool Field::vanishes(long long v) const {
  if (!is_prime_field()) return v == 0;
  return v % static_cast<long long>(p_) == 0;
}

void Field::require_nonvanishing_upto(long long bound, const std::string& context) const {
  if (is_prime_field() && bound >= static_cast<long long>(p_)) {
    throw Error(ErrorCode::BadCharacteristic,
                context + ": integer constants up to " + std::to_string(bound) +
                    " vanish modulo " + std::to_string(p_));
  }
}

FieldElem Field::random(std::mt19937_64& rng) const {
  if (!is_prime_field()) {
    throw Error(ErrorCode::UnsupportedField, "random sampling is only defined over prime fields");
  }
  // 64-bit draws reduced mod p < 2^32: bias below 2^-32.
  return FieldElem(rng() % p_);
}

}  // namespace ncurve
