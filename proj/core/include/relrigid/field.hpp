#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace relrigid {

using Rational = mpq_class;

// The ground field: the rationals (characteristic 0) or a prime field F_p.
// Elements of F_p are carried as integral Rationals in [0, p).
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }

  Rational reduce(const Rational& x) const;
  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inverse(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

// Parses "q", "Q" or "fp:<p>".
Field parse_field(const std::string& spec);

}  // namespace relrigid
