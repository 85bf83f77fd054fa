#include "relrigid/field.hpp"

#include <charconv>

#include "relrigid/error.hpp"

namespace relrigid {

Field Field::prime(std::uint64_t p) {
  mpz_class z;
  z = static_cast<unsigned long>(p);
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Rational Field::reduce(const Rational& x) const {
  if (p_ == 0) return x;
  const mpz_class p = static_cast<unsigned long>(p_);
  mpz_class num = x.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = x.get_den() % p;
  if (den == 0) throw InputError("value " + x.get_str() + " has no image in " + name());
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * inv) % p;
  return Rational(r);
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  return reduce(a + b);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  return reduce(a - b);
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return reduce(a * b);
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  return reduce(-a);
}

Rational Field::inverse(const Rational& a) const {
  if (sgn(a) == 0) throw InputError("division by zero");
  if (p_ == 0) return 1 / a;
  return reduce(Rational(1) / a);
}

Rational Field::div(const Rational& a, const Rational& b) const {
  if (sgn(b) == 0) throw InputError("division by zero");
  if (p_ == 0) return a / b;
  return reduce(a / b);
}

std::string Field::name() const {
  if (p_ == 0) return "Q";
  return "F_" + std::to_string(p_);
}

Field parse_field(const std::string& spec) {
  if (spec == "q" || spec == "Q") return Field::rationals();
  if (spec.rfind("fp:", 0) == 0) {
    std::uint64_t p = 0;
    const char* first = spec.data() + 3;
    const char* last = spec.data() + spec.size();
    auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last || first == last) {
      throw InputError("bad field specification '" + spec + "'");
    }
    if (p > 0xffffffffULL) throw InputError("prime modulus too large: " + spec);
    return Field::prime(p);
  }
  throw InputError("bad field specification '" + spec + "' (expected q or fp:<p>)");
}

}  // namespace relrigid
