#pragma once

#include <utility>
#include <vector>

#include "repdim/linalg.hpp"

namespace repdim {

/// Univariate polynomial over GF(p); coefficients stored lowest degree first,
/// trimmed so the leading coefficient is nonzero (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::vector<Elem> coeffs, std::uint32_t p);

  static Polynomial monomial(std::size_t degree, std::uint32_t p, Elem c = 1);
  static Polynomial constant(Elem c, std::uint32_t p);

  std::uint32_t p() const noexcept { return field_.p(); }
  const PrimeField& field() const noexcept { return field_; }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Elem eval(Elem x) const;
  Polynomial monic() const;
  Polynomial derivative() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim();
  PrimeField field_;
  std::vector<Elem> c_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod);
Polynomial pow(const Polynomial& base, std::uint64_t e);

struct FactorPower {
  Polynomial factor;  // monic irreducible
  unsigned multiplicity;
};

/// Factorization into monic irreducibles (Berlekamp on each squarefree part).
/// The product of the factors to their multiplicities equals f.monic().
std::vector<FactorPower> factor_poly(const Polynomial& f);

/// True when f has no factor of degree below deg f, i.e. gcd(f, x^{p^d} - x) = 1
/// for all 1 <= d <= deg(f)/2.
bool is_irreducible(const Polynomial& f);

/// Characteristic polynomial det(xI - m) via Hessenberg reduction.
Polynomial characteristic_polynomial(const Matrix& m);
/// Evaluates f at a square matrix (Horner).
Matrix evaluate(const Polynomial& f, const Matrix& m);

}  // namespace repdim
