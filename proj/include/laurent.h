#pragma once

/*
  laurent -- exact arithmetic in the ring A = Z[v, v^{-1}].

  Elements are kept as sparse term lists (exponent, coefficient) sorted by
  ascending exponent, with all coefficients nonzero; coefficients are exact
  arbitrary-precision integers.  Floating point never appears.

  Besides ring arithmetic the module provides the three structure maps the
  rest of the library is built on:

    bar              the involution v -> v^{-1};
    A_{<0}           the subring v^{-1} Z[v^{-1}] of strictly negative
                     polynomials, membership tested by strictly_negative();
    symmetric head   the unique decomposition p = m + r of a bar-symmetric
                     p with m = c_0 + sum_{i>0} c_i (v^i + v^{-i}) built
                     from the coefficients of p in degrees >= 0 and r
                     strictly negative.

  head_symmetrize() applies the same degree->=0 symmetrization formula to an
  arbitrary p (no symmetry precondition); it is what iterative basis
  corrections consume, since there the input carries an extra strictly
  negative tail on top of a symmetric head.
*/

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace laurent {

using Coeff = boost::multiprecision::cpp_int;

class Laurent {
public:
  // -- construction ---------------------------------------------------------

  Laurent() = default;                      // zero
  Laurent(long c);                          // constant polynomial
  static Laurent monomial(Coeff c, int e);  // c * v^e

  // v^e + v^{-e} for e != 0, the constant 2 for e == 0.
  static Laurent bar_pair(int e);

  // -- inspection -----------------------------------------------------------

  bool is_zero() const { return t_.empty(); }
  int min_exp() const; // smallest exponent; error on zero
  int max_exp() const; // largest exponent; error on zero
  Coeff coeff(int e) const; // coefficient of v^e (zero if absent)
  const std::vector<std::pair<int, Coeff>>& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  // -- ring operations ------------------------------------------------------

  Laurent& operator+=(const Laurent& q);
  Laurent& operator-=(const Laurent& q);
  Laurent operator+(const Laurent& q) const;
  Laurent operator-(const Laurent& q) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& q) const;
  Laurent& operator*=(const Laurent& q);

  bool operator==(const Laurent& q) const { return t_ == q.t_; }
  bool operator!=(const Laurent& q) const { return t_ != q.t_; }

  void add_term(int e, const Coeff& c);       // this += c * v^e
  void add_scaled(const Laurent& q, const Laurent& f); // this += q * f
  void add_scaled_monomial(const Laurent& q, const Coeff& c, int e);

  Laurent shifted(int e) const; // this * v^e

  // -- structure maps -------------------------------------------------------

  Laurent bar() const; // v -> v^{-1}

  bool strictly_negative() const;           // member of v^{-1} Z[v^{-1}] ?
  bool bar_symmetric() const;               // bar(p) == p ?

  // Decomposition p = m + r as documented above.  symmetric_head requires
  // bar_symmetric() and throws kl::data_error otherwise; head_symmetrize
  // accepts any p.  Both return (m, r) with r strictly negative.
  std::pair<Laurent, Laurent> symmetric_head() const;
  std::pair<Laurent, Laurent> head_symmetrize() const;

  // -- input / output -------------------------------------------------------

  // Human format with strictly decreasing exponents, e.g. "v^2 - 3*v + 1".
  std::string str() const;

  // JSON array [[exp, coeff-as-decimal-string], ...], decreasing exponents.
  nlohmann::json to_json() const;
  static Laurent from_json(const nlohmann::json& j);

private:
  // sorted by exponent ascending, coefficients nonzero
  std::vector<std::pair<int, Coeff>> t_;

  void normalize(); // drop zero coefficients (terms already sorted)
};

} // namespace laurent
