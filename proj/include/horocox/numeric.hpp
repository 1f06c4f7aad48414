#pragma once

// Exact arithmetic substrate: GMP integers/rationals as Eigen scalars.

#include <gmpxx.h>

#include <Eigen/Core>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace horocox {

using Integer = mpz_class;
using Rational = mpq_class;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using LatticeVector = Vec<Integer>;
using RationalVector = Vec<Rational>;
using IntMatrix = Mat<Integer>;
using RationalMatrix = Mat<Rational>;

// mpq_class construction does not canonicalize; every rational entering the
// system goes through here.
inline Rational make_rational(Integer num, Integer den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with optional sign on the numerator.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("malformed rational '" + text + "'"); };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return make_rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty() || den.find('/') != std::string::npos) throw bad();
    return make_rational(Integer(num), Integer(den));
  } catch (const std::invalid_argument&) {
    throw bad();
  }
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

template <typename Scalar>
std::string to_string(const Vec<Scalar>& v) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(v(i));
  }
  out += ")";
  return out;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Exact quotient; the caller guarantees divisibility.
inline Integer exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

template <typename Scalar>
bool lex_less(const Vec<Scalar>& a, const Vec<Scalar>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return false;
}

template <typename Scalar>
struct LexLess {
  bool operator()(const Vec<Scalar>& a, const Vec<Scalar>& b) const { return lex_less(a, b); }
};

template <typename Scalar>
Vec<Scalar> vec_of(std::initializer_list<Scalar> entries) {
  Vec<Scalar> v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = e;
  return v;
}

inline LatticeVector lattice_vec(std::initializer_list<long> entries) {
  LatticeVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (long e : entries) v(i++) = Integer(e);
  return v;
}

inline RationalVector rational_vec(std::initializer_list<std::string> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const auto& e : entries) v(i++) = parse_rational(e);
  return v;
}

inline RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(v(i));
  return r;
}

// Requires all denominators equal to one.
inline LatticeVector to_lattice(const RationalVector& v) {
  LatticeVector r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).get_den() != 1) throw std::invalid_argument("vector is not integral");
    r(i) = v(i).get_num();
  }
  return r;
}

}  // namespace horocox
