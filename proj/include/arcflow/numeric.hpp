#pragma once

#include <Eigen/Core>
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace Eigen {

template <> struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <> struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace arcflow {

// Exact scalars. mpq_class keeps fractions canonical (reduced, positive
// denominator), which is exactly the Rat contract.
using Int = mpz_class;
using Rat = mpq_class;

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMat = Mat<Int>;
using IntVec = Vec<Int>;
using RatMat = Mat<Rat>;
using RatVec = Vec<Rat>;

// Thrown on malformed input files.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when structurally well-formed input violates a validation rule.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Thrown when an operation is queried outside its domain (boundary classes,
// degenerate cones, ...).
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// Floor division; the normal-form routines rely on floor (not truncation)
// so that reduction steps are independent of signs.
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int vec_gcd(const IntVec& v) {
  Int g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = gcd(g, v[i]);
  return g;
}

// Divide out the content, keeping the direction. Zero vectors are rejected.
inline IntVec primitive(const IntVec& v) {
  Int g = vec_gcd(v);
  if (g == 0) throw DomainError("primitive: zero vector");
  IntVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

inline bool lex_less(const IntVec& a, const IntVec& b) {
  for (Eigen::Index i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.size() < b.size();
}

inline bool lex_eq(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
  Rat s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
  return s;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

// Parses "p", "p/q" or decimal-free signed integers; q must be nonzero.
inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const IntVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

inline std::string to_string(const RatVec& v) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

// Comma-separated rationals, e.g. "1,-3" or "1/2,-3/2".
inline RatVec parse_rat_vector(const std::string& s) {
  std::vector<Rat> parts;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      parts.push_back(parse_rat(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(parse_rat(cur));
  RatVec out(static_cast<Eigen::Index>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i) out[static_cast<Eigen::Index>(i)] = parts[i];
  return out;
}

}  // namespace arcflow
