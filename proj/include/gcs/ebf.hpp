#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gcs {

// Base-p digits of i, least significant first, fixed width m, so that
// i = sum_a digits[a] * p^a. Throws std::invalid_argument when p < 2, m < 1,
// or i does not fit in m digits.
std::vector<int> p_ary_digits(std::uint64_t i, int p, int m);

// A length-L sequence over Z_q; every entry must already lie in [0, q).
struct ZqSequence {
  int q = 2;
  std::vector<int> values;

  ZqSequence() = default;
  ZqSequence(int q, std::vector<int> values);

  std::size_t size() const { return values.size(); }
  friend bool operator==(const ZqSequence&, const ZqSequence&) = default;
};

// Complex samples kept as split real/imaginary arrays, the layout the
// vectorized kernels consume without reshuffling.
struct ComplexSequence {
  std::vector<double> re, im;

  std::size_t size() const { return re.size(); }
  std::complex<double> at(std::size_t i) const { return {re[i], im[i]}; }
  void push_back(std::complex<double> z) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
};

// The q-th roots of unity e^{2*pi*i*e/q} for e = 0..q-1. Roots that land on
// a coordinate axis (4e divisible by q) are returned exactly, so alphabets
// whose symbols all sit on the axes (q = 1, 2, 4) map to exact values and
// integer arithmetic on them stays exact in doubles.
std::vector<std::complex<double>> unit_roots(int q);

// Entrywise zeta_q^{a_i}.
ComplexSequence to_complex(const ZqSequence& a);

// A function Z_p^m -> Z_q in sparse algebraic-normal-form storage: a map from
// exponent vector (length m) to nonzero coefficient in [0, q), with keys in
// lexicographic order. Text input restricts exponents to [0, p-1]; products
// may carry larger exponents, which are kept as written and handled by
// evaluation directly (functions are treated extensionally — only their value
// tables matter downstream). Evaluation uses 0^0 = 1, so the all-zero
// exponent vector is the constant monomial.
class Ebf {
 public:
  // The zero function over (p, m, q). Throws on p < 2, m < 1, or q < 2.
  Ebf(int p, int m, int q);

  static Ebf constant(int p, int m, int q, long long value);
  static Ebf monomial(int p, int m, int q, const std::vector<int>& exponents,
                      long long coefficient);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const std::map<std::vector<int>, int>& terms() const { return terms_; }

  // Adds coefficient * x^exponents (coefficient reduced mod q), merging with
  // any existing term and dropping it if the merged coefficient is zero.
  Ebf& add_term(const std::vector<int>& exponents, long long coefficient);

  // Value at x in Z_p^m, reduced mod q; x^e is computed as modular
  // exponentiation, so exponents >= p are fine.
  int evaluate(const std::vector<int>& x) const;

  Ebf scaled(long long s) const;
  friend Ebf operator+(const Ebf& a, const Ebf& b);
  friend Ebf operator*(const Ebf& a, const Ebf& b);
  friend bool operator==(const Ebf&, const Ebf&) = default;

  // The same function viewed over new_m >= m variables; the appended
  // variables do not occur in any term.
  Ebf lifted(int new_m) const;

  // Restriction to the first L points of Z_p^m in base-p index order: entry i
  // is the value at the digit vector of i. Requires 1 <= L <= p^m.
  ZqSequence project_zq(std::uint64_t L) const;
  ComplexSequence project_complex(std::uint64_t L) const;

 private:
  int p_, m_, q_;
  std::map<std::vector<int>, int> terms_;
};

// Named aliases for the arithmetic, matching the operation vocabulary used
// throughout the tests.
inline Ebf add(const Ebf& a, const Ebf& b) { return a + b; }
inline Ebf multiply(const Ebf& a, const Ebf& b) { return a * b; }
inline Ebf scale(const Ebf& f, long long s) { return f.scaled(s); }

// Text form: semicolon-separated terms, each `coeff:e1,e2,...,em`, e.g.
// `1:1,1,0;3:1,1,1;1:0,0,0` over m = 3. Whitespace around tokens is ignored;
// "" and "0" denote the zero function. Exponents must lie in [0, p-1];
// coefficients are reduced mod q; repeated exponent vectors merge additively.
Ebf parse_anf(const std::string& text, int p, int m, int q);

// Inverse of parse_anf; terms appear in lexicographic exponent order and the
// zero function prints as "0". parse -> print -> parse is the identity.
std::string print_anf(const Ebf& f);

}  // namespace gcs
