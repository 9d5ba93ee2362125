#include "gcs/ebf.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gcs {

namespace {

// p^m, saturating at the uint64 maximum (callers only compare against it).
std::uint64_t checked_pow(int p, int m) {
  std::uint64_t r = 1;
  for (int i = 0; i < m; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / static_cast<std::uint64_t>(p))
      return std::numeric_limits<std::uint64_t>::max();
    r *= static_cast<std::uint64_t>(p);
  }
  return r;
}

int mod_reduce(long long v, int q) {
  long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

// base^exp mod q with 0^0 = 1.
int mod_pow(int base, long long exp, int q) {
  std::uint64_t result = 1 % static_cast<std::uint64_t>(q);
  std::uint64_t b = static_cast<std::uint64_t>(base % q);
  while (exp > 0) {
    if (exp & 1) result = result * b % static_cast<std::uint64_t>(q);
    b = b * b % static_cast<std::uint64_t>(q);
    exp >>= 1;
  }
  return static_cast<int>(result);
}

void check_same_shape(const Ebf& a, const Ebf& b, const char* op) {
  if (a.p() != b.p() || a.m() != b.m() || a.q() != b.q())
    throw std::invalid_argument(std::string("ebf ") + op +
                                ": operands have different (p, m, q) shapes");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

long long parse_integer(std::string_view token, const std::string& what) {
  token = trim(token);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::invalid_argument(what + ": '" + std::string(token) +
                                "' is not an integer");
  return value;
}

}  // namespace

std::vector<int> p_ary_digits(std::uint64_t i, int p, int m) {
  if (p < 2) throw std::invalid_argument("p_ary_digits: base must be >= 2");
  if (m < 1) throw std::invalid_argument("p_ary_digits: width must be >= 1");
  std::vector<int> digits(m);
  for (int a = 0; a < m; ++a) {
    digits[a] = static_cast<int>(i % static_cast<std::uint64_t>(p));
    i /= static_cast<std::uint64_t>(p);
  }
  if (i != 0)
    throw std::invalid_argument("p_ary_digits: value does not fit in " +
                                std::to_string(m) + " base-" + std::to_string(p) +
                                " digits");
  return digits;
}

ZqSequence::ZqSequence(int q, std::vector<int> values)
    : q(q), values(std::move(values)) {
  if (q < 2) throw std::invalid_argument("ZqSequence: alphabet size must be >= 2");
  for (int v : this->values)
    if (v < 0 || v >= q)
      throw std::invalid_argument("ZqSequence: entry " + std::to_string(v) +
                                  " is outside [0, " + std::to_string(q) + ")");
}

std::vector<std::complex<double>> unit_roots(int q) {
  if (q < 1) throw std::invalid_argument("unit_roots: order must be >= 1");
  std::vector<std::complex<double>> roots(static_cast<std::size_t>(q));
  for (int e = 0; e < q; ++e) {
    const long long quarters = 4LL * e;
    if (quarters % q == 0) {
      switch ((quarters / q) & 3) {
        case 0: roots[e] = {1.0, 0.0}; break;
        case 1: roots[e] = {0.0, 1.0}; break;
        case 2: roots[e] = {-1.0, 0.0}; break;
        default: roots[e] = {0.0, -1.0}; break;
      }
    } else {
      const double theta = 2.0 * std::numbers::pi * static_cast<double>(e) /
                           static_cast<double>(q);
      roots[e] = {std::cos(theta), std::sin(theta)};
    }
  }
  return roots;
}

ComplexSequence to_complex(const ZqSequence& a) {
  const auto roots = unit_roots(a.q);
  ComplexSequence out;
  out.re.reserve(a.size());
  out.im.reserve(a.size());
  for (int v : a.values) out.push_back(roots[static_cast<std::size_t>(v)]);
  return out;
}

Ebf::Ebf(int p, int m, int q) : p_(p), m_(m), q_(q) {
  if (p < 2) throw std::invalid_argument("Ebf: base p must be >= 2");
  if (m < 1) throw std::invalid_argument("Ebf: variable count m must be >= 1");
  if (q < 2) throw std::invalid_argument("Ebf: modulus q must be >= 2");
}

Ebf Ebf::constant(int p, int m, int q, long long value) {
  Ebf f(p, m, q);
  f.add_term(std::vector<int>(static_cast<std::size_t>(m), 0), value);
  return f;
}

Ebf Ebf::monomial(int p, int m, int q, const std::vector<int>& exponents,
                  long long coefficient) {
  Ebf f(p, m, q);
  f.add_term(exponents, coefficient);
  return f;
}

Ebf& Ebf::add_term(const std::vector<int>& exponents, long long coefficient) {
  if (exponents.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("Ebf::add_term: exponent vector must have m entries");
  for (int e : exponents)
    if (e < 0) throw std::invalid_argument("Ebf::add_term: exponents must be >= 0");
  const int coeff = mod_reduce(coefficient, q_);
  if (coeff == 0 && !terms_.contains(exponents)) return *this;
  auto [it, inserted] = terms_.try_emplace(exponents, 0);
  it->second = mod_reduce(static_cast<long long>(it->second) + coeff, q_);
  if (it->second == 0) terms_.erase(it);
  return *this;
}

int Ebf::evaluate(const std::vector<int>& x) const {
  if (x.size() != static_cast<std::size_t>(m_))
    throw std::invalid_argument("Ebf::evaluate: point has " +
                                std::to_string(x.size()) + " coordinates, expected " +
                                std::to_string(m_));
  for (int v : x)
    if (v < 0 || v >= p_)
      throw std::invalid_argument("Ebf::evaluate: coordinate outside [0, p)");
  long long acc = 0;
  for (const auto& [exps, coeff] : terms_) {
    long long term = coeff;
    for (int a = 0; a < m_; ++a)
      if (exps[static_cast<std::size_t>(a)] != 0)
        term = term * mod_pow(x[static_cast<std::size_t>(a)],
                              exps[static_cast<std::size_t>(a)], q_) % q_;
    acc = (acc + term) % q_;
  }
  return static_cast<int>(acc);
}

Ebf Ebf::scaled(long long s) const {
  Ebf out(p_, m_, q_);
  for (const auto& [exps, coeff] : terms_)
    out.add_term(exps, static_cast<long long>(coeff) * mod_reduce(s, q_));
  return out;
}

Ebf operator+(const Ebf& a, const Ebf& b) {
  check_same_shape(a, b, "add");
  Ebf out = a;
  for (const auto& [exps, coeff] : b.terms_) out.add_term(exps, coeff);
  return out;
}

Ebf operator*(const Ebf& a, const Ebf& b) {
  check_same_shape(a, b, "multiply");
  Ebf out(a.p_, a.m_, a.q_);
  std::vector<int> exps(static_cast<std::size_t>(a.m_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.m_; ++i)
        exps[static_cast<std::size_t>(i)] = ea[static_cast<std::size_t>(i)] +
                                            eb[static_cast<std::size_t>(i)];
      out.add_term(exps, static_cast<long long>(ca) * cb);
    }
  return out;
}

Ebf Ebf::lifted(int new_m) const {
  if (new_m < m_)
    throw std::invalid_argument("Ebf::lifted: cannot drop variables");
  Ebf out(p_, new_m, q_);
  for (const auto& [exps, coeff] : terms_) {
    std::vector<int> padded = exps;
    padded.resize(static_cast<std::size_t>(new_m), 0);
    out.add_term(padded, coeff);
  }
  return out;
}

ZqSequence Ebf::project_zq(std::uint64_t L) const {
  const std::uint64_t cap = checked_pow(p_, m_);
  if (L < 1 || L > cap)
    throw std::invalid_argument("Ebf::project: length must lie in [1, p^m]");
  std::vector<int> vals;
  vals.reserve(L);
  for (std::uint64_t i = 0; i < L; ++i) vals.push_back(evaluate(p_ary_digits(i, p_, m_)));
  return ZqSequence(q_, std::move(vals));
}

ComplexSequence Ebf::project_complex(std::uint64_t L) const {
  return to_complex(project_zq(L));
}

Ebf parse_anf(const std::string& text, int p, int m, int q) {
  Ebf f(p, m, q);
  const std::string_view body = trim(text);
  if (body.empty() || body == "0") return f;

  std::size_t term_index = 0;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t next = body.find(';', pos);
    const std::string_view term =
        body.substr(pos, next == std::string_view::npos ? std::string_view::npos
                                                        : next - pos);
    ++term_index;
    const std::string where = "anf term " + std::to_string(term_index);

    const std::size_t colon = term.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument(where + ": expected 'coeff:e1,...,em'");
    const long long coeff = parse_integer(term.substr(0, colon), where + " coefficient");

    std::vector<int> exps;
    std::string_view rest = term.substr(colon + 1);
    while (true) {
      const std::size_t comma = rest.find(',');
      const std::string_view tok =
          rest.substr(0, comma == std::string_view::npos ? std::string_view::npos
                                                         : comma);
      const long long e =
          parse_integer(tok, where + " exponent " + std::to_string(exps.size() + 1));
      if (e < 0 || e >= p)
        throw std::invalid_argument(where + ": exponent " + std::to_string(e) +
                                    " is outside [0, p)");
      exps.push_back(static_cast<int>(e));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (exps.size() != static_cast<std::size_t>(m))
      throw std::invalid_argument(where + ": has " + std::to_string(exps.size()) +
                                  " exponents, expected m = " + std::to_string(m));
    f.add_term(exps, coeff);

    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return f;
}

std::string print_anf(const Ebf& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, coeff] : f.terms()) {
    if (!first) out += ';';
    first = false;
    out += std::to_string(coeff);
    out += ':';
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(exps[i]);
    }
  }
  return out;
}

}  // namespace gcs
