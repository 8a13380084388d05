#include "coxsol/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "coxsol/errors.hpp"

namespace coxsol {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

// x^e mod Phi_n for every e in [0, n), each of length phi(n).
struct ReductionTable {
  unsigned n = 1;
  unsigned degree = 1;
  std::vector<std::vector<long>> power;
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
  // den is monic.
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long c = num[i + den.size() - 1];
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

std::mutex cache_mutex;

const ReductionTable& reduction_table(unsigned n) {
  static std::map<unsigned, std::unique_ptr<ReductionTable>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  const auto& phi = cyclotomic_polynomial(n);
  auto table = std::make_unique<ReductionTable>();
  table->n = n;
  table->degree = static_cast<unsigned>(phi.size() - 1);
  const unsigned d = table->degree;
  std::vector<long> cur(d, 0);
  cur[0] = 1;
  table->power.reserve(n);
  for (unsigned e = 0; e < n; ++e) {
    table->power.push_back(cur);
    // multiply by x and reduce the overflow with the monic Phi_n
    long top = cur[d - 1];
    for (unsigned i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (unsigned i = 0; i < d; ++i) cur[i] -= top * phi[i];
  }
  std::lock_guard lock(cache_mutex);
  auto [it, inserted] = cache.emplace(n, std::move(table));
  return *it->second;
}

// Reduces a coefficient vector indexed by exponent mod n.
std::vector<Rational> reduce_exponents(unsigned n, const std::vector<Rational>& by_exp) {
  const auto& table = reduction_table(n);
  std::vector<Rational> out(table.degree);
  for (unsigned e = 0; e < by_exp.size(); ++e) {
    if (is_zero(by_exp[e])) continue;
    const auto& row = table.power[e % n];
    for (unsigned i = 0; i < table.degree; ++i)
      if (row[i] != 0) out[i] += by_exp[e] * row[i];
  }
  return out;
}

// Polynomial long division over Q; returns (quotient, remainder).
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + b.size() - 1] / lead;
    q[i] = c;
    if (is_zero(c)) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  trim(a);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

unsigned totient(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::unique_ptr<std::vector<long>>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d of n.
  std::vector<long> p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  std::lock_guard lock(cache_mutex);
  auto [it, inserted] = cache.emplace(n, std::make_unique<std::vector<long>>(std::move(p)));
  return *it->second;
}

Cyclotomic Cyclotomic::zeta(unsigned n, long j) {
  if (n == 0) throw Error("cyclotomic conductor must be positive");
  long e = j % static_cast<long>(n);
  if (e < 0) e += n;
  std::vector<Rational> by_exp(n);
  by_exp[static_cast<unsigned>(e)] = 1;
  return Cyclotomic(n, reduce_exponents(n, by_exp));
}

Cyclotomic Cyclotomic::from_coefficients(unsigned n, std::span<const Rational> coeffs) {
  std::vector<Rational> by_exp(n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) by_exp[i % n] += coeffs[i];
  return Cyclotomic(n, reduce_exponents(n, by_exp));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!coxsol::is_zero(c)) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  auto q = as_rational();
  return q && *q == 1;
}

std::optional<Rational> Cyclotomic::as_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (!coxsol::is_zero(coeffs_[i])) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::lift(unsigned N) const {
  if (N == conductor_) return *this;
  if (N % conductor_ != 0) throw Error("lift target is not a multiple of the conductor");
  if (coeffs_.size() == 1 || as_rational()) {
    std::vector<Rational> c(totient(N));
    c[0] = coeffs_[0];
    return Cyclotomic(N, std::move(c));
  }
  const unsigned step = N / conductor_;
  std::vector<Rational> by_exp(N);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) by_exp[i * step] = coeffs_[i];
  return Cyclotomic(N, reduce_exponents(N, by_exp));
}

void Cyclotomic::align(Cyclotomic& a, Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return;
  const unsigned N = std::lcm(a.conductor_, b.conductor_);
  a = a.lift(N);
  b = b.lift(N);
}

Cyclotomic Cyclotomic::galois_conjugate(long k) const {
  const long n = conductor_;
  long kk = k % n;
  if (kk < 0) kk += n;
  if (std::gcd(kk, n) != 1 && n > 1) throw NotCoprime("galois exponent not coprime to conductor");
  if (as_rational()) return *this;
  std::vector<Rational> by_exp(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    by_exp[(i * static_cast<unsigned long>(kk)) % conductor_] += coeffs_[i];
  return Cyclotomic(conductor_, reduce_exponents(conductor_, by_exp));
}

Cyclotomic Cyclotomic::complex_conjugate() const {
  if (conductor_ <= 2) return *this;
  return galois_conjugate(static_cast<long>(conductor_) - 1);
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw SingularMatrix("inverse of zero cyclotomic");
  if (auto q = as_rational()) {
    std::vector<Rational> c(coeffs_.size());
    c[0] = 1 / *q;
    return Cyclotomic(conductor_, std::move(c));
  }
  // Extended Euclid: find u with u * a = 1 mod Phi_n.
  const auto& phi_int = cyclotomic_polynomial(conductor_);
  Poly phi(phi_int.begin(), phi_int.end());
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  Poly r0 = phi, r1 = a;
  Poly s0, s1{Rational(1)};  // coefficients of a
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant: s0 * a = r0 mod phi
  Rational c = r0.at(0);
  for (auto& x : s0) x /= c;
  return from_coefficients(conductor_, s0);
}

std::optional<std::pair<unsigned, unsigned>> Cyclotomic::root_of_unity() const {
  const unsigned M = conductor_ % 2 == 1 ? 2 * conductor_ : conductor_;
  const Cyclotomic self = lift(M);
  for (unsigned e = 0; e < M; ++e) {
    if (zeta(M, e) == self) {
      const unsigned g = std::gcd(e, M);
      return std::pair{M / g, e / g};
    }
  }
  return std::nullopt;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  return *this += b;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (conductor_ == o.conductor_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  return *this -= b;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (auto q = o.as_rational()) {
    for (auto& c : coeffs_) c *= *q;
    if (conductor_ % o.conductor_ != 0) *this = lift(std::lcm(conductor_, o.conductor_));
    return *this;
  }
  if (auto q = as_rational()) {
    Rational v = *q;
    const unsigned N = std::lcm(conductor_, o.conductor_);
    *this = o.lift(N);
    for (auto& c : coeffs_) c *= v;
    return *this;
  }
  Cyclotomic b = o;
  align(*this, b);
  std::vector<Rational> by_exp(conductor_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coxsol::is_zero(coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (coxsol::is_zero(b.coeffs_[j])) continue;
      by_exp[(i + j) % conductor_] += coeffs_[i] * b.coeffs_[j];
    }
  }
  coeffs_ = reduce_exponents(conductor_, by_exp);
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  auto qa = a.as_rational();
  auto qb = b.as_rational();
  if (qa && qb) return *qa == *qb;
  if (qa || qb) return false;
  Cyclotomic x = a, y = b;
  Cyclotomic::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a, y = b;
  Cyclotomic::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string Cyclotomic::to_string() const {
  if (auto q = as_rational()) return q->get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (coxsol::is_zero(c)) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace coxsol
