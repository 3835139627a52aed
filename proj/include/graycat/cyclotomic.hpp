#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycat/rational.hpp"

namespace graycat {

namespace detail {

// Integer polynomials, lowest degree first.
using IPoly = std::vector<long long>;

inline IPoly ipoly_trim(IPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

// Exact division of integer polynomials; remainder must vanish.
inline IPoly ipoly_div_exact(IPoly num, const IPoly& den) {
  IPoly q(num.size(), 0);
  while (num.size() >= den.size() && !(num.size() == 1 && num[0] == 0)) {
    long long lead = num.back();
    if (lead % den.back() != 0) throw std::logic_error("cyclotomic: non-exact division");
    long long f = lead / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = f;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= f * den[i];
    num = ipoly_trim(num);
    if (num.empty()) break;
  }
  if (!ipoly_trim(num).empty()) throw std::logic_error("cyclotomic: non-exact division");
  return ipoly_trim(q);
}

// n-th cyclotomic polynomial via x^n - 1 = prod_{d | n} Phi_d.
inline IPoly cyclotomic_poly(int n) {
  IPoly acc(n + 1, 0);
  acc[0] = -1;
  acc[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    acc = ipoly_div_exact(acc, cyclotomic_poly(d));
  }
  return acc;
}

struct OrderData {
  int n = 1;
  int degree = 1;
  IPoly phi;                                 // monic, integer coefficients
  std::vector<std::vector<long long>> pow;   // x^k mod phi for k in [0, 2n)

  explicit OrderData(int order) : n(order) {
    phi = cyclotomic_poly(n);
    degree = int(phi.size()) - 1;
    pow.assign(size_t(2 * n), {});
    std::vector<long long> cur(size_t(degree), 0);
    // iteratively: row(k+1) = shift(row(k)) reduced by phi
    cur[0] = 1;
    for (int k = 0; k < 2 * n; ++k) {
      pow[size_t(k)] = cur;
      long long top = cur[size_t(degree - 1)];
      std::vector<long long> nxt(size_t(degree), 0);
      for (int i = degree - 1; i > 0; --i) nxt[size_t(i)] = cur[size_t(i - 1)];
      if (top != 0)
        for (int i = 0; i < degree; ++i) nxt[size_t(i)] -= top * phi[size_t(i)];
      cur = nxt;
    }
  }
};

inline const OrderData& order_data(int n) {
  static std::map<int, OrderData> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, OrderData(n)).first;
  return it->second;
}

} // namespace detail

// An element of Q(zeta_n) in canonical form: coordinates with respect to the
// power basis 1, z, ..., z^{phi(n)-1}, reduced modulo the n-th cyclotomic
// polynomial. Equal values have identical representations.
class Cyclotomic {
public:
  Cyclotomic() : n_(1), c_(1, Rat(0)) {}
  explicit Cyclotomic(int order) : n_(order), c_(basis_size(order), Rat(0)) {
    check_order(order);
  }
  Cyclotomic(int order, const Rat& rational) : Cyclotomic(order) { c_[0] = rational; }

  // zeta_n^k
  static Cyclotomic root(int n, long long k) {
    check_order(n);
    Cyclotomic r(n);
    long long e = k % n;
    if (e < 0) e += n;
    const auto& row = detail::order_data(n).pow[size_t(e)];
    for (size_t i = 0; i < row.size(); ++i) r.c_[i] = Rat(row[i]);
    return r;
  }
  static Cyclotomic one(int n) { return Cyclotomic(n, Rat(1)); }
  static Cyclotomic zero(int n) { return Cyclotomic(n); }
  static Cyclotomic integer(int n, long long v) { return Cyclotomic(n, Rat(v)); }

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_) if (!x.is_zero()) return false;
    return true;
  }
  bool is_one() const { return *this == one(n_); }

  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
  }
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
    return x;
  }
  Cyclotomic operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    auto [x, y] = align(a, b);
    const auto& od = detail::order_data(x.n_);
    int d = od.degree;
    std::vector<Rat> prod(size_t(2 * d - 1), Rat(0));
    for (int i = 0; i < d; ++i) {
      if (x.c_[size_t(i)].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (y.c_[size_t(j)].is_zero()) continue;
        prod[size_t(i + j)] += x.c_[size_t(i)] * y.c_[size_t(j)];
      }
    }
    Cyclotomic r(x.n_);
    for (int k = 0; k < 2 * d - 1; ++k) {
      if (prod[size_t(k)].is_zero()) continue;
      if (k < d) {
        r.c_[size_t(k)] += prod[size_t(k)];
      } else {
        const auto& row = od.pow[size_t(k)];
        for (int i = 0; i < d; ++i)
          if (row[size_t(i)] != 0) r.c_[size_t(i)] += prod[size_t(k)] * Rat(row[size_t(i)]);
      }
    }
    return r;
  }
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return a.c_ == b.c_;
    auto [x, y] = align(a, b);
    return x.c_ == y.c_;
  }
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Galois conjugation z -> z^{-1} (complex conjugation under any embedding
  // sending z to a primitive root on the unit circle).
  Cyclotomic conj() const {
    Cyclotomic r(n_);
    const auto& od = detail::order_data(n_);
    for (int i = 0; i < od.degree; ++i) {
      if (c_[size_t(i)].is_zero()) continue;
      int e = (n_ - i) % n_;
      const auto& row = od.pow[size_t(e)];
      for (int j = 0; j < od.degree; ++j)
        if (row[size_t(j)] != 0) r.c_[size_t(j)] += c_[size_t(i)] * Rat(row[size_t(j)]);
    }
    return r;
  }

  // Multiplicative inverse via the extended Euclidean algorithm in Q[x]
  // modulo the cyclotomic polynomial.
  Cyclotomic inverse() const {
    if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
    const auto& od = detail::order_data(n_);
    using QP = std::vector<Rat>;
    auto trim = [](QP p) {
      while (!p.empty() && p.back().is_zero()) p.pop_back();
      return p;
    };
    QP r0(od.phi.size());
    for (size_t i = 0; i < od.phi.size(); ++i) r0[i] = Rat(od.phi[i]);
    QP r1 = trim(c_);
    QP s0 = {};          // coefficient of this in r0
    QP s1 = {Rat(1)};    // coefficient of this in r1
    while (!(r1.size() == 1)) {
      if (r1.empty()) throw std::logic_error("Cyclotomic: gcd degenerated");
      // divide r0 by r1
      QP q(r0.size(), Rat(0));
      QP rem = r0;
      while (rem.size() >= r1.size()) {
        Rat f = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] += f;
        for (size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= f * r1[i];
        rem = trim(rem);
        if (rem.empty()) break;
      }
      q = trim(q);
      // s_new = s0 - q * s1
      QP snew = s0;
      if (snew.size() < q.size() + s1.size()) snew.resize(q.size() + s1.size() ? q.size() + s1.size() - 1 : 0, Rat(0));
      for (size_t i = 0; i < q.size(); ++i) {
        if (q[i].is_zero()) continue;
        for (size_t j = 0; j < s1.size(); ++j) {
          if (i + j >= snew.size()) snew.resize(i + j + 1, Rat(0));
          snew[i + j] -= q[i] * s1[j];
        }
      }
      r0 = r1; r1 = rem.empty() ? QP{} : rem;
      s0 = s1; s1 = trim(snew);
    }
    Rat unit = r1[0]; // nonzero constant gcd
    Cyclotomic out(n_);
    for (size_t i = 0; i < s1.size() && i < out.c_.size(); ++i) out.c_[i] = s1[i] / unit;
    if (s1.size() > out.c_.size()) throw std::logic_error("Cyclotomic: bezout degree");
    return out;
  }

  // Embed into Q(zeta_m) for n | m.
  Cyclotomic embed(int m) const {
    if (m == n_) return *this;
    if (m % n_ != 0)
      throw std::invalid_argument("Cyclotomic: order " + std::to_string(n_) +
                                  " does not divide " + std::to_string(m));
    int step = m / n_;
    Cyclotomic r(m);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      Cyclotomic t = root(m, (long long)i * step);
      for (auto& x : t.c_) x *= c_[i];
      r += t;
    }
    return r;
  }

  std::complex<double> to_complex() const {
    const double pi = 3.14159265358979323846;
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      double ang = 2.0 * pi * double(i) / double(n_);
      acc += c_[i].to_double() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
  }

  // Text form "c0 + c1*z^1 + ..." with z = zeta_n; zero prints as "0".
  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0) {
        os << c_[i].str();
      } else if (c_[i] == Rat(1)) {
        os << "z^" << i;
      } else {
        os << c_[i].str() << "*z^" << i;
      }
    }
    if (first) os << "0";
    return os.str();
  }

private:
  static void check_order(int n) {
    if (n < 1) throw std::invalid_argument("Cyclotomic: order must be positive");
  }
  static size_t basis_size(int n) { return size_t(detail::order_data(n).degree); }

  static std::pair<Cyclotomic, Cyclotomic> align(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.n_ == b.n_) return {a, b};
    throw std::invalid_argument("Cyclotomic: order mismatch (" + std::to_string(a.n_) +
                                " vs " + std::to_string(b.n_) + "); embed explicitly");
  }

  int n_;
  std::vector<Rat> c_;
};

inline Cyclotomic root(int n, long long k) { return Cyclotomic::root(n, k); }

} // namespace graycat
