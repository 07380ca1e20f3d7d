#include "braidlie/cyclotomic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace braidlie {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<Int> poly_mul_int(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact division of integer polynomials; quotient must be integral.
std::vector<Int> poly_divexact_int(std::vector<Int> num, const std::vector<Int>& den) {
  std::vector<Int> q(num.size() - den.size() + 1, Int(0));
  for (size_t i = q.size(); i-- > 0;) {
    Int c = num[i + den.size() - 1] / den.back();
    q[i] = c;
    for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  return q;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long n) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);

  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed bottom-up.
  std::function<std::vector<Int>(long)> get = [&](long m) -> std::vector<Int> {
    auto hit = cache.find(m);
    if (hit != cache.end()) return hit->second;
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    std::vector<Int> den{Int(1)};
    for (long d = 1; d < m; ++d)
      if (m % d == 0) den = poly_mul_int(den, get(d));
    auto phi = poly_divexact_int(std::move(num), den);
    cache[m] = phi;
    return phi;
  };
  return get(n);
}

namespace {

// Immutable per-level data: Phi_M and power-reduction rows so that
// z^k = sum_i rows[k - phi][i] z^i for phi <= k <= 2*max(M, phi) + 1.
struct LevelData {
  long level = 1;
  long phi = 1;
  std::vector<Rational> phi_poly;              // Phi_M, ascending, monic
  std::vector<std::vector<Rational>> rows;     // reduction of z^k, k >= phi

  explicit LevelData(long m) : level(m), phi(euler_phi(m)) {
    auto ip = cyclotomic_polynomial(m);
    phi_poly.reserve(ip.size());
    for (auto& c : ip) phi_poly.emplace_back(c);

    // z^phi = -(c_0 + c_1 z + ... + c_{phi-1} z^{phi-1})
    std::vector<Rational> top(phi);
    for (long i = 0; i < phi; ++i) top[i] = -phi_poly[i];
    long max_k = 2 * std::max(m, phi) + 1;
    rows.reserve(max_k - phi + 1);
    rows.push_back(top);
    for (long k = phi + 1; k <= max_k; ++k) {
      const auto& prev = rows.back();
      std::vector<Rational> next(phi);
      Rational carry = prev[phi - 1];
      for (long i = phi - 1; i >= 1; --i) next[i] = prev[i - 1];
      next[0] = 0;
      if (carry != 0)
        for (long i = 0; i < phi; ++i) next[i] += carry * top[i];
      rows.push_back(std::move(next));
    }
  }

  const std::vector<Rational>& row(long k) const { return rows.at(k - phi); }
};

std::shared_ptr<const LevelData> get_level(long m) {
  static std::map<long, std::shared_ptr<const LevelData>> registry;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto& slot = registry[m];
  if (!slot) slot = std::make_shared<const LevelData>(m);
  return slot;
}

// Reduce an arbitrary-length coefficient vector modulo Phi_M.
std::vector<Rational> reduce_mod_phi(long level, const std::vector<Rational>& raw) {
  auto data = get_level(level);
  std::vector<Rational> out(data->phi, Rational(0));
  for (size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == 0) continue;
    if ((long)k < data->phi) {
      out[k] += raw[k];
    } else {
      const auto& r = data->row((long)k);
      for (long i = 0; i < data->phi; ++i)
        if (r[i] != 0) out[i] += raw[k] * r[i];
    }
  }
  return out;
}

// Extended Euclid over Q[x]: returns s with s*a == gcd (mod b), where the
// returned pair is (gcd, s). Polynomials ascending, may be empty (= 0).
using QPoly = std::vector<Rational>;

void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qpoly_rem(QPoly a, const QPoly& b, QPoly* quotient = nullptr) {
  qpoly_trim(a);
  if (quotient) quotient->assign(a.size(), Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational c = a.back() / b.back();
    size_t shift = a.size() - b.size();
    if (quotient) (*quotient)[shift] = c;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    qpoly_trim(a);
  }
  if (quotient) qpoly_trim(*quotient);
  return a;
}

QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

QPoly qpoly_sub(QPoly a, const QPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  qpoly_trim(a);
  return a;
}

}  // namespace

CycScalar::CycScalar() : level_(1), coeffs_{Rational(0)} {}

CycScalar::CycScalar(long level, std::vector<Rational> coeffs) : level_(level) {
  coeffs_ = reduce_mod_phi(level, coeffs);
}

CycScalar CycScalar::one() { return from_int(1); }

CycScalar CycScalar::from_rational(const Rational& r) {
  CycScalar s;
  s.coeffs_[0] = r;
  return s;
}

CycScalar CycScalar::from_int(long v) { return from_rational(Rational(v)); }

bool CycScalar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

bool CycScalar::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c == 0; });
}

std::optional<Rational> CycScalar::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycScalar CycScalar::embedded(long target) const {
  if (target == level_) return *this;
  if (target % level_ != 0) throw Error("embedding requires level | target");
  long step = target / level_;
  std::vector<Rational> raw((coeffs_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return CycScalar(target, std::move(raw));
}

std::optional<CycScalar> CycScalar::restricted(long target) const {
  if (target == level_) return *this;
  if (level_ % target != 0) throw Error("restriction requires target | level");
  long phi_t = euler_phi(target);
  long phi_m = (long)coeffs_.size();

  // Columns: images of the level-target power basis. Solve B x = coeffs.
  std::vector<std::vector<Rational>> cols;
  cols.reserve(phi_t);
  for (long j = 0; j < phi_t; ++j) {
    std::vector<Rational> unit(j + 1, Rational(0));
    unit[j] = 1;
    cols.push_back(CycScalar(target, std::move(unit)).embedded(level_).coeffs());
  }

  // Gaussian elimination on the phi_m x (phi_t + 1) augmented system.
  std::vector<std::vector<Rational>> aug(phi_m, std::vector<Rational>(phi_t + 1, Rational(0)));
  for (long r = 0; r < phi_m; ++r) {
    for (long j = 0; j < phi_t; ++j) aug[r][j] = cols[j][r];
    aug[r][phi_t] = coeffs_[r];
  }
  long rank = 0;
  std::vector<long> pivot_col;
  for (long c = 0; c < phi_t && rank < phi_m; ++c) {
    long p = -1;
    for (long r = rank; r < phi_m; ++r)
      if (aug[r][c] != 0) { p = r; break; }
    if (p < 0) continue;
    std::swap(aug[rank], aug[p]);
    Rational inv = 1 / aug[rank][c];
    for (long j = c; j <= phi_t; ++j) aug[rank][j] *= inv;
    for (long r = 0; r < phi_m; ++r) {
      if (r == rank || aug[r][c] == 0) continue;
      Rational f = aug[r][c];
      for (long j = c; j <= phi_t; ++j) aug[r][j] -= f * aug[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (long r = rank; r < phi_m; ++r)
    if (aug[r][phi_t] != 0) return std::nullopt;  // not in the subfield
  std::vector<Rational> x(phi_t, Rational(0));
  for (long r = 0; r < rank; ++r) x[pivot_col[r]] = aug[r][phi_t];
  return CycScalar(target, std::move(x));
}

CycScalar CycScalar::minimized() const {
  for (long d = 1; d < level_; ++d) {
    if (level_ % d != 0) continue;
    if (auto r = restricted(d)) return *r;
  }
  return *this;
}

CycScalar CycScalar::operator-() const {
  CycScalar r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycScalar operator+(const CycScalar& a, const CycScalar& b) {
  long m = std::lcm(a.level_, b.level_);
  CycScalar x = a.embedded(m), y = b.embedded(m);
  for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
  return x;
}

CycScalar operator-(const CycScalar& a, const CycScalar& b) { return a + (-b); }

CycScalar operator*(const CycScalar& a, const CycScalar& b) {
  long m = std::lcm(a.level_, b.level_);
  CycScalar x = a.embedded(m), y = b.embedded(m);
  std::vector<Rational> conv(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j) {
      if (y.coeffs_[j] == 0) continue;
      conv[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  return CycScalar(m, std::move(conv));
}

CycScalar CycScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  auto data = get_level(level_);

  // Extended Euclid against Phi (irreducible over Q): track s with
  // s*u == r (mod Phi); the final remainder r is a nonzero constant.
  QPoly r0 = data->phi_poly, r1 = coeffs_;
  qpoly_trim(r1);
  QPoly s0 = {}, s1 = {Rational(1)};
  while (true) {
    if (r1.size() == 1) break;  // nonzero constant: done
    QPoly q;
    QPoly r2 = qpoly_rem(r0, r1, &q);
    QPoly s2 = qpoly_sub(s0, qpoly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational c = 1 / r1[0];
  QPoly inv = s1;
  for (auto& v : inv) v *= c;
  return CycScalar(level_, std::move(inv));
}

CycScalar operator/(const CycScalar& a, const CycScalar& b) { return a * b.inverse(); }

CycScalar CycScalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  CycScalar acc = CycScalar::one(), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
  long m = std::lcm(a.level_, b.level_);
  return a.embedded(m).coeffs_ == b.embedded(m).coeffs_;
}

CycScalar root_of_unity(long level, long k) {
  if (level < 1) throw Error("root_of_unity: level must be positive");
  k %= level;
  if (k < 0) k += level;
  static std::map<std::pair<long, long>, CycScalar> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find({level, k});
  if (it != cache.end()) return it->second;
  std::vector<Rational> raw(k + 1, Rational(0));
  raw[k] = 1;
  CycScalar value(level, std::move(raw));
  cache.emplace(std::make_pair(level, k), value);
  return value;
}

std::optional<long> multiplicative_order(const CycScalar& u) {
  if (u.is_zero()) throw Error("multiplicative_order: zero has no order");
  // Roots of unity in Q(zeta_M) have order dividing M (M even) or 2M.
  long bound = (u.level() % 2 == 0) ? u.level() : 2 * u.level();
  CycScalar p = u;
  for (long n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p = p * u;
  }
  return std::nullopt;
}

bool is_primitive_nth_root(const CycScalar& u, long n) {
  if (u.is_zero()) return false;
  auto ord = multiplicative_order(u);
  return ord && *ord == n;
}

int scalar_compare(const CycScalar& a, const CycScalar& b) {
  CycScalar am = a.minimized(), bm = b.minimized();
  if (am.level() != bm.level()) return am.level() < bm.level() ? -1 : 1;
  for (size_t i = 0; i < am.coeffs().size(); ++i) {
    int c = cmp(am.coeffs()[i], bm.coeffs()[i]);
    if (c != 0) return c;
  }
  return 0;
}

}  // namespace braidlie
