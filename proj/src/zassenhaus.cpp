#include "zassenhaus.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>

namespace jumpnum::detail {
namespace {

using Fp = std::vector<long long>;

// ------------------------------------------------------------- Z[x] helpers

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  ztrim(a);
  return a;
}

Integer zcontent(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) g = gcd(g, c);
  return g;
}

ZPoly zprimitive(ZPoly a) {
  ztrim(a);
  if (a.empty()) return a;
  Integer g = zcontent(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

/// a / b when b divides a over Z, nullopt otherwise.
std::optional<ZPoly> zdivexact(ZPoly a, const ZPoly& b) {
  ztrim(a);
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  if (a.empty()) return ZPoly{};
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, 0);
  const Integer& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    const Integer c = a.back() / lb;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    ztrim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

// ------------------------------------------------------------- F_p[x] helpers

long long mod(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long long powmod(long long b, long long e, long long p) {
  long long r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

long long invmod(long long a, long long p) { return powmod(a, p - 2, p); }

void ftrim(Fp& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp freduce(const ZPoly& a, long long p) {
  Fp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer m;
    mpz_fdiv_r_ui(m.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(p));
    r[i] = m.get_si();
  }
  ftrim(r);
  return r;
}

Fp fadd(Fp a, const Fp& b, long long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p;
  ftrim(a);
  return a;
}

Fp fsub(Fp a, const Fp& b, long long p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = mod(a[i] - b[i], p);
  ftrim(a);
  return a;
}

Fp fmul(const Fp& a, const Fp& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Fp r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  ftrim(r);
  return r;
}

std::pair<Fp, Fp> fdivmod(Fp a, const Fp& b, long long p) {
  if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
  ftrim(a);
  if (a.size() < b.size()) return {{}, a};
  Fp q(a.size() - b.size() + 1, 0);
  const long long inv = invmod(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const long long c = a.back() * inv % p;
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = mod(a[i + shift] - c * b[i], p);
    ftrim(a);
  }
  ftrim(q);
  return {q, a};
}

Fp fmonic(Fp a, long long p) {
  if (a.empty()) return a;
  const long long inv = invmod(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

Fp fgcd(Fp a, Fp b, long long p) {
  while (!b.empty()) {
    Fp r = fdivmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(a, p);
}

Fp fpowmod(Fp base, const Integer& e, const Fp& m, long long p) {
  Fp result{1};
  base = fdivmod(base, m, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = fdivmod(fmul(result, result, p), m, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = fdivmod(fmul(result, base, p), m, p).second;
  }
  return result;
}

/// Extended gcd over F_p: s*a + t*b = 1 (inputs coprime).
std::pair<Fp, Fp> fbezout(const Fp& a, const Fp& b, long long p) {
  Fp r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = fdivmod(r0, r1, p);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, fsub(s0, fmul(q, s1, p), p));
    t0 = std::exchange(t1, fsub(t0, fmul(q, t1, p), p));
  }
  if (r0.size() != 1) throw std::logic_error("bezout of non-coprime polynomials");
  const long long inv = invmod(r0[0], p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<Fp, int>> ddf(Fp f, long long p) {
  std::vector<std::pair<Fp, int>> out;
  const Fp x{0, 1};
  Fp h = x;
  for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
    h = fpowmod(h, Integer(static_cast<long>(p)), f, p);
    Fp g = fgcd(f, fsub(h, x, p), p);
    if (g.size() > 1) {
      out.emplace_back(g, d);
      f = fdivmod(f, g, p).first;
      h = fdivmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.emplace_back(f, static_cast<int>(f.size()) - 1);
  return out;
}

/// Equal-degree splitting (p odd).
void edf(const Fp& f, int d, long long p, std::mt19937_64& rng, std::vector<Fp>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<long long> coef(0, p - 1);
  while (true) {
    Fp a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coef(rng);
    ftrim(a);
    if (a.size() < 2) continue;
    Fp g = fgcd(f, a, p);
    if (g.size() > 1 && g.size() < f.size()) {
      edf(g, d, p, rng, out);
      edf(fdivmod(f, g, p).first, d, p, rng, out);
      return;
    }
    Fp b = fpowmod(a, e, f, p);
    b = fsub(b, Fp{1}, p);
    g = fgcd(f, b, p);
    if (g.size() > 1 && g.size() < f.size()) {
      edf(g, d, p, rng, out);
      edf(fdivmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<Fp> factor_mod_p(const Fp& monic_f, long long p, std::mt19937_64& rng) {
  std::vector<Fp> out;
  for (const auto& [g, d] : ddf(monic_f, p)) edf(g, d, p, rng, out);
  return out;
}

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ------------------------------------------------------------- Hensel lifting

ZPoly to_z(const Fp& a) {
  ZPoly r;
  r.reserve(a.size());
  for (long long c : a) r.emplace_back(static_cast<long>(c));
  return r;
}

ZPoly zreduce(ZPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

/// Lifts F = g*h (mod p), g monic, to F = G*H (mod p^k), G monic.
std::pair<ZPoly, ZPoly> hensel2(const ZPoly& F, const Fp& g, const Fp& h, long long p, int k) {
  const auto [s, t] = fbezout(g, h, p);
  ZPoly G = to_z(g), H = to_z(h);
  Integer pj = static_cast<long>(p);
  for (int j = 1; j < k; ++j) {
    ZPoly diff = zsub(F, zmul(G, H));
    for (auto& c : diff) {
      if (!mpz_divisible_p(c.get_mpz_t(), pj.get_mpz_t())) throw std::logic_error("hensel lifting lost congruence");
      c /= pj;
    }
    const Fp e = freduce(diff, p);
    const auto [q, r] = fdivmod(fmul(t, e, p), g, p);
    const Fp dh = fadd(fmul(s, e, p), fmul(q, h, p), p);
    ZPoly rz = to_z(r), dhz = to_z(dh);
    if (G.size() < rz.size()) G.resize(rz.size(), 0);
    for (std::size_t i = 0; i < rz.size(); ++i) G[i] += pj * rz[i];
    if (H.size() < dhz.size()) H.resize(dhz.size(), 0);
    for (std::size_t i = 0; i < dhz.size(); ++i) H[i] += pj * dhz[i];
    pj *= static_cast<long>(p);
    G = zreduce(G, pj);
    H = zreduce(H, pj);
  }
  return {G, H};
}

std::vector<ZPoly> hensel_all(ZPoly F, std::vector<Fp> factors, long long p, int k, const Integer& pk) {
  std::vector<ZPoly> lifted;
  while (factors.size() > 1) {
    Fp rest{freduce(ZPoly{F.back()}, p)};
    if (rest.empty()) throw std::logic_error("leading coefficient vanished mod p");
    for (std::size_t i = 1; i < factors.size(); ++i) rest = fmul(rest, factors[i], p);
    auto [G, H] = hensel2(F, factors.front(), rest, p, k);
    lifted.push_back(std::move(G));
    F = std::move(H);
    factors.erase(factors.begin());
  }
  // Last factor: F / lc(F) mod p^k.
  Integer lc = F.back();
  Integer inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pk.get_mpz_t());
  for (auto& c : F) c *= inv;
  lifted.push_back(zreduce(F, pk));
  return lifted;
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

}  // namespace

std::vector<ZPoly> factor_primitive_squarefree(const ZPoly& input) {
  ZPoly f = zprimitive(input);
  const int n = static_cast<int>(f.size()) - 1;
  if (n < 1) throw std::invalid_argument("factorization of a constant");
  if (n == 1) return {f};

  std::mt19937_64 rng(0x5eed1234ULL);
  const ZPoly df = [&] {
    ZPoly d;
    for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
    return d;
  }();

  // Pick, among a few good primes, the one giving the fewest modular factors.
  long long best_p = 0;
  std::vector<Fp> best;
  int good = 0;
  for (long long p = 3; good < 5 && p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const Fp fp = freduce(f, p);
    if (static_cast<int>(fp.size()) - 1 != n) continue;
    if (fgcd(fp, freduce(df, p), p).size() != 1) continue;
    ++good;
    std::vector<Fp> facs = factor_mod_p(fmonic(fp, p), p, rng);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("no suitable prime for factorization");
  if (best.size() == 1) return {f};

  // Coefficient bound for factors of lc*f.
  Integer maxc = 0;
  for (const auto& c : f) maxc = std::max(maxc, Integer(abs(c)));
  Integer bound = maxc * abs(f.back()) * (n + 1);
  bound <<= static_cast<unsigned>(n + 1);
  int k = 1;
  Integer pk = static_cast<long>(best_p);
  while (pk <= bound) {
    pk *= static_cast<long>(best_p);
    ++k;
  }

  std::vector<ZPoly> lifted = hensel_all(f, best, best_p, k, pk);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = std::move(lifted);
  int d = 1;
  while (2 * d <= static_cast<int>(pool.size())) {
    bool found = false;
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int m = static_cast<int>(pool.size());
    while (true) {
      ZPoly cand{rest.back()};
      for (int i : idx) cand = zreduce(zmul(cand, pool[static_cast<std::size_t>(i)]), pk);
      cand = zprimitive(symmetric(cand, pk));
      if (auto q = zdivexact(rest, cand)) {
        result.push_back(cand);
        rest = *q;
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + *it);
        found = true;
        break;
      }
      // next combination
      int i = d - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - d + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < d; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    if (!found) ++d;
  }
  if (rest.size() > 1) result.push_back(zprimitive(rest));
  return result;
}

}  // namespace jumpnum::detail
