#ifndef POLYBOUND_INTEGER_HPP
#define POLYBOUND_INTEGER_HPP

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace polybound::detail {

inline mpz_class rho_split(const mpz_class& n) {
  // Pollard-Brent; n is odd, composite and not a perfect power of a small prime.
  for (unsigned long c = 1;; ++c) {
    mpz_class y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto step = [&](mpz_class& v) {
      v = v * v + c;
      v %= n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  if (n <= 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
    ++out[n];
    return;
  }
  mpz_class root;
  for (unsigned long k = 2; k <= 64; ++k) {
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
      std::map<mpz_class, unsigned> sub;
      factor_into(root, sub);
      for (auto& [p, e] : sub) out[p] += e * static_cast<unsigned>(k);
      return;
    }
  }
  const mpz_class d = rho_split(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs in increasing order.
inline std::vector<std::pair<mpz_class, unsigned>> factor_integer(mpz_class n) {
  n = abs(n);
  std::map<mpz_class, unsigned> out;
  for (unsigned long p = 2; p < 10000 && n > 1; p += (p == 2 ? 1 : 2)) {
    if (p * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  factor_into(n, out);
  return {out.begin(), out.end()};
}

/// All positive divisors of |n|, ascending.
inline std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

inline std::size_t divisor_count(const mpz_class& n) {
  std::size_t c = 1;
  for (const auto& [p, e] : factor_integer(n)) c *= e + 1;
  return c;
}

}  // namespace polybound::detail

#endif  // POLYBOUND_INTEGER_HPP
