#include "edmf/polynomial.hpp"

#include <algorithm>
#include <cassert>

namespace edmf::gfpoly {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeff mod_inverse(Coeff a, Coeff p) {
  assert(a % p != 0);
  // Fermat: a^(p-2) mod p.
  std::uint64_t base = a % p;
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<Coeff>(result);
}

Coeff reduce(long long value, Coeff p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Coeff>(r);
}

Poly add(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = 0;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s += b[i];
    r[i] = static_cast<Coeff>(s % p);
  }
  trim(r);
  return r;
}

Poly neg(std::span<const Coeff> a, Coeff p) {
  Poly r(a.begin(), a.end());
  for (auto& c : r) c = c == 0 ? 0 : p - c;
  return r;
}

Poly sub(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = p;
    if (i < a.size()) s += a[i];
    if (i < b.size()) s -= b[i];
    r[i] = static_cast<Coeff>(s % p);
  }
  trim(r);
  return r;
}

Poly scale(std::span<const Coeff> a, Coeff c, Coeff p) {
  if (c % p == 0) return {};
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = static_cast<Coeff>(static_cast<std::uint64_t>(a[i]) * c % p);
  trim(r);
  return r;
}

Poly mul(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
  }
  Poly r(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) r[i] = static_cast<Coeff>(acc[i]);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(std::span<const Coeff> a, std::span<const Coeff> b, Coeff p) {
  assert(!b.empty());
  Poly rem(a.begin(), a.end());
  if (rem.size() < b.size()) return {Poly{}, rem};
  const Coeff lead_inv = mod_inverse(b.back(), p);
  Poly quo(rem.size() - b.size() + 1, 0);
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Coeff top = rem[k + b.size() - 1];
    if (top == 0) continue;
    const Coeff c = static_cast<Coeff>(static_cast<std::uint64_t>(top) * lead_inv % p);
    quo[k] = c;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::uint64_t t = static_cast<std::uint64_t>(c) * b[j] % p;
      rem[k + j] = static_cast<Coeff>((rem[k + j] + p - t) % p);
    }
  }
  trim(quo);
  trim(rem);
  return {std::move(quo), std::move(rem)};
}

int compare(std::span<const Coeff> a, std::span<const Coeff> b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

}  // namespace edmf::gfpoly
