#include <cassert>

#include "knotalg/forms.hpp"
#include "knotalg/seifert.hpp"

namespace knotalg {

namespace {

IntPoly pmul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly padd(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IntPoly ppow(const IntPoly& a, int k) {
  IntPoly r{Integer(1)};
  for (int i = 0; i < k; ++i) r = pmul(r, a);
  return r;
}

IntPoly pscale(IntPoly a, const Integer& c) {
  for (auto& x : a) x *= c;
  return a;
}

// p(1 - x)
IntPoly reflect(const IntPoly& p) {
  IntPoly r;
  const IntPoly one_minus_x{Integer(1), Integer(-1)};
  for (std::size_t i = 0; i < p.size(); ++i)
    r = padd(r, pscale(ppow(one_minus_x, static_cast<int>(i)), p[i]));
  return r;
}

Integer binom(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer r(1);
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

IntPoly pi_k(int k) {
  IntPoly p;
  for (int j = 1; j <= k - 1; ++j) {
    Integer c = binom(k - 1, j);
    if (j % 2) c = -c;
    p.push_back(c - 1);
  }
  return p;
}

IntPoly binomial_projection(int k) {
  const IntPoly x{Integer(0), Integer(1)};
  const IntPoly one_minus_x{Integer(1), Integer(-1)};
  IntPoly f;
  for (int j = k; j <= 2 * k - 1; ++j)
    f = padd(f, pscale(pmul(ppow(x, j), ppow(one_minus_x, 2 * k - 1 - j)), binom(2 * k - 1, j)));
  return f;
}

IntPoly binomial_homotopy(int k) {
  const IntPoly f = binomial_projection(k);
  IntPoly g;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (static_cast<int>(i) < k) {
      ensure(f[i] == 0, "binomial projection is not divisible by x^k");
    } else {
      g.push_back(f[i]);
    }
  }
  return pmul(g, reflect(g));
}

}  // namespace knotalg
