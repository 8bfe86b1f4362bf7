#include "edgering/hilbert.hpp"

#include <array>
#include <sstream>

namespace edgering {

// factorials through 20! are precomputed; larger ones extend the table value
constexpr int kSmallFactorials = 21;

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  static const std::array<BigInt, kSmallFactorials> table = [] {
    std::array<BigInt, kSmallFactorials> t;
    t[0] = 1;
    for (int i = 1; i < kSmallFactorials; ++i)
      t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - 1)] * i;
    return t;
  }();
  if (n < kSmallFactorials) return table[static_cast<std::size_t>(n)];
  BigInt v = table[kSmallFactorials - 1];
  for (int i = kSmallFactorials; i <= n; ++i) v *= i;
  return v;
}

BigInt binomial(long long n, long long r) {
  if (r < 0) return 0;
  if (n < 0) throw std::invalid_argument("binomial with negative upper index");
  if (n < r) return 0;
  r = std::min(r, n - r);
  BigInt num = 1;
  for (long long i = 0; i < r; ++i) {
    num *= (n - i);
    num /= (i + 1); // exact: product of i+1 consecutive integers
  }
  return num;
}

BigRat EhrhartPolynomial::eval_rational(long long m) const {
  BigRat v = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) v = v * m + *it;
  return v;
}

BigInt EhrhartPolynomial::eval(long long m) const {
  const BigRat v = eval_rational(m);
  if (denominator(v) != 1)
    throw integrity_error("Ehrhart polynomial evaluated to a non-integer");
  return numerator(v);
}

std::string EhrhartPolynomial::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) os << ' ';
    os << coefficients[i];
  }
  return os.str();
}

namespace {

using Poly = std::vector<BigRat>; // coefficient list, degree order

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_sub(Poly& a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
}

// C(s m + a + b - 1, b) as a polynomial in m: prod_{t=1}^{b} (s m + a + t - 1) / b!
// i.e. the rising product starting at (s m + a). With s=1, a=0 this is
// C(m + b - 1, b); evaluation matches the 0-for-negative binomial convention.
Poly rising_binomial_poly(long long stride, long long offset, long long b) {
  Poly out{BigRat(1)};
  for (long long t = 0; t < b; ++t) {
    Poly factor{BigRat(offset + t), BigRat(stride)};
    out = poly_mul(out, factor);
  }
  const BigRat inv = BigRat(1) / BigRat(factorial(static_cast<int>(b)));
  for (auto& c : out) c *= inv;
  return out;
}

} // namespace

EhrhartPolynomial ehrhart_closed_form(const Partition& p) {
  const long long d = p.vertex_count();
  // C(d+2m-1, d-1): rising product of d-1 factors from 2m+1
  Poly poly = rising_binomial_poly(2, 1, d - 1);
  for (int r : p.parts()) {
    for (long long i = 1; i <= r; ++i) {
      for (long long j = i; j <= r; ++j) {
        // C(j-i+m-1, j-i) * C(d-j+m-1, d-j)
        const Poly t1 = rising_binomial_poly(1, 0, j - i);
        const Poly t2 = rising_binomial_poly(1, 0, d - j);
        poly_sub(poly, poly_mul(t1, t2));
      }
    }
  }
  while (poly.size() > 1 && poly.back() == 0) poly.pop_back();
  EhrhartPolynomial out{std::move(poly)};
  const int expected = static_cast<int>(d) - 1 - (p.bipartite() ? 1 : 0);
  if (out.degree() != expected)
    throw integrity_error("Ehrhart polynomial degree " + std::to_string(out.degree()) +
                          " != dim P = " + std::to_string(expected));
  if (out.eval(0) != 1) throw integrity_error("Ehrhart polynomial does not evaluate to 1 at m=0");
  return out;
}

unsigned long long hilbert_function_counted(const Partition& p, long long m,
                                            const Budget& budget) {
  return SupportSystem(p).count_points(m, false, budget);
}

std::string HilbertData::to_json() const {
  std::ostringstream os;
  os << "{\"dim\":" << krull_dim << ",\"ell\":" << ell << ",\"s\":" << socle_degree << ",\"h\":[";
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) os << ',';
    os << h[i];
  }
  os << "]}";
  return os.str();
}

HilbertData h_vector(const Partition& p, const Budget& budget) {
  const int dim = p.vertex_count() - (p.bipartite() ? 1 : 0);
  const SupportSystem sys(p);
  // H is a polynomial of degree dim-1 for all m >= 0 (normality), so every
  // h_i with i >= dim is a dim-fold difference of it and vanishes; values
  // through m = dim-1 determine the h-vector.
  std::vector<long long> H(static_cast<std::size_t>(dim), 0);
  for (int m = 0; m < dim; ++m)
    H[static_cast<std::size_t>(m)] =
        static_cast<long long>(sys.count_points(m, false, budget));
  std::vector<long long> h(static_cast<std::size_t>(dim), 0);
  for (int i = 0; i < dim; ++i) {
    long long v = 0;
    for (int j = 0; j <= i; ++j) {
      const BigInt c = binomial(dim, j) * H[static_cast<std::size_t>(i - j)];
      const long long ll = c.convert_to<long long>();
      v += (j % 2 == 0) ? ll : -ll;
    }
    h[static_cast<std::size_t>(i)] = v;
  }
  while (h.size() > 1 && h.back() == 0) h.pop_back();

  HilbertData data;
  data.krull_dim = dim;
  data.ell = ell_bruteforce(sys, budget);
  data.socle_degree = static_cast<int>(h.size()) - 1;
  data.h = std::move(h);
  if (data.h.front() != 1) throw integrity_error("h_0 != 1");
  for (long long hi : data.h)
    if (hi < 0) throw integrity_error("negative h-vector entry for " + p.to_string());
  if (data.socle_degree != dim - data.ell)
    throw integrity_error("socle degree " + std::to_string(data.socle_degree) +
                          " != dim - ell = " + std::to_string(dim - data.ell) + " for " +
                          p.to_string());
  return data;
}

std::pair<BigRat, BigRat> leading_coefficients(const Partition& p) {
  if (p.bipartite())
    throw std::invalid_argument("leading coefficient formulas assume a non-bipartite graph");
  const long long d = p.vertex_count();
  BigInt s1 = 0;
  for (int r : p.parts())
    for (long long j = 1; j <= r; ++j) s1 += binomial(d - 1, j - 1);
  const BigRat c_top = BigRat(BigInt(1) << (d - 1)) - BigRat(s1);

  BigRat s2 = 0;
  const BigRat half_dm2 = BigRat(d - 2) / 2;
  for (int r : p.parts())
    for (long long j = 1; j <= r; ++j)
      s2 += BigRat(binomial(d - 2, j - 2)) +
            half_dm2 * (BigRat(binomial(d - 3, j - 3)) + BigRat(binomial(d - 3, j - 1)));
  const BigRat c_next = BigRat(BigInt(1) << (d - 3)) * d - s2;

  return {c_top / BigRat(factorial(static_cast<int>(d) - 1)),
          c_next / BigRat(factorial(static_cast<int>(d) - 2))};
}

long long e_of_c_with_ell(const Partition& p, long long ell) {
  const long long d = p.vertex_count();
  const auto [c1, c2] = leading_coefficients(p);
  const BigRat v = BigRat(factorial(static_cast<int>(d) - 2)) *
                   (BigRat((d - 1) * ell) * c1 - 2 * c2);
  if (denominator(v) != 1) throw integrity_error("e(C) came out non-integral");
  return numerator(v).convert_to<long long>();
}

long long e_of_c_lemma_closed(const Partition& p) {
  if (case_class(p) != CaseClass::A)
    throw std::invalid_argument("Lemma closed form for e(C) requires case A");
  const long long d = p.vertex_count();
  BigInt total = 0;
  for (int r : p.parts()) total += (d / 2 - r - 1) * binomial(d - 2, r - 1);
  return total.convert_to<long long>();
}

long long e_of_c(const Partition& p) {
  const long long value = e_of_c_with_ell(p, ell_closed_form(p));
  if (value < 0)
    throw integrity_error(
        "coefficient formula with the closed-form ell gave a negative e(C) for " +
        p.to_string() + "; input lies outside the proposition's hypothesis");
  if (case_class(p) == CaseClass::A) {
    const long long closed = e_of_c_lemma_closed(p);
    if (closed != value)
      throw integrity_error("e(C) coefficient route " + std::to_string(value) +
                            " != case-A closed form " + std::to_string(closed));
  }
  return value;
}

long long e_of_c_interpolated(const Partition& p, long long ell, const Budget& budget) {
  const int dim = p.vertex_count() - (p.bipartite() ? 1 : 0);
  const SupportSystem sys(p);
  // H(C,m) = i(P°, m+ell) - i(P, m); degree dim-2 with leading coefficient
  // e(C)/(dim-2)! unless C = 0
  std::vector<long long> HC(static_cast<std::size_t>(std::max(dim - 1, 1)), 0);
  bool all_zero = true;
  for (int m = 0; m < static_cast<int>(HC.size()); ++m) {
    const long long interior =
        static_cast<long long>(sys.count_points(m + ell, true, budget));
    const long long boundary =
        static_cast<long long>(sys.count_points(m, false, budget));
    HC[static_cast<std::size_t>(m)] = interior - boundary;
    if (HC[static_cast<std::size_t>(m)] != 0) all_zero = false;
  }
  if (all_zero) return 0; // zero cokernel: Gorenstein
  const int k = dim - 2;
  BigInt lead = 0;
  for (int j = 0; j <= k; ++j) {
    const BigInt term = binomial(k, j) * HC[static_cast<std::size_t>(j)];
    lead += ((k - j) % 2 == 0) ? term : -term;
  }
  if (lead < 0) throw integrity_error("interpolated e(C) negative for " + p.to_string());
  return lead.convert_to<long long>();
}

} // namespace edgering
