#include "doctest.h"
#include "edgering/characterize.hpp"
#include "edgering/hilbert.hpp"

using namespace edgering;

TEST_CASE("binomial convention") {
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, -3) == 0);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(6, 2) == 15);
  // Pascal oracle
  std::vector<std::vector<BigInt>> pascal(25, std::vector<BigInt>(25, 0));
  for (int n = 0; n < 25; ++n) {
    pascal[static_cast<std::size_t>(n)][0] = 1;
    for (int r = 1; r <= n; ++r)
      pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] =
          pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r - 1)] +
          (r <= n - 1 ? pascal[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(r)]
                      : 0);
    for (int r = 0; r <= n; ++r)
      CHECK(binomial(n, r) == pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)]);
  }
}

TEST_CASE("factorial agrees with a running product, past the precomputed range") {
  BigInt acc = 1;
  for (int n = 1; n <= 25; ++n) {
    acc *= n;
    CHECK(factorial(n) == acc);
  }
}

TEST_CASE("Ehrhart closed form on the smallest graphs") {
  const EhrhartPolynomial tri = ehrhart_closed_form(Partition({1, 1, 1}));
  // k[K_3] is a polynomial ring in 3 variables: i(P,m) = C(m+2,2)
  REQUIRE(tri.degree() == 2);
  CHECK(tri.eval(0) == 1);
  CHECK(tri.eval(1) == 3);
  CHECK(tri.eval(5) == 21);

  const EhrhartPolynomial sq = ehrhart_closed_form(Partition({2, 2}));
  REQUIRE(sq.degree() == 2); // bipartite: dim P = d-2
  for (long long m = 0; m <= 5; ++m) CHECK(sq.eval(m) == (m + 1) * (m + 1));
}

TEST_CASE("Ehrhart closed form, frozen K_{2,2,3} data") {
  const EhrhartPolynomial poly = ehrhart_closed_form(Partition({2, 2, 3}));
  REQUIRE(poly.degree() == 6);
  CHECK(poly.coefficients[0] == BigRat(1));
  CHECK(poly.coefficients[1] == BigRat(71, 20));
  CHECK(poly.coefficients[2] == BigRat(1871, 360));
  CHECK(poly.coefficients[3] == BigRat(97, 24));
  CHECK(poly.coefficients[4] == BigRat(127, 72));
  CHECK(poly.coefficients[5] == BigRat(49, 120));
  CHECK(poly.coefficients[6] == BigRat(7, 180));
  const long long expected[] = {1, 16, 105, 438, 1386, 3640, 8358};
  for (long long m = 0; m <= 6; ++m) CHECK(poly.eval(m) == expected[m]);
  CHECK(poly.to_string() == "1 71/20 1871/360 97/24 127/72 49/120 7/180");
}

TEST_CASE("evaluation at m=1 recovers the edge count") {
  for (const Partition& p : all_partitions(10))
    CHECK(ehrhart_closed_form(p).eval(1) == edge_count(p));
}

TEST_CASE("counted Hilbert values") {
  CHECK(hilbert_function_counted(Partition({1, 1, 1}), 1) == 3);
  CHECK(hilbert_function_counted(Partition({1, 1, 1, 1}), 1) == 6);
  CHECK(hilbert_function_counted(Partition({1, 1, 1, 1}), 0) == 1);
  CHECK(hilbert_function_counted(Partition({2, 3}), 2) == 18);
}

TEST_CASE("closed form equals counting, d <= 8, m <= 5") {
  for (const Partition& p : all_partitions(8)) {
    const EhrhartPolynomial poly = ehrhart_closed_form(p);
    for (long long m = 0; m <= 5; ++m)
      CHECK(poly.eval(m) == hilbert_function_counted(p, m));
  }
}

TEST_CASE("reciprocity cross-check: interior counts from the boundary polynomial") {
  for (const Partition& p : all_partitions(8)) {
    const EhrhartPolynomial poly = ehrhart_closed_form(p);
    const SupportSystem sys(p);
    const int dim = poly.degree();
    for (long long m = 1; m <= 4; ++m) {
      const BigRat v = poly.eval_rational(-m);
      const BigRat interior = (dim % 2 == 0 ? v : -v);
      CHECK(BigRat(BigInt(sys.count_points(m, true))) == interior);
    }
  }
}

TEST_CASE("leading coefficient closed forms") {
  {
    const auto [c1, c2] = leading_coefficients(Partition({1, 1, 1, 1}));
    CHECK(c1 * factorial(3) == 4); // 2^3 - 4 C(3,0)
    CHECK(c2 * factorial(2) == 4);
  }
  {
    const auto [c1, c2] = leading_coefficients(Partition({1, 1, 1}));
    CHECK(c1 * factorial(2) == 1); // 2^2 - 3
    CHECK(c2 * factorial(1) == BigRat(3, 2));
  }
  CHECK_THROWS_AS(leading_coefficients(Partition({2, 3})), std::invalid_argument);
}

TEST_CASE("leading coefficients agree with the expanded polynomial, d <= 10") {
  for (const Partition& p : all_partitions(10)) {
    if (p.bipartite()) continue;
    const auto [c1, c2] = leading_coefficients(p);
    const EhrhartPolynomial poly = ehrhart_closed_form(p);
    const int d = p.vertex_count();
    CHECK(poly.coefficients[static_cast<std::size_t>(d - 1)] == c1);
    CHECK(poly.coefficients[static_cast<std::size_t>(d - 2)] == c2);
  }
}

TEST_CASE("h-vector data, frozen values") {
  {
    const HilbertData hd = h_vector(Partition({1, 1, 2, 2}));
    CHECK(hd.krull_dim == 6);
    CHECK(hd.ell == 3);
    CHECK(hd.socle_degree == 3);
    CHECK(hd.h == std::vector<long long>{1, 7, 9, 1});
    CHECK(hd.to_json() == "{\"dim\":6,\"ell\":3,\"s\":3,\"h\":[1,7,9,1]}");
  }
  {
    const HilbertData hd = h_vector(Partition({2, 2, 3}));
    CHECK(hd.ell == 4);
    CHECK(hd.socle_degree == 3);
    CHECK(hd.h == std::vector<long long>{1, 9, 14, 4});
  }
  {
    const HilbertData hd = h_vector(Partition({1, 1, 1, 5}));
    CHECK(hd.ell == 6);
    CHECK(hd.socle_degree == 2);
    CHECK(hd.h == std::vector<long long>{1, 10, 15});
  }
  {
    // bipartite
    const HilbertData hd = h_vector(Partition({3, 4}));
    CHECK(hd.krull_dim == 6);
    CHECK(hd.ell == 4);
    CHECK(hd.h == std::vector<long long>{1, 6, 3});
  }
  {
    // polynomial rings have h = (1)
    const HilbertData hd = h_vector(Partition({1, 1, 1}));
    CHECK(hd.h == std::vector<long long>{1});
    CHECK(hd.socle_degree == 0);
    CHECK(hd.ell == 3);
  }
}

TEST_CASE("h_0 = 1 and h_1 = |E| - dim across the sweep") {
  for (const Partition& p : all_partitions(8)) {
    const HilbertData hd = h_vector(p);
    CHECK(hd.h[0] == 1);
    const long long h1 = hd.h.size() > 1 ? hd.h[1] : 0;
    CHECK(h1 == edge_count(p) - hd.krull_dim);
    CHECK(hd.h_top() != 0);
  }
}

TEST_CASE("e(C) closed forms") {
  CHECK(e_of_c(Partition({1, 1, 2, 2})) == 2);
  CHECK(e_of_c(Partition({1, 1, 1, 1, 1, 1})) == 6);
  CHECK(e_of_c(Partition({1, 1, 1, 1})) == 0);
  // every block contributes, repeated parts included
  CHECK(e_of_c(Partition({1, 2, 2, 3})) == 14);
  CHECK(e_of_c_lemma_closed(Partition({1, 2, 2, 3})) == 14);
  CHECK_THROWS_AS(e_of_c(Partition({2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(e_of_c_lemma_closed(Partition({2, 2, 3})), std::invalid_argument);
}

TEST_CASE("coefficient route with the true ell in case B/C") {
  CHECK(e_of_c_with_ell(Partition({2, 2, 3}), 4) == 14);
  CHECK(e_of_c_with_ell(Partition({1, 1, 1, 5}), 6) == 28);
  // outside the proposition's domain the closed-form ell is wrong and the
  // guarded closed route refuses
  CHECK(e_of_c_with_ell(Partition({1, 1, 1}), 3) == 0);
  CHECK_THROWS_AS(e_of_c(Partition({1, 1, 1})), integrity_error);
}

TEST_CASE("case-A e(C): coefficient route equals the lemma's closed sum, d <= 14") {
  for (const Partition& p : all_partitions(14)) {
    if (case_class(p) != CaseClass::A) continue;
    const long long d = p.vertex_count();
    CHECK(e_of_c_with_ell(p, d / 2) == e_of_c_lemma_closed(p));
  }
}

TEST_CASE("interpolated e(C) agrees with the coefficient formula, d <= 8") {
  for (const Partition& p : all_partitions(8)) {
    if (p.bipartite()) continue;
    const long long ell = ell_bruteforce(p);
    CHECK(e_of_c_interpolated(p, ell) == e_of_c_with_ell(p, ell));
  }
}

TEST_CASE("interpolated e(C) for bipartite graphs") {
  CHECK(e_of_c_interpolated(Partition({2, 3}), 3) == 1);
  CHECK(e_of_c_interpolated(Partition({3, 4}), 4) == 4);
  CHECK(e_of_c_interpolated(Partition({3, 3}), 3) == 0); // Gorenstein: zero cokernel
  CHECK(e_of_c_interpolated(Partition({1, 5}), 5) == 0);
}
