#include <catch_amalgamated.hpp>

#include <map>

#include "bredonk/errors.hpp"
#include "bredonk/exactlinalg/abelian_group.hpp"
#include "bredonk/exactlinalg/chain_complex.hpp"
#include "bredonk/exactlinalg/smith_normal_form.hpp"
#include "test_support.hpp"

using namespace bredonk;
using namespace bredonk::testing;

namespace {

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("smith normal form of small examples") {
  CHECK(smith_normal_form(IntMatrix::identity(2)).d == ints({1, 1}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{2, 4}, {6, 8}})).d == ints({2, 4}));
  CHECK(smith_normal_form(IntMatrix(3, 2)).d.empty());
  CHECK(smith_normal_form(IntMatrix(0, 0)).d.empty());
  CHECK(smith_normal_form(IntMatrix(0, 5)).right == IntMatrix::identity(5));
  CHECK(smith_normal_form(IntMatrix::from_rows({{0, 0, 6}, {0, 4, 0}})).d == ints({2, 12}));
  CHECK(smith_normal_form(IntMatrix::from_rows({{-3}})).d == ints({3}));
}

TEST_CASE("smith normal form handles entries beyond 64 bits") {
  const Integer big("123456789012345678901234567890");
  IntMatrix m(2, 2);
  m(0, 0) = big * 6;
  m(0, 1) = big * 4;
  m(1, 0) = 9;
  m(1, 1) = 6;
  const auto snf = smith_normal_form(m);
  CHECK(snf.left * m * snf.right == IntMatrix::padded_diagonal(2, 2, snf.d));
  CHECK(snf.d == invariant_factors(m));
  CHECK(snf.d == reference::smith_normal_form_serial(m).d);
}

TEST_CASE("smith normal form on 1000 random matrices agrees with the minor-gcd oracle") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> dim(0, 8);
  for (int t = 0; t < 1000; ++t) {
    const IntMatrix m = random_matrix(rng, dim(rng), dim(rng), -20, 20);
    const auto snf = smith_normal_form(m);
    INFO(m.to_string());
    REQUIRE(snf.left * m * snf.right == IntMatrix::padded_diagonal(m.rows(), m.cols(), snf.d));
    REQUIRE(abs(bareiss_det(snf.left)) == 1);
    REQUIRE(abs(bareiss_det(snf.right)) == 1);
    for (std::size_t i = 0; i + 1 < snf.d.size(); ++i) REQUIRE(snf.d[i + 1] % snf.d[i] == 0);
    const auto oracle = invariant_factors_by_minors(m);
    REQUIRE(snf.d.size() == oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) REQUIRE(snf.d[i] == oracle[i]);
    REQUIRE(snf.rank() == oracle.size());
  }
}

TEST_CASE("parallel and serial smith normal form agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix m = random_matrix(rng, 1 + t % 9, 1 + (t * 7) % 9, -9, 9);
    const auto ref = reference::smith_normal_form_serial(m);
    CHECK(ref.left * m * ref.right == IntMatrix::padded_diagonal(m.rows(), m.cols(), ref.d));
    CHECK(smith_normal_form(m).d == ref.d);
  }
  // sparse ±1 matrices large enough to take the threaded sweep path
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t n : {70, 100}) {
    IntMatrix big(n, n + 10);
    for (std::size_t i = 0; i < big.rows(); ++i)
      for (std::size_t j = 0; j < big.cols(); ++j)
        if (u(rng) < 0.05) big(i, j) = u(rng) < 0.5 ? 1 : -1;
    const auto par = smith_normal_form(big);
    CHECK(par.d == reference::smith_normal_form_serial(big).d);
    CHECK(par.left * big * par.right == IntMatrix::padded_diagonal(big.rows(), big.cols(), par.d));
  }
}

TEST_CASE("finitely generated abelian groups are kept in invariant-factor form") {
  CHECK(FinAbGroup().to_string() == "0");
  CHECK(FinAbGroup(1).to_string() == "Z");
  CHECK(FinAbGroup(5).to_string() == "Z^5");
  CHECK(FinAbGroup::from_cyclic_orders(5, ints({2, 2})).to_string() == "Z^5 + Z/2 + Z/2");
  CHECK(FinAbGroup::from_cyclic_orders(0, ints({2, 3})) == FinAbGroup::cyclic(6));
  CHECK(FinAbGroup::from_cyclic_orders(0, ints({4, 6})).torsion() == ints({2, 12}));
  CHECK(FinAbGroup::from_cyclic_orders(1, ints({0, 1, -1, -3})) == FinAbGroup::from_cyclic_orders(2, ints({3})));
  CHECK(direct_sum(FinAbGroup(6), FinAbGroup(1)) == FinAbGroup(7));
  CHECK(direct_sum(FinAbGroup::cyclic(2), FinAbGroup::cyclic(4)).torsion() == ints({2, 4}));
  const auto g = FinAbGroup::from_cyclic_orders(3, ints({2, 6}));
  CHECK(direct_sum(g, FinAbGroup()) == g);
  CHECK(direct_sum(g, FinAbGroup::cyclic(9)) == direct_sum(FinAbGroup::cyclic(9), g));
}

TEST_CASE("tensor and Tor with Z/2") {
  CHECK(tensor_z2(FinAbGroup(8)) == FinAbGroup::elementary(2, 8));
  CHECK(tensor_z2(FinAbGroup()).is_zero());
  CHECK(tensor_z2(FinAbGroup::from_cyclic_orders(1, ints({3}))) == FinAbGroup::cyclic(2));
  CHECK(tor_z2(FinAbGroup(5)).is_zero());
  CHECK(tor_z2(FinAbGroup::cyclic(2)) == FinAbGroup::cyclic(2));
  CHECK(tor_z2(FinAbGroup::cyclic(3)).is_zero());
  CHECK(tensor_cyclic(FinAbGroup::cyclic(12), 8) == FinAbGroup::cyclic(4));
  CHECK(tor_cyclic(FinAbGroup::cyclic(12), 8) == FinAbGroup::cyclic(4));
}

namespace {

// All elements of Z/d_1 ⊕ ... ⊕ Z/d_k as coordinate vectors.
std::vector<std::vector<long>> elements(const std::vector<long>& orders) {
  std::vector<std::vector<long>> out{{}};
  for (long d : orders) {
    std::vector<std::vector<long>> next;
    for (const auto& e : out)
      for (long x = 0; x < d; ++x) {
        auto f = e;
        f.push_back(x);
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

// Brute force: |G/nG| and |G[n]| with the number of elements of each order in
// both, which pins down a finite abelian group.
struct Profile {
  std::map<long, long> order_counts;
  friend bool operator==(const Profile&, const Profile&) = default;
};

long element_order(const std::vector<long>& x, const std::vector<long>& orders) {
  long o = 1;
  for (std::size_t i = 0; i < x.size(); ++i) o = std::lcm(o, orders[i] / std::gcd(orders[i], x[i]));
  return o;
}

Profile profile_of(const FinAbGroup& g) {
  std::vector<long> orders;
  for (const auto& d : g.torsion()) orders.push_back(d.get_si());
  Profile p;
  for (const auto& x : elements(orders)) ++p.order_counts[element_order(x, orders)];
  return p;
}

// G/nG realised as the set of cosets; the quotient of Z/d by n is Z/gcd(d, n).
Profile brute_quotient(const std::vector<long>& orders, long n) {
  std::vector<long> q;
  for (long d : orders) q.push_back(std::gcd(d, n));
  Profile p;
  for (const auto& x : elements(q)) ++p.order_counts[element_order(x, q)];
  return p;
}

Profile brute_kernel(const std::vector<long>& orders, long n) {
  Profile p;
  for (const auto& x : elements(orders)) {
    bool killed = true;
    for (std::size_t i = 0; i < x.size(); ++i) killed = killed && (n * x[i]) % orders[i] == 0;
    if (killed) ++p.order_counts[element_order(x, orders)];
  }
  return p;
}

}  // namespace

TEST_CASE("tensor and Tor agree with brute-force enumeration up to order 64") {
  std::vector<std::vector<long>> shapes;
  for (long a = 2; a <= 64; ++a) shapes.push_back({a});
  for (long a = 2; a <= 8; ++a)
    for (long b = a; a * b <= 64; ++b) shapes.push_back({a, b});
  for (long a = 2; a <= 4; ++a)
    for (long b = a; a * b * b <= 64; ++b)
      for (long c = b; a * b * c <= 64; ++c) shapes.push_back({a, b, c});
  shapes.push_back({2, 2, 2, 2});
  shapes.push_back({2, 2, 2, 2, 2, 2});
  for (const auto& s : shapes) {
    std::vector<Integer> orders(s.begin(), s.end());
    const auto g = FinAbGroup::from_cyclic_orders(0, orders);
    for (long n : {2L, 3L, 4L}) {
      INFO(g.to_string() << " with n = " << n);
      CHECK(profile_of(tensor_cyclic(g, n)) == brute_quotient(s, n));
      CHECK(profile_of(tor_cyclic(g, n)) == brute_kernel(s, n));
    }
    CHECK(tensor_z2(direct_sum(g, FinAbGroup(3))) == direct_sum(tensor_z2(g), FinAbGroup::elementary(2, 3)));
  }
}

TEST_CASE("homology of small complexes") {
  const IntChainComplex zero_map(0, {1, 1}, {IntMatrix(1, 1)});
  CHECK(homology(zero_map, 0) == FinAbGroup(1));
  CHECK(homology(zero_map, 1) == FinAbGroup(1));
  const IntChainComplex doubling(0, {1, 1}, {IntMatrix::from_rows({{2}})});
  CHECK(homology(doubling, 0) == FinAbGroup::cyclic(2));
  CHECK(homology(doubling, 1).is_zero());
  CHECK(homology(doubling, 5).is_zero());
  CHECK(homology(doubling, -1).is_zero());
  CHECK(all_homology(IntChainComplex()).empty());
  const IntChainComplex shifted(3, {2}, {});
  CHECK(homology(shifted, 3) == FinAbGroup(2));
  CHECK(homology(shifted, 0).is_zero());
}

TEST_CASE("complexes with nonzero d∘d or mismatched shapes are rejected") {
  CHECK_THROWS_AS(IntChainComplex(0, {1, 1, 1}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}),
                  DomainError);
  CHECK_THROWS_AS(IntChainComplex(0, {1, 2}, {IntMatrix(1, 1)}), DomainError);
  CHECK_THROWS_AS(IntChainComplex(0, {1, 1}, {}), DomainError);
}

TEST_CASE("random complexes: homology matches the elementary pieces they are built from") {
  // A direct sum of Z (in some degree) and Z --k--> Z pieces, hidden behind
  // random unimodular changes of basis in every degree.
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> top_dist(0, 4), kind(0, 3), mult(0, 6);
  for (int t = 0; t < 300; ++t) {
    const int top = top_dist(rng);
    std::vector<std::size_t> ranks(top + 1, 0);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> blocks(top + 1);  // (row, col) of ∂_{n+1}
    std::vector<std::vector<long>> diag(top + 1);
    std::vector<std::size_t> free(top + 1, 0);
    std::vector<std::vector<long>> torsion(top + 1);
    const int pieces = 1 + mult(rng);
    std::uniform_int_distribution<int> deg(0, top);
    for (int k = 0; k < pieces; ++k) {
      const int n = deg(rng);
      const int how = kind(rng);
      if (how == 0 || n == top) {
        ++ranks[n];
        ++free[n];
        continue;
      }
      const long coeff = how == 1 ? 1 : how == 2 ? 0 : 2 + mult(rng);
      blocks[n].push_back({ranks[n], ranks[n + 1]});
      diag[n].push_back(coeff);
      ++ranks[n];
      ++ranks[n + 1];
      if (coeff == 0) {
        ++free[n];
        ++free[n + 1];
      } else if (coeff > 1) {
        torsion[n].push_back(coeff);
      }
    }
    std::vector<Unimodular> basis;
    for (int n = 0; n <= top; ++n) basis.push_back(random_unimodular(rng, ranks[n]));
    std::vector<IntMatrix> boundaries;
    for (int n = 0; n < top; ++n) {
      IntMatrix d(ranks[n], ranks[n + 1]);
      for (std::size_t b = 0; b < blocks[n].size(); ++b) d(blocks[n][b].first, blocks[n][b].second) = diag[n][b];
      boundaries.push_back(basis[n].u * d * basis[n + 1].inverse);
    }
    const IntChainComplex c(0, ranks, boundaries);
    const auto h = all_homology(c);
    long alt = 0;
    for (int n = 0; n <= top; ++n) {
      std::vector<Integer> tors(torsion[n].begin(), torsion[n].end());
      CHECK(h[n] == FinAbGroup::from_cyclic_orders(free[n], tors));
      alt += (n % 2 ? -1 : 1) * static_cast<long>(h[n].free_rank());
    }
    CHECK(alt == c.euler_characteristic());
  }
}
