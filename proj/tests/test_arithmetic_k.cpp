#include <catch_amalgamated.hpp>

#include "bredonk/arithmetic_k/arithmetic_k.hpp"
#include "bredonk/errors.hpp"

using namespace bredonk;

namespace {

using Groups = std::vector<FinAbGroup>;

Groups ranks(std::initializer_list<std::size_t> rs) {
  Groups g;
  for (auto r : rs) g.emplace_back(r);
  return g;
}

const std::uint64_t representative_primes[] = {2, 3, 5, 7, 13, 17, 19, 23, 29, 37, 47, 59};

// Transcribed tables: per case, (order-2 classes, order-3 classes), then
// Bredon ranks of PSL2(Z[1/p]) and K ranks.
struct Expected {
  unsigned o2, o3;
  Groups bredon, k;
};

Expected expected(std::uint64_t p) {
  if (p == 2) return {1, 4, ranks({6, 0, 1}), ranks({7, 0})};
  if (p == 3) return {2, 2, ranks({5, 0, 1}), ranks({6, 0})};
  switch (p % 12) {
    case 1: return {1, 2, ranks({4, 3, (p - 7) / 6}), ranks({4 + (p - 7) / 6, 3})};
    case 5: return {1, 4, ranks({6, 1, (p + 1) / 6}), ranks({6 + (p + 1) / 6, 1})};
    case 7: return {2, 2, ranks({5, 2, (p - 1) / 6}), ranks({5 + (p - 1) / 6, 2})};
    default: return {2, 4, ranks({7, 0, (p + 7) / 6}), ranks({7 + (p + 7) / 6, 0})};
  }
}

FinAbGroup Z(std::size_t r) { return FinAbGroup(r); }
FinAbGroup Z2(std::size_t k) { return FinAbGroup::elementary(2, k); }

}  // namespace

TEST_CASE("conjugacy class counts") {
  CHECK(class_count_psl(2) == ClassCount{1, 1, 4, 6});
  CHECK(class_count_psl(13) == ClassCount{1, 1, 2, 4});
  CHECK(class_count_psl(11) == ClassCount{1, 2, 4, 7});
  CHECK(class_count_psl(3) == ClassCount{1, 2, 2, 5});
  CHECK(class_count_psl(5) == ClassCount{1, 1, 4, 6});
  CHECK(class_count_psl(7) == ClassCount{1, 2, 2, 5});
  CHECK(maximal_subgroups(11) == MaximalSubgroupList{2, 2});
  CHECK_THROWS_AS(class_count_psl(9), DomainError);
}

TEST_CASE("tables for representative primes") {
  for (auto p : representative_primes) {
    INFO("p = " << p);
    const auto e = expected(p);
    const auto c = class_count_psl(p);
    CHECK(c.order2 == e.o2);
    CHECK(c.order3 == e.o3);
    CHECK(c.total == 1 + e.o2 + e.o3);
    CHECK(psl_zp_bredon(p) == e.bredon);
    const auto k = psl_zp_k(p);
    CHECK(Groups{k.k0, k.k1} == e.k);
    const auto s = sl_zp_k(p);
    CHECK(s.k0 == Z(2 * k.k0.free_rank()));
    CHECK(s.k1 == Z(2 * k.k1.free_rank()));
  }
  CHECK(psl_zp_bredon(13) == ranks({4, 3, 1}));
  CHECK(psl_zp_bredon(23) == ranks({7, 0, 5}));
  CHECK(psl_zp_k(17) == KGroups{Z(9), Z(1)});
  CHECK(sl_zp_k(13) == KGroups{Z(10), Z(6)});
  CHECK(sl_zp_k(2) == KGroups{Z(14), {}});
  CHECK(sl_zp_k(11) == KGroups{Z(20), {}});
}

TEST_CASE("Mayer-Vietoris rank bookkeeping for primes up to 200") {
  for (std::uint64_t p = 2; p <= 200; ++p) {
    if (!is_prime(p)) continue;
    const auto h = psl_zp_bredon(p);
    const auto g0 = hecke_bredon(p);
    CHECK(long(h[1].free_rank()) - long(g0[0].free_rank()) + 8 - long(h[0].free_rank()) == 0);
    CHECK(h[2] == g0[1]);
    for (const auto& g : h) CHECK(g.is_free());
  }
}

TEST_CASE("C*-algebra K and KO for p = 11 mod 12") {
  CHECK(cstar_k_p11(11) == KGroups{Z(10), {}});
  CHECK(cstar_k_p11(23) == KGroups{Z(12), {}});
  for (std::uint64_t p : {11, 23, 47, 59, 71, 83, 107, 131, 167, 179, 191}) {
    INFO("p = " << p);
    CHECK(cstar_k_p11(p) == psl_zp_k(p));
    const auto ko = cstar_ko_p11(p);
    const std::size_t b = (p + 7) / 6;
    CHECK(ko.groups == Groups{Z(5), Z2(3), direct_sum(Z(2 + b), Z2(3)), Z2(b), direct_sum(Z(5), Z2(b)), {}, Z(2 + b),
                              {}});
    CHECK(ko.extension_ambiguous == std::set<unsigned>{1, 3, 4});
    CHECK(ko.at(0).free_rank() == ko.at(4).free_rank());
    CHECK(ko.at(5).is_zero());
    CHECK(ko.at(7).is_zero());
  }
  CHECK(cstar_ko_p11(11).at(0) == Z(5));
  CHECK(cstar_ko_p11(11).at(3) == Z2(3));
  CHECK(cstar_ko_p11(23).at(2) == direct_sum(Z(7), Z2(3)));
  for (std::uint64_t p : {2, 3, 5, 7, 13, 17, 19}) {
    CHECK_THROWS_AS(cstar_k_p11(p), DomainError);
    CHECK_THROWS_AS(cstar_ko_p11(p), DomainError);
  }
  CHECK_THROWS_AS(cstar_k_p11(35), DomainError);
}
