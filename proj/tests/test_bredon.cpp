#include <catch_amalgamated.hpp>

#include <random>

#include "bredonk/bredon/constructions.hpp"
#include "bredonk/bredon/datum_io.hpp"
#include "bredonk/errors.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"

using namespace bredonk;

namespace {

std::vector<FinAbGroup> free_ranks(std::initializer_list<std::size_t> ranks) {
  std::vector<FinAbGroup> out;
  for (auto r : ranks) out.emplace_back(r);
  return out;
}

std::filesystem::path data(const char* name) { return std::filesystem::path(BREDONK_TEST_DATA) / name; }

Signature random_signature(std::mt19937_64& rng, bool force_punctures) {
  std::uniform_int_distribution<unsigned> genus(0, 3), punct(force_punctures ? 1 : 0, 4), cones(0, 4), period(2, 9);
  Signature s{genus(rng), punct(rng), {}};
  const unsigned r = cones(rng);
  for (unsigned j = 0; j < r; ++j) s.periods.push_back(period(rng));
  return s;
}

}  // namespace

TEST_CASE("the SL3(Z) complex") {
  const auto d = sl3_datum();
  CHECK(d.snf_equivalent);
  const auto c = expand(d);
  CHECK(c.ranks() == std::vector<std::size_t>{26, 28, 11, 1});
  CHECK(bredon_homology(d) == free_ranks({8, 0, 0, 0}));
  CHECK(d.cells[0].size() == 5);
  CHECK(d.cells[1].size() == 8);
  CHECK(d.cells[2].size() == 5);
  CHECK(d.cells[3].size() == 1);
}

TEST_CASE("expansion of small data") {
  GammaCWDatum point{"point", {{{"p", GroupId::trivial()}}}, {}, {}, false};
  CHECK(expand(point).ranks() == std::vector<std::size_t>{1});
  CHECK(bredon_homology(point) == free_ranks({1}));

  const auto cocompact = fuchsian_cocompact_datum(Signature::parse("[0,0;2,3,7]"));
  CHECK(expand(cocompact).ranks() == std::vector<std::size_t>{13, 3, 1});
  CHECK(bredon_homology(cocompact) == free_ranks({10, 0, 1}));
  CHECK(bredon_homology(fuchsian_cocompact_datum(Signature::parse("[2,0;]"))) == free_ranks({1, 4, 1}));
  CHECK(bredon_homology(fuchsian_cocompact_datum(Signature::parse("[0,0;2,3]"))) == free_ranks({4, 0, 1}));
}

TEST_CASE("non-cocompact Fuchsian graphs of groups") {
  CHECK(bredon_homology(fuchsian_noncocompact_datum(Signature::parse("[0,1;2,3]"))) == free_ranks({4, 0}));
  CHECK(bredon_homology(fuchsian_noncocompact_datum(Signature::parse("[0,2;2]"))) == free_ranks({2, 1}));
  CHECK(bredon_homology(fuchsian_noncocompact_datum(Signature::parse("[1,1;]"))) == free_ranks({1, 2}));
  CHECK_THROWS_AS(fuchsian_noncocompact_datum(Signature::parse("[1,0;]")), DomainError);
}

TEST_CASE("lifts along the central Z/2") {
  CHECK(bredon_homology(lifted_fuchsian_datum(Signature::parse("[0,1;2,3]"))) == free_ranks({8, 0}));
  CHECK(bredon_homology(lifted_fuchsian_datum(Signature::parse("[0,2;2]"))) == free_ranks({4, 2}));
  CHECK(bredon_homology(lifted_fuchsian_datum(Signature::parse("[0,4;]"))) == free_ranks({2, 6}));
  CHECK_THROWS_AS(lifted_fuchsian_datum(Signature::parse("[0,1;2,5]")), DomainError);
}

TEST_CASE("closed form agrees with the chain level on random signatures") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 120; ++t) {
    const Signature sig = random_signature(rng, false);
    INFO(sig.to_string());
    const auto datum = fuchsian_datum(sig);
    const auto h = bredon_homology(datum);
    CHECK(h == fuchsian_bredon_closed_form(sig));
    for (const auto& g : h) CHECK(g.is_free());
    const auto c = expand(datum);
    long alt = 0;
    for (std::size_t n = 0; n < h.size(); ++n) alt += (n % 2 ? -1 : 1) * static_cast<long>(h[n].free_rank());
    CHECK(alt == c.euler_characteristic());
  }
}

TEST_CASE("lifted homology doubles the unlifted homology") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<unsigned> genus(0, 2), punct(1, 5), cones(0, 5), period(2, 3);
  for (int t = 0; t < 60; ++t) {
    Signature sig{genus(rng), punct(rng), {}};
    for (unsigned j = cones(rng); j > 0; --j) sig.periods.push_back(period(rng));
    INFO(sig.to_string());
    const auto base = bredon_homology(fuchsian_noncocompact_datum(sig));
    const auto lifted = bredon_homology(lifted_fuchsian_datum(sig));
    REQUIRE(lifted.size() == base.size());
    for (std::size_t n = 0; n < base.size(); ++n) {
      CHECK(lifted[n].is_free());
      CHECK(lifted[n].free_rank() == 2 * base[n].free_rank());
    }
  }
}

TEST_CASE("datum files") {
  const auto psl = read_datum_file(data("psl2z.cw"));
  CHECK(psl.name == "PSL2(Z)");
  CHECK(bredon_homology(psl) == free_ranks({4, 0}));
  CHECK(bredon_homology(read_datum_file(data("mixed_stabilisers.cw"))) == free_ranks({15, 4}));
  CHECK(bredon_homology(read_datum_file(data("raw_z2.cw"))) ==
        std::vector<FinAbGroup>{FinAbGroup::cyclic(2), FinAbGroup()});
  CHECK_THROWS_AS(expand(read_datum_file(data("unknown_label.cw"))), ParseError);
  CHECK_THROWS_AS(expand(read_datum_file(data("bad_dd.cw"))), DomainError);
  CHECK_THROWS_AS(read_datum_file(data("missing.cw")), ParseError);
  const auto corrupted = read_datum_file(data("corrupted_sl3.cw"));
  CHECK(bredon_homology(corrupted)[0] == FinAbGroup::from_cyclic_orders(8, {2}));
}

TEST_CASE("datum files round trip") {
  std::vector<GammaCWDatum> data{sl3_datum(), fuchsian_datum(Signature::parse("[1,0;2,5]")),
                                 fuchsian_datum(Signature::parse("[0,3;2,3,4]")),
                                 lifted_fuchsian_datum(Signature::parse("[1,2;2,3]"))};
  for (const auto& d : data) {
    INFO(d.name);
    const auto text = write_datum(d);
    const auto back = parse_datum(text);
    CHECK(back == d);
    CHECK(write_datum(back) == text);
    CHECK(bredon_homology(back) == bredon_homology(d));
  }
}

TEST_CASE("malformed datum text") {
  CHECK_THROWS_AS(parse_datum("[cells.0]\na = A5\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("[cells.x]\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("[faces.0]\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("[cells.0]\na = 1\n[cells.1]\ne = 1\n[boundary.1]\ne = +1 a : id\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("[cells.0]\na = 1\n[cells.1]\ne = 1\n[boundary.1]\ne = +1 * a : Z3->Z4\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_datum("[cells.0]\na = 1\n[matrix.1]\n1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_datum("[cells.0]\na = 1\nb = 1\n[cells.1]\ne = 1\n[boundary.1]\nf = +1 * a : id\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_datum("flags = fast\n"), ParseError);
  // well-formed spec whose source does not match the edge stabiliser
  const auto bad = parse_datum("[cells.0]\na = Z6\n[cells.1]\ne = Z2\n[boundary.1]\ne = +1 * a : Z3->Z6\n");
  CHECK_THROWS_AS(expand(bad), DomainError);
}

TEST_CASE("graphs of groups") {
  GraphOfGroupsDatum g;
  g.vertices = {GroupId::cyclic(2), GroupId::cyclic(3)};
  g.edges.push_back({"", GroupId::trivial(), 0, 1, InductionSpec::from_trivial(GroupId::cyclic(2)),
                     InductionSpec::from_trivial(GroupId::cyclic(3))});
  const auto d = g.to_cw_datum();
  CHECK(d.cells[0][0].label == "v0");
  CHECK(d.cells[1][0].label == "e0");
  CHECK(bredon_homology(d) == free_ranks({4, 0}));
}
