#include "bredonk/cli/verify.hpp"

#include <charconv>
#include <functional>
#include <random>
#include <sstream>

#include "bredonk/arithmetic_k/arithmetic_k.hpp"
#include "bredonk/bredon/constructions.hpp"
#include "bredonk/cli/cli.hpp"
#include "bredonk/errors.hpp"
#include "bredonk/exactlinalg/smith_normal_form.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"
#include "bredonk/groups/character_table.hpp"

namespace bredonk::cli {

PrimeRange PrimeRange::parse(std::string_view text) {
  const auto dots = text.find("..");
  auto num = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("prime range '" + std::string(text) + "' is not of the form a..b");
    return v;
  };
  if (dots == std::string_view::npos) throw DomainError("prime range '" + std::string(text) + "' is not of the form a..b");
  PrimeRange r{num(text.substr(0, dots)), num(text.substr(dots + 2))};
  if (r.lo > r.hi) throw DomainError("prime range '" + std::string(text) + "' is empty");
  return r;
}

std::string PrimeRange::to_string() const { return std::to_string(lo) + ".." + std::to_string(hi); }

namespace {

using Groups = std::vector<FinAbGroup>;

FinAbGroup Z(std::size_t r) { return FinAbGroup(r); }
FinAbGroup Z2(std::size_t k) { return FinAbGroup::elementary(2, k); }

std::string render(const Groups& gs) {
  std::string s = "(";
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + gs[i].to_string();
  return s + ")";
}

Groups ranks_of(std::initializer_list<std::size_t> ranks) {
  Groups g;
  for (auto r : ranks) g.push_back(Z(r));
  return g;
}

Groups graded(const GradedGroup& g) { return g.groups; }

Groups ko_shape(std::size_t r) { return {Z(r), Z2(r), Z2(r), {}, Z(r), {}, {}, {}}; }

class Recorder {
 public:
  // Runs `body`, which returns an empty string on success or a description of
  // the first mismatch. Library exceptions count as failures.
  void check(std::string anchor, const std::string& what, const std::function<std::string()>& body) {
    CheckResult r{std::move(anchor), false, what};
    try {
      const std::string problem = body();
      r.passed = problem.empty();
      if (!r.passed) r.detail = problem;
    } catch (const std::exception& e) {
      r.detail = std::string("error: ") + e.what();
    }
    results_.push_back(std::move(r));
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string mismatch(const std::string& what, const std::string& got, const std::string& want) {
  return what + ": got " + got + ", expected " + want;
}

std::string euler_mismatch(const GammaCWDatum& d) {
  const auto c = expand(d);
  const auto h = all_homology(c);
  long alt = 0;
  for (std::size_t n = 0; n < h.size(); ++n)
    alt += (n % 2 ? -1 : 1) * static_cast<long>(h[n].free_rank());
  if (alt == c.euler_characteristic()) return {};
  return mismatch("Euler characteristic of " + d.name, std::to_string(alt), std::to_string(c.euler_characteristic()));
}

// Table 3 (Bredon homology of Γ_0(p)) transcribed as rank formulas per case.
Groups gamma0_table(std::uint64_t p) {
  switch (classify_hecke(p)) {
    case HeckeCase::P2: return ranks_of({2, 1});
    case HeckeCase::P3: return ranks_of({3, 1});
    case HeckeCase::R1: return ranks_of({7, (p - 7) / 6});
    case HeckeCase::R5: return ranks_of({3, (p + 1) / 6});
    case HeckeCase::R7: return ranks_of({5, (p - 1) / 6});
    case HeckeCase::R11: return ranks_of({1, (p + 7) / 6});
  }
  return {};
}

// Table 4 columns: order-2 and order-3 element classes.
std::pair<unsigned, unsigned> class_table(HeckeCase c) {
  switch (c) {
    case HeckeCase::P2: return {1, 4};
    case HeckeCase::P3: return {2, 2};
    case HeckeCase::R1: return {1, 2};
    case HeckeCase::R5: return {1, 4};
    case HeckeCase::R7: return {2, 2};
    case HeckeCase::R11: return {2, 4};
  }
  return {};
}

// Table 5 ranks of H_0, H_1, H_2 of PSL_2(Z[1/p]).
Groups psl_bredon_table(std::uint64_t p) {
  switch (classify_hecke(p)) {
    case HeckeCase::P2: return ranks_of({6, 0, 1});
    case HeckeCase::P3: return ranks_of({5, 0, 1});
    case HeckeCase::R1: return ranks_of({4, 3, (p - 7) / 6});
    case HeckeCase::R5: return ranks_of({6, 1, (p + 1) / 6});
    case HeckeCase::R7: return ranks_of({5, 2, (p - 1) / 6});
    case HeckeCase::R11: return ranks_of({7, 0, (p + 7) / 6});
  }
  return {};
}

// Table 1 ranks of K_0, K_1.
Groups psl_k_table(std::uint64_t p) {
  switch (classify_hecke(p)) {
    case HeckeCase::P2: return ranks_of({7, 0});
    case HeckeCase::P3: return ranks_of({6, 0});
    case HeckeCase::R1: return ranks_of({4 + (p - 7) / 6, 3});
    case HeckeCase::R5: return ranks_of({6 + (p + 1) / 6, 1});
    case HeckeCase::R7: return ranks_of({5 + (p - 1) / 6, 2});
    case HeckeCase::R11: return ranks_of({7 + (p + 7) / 6, 0});
  }
  return {};
}

Groups cstar_ko_table(std::uint64_t p) {
  const std::size_t b = (p + 7) / 6;
  return {Z(5), Z2(3), direct_sum(Z(2 + b), Z2(3)), Z2(b), direct_sum(Z(5), Z2(b)), {}, Z(2 + b), {}};
}

const std::vector<std::uint64_t> table_primes{2, 3, 5, 7, 13, 17, 19, 23, 29, 37, 47, 59};

std::vector<std::uint64_t> primes_in(const PrimeRange& r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = r.lo; n <= r.hi; ++n) {
    if (is_prime(n)) out.push_back(n);
    if (n == r.hi) break;
  }
  return out;
}

template <class F>
std::string expect_throws(const std::string& what, F&& f) {
  try {
    f();
  } catch (const DomainError&) {
    return {};
  }
  return what + " was accepted";
}

std::string first_problem(std::initializer_list<std::string> problems) {
  for (const auto& p : problems)
    if (!p.empty()) return p;
  return {};
}

}  // namespace

std::vector<CheckResult> verify_all(const VerifyOptions& options) {
  Recorder rec;
  const GammaCWDatum sl3 = options.sl3 ? *options.sl3 : sl3_datum();
  const auto primes = primes_in(options.primes);

  rec.check("sl3-bredon-homology", "SNF of the SL3(Z) complex gives (Z^8, 0, 0, 0)", [&] {
    const auto h = bredon_homology(sl3);
    const Groups want{Z(8), {}, {}, {}};
    return h == want ? std::string() : mismatch("H", render(h), render(want));
  });
  rec.check("sl3-ko", "KO_n(SL3(Z)) = Z^8, Z2^8, Z2^8, 0, Z^8, 0, 0, 0", [&] {
    const auto got = graded(sl3_report(true, sl3).groups);
    return got == ko_shape(8) ? std::string() : mismatch("KO", render(got), render(ko_shape(8)));
  });
  rec.check("gl3-ko", "KO_n(GL3(Z)) = Z^16, Z2^16, Z2^16, 0, Z^16, 0, 0, 0", [&] {
    const auto got = graded(gl3_report(true, sl3).groups);
    return got == ko_shape(16) ? std::string() : mismatch("KO", render(got), render(ko_shape(16)));
  });
  rec.check("real-type-stabilisers", "tables coincide exactly for 1, Z2, Z2^2, D3, D4, D6, S4 and Z2-products", [] {
    for (const auto& g : catalogue_groups(12)) {
      const GroupId inner = g.with_z2 ? g.inner() : g;
      const bool want = inner.kind != GroupKind::Cyclic || inner.param <= 2;
      if (all_tables_coincide(g) != want)
        return mismatch("tables coincide for " + group_name(g), std::to_string(!want), std::to_string(want));
    }
    return std::string();
  });
  rec.check("frobenius-schur-count", "sum of indicator * degree = #{g : g^2 = 1} on every catalogue group", [] {
    for (const auto& g : catalogue_groups(12)) {
      const auto data = build_group(g);
      long sum = 0;
      if (has_integer_character_table(g)) {
        for (const auto& row : character_table(g).chars) sum += fs_indicator(data, row) * row[0];
      } else {
        const auto counts = indicator_counts(g);  // abelian: all degrees 1
        sum = static_cast<long>(counts.real) - static_cast<long>(counts.quaternionic);
      }
      if (sum != static_cast<long>(data.involution_count()))
        return mismatch(group_name(g), std::to_string(sum), std::to_string(data.involution_count()));
    }
    return std::string();
  });

  // closed form against chain level for every prime in range, in parallel
  std::vector<std::string> sweep(primes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    try {
      const auto datum = fuchsian_noncocompact_datum(hecke_signature(p));
      const auto chain = bredon_homology(datum);
      const auto closed = hecke_bredon(p);
      const auto table = gamma0_table(p);
      std::string problem;
      if (chain != closed) problem = mismatch("p = " + std::to_string(p) + " chain level", render(chain), render(closed));
      else if (closed != table) problem = mismatch("p = " + std::to_string(p) + " closed form", render(closed), render(table));
      else problem = euler_mismatch(datum);
      if (problem.empty()) {
        const auto h = psl_zp_bredon(p);
        const long alt = static_cast<long>(h[1].free_rank()) - static_cast<long>(closed[0].free_rank()) + 8 -
                         static_cast<long>(h[0].free_rank());
        if (alt != 0) problem = "p = " + std::to_string(p) + ": Mayer-Vietoris rank sum is " + std::to_string(alt);
      }
      sweep[i] = problem;
    } catch (const std::exception& e) {
      sweep[i] = "p = " + std::to_string(p) + ": " + e.what();
    }
  }
  rec.check("gamma0-bredon", "Gamma_0(p) closed form = chain level = table, primes " + options.primes.to_string() +
                                 " (" + std::to_string(primes.size()) + " primes), plus PSL2(Z) -> (Z^4, 0)",
            [&] {
              for (const auto& s : sweep)
                if (!s.empty()) return s;
              const auto h = bredon_homology(fuchsian_noncocompact_datum(modular_group_signature()));
              const Groups want{Z(4), {}};
              return h == want ? std::string() : mismatch("PSL2(Z)", render(h), render(want));
            });
  rec.check("psl-class-counts", "conjugacy classes of finite-order elements, all six cases", [] {
    for (std::uint64_t p : {2, 3, 13, 5, 7, 11}) {
      const auto c = class_count_psl(p);
      const auto [o2, o3] = class_table(classify_hecke(p));
      if (c.order2 != o2 || c.order3 != o3 || c.total != 1 + o2 + o3)
        return mismatch("p = " + std::to_string(p), std::to_string(c.order2) + "/" + std::to_string(c.order3),
                        std::to_string(o2) + "/" + std::to_string(o3));
    }
    return std::string();
  });
  rec.check("psl-bredon-and-k", "Bredon homology and K-homology of PSL2(Z[1/p]) match both tables", [] {
    for (auto p : table_primes) {
      const auto h = psl_zp_bredon(p);
      if (h != psl_bredon_table(p))
        return mismatch("H at p = " + std::to_string(p), render(h), render(psl_bredon_table(p)));
      const auto k = psl_zp_k(p);
      const Groups got{k.k0, k.k1};
      if (got != psl_k_table(p)) return mismatch("K at p = " + std::to_string(p), render(got), render(psl_k_table(p)));
    }
    return std::string();
  });
  rec.check("sl-doubling", "SL2(Z[1/p]) doubles PSL2(Z[1/p]); lifted Gamma_0(p) complexes double their homology", [] {
    for (auto p : table_primes) {
      const auto k = psl_zp_k(p), s = sl_zp_k(p);
      if (s.k0.free_rank() != 2 * k.k0.free_rank() || s.k1.free_rank() != 2 * k.k1.free_rank() || !s.k0.is_free() ||
          !s.k1.is_free())
        return mismatch("K at p = " + std::to_string(p), render({s.k0, s.k1}), "twice " + render({k.k0, k.k1}));
    }
    for (std::uint64_t p : {2, 3, 11, 13}) {
      const auto sig = hecke_signature(p);
      const auto lifted_datum = lifted_fuchsian_datum(sig);
      const auto lifted = bredon_homology(lifted_datum);
      const auto base = bredon_homology(fuchsian_noncocompact_datum(sig));
      Groups want;
      for (const auto& g : base) want.push_back(Z(2 * g.free_rank()));
      if (lifted != want) return mismatch("lift at p = " + std::to_string(p), render(lifted), render(want));
      if (auto e = euler_mismatch(lifted_datum); !e.empty()) return e;
    }
    const auto lifted_modular = bredon_homology(lifted_fuchsian_datum(modular_group_signature()));
    return lifted_modular == Groups{Z(8), {}} ? std::string()
                                              : mismatch("lift of PSL2(Z)", render(lifted_modular), "(Z^8, 0)");
  });
  rec.check("cstar-k-ko", "C*-algebra K and KO for p = 11, 23, 47, 59, extension flags on 1, 3, 4", [] {
    for (std::uint64_t p : {11, 23, 47, 59}) {
      const auto k = cstar_k_p11(p);
      const Groups want_k{Z(7 + (p + 7) / 6), {}};
      if (Groups{k.k0, k.k1} != want_k) return mismatch("K at p = " + std::to_string(p), render({k.k0, k.k1}), render(want_k));
      const auto psl = psl_zp_k(p);
      if (!(psl == k)) return "p = " + std::to_string(p) + ": C*-algebra K differs from equivariant K";
      const auto ko = cstar_ko_p11(p);
      if (ko.groups != cstar_ko_table(p))
        return mismatch("KO at p = " + std::to_string(p), render(ko.groups), render(cstar_ko_table(p)));
      if (ko.extension_ambiguous != std::set<unsigned>{1, 3, 4}) return std::string("wrong extension flags");
    }
    return std::string();
  });
  rec.check("euler-characteristic", "alternating chain ranks = alternating homology ranks on constructed complexes", [&] {
    std::vector<GammaCWDatum> data{sl3};
    for (const char* s : {"[0,0;2,3,7]", "[2,0;]", "[0,0;2,3]", "[1,2;4,5]", "[0,1;2,3]", "[3,0;2,2,9]"})
      data.push_back(fuchsian_datum(Signature::parse(s)));
    for (const auto& d : data)
      if (auto e = euler_mismatch(d); !e.empty()) return e;
    return std::string();
  });
  rec.check("snf-roundtrip", "200 random matrices: left*M*right = diag(d), d divisibility, serial = parallel", [] {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<int> dim(0, 8), entry(-20, 20);
    for (int t = 0; t < 200; ++t) {
      IntMatrix m(dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = entry(rng);
      const auto snf = smith_normal_form(m);
      if (snf.left * m * snf.right != IntMatrix::padded_diagonal(m.rows(), m.cols(), snf.d))
        return "transforms do not diagonalize\n" + m.to_string();
      for (std::size_t i = 0; i + 1 < snf.d.size(); ++i)
        if (snf.d[i] <= 0 || snf.d[i + 1] % snf.d[i] != 0) return "invariant factors do not divide\n" + m.to_string();
      if (reference::smith_normal_form_serial(m).d != snf.d) return "serial reference disagrees\n" + m.to_string();
    }
    return std::string();
  });
  rec.check("negative-controls", "refusals outside the supported regime", [] {
    return first_problem({
        expect_throws("collapse with H_3 != 0", [] { collapse_complex({{}, {}, {}, Z(1)}); }),
        expect_throws("two-column KO page", [] { ko_column_collapse(ko_e2_page({Z(1), Z(1)})); }),
        expect_throws("Kunneth with torsion", [] { kunneth_times_z2({FinAbGroup::cyclic(2)}); }),
        expect_throws("C*-algebra K at p = 13", [] { cstar_k_p11(13); }),
        expect_throws("C*-algebra KO at p = 5", [] { cstar_ko_p11(5); }),
    });
  });
  return rec.take();
}

}  // namespace bredonk::cli
