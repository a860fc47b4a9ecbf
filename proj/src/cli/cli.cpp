#include "bredonk/cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "bredonk/arithmetic_k/arithmetic_k.hpp"
#include "bredonk/bredon/constructions.hpp"
#include "bredonk/bredon/datum_io.hpp"
#include "bredonk/cli/verify.hpp"
#include "bredonk/errors.hpp"
#include "bredonk/fuchsian/fuchsian.hpp"
#include "bredonk/groups/character_table.hpp"

namespace bredonk::cli {
namespace {

GradedGroup as_k(const KGroups& k) { return GradedGroup(2, {k.k0, k.k1}); }

Input number(std::string key, std::uint64_t v) { return {std::move(key), std::to_string(v), true}; }
Input text(std::string key, std::string v) { return {std::move(key), std::move(v), false}; }
Input flag(std::string key, bool v) { return {std::move(key), v ? "true" : "false", true}; }

std::vector<FinAbGroup> doubled(const std::vector<FinAbGroup>& h) {
  std::vector<FinAbGroup> out;
  for (const auto& g : h) out.push_back(direct_power(g, 2));
  return out;
}

std::vector<GroupId> stabilisers(const GammaCWDatum& datum) {
  std::vector<GroupId> out;
  for (const auto& dim : datum.cells)
    for (const auto& c : dim) out.push_back(c.stabiliser);
  return out;
}

GradedGroup ko_for(const std::vector<GroupId>& stabs, const std::vector<FinAbGroup>& h) {
  for (const auto& g : stabs)
    if (!all_tables_coincide(g))
      throw DomainError("stabiliser " + group_name(g) +
                        " has an irreducible that is not of real type; the KO E^2 page is not available");
  return ko_column_collapse(ko_e2_page(h));
}

std::string homology_line(const std::vector<FinAbGroup>& h) {
  std::string s = "Bredon homology:";
  for (std::size_t n = 0; n < h.size(); ++n)
    s += (n ? ", H" : " H") + std::to_string(n) + " = " + h[n].to_string();
  return s;
}

}  // namespace

GradedGroup ko_from_homology(const GammaCWDatum& datum, const std::vector<FinAbGroup>& h) {
  return ko_for(stabilisers(datum), h);
}

Report sl3_report(bool ko, const GammaCWDatum& sl3) {
  Report r{"sl3", {flag("ko", ko)}, bredon_homology(sl3), ko ? "KO" : "K", {}};
  r.groups = ko ? ko_from_homology(sl3, *r.homology) : as_k(collapse_complex(*r.homology));
  return r;
}

Report gl3_report(bool ko, const GammaCWDatum& sl3) {
  // GL_3(Z) = SL_3(Z) × Z/2 with the centre acting trivially on the model
  const auto h = kunneth_times_z2(bredon_homology(sl3));
  Report r{"gl3", {flag("ko", ko)}, h, ko ? "KO" : "K", {}};
  if (ko) {
    std::vector<GroupId> stabs;
    for (const auto& g : stabilisers(sl3)) stabs.push_back(GroupId::times_z2(g));
    r.groups = ko_for(stabs, h);
  } else {
    r.groups = as_k(collapse_complex(h));
  }
  return r;
}

Report fuchsian_report(const Signature& sig, bool lift, bool ko) {
  Report r{"fuchsian", {text("signature", sig.to_string()), flag("lift", lift), flag("ko", ko)}, {}, ko ? "KO" : "K",
           {}};
  const GammaCWDatum datum = lift ? lifted_fuchsian_datum(sig) : fuchsian_datum(sig);
  r.homology = bredon_homology(datum);
  if (ko) r.groups = ko_from_homology(datum, *r.homology);
  else if (lift) r.groups = as_k(collapse_complex(*r.homology));
  else r.groups = as_k(equivariant_k(sig));
  return r;
}

Report hecke_report(std::uint64_t p, bool lift, bool ko) {
  const Signature sig = hecke_signature(p);
  Report r = fuchsian_report(sig, lift, ko);
  r.command = "hecke";
  r.inputs.insert(r.inputs.begin(), number("p", p));
  return r;
}

Report psl2zp_report(std::uint64_t p) {
  return {"psl2zp", {number("p", p)}, psl_zp_bredon(p), "K", as_k(psl_zp_k(p))};
}

Report sl2zp_report(std::uint64_t p) {
  return {"sl2zp", {number("p", p)}, doubled(psl_zp_bredon(p)), "K", as_k(sl_zp_k(p))};
}

Report cstar_report(std::uint64_t p, bool ko) {
  Report r{"cstar", {number("p", p), flag("ko", ko)}, {}, ko ? "KO" : "K", {}};
  r.groups = ko ? cstar_ko_p11(p) : as_k(cstar_k_p11(p));
  return r;
}

Report complex_report(const GammaCWDatum& datum, const std::string& path, bool ko) {
  Report r{"complex", {text("file", path), text("name", datum.name), flag("ko", ko)}, bredon_homology(datum),
           ko ? "KO" : "K", {}};
  r.groups = ko ? ko_from_homology(datum, *r.homology) : as_k(collapse_complex(*r.homology));
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command;
  for (const auto& in : r.inputs)
    if (!(in.numeric && in.value == "false")) os << (in.value == "true" ? " --" + in.key : " " + in.key + " = " + in.value);
  os << "\n";
  if (r.homology) os << homology_line(*r.homology) << "\n";
  if (r.groups.period == 2) {
    os << r.theory << "0 = " << r.groups.at(0) << ", " << r.theory << "1 = " << r.groups.at(1) << "\n";
  } else {
    for (unsigned n = 0; n < r.groups.period; ++n) {
      os << r.theory << n << " = " << r.groups.at(n);
      if (r.groups.ambiguous(n)) os << " (up to extension)";
      os << "\n";
    }
  }
  os << "remaining groups by Bott periodicity\n";
  return os.str();
}

std::string render_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& in : r.inputs) {
    if (!in.numeric) j["inputs"][in.key] = in.value;
    else if (in.value == "true" || in.value == "false") j["inputs"][in.key] = in.value == "true";
    else j["inputs"][in.key] = std::stoull(in.value);
  }
  if (r.homology) {
    auto& h = j["homology"] = nlohmann::ordered_json::array();
    for (const auto& g : *r.homology) h.push_back(g.to_string());
  }
  j["period"] = r.groups.period;
  auto& groups = j["groups"] = nlohmann::ordered_json::object();
  for (unsigned n = 0; n < r.groups.period; ++n) groups[r.theory + std::to_string(n)] = r.groups.at(n).to_string();
  j["extension_ambiguous"] = !r.groups.extension_ambiguous.empty();
  j["extension_ambiguous_degrees"] = r.groups.extension_ambiguous;
  return j.dump(2) + "\n";
}

std::uint64_t parse_prime(const std::string& s) {
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("'" + s + "' is not a prime number");
  if (!is_prime(p)) throw DomainError(s + " is not prime");
  return p;
}

namespace {

std::string render_verify(const std::vector<CheckResult>& checks, const PrimeRange& primes, bool json) {
  const auto failed = std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed; });
  if (json) {
    nlohmann::ordered_json j;
    j["command"] = "verify";
    j["inputs"] = {{"primes", primes.to_string()}};
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) arr.push_back({{"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
    j["passed"] = failed == 0;
    return j.dump(2) + "\n";
  }
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.anchor.size());
  std::ostringstream os;
  for (const auto& c : checks)
    os << (c.passed ? "PASS  " : "FAIL  ") << c.anchor << std::string(width - c.anchor.size() + 2, ' ') << c.detail
       << "\n";
  if (failed == 0) os << "all " << checks.size() << " checks passed\n";
  else os << failed << " of " << checks.size() << " checks failed\n";
  return os.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bredon homology and equivariant K/KO-homology of proper classifying spaces", "bredonk"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string prime, signature, file, primes = "2..200";
  bool ko = false, lift = false, emit = false;

  auto* sl3 = app.add_subcommand("sl3", "SL_3(Z)");
  auto* gl3 = app.add_subcommand("gl3", "GL_3(Z)");
  auto* fuchsian = app.add_subcommand("fuchsian", "Fuchsian group of a given signature");
  auto* hecke = app.add_subcommand("hecke", "Hecke congruence subgroup Gamma_0(p)");
  auto* psl2zp = app.add_subcommand("psl2zp", "PSL_2(Z[1/p])");
  auto* sl2zp = app.add_subcommand("sl2zp", "SL_2(Z[1/p])");
  auto* cstar = app.add_subcommand("cstar", "K/KO of the reduced C*-algebra of PSL_2(Z[1/p]), p = 11 mod 12");
  auto* complex = app.add_subcommand("complex", "User-supplied Gamma-CW datum");
  auto* verify = app.add_subcommand("verify", "Run the regression checks");

  for (auto* sub : {sl3, gl3, fuchsian, hecke, cstar, complex}) sub->add_flag("--ko", ko, "KO instead of K");
  for (auto* sub : {sl3, gl3, fuchsian, hecke, complex})
    sub->add_flag("--emit-datum", emit, "print the Gamma-CW datum in input-file format instead of computing");
  for (auto* sub : {fuchsian, hecke, psl2zp}) sub->add_flag("--lift", lift, "central Z/2 extension in SL_2");
  for (auto* sub : {hecke, psl2zp, sl2zp, cstar}) sub->add_option("-p,--prime", prime, "prime")->required();
  fuchsian->add_option("--signature", signature, "[g,s;m1,...,mr]")->required();
  complex->add_option("--file", file, "Gamma-CW datum file")->required();
  verify->add_option("--file", file, "datum to use in place of the shipped SL_3(Z) complex");
  verify->add_option("--primes", primes, "prime range a..b for the sweep");
  for (auto* sub : app.get_subcommands({})) sub->add_option("--format", format, "Output format")
                                                ->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return Ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return Ok;
  } catch (const CLI::ParseError& e) {
    err << "bredonk: " << e.what() << "\n";
    return InputParseFailure;
  }

  const bool json = format == "json";
  try {
    if (verify->parsed()) {
      VerifyOptions opts;
      opts.primes = PrimeRange::parse(primes);
      if (!file.empty()) opts.sl3 = read_datum_file(file);
      const auto checks = verify_all(opts);
      out << render_verify(checks, opts.primes, json);
      return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }) ? Ok
                                                                                               : VerificationFailure;
    }
    if (emit) {
      if (gl3->parsed()) throw DomainError("GL3(Z) is computed from the SL3(Z) datum by the Kunneth formula; emit sl3");
      GammaCWDatum d;
      if (sl3->parsed()) d = sl3_datum();
      else if (fuchsian->parsed() || hecke->parsed()) {
        const Signature sig = fuchsian->parsed() ? Signature::parse(signature) : hecke_signature(parse_prime(prime));
        d = lift ? lifted_fuchsian_datum(sig) : fuchsian_datum(sig);
      } else if (complex->parsed()) d = read_datum_file(file);
      expand(d);
      out << write_datum(d);
      return Ok;
    }
    Report r;
    if (sl3->parsed()) r = sl3_report(ko, sl3_datum());
    else if (gl3->parsed()) r = gl3_report(ko, sl3_datum());
    else if (fuchsian->parsed()) r = fuchsian_report(Signature::parse(signature), lift, ko);
    else if (hecke->parsed()) r = hecke_report(parse_prime(prime), lift, ko);
    else if (psl2zp->parsed()) r = lift ? sl2zp_report(parse_prime(prime)) : psl2zp_report(parse_prime(prime));
    else if (sl2zp->parsed()) r = sl2zp_report(parse_prime(prime));
    else if (cstar->parsed()) r = cstar_report(parse_prime(prime), ko);
    else if (complex->parsed()) r = complex_report(read_datum_file(file), file, ko);
    out << (json ? render_json(r) : render_text(r));
    return Ok;
  } catch (const ParseError& e) {
    err << "bredonk: " << e.what() << "\n";
    return InputParseFailure;
  } catch (const DomainError& e) {
    err << "bredonk: " << e.what() << "\n";
    return DomainFailure;
  }
}

}  // namespace bredonk::cli
