#include "bredonk/fuchsian/fuchsian.hpp"

#include "bredonk/errors.hpp"

namespace bredonk {

std::vector<FinAbGroup> fuchsian_bredon_closed_form(const Signature& sig) {
  sig.validate();
  const std::size_t r = sig.cone_points();
  const std::size_t h0 = 1 + sig.period_sum() - r;
  if (sig.cocompact()) return {FinAbGroup(h0), FinAbGroup(2 * sig.genus), FinAbGroup(1)};
  return {FinAbGroup(h0), FinAbGroup(2 * sig.genus + sig.punctures - 1)};
}

KGroups equivariant_k(const Signature& sig) {
  sig.validate();
  const std::size_t r = sig.cone_points();
  const std::size_t sum = sig.period_sum();
  if (sig.cocompact()) return {FinAbGroup(2 + sum - r), FinAbGroup(2 * sig.genus)};
  return {FinAbGroup(1 + sum - r), FinAbGroup(2 * sig.genus + sig.punctures - 1)};
}

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  for (; e; e >>= 1) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : bases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : bases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

HeckeCase classify_hecke(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (p == 2) return HeckeCase::P2;
  if (p == 3) return HeckeCase::P3;
  switch (p % 12) {
    case 1: return HeckeCase::R1;
    case 5: return HeckeCase::R5;
    case 7: return HeckeCase::R7;
    default: return HeckeCase::R11;
  }
}

std::string hecke_case_name(HeckeCase c) {
  switch (c) {
    case HeckeCase::P2: return "p=2";
    case HeckeCase::P3: return "p=3";
    case HeckeCase::R1: return "p=1 mod 12";
    case HeckeCase::R5: return "p=5 mod 12";
    case HeckeCase::R7: return "p=7 mod 12";
    case HeckeCase::R11: return "p=11 mod 12";
  }
  return {};
}

Signature hecke_signature(std::uint64_t p) {
  const auto cusps = [](std::uint64_t genus_part) { return static_cast<unsigned>(genus_part + 1); };
  switch (classify_hecke(p)) {
    case HeckeCase::P2: return {0, 2, {2}};
    case HeckeCase::P3: return {0, 2, {3}};
    case HeckeCase::R1: return {0, cusps((p - 7) / 6), {2, 2, 3, 3}};
    case HeckeCase::R5: return {0, cusps((p + 1) / 6), {2, 2}};
    case HeckeCase::R7: return {0, cusps((p - 1) / 6), {3, 3}};
    case HeckeCase::R11: return {0, cusps((p + 7) / 6), {}};
  }
  return {};
}

std::vector<FinAbGroup> hecke_bredon(std::uint64_t p) {
  return fuchsian_bredon_closed_form(hecke_signature(p));
}

Signature modular_group_signature() { return {0, 1, {2, 3}}; }

}  // namespace bredonk
