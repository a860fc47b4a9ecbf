#include "bredonk/fuchsian/signature.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "bredonk/errors.hpp"

namespace bredonk {
namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

unsigned parse_number(std::string_view s, std::string_view whole) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw DomainError("invalid signature '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Signature Signature::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw DomainError("invalid signature '" + std::string(text) + "': expected [g,s;m1,...]");
  const std::string_view body(s.data() + 1, s.size() - 2);
  const auto semi = body.find(';');
  if (semi == std::string_view::npos)
    throw DomainError("invalid signature '" + std::string(text) + "': missing ';'");
  const auto head = split(body.substr(0, semi), ',');
  if (head.size() != 2) throw DomainError("invalid signature '" + std::string(text) + "': expected g,s");
  Signature sig;
  sig.genus = parse_number(head[0], text);
  sig.punctures = parse_number(head[1], text);
  const auto tail = body.substr(semi + 1);
  if (!tail.empty()) {
    for (auto m : split(tail, ',')) sig.periods.push_back(parse_number(m, text));
  }
  sig.validate();
  return sig;
}

void Signature::validate() const {
  for (unsigned m : periods)
    if (m < 2) throw DomainError("invalid signature " + to_string() + ": periods must be at least 2");
}

unsigned long Signature::period_sum() const {
  return std::accumulate(periods.begin(), periods.end(), 0UL);
}

std::string Signature::to_string() const {
  std::string s = "[" + std::to_string(genus) + "," + std::to_string(punctures) + ";";
  for (std::size_t i = 0; i < periods.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(periods[i]);
  }
  return s + "]";
}

bool operator==(const Signature& a, const Signature& b) {
  if (a.genus != b.genus || a.punctures != b.punctures) return false;
  auto pa = a.periods, pb = b.periods;
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  return pa == pb;
}

}  // namespace bredonk
