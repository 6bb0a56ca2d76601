#pragma once

// Text and JSON forms of monomials, binomials, ideals and reports.

#include "constellation.hpp"
#include "groebner.hpp"
#include "group.hpp"
#include "hilbert_scheme.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

using json = nlohmann::json;

inline std::string format_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string format_binomial(const Binomial& b, const std::vector<std::string>& names) {
  return format_monomial(b.lead, names) + " - " + format_monomial(b.trail, names);
}

inline std::string format_binomials(std::vector<Binomial> gens, const std::vector<std::string>& names) {
  std::sort(gens.begin(), gens.end(), [](const Binomial& a, const Binomial& b) { return canonical_less(a, b); });
  std::string out;
  for (const auto& g : gens) out += format_binomial(g, names) + '\n';
  return out;
}

inline std::string format_monomial_ideal(const MonomialIdeal& J, const std::vector<std::string>& names) {
  std::string out = "⟨";
  for (std::size_t k = 0; k < J.min_gens().size(); ++k)
    out += (k ? ", " : "") + format_monomial(J.min_gens()[k], names);
  return out + "⟩";
}

inline std::string format_vector(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

inline std::string format_vector(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].get_str();
  return out + ")";
}

namespace detail {

/// Parse one monomial of `s` starting at `pos`: factors name[^k] separated by
/// optional '*' or spaces; names matched longest first. Stops at any other
/// character.
inline Exponents parse_monomial_at(std::string_view s, std::size_t& pos,
                                   const std::vector<std::string>& names, std::size_t line) {
  const std::size_t n = names.size();
  Exponents e(n, 0);
  bool any = false;
  auto skip = [&] {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
  };
  for (;;) {
    skip();
    if (pos >= s.size()) break;
    if (s[pos] == '*' && any) {
      ++pos;
      continue;
    }
    if (s[pos] == '1' && !any && (pos + 1 >= s.size() || !(s[pos + 1] >= '0' && s[pos + 1] <= '9'))) {
      ++pos;
      any = true;
      continue;
    }
    std::size_t best = n, best_len = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (names[i].size() > best_len && s.substr(pos, names[i].size()) == names[i]) {
        best = i;
        best_len = names[i].size();
      }
    if (best == n) break;
    pos += best_len;
    std::int64_t k = 1;
    skip();
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      skip();
      std::size_t start = pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
      if (start == pos) throw ParseError(line, pos + 1, "expected an exponent after '^'");
      k = std::stoll(std::string(s.substr(start, pos - start)));
    }
    e[best] = checked_add(e[best], k);
    any = true;
  }
  if (!any) throw ParseError(line, pos + 1, "expected a monomial");
  return e;
}

inline std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

inline bool blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) { return c == ' ' || c == '\t' || c == '\r'; });
}

}  // namespace detail

inline Exponents parse_monomial(std::string_view s, const std::vector<std::string>& names) {
  std::size_t pos = 0;
  auto e = detail::parse_monomial_at(s, pos, names, 1);
  if (!detail::blank(s.substr(pos))) throw ParseError(1, pos + 1, "unexpected character");
  return e;
}

/// Monomial ideal from text: generators separated by commas or newlines,
/// optionally enclosed in angle brackets.
inline MonomialIdeal parse_monomial_ideal(const std::string& text, const std::vector<std::string>& names) {
  std::vector<Exponents> gens;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  const std::string open = "⟨", close = "⟩";
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    std::size_t pos = 0;
    for (;;) {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r' ||
                                   line[pos] == ',' || line[pos] == '<' || line[pos] == '>'))
        ++pos;
      if (line.compare(pos, open.size(), open) == 0) {
        pos += open.size();
        continue;
      }
      if (line.compare(pos, close.size(), close) == 0) {
        pos += close.size();
        continue;
      }
      if (pos >= line.size()) break;
      gens.push_back(detail::parse_monomial_at(line, pos, names, lineno));
      if (pos < line.size() && line[pos] != ',' && line[pos] != ' ' && line[pos] != '\t' &&
          line[pos] != '\r' && line[pos] != '>' && line.compare(pos, close.size(), close) != 0)
        throw ParseError(lineno, pos + 1, "unexpected character");
    }
  }
  if (gens.empty()) throw ParseError(lineno == 0 ? 1 : lineno, 1, "no generators");
  return MonomialIdeal(names.size(), std::move(gens));
}

/// Binomials "x^u - x^v", one per line, optional trailing comma.
inline std::vector<Binomial> parse_binomials(const std::string& text, const std::vector<std::string>& names,
                                             const TermOrder& order) {
  std::vector<Binomial> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::size_t pos = 0;
    Exponents a = detail::parse_monomial_at(line, pos, names, lineno);
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size() || line[pos] != '-') throw ParseError(lineno, pos + 1, "expected '-'");
    ++pos;
    Exponents b = detail::parse_monomial_at(line, pos, names, lineno);
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == ',' || line[pos] == '\r'))
      ++pos;
    if (pos != line.size()) throw ParseError(lineno, pos + 1, "unexpected character");
    if (a == b) throw ParseError(lineno, 1, "binomial with equal terms");
    out.push_back(Binomial::oriented(std::move(a), std::move(b), order));
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const IntVec& v) {
  json j = json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      j.push_back(x.get_si());
    else
      j.push_back(x.get_str());
  }
  return j;
}

inline json to_json(const RatVec& v) {
  json j = json::array();
  for (const auto& x : v) {
    if (x.get_den() == 1 && x.get_num().fits_slong_p())
      j.push_back(x.get_num().get_si());
    else
      j.push_back(x.get_str());
  }
  return j;
}

inline json to_json(const std::vector<IntVec>& vs) {
  json j = json::array();
  for (const auto& v : vs) j.push_back(to_json(v));
  return j;
}

inline json to_json(const MonomialIdeal& J) {
  json j = json::array();
  for (const auto& g : J.min_gens()) j.push_back(g);
  return j;
}

inline json to_json(const std::vector<Binomial>& gens) {
  json j = json::array();
  for (const auto& g : gens) j.push_back({{"lead", g.lead}, {"trail", g.trail}});
  return j;
}

inline MonomialIdeal monomial_ideal_from_json(const json& j, std::size_t n) {
  std::vector<Exponents> gens;
  for (const auto& g : j) gens.push_back(g.get<Exponents>());
  return MonomialIdeal(n, std::move(gens));
}

inline std::vector<Binomial> binomials_from_json(const json& j) {
  std::vector<Binomial> out;
  for (const auto& g : j) out.push_back({g.at("lead").get<Exponents>(), g.at("trail").get<Exponents>()});
  return out;
}

inline json to_json(const NormalityReport& rep) {
  const auto names = rep.group.variable_names();
  json charts = json::array();
  json certificates = json::array();
  const bool use_M = rep.lattice == NormalityLattice::M;
  for (const auto& c : rep.charts) {
    json ch;
    ch["J"] = to_json(c.J.J);
    ch["J_text"] = format_monomial_ideal(c.J.J, names);
    ch["witness_w"] = to_json(c.witness);
    ch["gens"] = to_json(c.gens);
    ch["hilbert_basis"] = to_json(use_M ? c.hilbert_basis_M : c.hilbert_basis_ZA);
    ch["missing"] = to_json(use_M ? c.missing_M : c.missing_ZA);
    ch["normal"] = use_M ? c.normal_M : c.normal_ZA;
    ch["lattices"] = {
        {"M", {{"hilbert_basis", to_json(c.hilbert_basis_M)}, {"missing", to_json(c.missing_M)}, {"normal", c.normal_M}}},
        {"ZA", {{"hilbert_basis", to_json(c.hilbert_basis_ZA)}, {"missing", to_json(c.missing_ZA)}, {"normal", c.normal_ZA}}}};
    charts.push_back(std::move(ch));
    for (const auto& m : use_M ? c.missing_M : c.missing_ZA)
      certificates.push_back({{"J", to_json(c.J.J)},
                              {"vector", to_json(m)},
                              {"grading", to_json(c.witness)},
                              {"reason", "no nonnegative integer combination of gens"},
                              {"residuals_explored", c.explored}});
  }
  json g;
  g["n"] = rep.group.n;
  g["text"] = serialize_group(rep.group);
  return {{"group", g},
          {"r", rep.r},
          {"n", rep.n},
          {"lattice", use_M ? "M" : "ZA"},
          {"mode", rep.spot_check ? "spot-check" : "full-fan"},
          {"charts", charts},
          {"overall_normal", rep.overall_normal},
          {"certificates", certificates}};
}

}  // namespace mckay
