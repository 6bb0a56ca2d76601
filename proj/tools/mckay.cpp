// mckay: command-line front end.

#include <mckay/mckay.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifndef MCKAY_DATA_DIR
#define MCKAY_DATA_DIR "data"
#endif

using namespace mckay;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string group;
  std::vector<std::string> weights;
  std::string theta;
  std::string ideal;
  std::string lattice = "M";
  std::size_t max_cones = 100000;
  std::size_t max_nodes = 5'000'000;
  bool json = false;
  bool assert_normal = false;
  bool refine_lex = false;
  std::string suite;
  std::string data = MCKAY_DATA_DIR;
};

RatVec parse_csv(const std::string& text, const char* what) {
  RatVec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto a = item.find_first_not_of(" \t");
    auto b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw InputError(std::string("empty entry in ") + what);
    try {
      out.push_back(parse_rational(item.substr(a, b - a + 1)));
    } catch (const std::exception&) {
      throw InputError(std::string("bad rational '") + item + "' in " + what);
    }
  }
  if (out.empty()) throw InputError(std::string("empty ") + what);
  return out;
}

GroupSpec load_group(const Flags& f) {
  if (f.group.empty()) throw InputError("--group is required");
  return parse_group(read_file(f.group));
}

RatVec one_weight(const Flags& f, std::size_t n) {
  if (f.weights.size() != 1) throw InputError("exactly one --weight is required");
  RatVec w = parse_csv(f.weights.front(), "--weight");
  if (w.size() != n) throw InputError("--weight needs " + std::to_string(n) + " entries");
  for (const auto& x : w)
    if (x < 0) throw InputError("--weight entries must be nonnegative");
  return w;
}

MonomialIdeal load_ideal(const Flags& f, const GroupSpec& spec) {
  if (f.ideal.empty()) throw InputError("--ideal is required");
  return parse_monomial_ideal(read_file(f.ideal), spec.variable_names());
}

// J from --ideal, or in_w(I_M) from --weight; the witness is w or a
// separating weight.
std::pair<GCluster, IntVec> chart_input(const Flags& f, const CharGroup& G) {
  auto ideal = lattice_ideal(G);
  if (!f.ideal.empty()) {
    auto c = is_g_cluster(load_ideal(f, G.spec()), G);
    auto v = coherent_membership(c, ideal, G);
    if (!v.on_coherent) throw InputError("the ideal does not lie on the coherent component");
    return {c, v.witness};
  }
  RatVec w = one_weight(f, G.n());
  TermOrder o = TermOrder::weight(w);
  auto gb = buchberger(reorient(ideal, o), o);
  return {is_g_cluster(initial_ideal(gb), G), clear_denominators(w)};
}

void print_vectors(const std::vector<IntVec>& vs) {
  for (const auto& v : vs) std::cout << "  " << format_vector(v) << '\n';
}

int cmd_info(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto red = G.redundancy();
  if (f.json) {
    json j;
    j["n"] = G.n();
    j["r"] = G.r();
    j["invariant_factors"] = to_json(G.invariant_factors());
    json rho = json::array();
    for (std::size_t i = 0; i < G.n(); ++i) rho.push_back(G.label(G.rho(i)));
    j["rho"] = rho;
    j["exponent_rank"] = red.exponent_rank;
    j["independent"] = red.independent;
    j["lattice"] = to_json(G.lattice().row_list());
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "n = " << G.n() << "\nr = " << G.r() << "\ninvariant factors:";
  for (const auto& d : G.invariant_factors()) std::cout << ' ' << d;
  std::cout << '\n';
  auto names = spec.variable_names();
  for (std::size_t i = 0; i < G.n(); ++i)
    std::cout << "deg " << names[i] << " = " << G.label(G.rho(i)) << " (order " << G.order_of_rho(i) << ")\n";
  std::cout << "exponent rank = " << red.exponent_rank << (red.independent ? " (independent)" : " (redundant)")
            << "\nlattice M basis:\n";
  print_vectors(G.lattice().row_list());
  return 0;
}

int cmd_lattice_ideal(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto gens = lattice_ideal(G);
  if (f.json)
    std::cout << json{{"binomials", to_json(gens)}}.dump(2) << '\n';
  else
    std::cout << format_binomials(gens, spec.variable_names());
  return 0;
}

int cmd_initial(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  RatVec w = one_weight(f, G.n());
  TermOrder o = TermOrder::weight(w);
  auto gb = buchberger(reorient(lattice_ideal(G), o), o);
  MonomialIdeal J = f.refine_lex ? leading_ideal(gb) : initial_ideal(gb);
  auto names = spec.variable_names();
  if (f.json) {
    std::cout << json{{"gb", to_json(gb.elements)}, {"J", to_json(J)}, {"J_text", format_monomial_ideal(J, names)}}
                     .dump(2)
              << '\n';
    return 0;
  }
  std::cout << "Groebner basis:\n" << format_binomials(gb.elements, names) << "initial ideal:\n"
            << format_monomial_ideal(J, names) << '\n';
  return 0;
}

int cmd_constellation(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  if (f.theta.empty()) throw InputError("--theta is required");
  RatVec t = parse_csv(f.theta, "--theta");
  if (t.size() != G.r()) throw InputError("--theta needs " + std::to_string(G.r()) + " entries");
  ThetaParam theta(t);
  RatVec w = one_weight(f, G.n());
  auto c = distinguished_constellation(G, theta, w);
  verify_quiver_rep(G, c.rep);
  auto q = support_quiver(G, c.rep, false);
  bool acyclic = !q.find_cycle().has_value();
  if (f.json) {
    json blocks = json::array();
    for (std::size_t rho = 0; rho < G.r(); ++rho) {
      json b = json::array();
      for (std::size_t i = 0; i < G.n(); ++i) b.push_back(c.rep.at(rho, i));
      blocks.push_back(b);
    }
    std::cout << json{{"b", blocks}, {"v", to_json(c.v)}, {"value", c.value.get_str()}, {"acyclic", acyclic}}.dump(2)
              << '\n';
    return 0;
  }
  std::cout << format_module(G, c.rep, spec.variable_names());
  std::cout << "v = " << format_vector(c.v) << "\ntheta . v = " << c.value << '\n';
  std::cout << "support quiver: " << q.arrows.size() << " arrows, " << (acyclic ? "acyclic" : "has a cycle") << '\n';
  return 0;
}

int cmd_membership(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto c = is_g_cluster(load_ideal(f, spec), G);
  auto v = coherent_membership(c, lattice_ideal(G), G);
  if (f.json) {
    json j;
    j["verdict"] = v.on_coherent ? "ON-COHERENT" : "OFF-COMPONENT";
    j["pairs"] = to_json(v.pairs);
    if (v.on_coherent)
      j["witness"] = to_json(v.witness);
    else
      j["multipliers"] = to_json(v.separation.multipliers);
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  if (v.on_coherent) {
    std::cout << "ON-COHERENT\nwitness w = " << format_vector(v.witness) << '\n';
    return 0;
  }
  std::cout << "OFF-COMPONENT\ncertificate:\n";
  for (std::size_t k = 0; k < v.pairs.size(); ++k)
    if (v.separation.multipliers[k] > 0)
      std::cout << "  " << v.separation.multipliers[k] << " * " << format_vector(v.pairs[k]) << '\n';
  std::cout << "sum = " << format_vector(v.separation.combination) << '\n';
  return 0;
}

int cmd_clusters(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto ideal = lattice_ideal(G);
  auto all = enumerate_monomial_clusters(G, {f.max_nodes});
  auto names = spec.variable_names();
  json arr = json::array();
  for (const auto& c : all) {
    bool on = coherent_membership(c, ideal, G).on_coherent;
    if (f.json)
      arr.push_back({{"J", to_json(c.J)}, {"J_text", format_monomial_ideal(c.J, names)}, {"coherent", on}});
    else
      std::cout << (on ? "coherent  " : "off       ") << format_monomial_ideal(c.J, names) << '\n';
  }
  if (f.json)
    std::cout << arr.dump(2) << '\n';
  else
    std::cout << all.size() << " monomial G-clusters\n";
  return 0;
}

int cmd_fan(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  FanOptions opts;
  opts.max_cones = f.max_cones;
  auto fan = enumerate_fan(lattice_ideal(G), G.n(), opts);
  auto names = spec.variable_names();
  json arr = json::array();
  for (const auto& c : fan) {
    if (f.json)
      arr.push_back({{"J", to_json(c.J)}, {"witness_w", to_json(c.cone.witness)}, {"facets", to_json(c.cone.facets)}});
    else
      std::cout << format_vector(c.cone.witness) << "  " << format_monomial_ideal(c.J, names) << '\n';
  }
  if (f.json)
    std::cout << arr.dump(2) << '\n';
  else
    std::cout << fan.size() << " cones\n";
  return 0;
}

int cmd_chart(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto [c, w] = chart_input(f, G);
  auto A = chart_semigroup(c, w, G);
  auto names = spec.variable_names();
  if (f.json) {
    std::cout << json{{"J", to_json(c.J)}, {"witness_w", to_json(w)}, {"gens", to_json(A.gens)}}.dump(2) << '\n';
    return 0;
  }
  std::cout << "J = " << format_monomial_ideal(c.J, names) << "\nwitness w = " << format_vector(w) << "\n"
            << A.gens.size() << " semigroup generators:\n";
  print_vectors(A.gens);
  return 0;
}

int cmd_family(const Flags& f) {
  auto spec = load_group(f);
  CharGroup G(spec);
  auto [c, w] = chart_input(f, G);
  auto F = universal_family(chart_semigroup(c, w, G));
  auto names = spec.variable_names();
  std::vector<std::string> ynames;
  for (std::size_t k = 0; k < F.s; ++k) ynames.push_back("y" + std::to_string(k + 1));
  if (f.json) {
    json b = json::array();
    for (const auto& [u, s] : F.binomials) b.push_back({{"generator", u}, {"standard", s}});
    std::cout << json{{"binomials", b}, {"relations", to_json(F.relations)}, {"complete", F.complete}}.dump(2) << '\n';
    return 0;
  }
  for (std::size_t k = 0; k < F.s; ++k) {
    std::string s = format_monomial(F.binomials[k].second, names);
    std::cout << format_monomial(F.binomials[k].first, names) << " - " << ynames[k] << (s == "1" ? "" : "*" + s)
              << '\n';
  }
  std::cout << "relations among y:\n" << format_binomials(F.relations, ynames);
  if (!F.complete) std::cout << "(saturation budget exhausted; relations are a generating subset of the lattice)\n";
  return 0;
}

int cmd_normality(const Flags& f) {
  auto spec = load_group(f);
  NormalityOptions opts;
  for (const auto& w : f.weights) {
    RatVec v = parse_csv(w, "--weight");
    if (v.size() != spec.n) throw InputError("--weight needs " + std::to_string(spec.n) + " entries");
    opts.weights.push_back(std::move(v));
  }
  if (f.lattice == "M")
    opts.lattice = NormalityLattice::M;
  else if (f.lattice == "ZA")
    opts.lattice = NormalityLattice::ZA;
  else
    throw InputError("--lattice must be M or ZA");
  opts.fan.max_cones = f.max_cones;
  auto rep = check_normality(spec, opts);
  const bool M = opts.lattice == NormalityLattice::M;
  if (f.json) {
    std::cout << to_json(rep).dump(2) << '\n';
  } else {
    auto names = spec.variable_names();
    for (const auto& ch : rep.charts) {
      bool ok = M ? ch.normal_M : ch.normal_ZA;
      std::cout << (ok ? "normal     " : "NONNORMAL  ") << format_monomial_ideal(ch.J.J, names) << '\n';
      for (const auto& m : M ? ch.missing_M : ch.missing_ZA) std::cout << "  missing " << format_vector(m) << '\n';
    }
    std::cout << (rep.overall_normal ? "NORMAL" : "NOT NORMAL") << " (" << rep.charts.size() << " charts, lattice "
              << f.lattice << ", " << (rep.spot_check ? "spot-check" : "full fan") << ")\n";
  }
  return (f.assert_normal && !rep.overall_normal) ? 1 : 0;
}

int cmd_reproduce(const Flags& f) {
  auto res = reproduce(f.suite, f.data);
  for (const auto& l : res.lines) {
    std::cout << (l.pass ? "PASS  " : "FAIL  ") << l.name;
    if (!l.detail.empty()) std::cout << "  [" << l.detail << "]";
    std::cout << '\n';
  }
  std::cout << res.id << ": " << (res.pass() ? "PASS" : "FAIL") << '\n';
  return res.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"McKay quiver, G-constellations and the coherent component of G-Hilb"};
  app.require_subcommand(1, 1);
  Flags f;

  auto group = [&](CLI::App* s) { s->add_option("--group", f.group, "group spec file")->required(); };
  auto weight = [&](CLI::App* s) {
    s->add_option("--weight,--weights", f.weights, "weight vector, comma separated (p or p/q)");
  };
  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", f.json, "JSON output"); };

  std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> verbs;
  auto verb = [&](const char* name, const char* help, int (*fn)(const Flags&)) {
    auto* s = app.add_subcommand(name, help);
    verbs.emplace_back(s, fn);
    return s;
  };

  auto* info = verb("info", "group summary and the lattice M", cmd_info);
  group(info);
  json_flag(info);

  auto* li = verb("lattice-ideal", "reduced Groebner basis of the lattice ideal", cmd_lattice_ideal);
  group(li);
  json_flag(li);

  auto* ini = verb("initial", "initial ideal of the lattice ideal at a weight", cmd_initial);
  group(ini);
  weight(ini);
  json_flag(ini);
  ini->add_flag("--refine-lex", f.refine_lex, "break ties with lex instead of rejecting a non-generic weight");

  auto* con = verb("constellation", "distinguished G-constellation for (theta, w)", cmd_constellation);
  group(con);
  weight(con);
  con->add_option("--theta", f.theta, "stability parameter, comma separated, one per character");
  json_flag(con);

  auto* mem = verb("membership", "decide whether a monomial cluster lies on the coherent component", cmd_membership);
  group(mem);
  mem->add_option("--ideal", f.ideal, "monomial ideal file")->required();
  json_flag(mem);

  auto* cl = verb("clusters", "all monomial G-clusters", cmd_clusters);
  group(cl);
  cl->add_option("--max-nodes", f.max_nodes, "search budget");
  json_flag(cl);

  auto* fan = verb("fan", "Groebner fan of the lattice ideal in the positive orthant", cmd_fan);
  group(fan);
  fan->add_option("--max-cones", f.max_cones, "cone budget");
  json_flag(fan);

  auto* ch = verb("chart", "semigroup generators of a chart", cmd_chart);
  group(ch);
  weight(ch);
  ch->add_option("--ideal", f.ideal, "monomial ideal file");
  json_flag(ch);

  auto* fam = verb("family", "universal family over a chart", cmd_family);
  group(fam);
  weight(fam);
  fam->add_option("--ideal", f.ideal, "monomial ideal file");
  json_flag(fam);

  auto* nor = verb("normality", "normality of the charts of the coherent component", cmd_normality);
  group(nor);
  weight(nor);
  nor->add_option("--lattice", f.lattice, "lattice for saturation: M or ZA")->check(CLI::IsMember({"M", "ZA"}));
  nor->add_option("--max-cones", f.max_cones, "cone budget for the full fan scan");
  nor->add_flag("--assert-normal", f.assert_normal, "exit 1 when not normal");
  json_flag(nor);

  auto* rep = verb("reproduce", "run a bundled reference suite", cmd_reproduce);
  rep->add_option("suite", f.suite, "example-hard | example-reducible | example-nonnormal")
      ->required()
      ->check(CLI::IsMember({"example-hard", "example-reducible", "example-nonnormal"}));
  rep->add_option("--data", f.data, "data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (auto& [s, fn] : verbs)
      if (s->parsed()) return fn(f);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotACluster& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const TiedWeight& e) {
    std::cerr << "error: " << e.what() << " (use --refine-lex to break ties)\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
