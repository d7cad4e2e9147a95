// anaprop: analogical proportions over finite structures, graphs, (N,S) and
// the ray graph. Exit codes: 0 ok, 1 suite failures, 2 usage or parse
// error, 3 I/O error, 4 unknown element.
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "anaprop/harness.hpp"
#include "anaprop/numbers.hpp"
#include "anaprop/parser.hpp"
#include "json.hpp"

using namespace anaprop;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kSuiteFailed = 1, kUsage = 2, kIo = 3, kUnknownElement = 4 };

struct Settings {
  std::optional<int> atoms, depth, quantifiers;
  std::optional<std::string> kinds;
  std::optional<bool> constants;
  std::optional<std::string> fragment;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string config;
  bool json = false;
};

// Values from the config file fill whatever the flags left unset.
void apply_config(Settings& s) {
  if (s.config.empty()) return;
  std::ifstream in(s.config);
  if (!in) throw std::ios_base::failure("cannot read config '" + s.config + "'");
  const auto kv = harness::parse_config(in);
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    return it->second;
  };
  auto as_int = [](const std::string& key, const std::string& v) {
    try {
      std::size_t used = 0;
      const long long n = std::stoll(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw std::invalid_argument("config: " + key + " is not an integer: '" + v + "'");
    }
  };
  auto as_bool = [](const std::string& key, const std::string& v) {
    if (v == "true" || v == "on" || v == "1") return true;
    if (v == "false" || v == "off" || v == "0") return false;
    throw std::invalid_argument("config: " + key + " is not a boolean: '" + v + "'");
  };
  if (auto v = get("bounds.max_atoms"); v && !s.atoms) s.atoms = as_int("max_atoms", *v);
  if (auto v = get("bounds.max_term_depth"); v && !s.depth) s.depth = as_int("max_term_depth", *v);
  if (auto v = get("bounds.max_quantifiers"); v && !s.quantifiers)
    s.quantifiers = as_int("max_quantifiers", *v);
  if (auto v = get("bounds.quantifier_kinds"); v && !s.kinds) s.kinds = *v;
  if (auto v = get("bounds.allow_constants"); v && !s.constants)
    s.constants = as_bool("allow_constants", *v);
  if (auto v = get("fragment"); v && !s.fragment) s.fragment = *v;
  if (auto v = get("seed"); v && !s.seed) s.seed = as_int("seed", *v);
  if (auto v = get("trials"); v && !s.trials) s.trials = as_int("trials", *v);
  if (auto v = get("suite.seed"); v && !s.seed) s.seed = as_int("seed", *v);
  if (auto v = get("suite.trials"); v && !s.trials) s.trials = as_int("trials", *v);
}

bool bounds_given(const Settings& s) {
  return s.atoms || s.depth || s.quantifiers || s.kinds || s.constants;
}

Bounds bounds_of(const Settings& s) {
  Bounds b;
  if (s.atoms) b.max_atoms = *s.atoms;
  if (s.depth) b.max_term_depth = *s.depth;
  if (s.quantifiers) b.max_quantifiers = *s.quantifiers;
  if (s.constants) b.allow_constants = *s.constants;
  if (s.kinds) {
    const auto& k = *s.kinds;
    if (k == "exists,forall" || k == "forall,exists" || k == "both") {
      b.allow_exists = b.allow_forall = true;
    } else if (k == "exists") {
      b.allow_forall = false;
    } else if (k == "forall") {
      b.allow_exists = false;
    } else if (k == "none" || k.empty()) {
      b.allow_exists = b.allow_forall = false;
    } else {
      throw std::invalid_argument("unknown quantifier kinds '" + k + "'");
    }
  }
  if (b.max_atoms < 0 || b.max_term_depth < 0 || b.max_quantifiers < 0)
    throw std::invalid_argument("bounds must be non-negative");
  return b;
}

FragmentSpec fragment_of(const Settings& s) {
  const std::string f = s.fragment.value_or("cformula");
  if (f == "cformula") return FragmentSpec::cformula(bounds_of(s));
  if (f == "equational") return FragmentSpec::equational(bounds_of(s));
  if (f == "path") return FragmentSpec::path();
  throw std::invalid_argument("unknown fragment '" + f + "'");
}

Json bounds_json(const Bounds& b) {
  return {{"max_atoms", b.max_atoms},
          {"max_term_depth", b.max_term_depth},
          {"max_quantifiers", b.max_quantifiers},
          {"quantifier_kinds", quantifier_kinds(b)},
          {"allow_constants", b.allow_constants}};
}

const FiniteStructure& pick(const std::vector<FiniteStructure>& all, const std::string& name,
                            std::size_t fallback) {
  if (all.empty()) throw std::invalid_argument("no structures in file");
  if (name.empty()) return all.at(std::min(fallback, all.size() - 1));
  for (const auto& s : all)
    if (s.name() == name) return s;
  throw std::invalid_argument("no structure named '" + name + "'");
}

std::string arrow_text(const std::string& a, const std::string& b, const std::string& c,
                       const std::string& d, const char* sep = "->") {
  return a + sep + b + " :. " + c + sep + d;
}

// ---------------------------------------------------------------------------
// check over c-formulas or equations

Json verdict_json(const Verdict& v, const JustificationIndex& idx, const FiniteStructure& target) {
  Json shared = Json::array();
  for (auto i : v.shared) shared.push_back(to_string(idx.formulas[i]));
  Json j{{"holds", v.holds}, {"mode", to_string(v.mode)}, {"bounds", bounds_json(v.bounds)},
         {"shared", shared}};
  if (v.blocking)
    j["blocking"] = {{"dPrime", target.element_name(v.blocking->d_prime)},
                     {"formula", to_string(idx.formulas[v.blocking->formula])}};
  else
    j["blocking"] = nullptr;
  return j;
}

void print_verdict(std::ostream& out, const std::string& label, const Verdict& v,
                   const JustificationIndex& idx, const FiniteStructure& target) {
  out << label << ": " << (v.holds ? "holds" : "fails") << " (" << to_string(v.mode) << ")\n";
  for (auto i : v.shared) out << "    shared: " << to_string(idx.formulas[i]) << '\n';
  if (v.blocking)
    out << "    blocked by d' = " << target.element_name(v.blocking->d_prime) << " via "
        << to_string(idx.formulas[v.blocking->formula]) << '\n';
}

int check_formulas(const Settings& s, const FiniteStructure& A, const FiniteStructure& B,
                   const std::array<std::string, 4>& args) {
  const FragmentSpec frag = fragment_of(s);
  const Element a = A.element(args[0]), b = A.element(args[1]);
  const Element c = B.element(args[2]), d = B.element(args[3]);
  const auto idx = build_index(A, B, frag);
  const auto p = proportion_holds(idx, a, b, c, d);

  // The arrow reported at top level is the first failing one, else the first.
  std::size_t lead = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (!p.arrows[i].holds) {
      lead = i;
      break;
    }
  const std::array<const FiniteStructure*, 4> targets{&B, &B, &A, &A};
  const std::array<std::string, 4> labels{
      "(" + A.name() + "," + B.name() + ") " + arrow_text(args[0], args[1], args[2], args[3]),
      "(" + A.name() + "," + B.name() + ") " + arrow_text(args[1], args[0], args[3], args[2]),
      "(" + B.name() + "," + A.name() + ") " + arrow_text(args[2], args[3], args[0], args[1]),
      "(" + B.name() + "," + A.name() + ") " + arrow_text(args[3], args[2], args[1], args[0])};

  if (s.json) {
    Json j = verdict_json(p.arrows[lead], idx, *targets[lead]);
    j["holds"] = p.holds;
    j["mode"] = to_string(p.mode());
    j["fragment"] = to_string(frag.kind);
    Json arrows = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      Json aj = verdict_json(p.arrows[i], idx, *targets[i]);
      aj["arrow"] = labels[i];
      arrows.push_back(aj);
    }
    j["arrows"] = arrows;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << args[0] << ':' << args[1] << "::" << args[2] << ':' << args[3] << ' '
              << (p.holds ? "holds" : "fails") << " (" << to_string(p.mode()) << ") at bounds "
              << to_string(p.bounds) << ", fragment " << to_string(frag.kind) << '\n';
    for (std::size_t i = 0; i < 4; ++i)
      print_verdict(std::cout, "  " + labels[i], p.arrows[i], idx, *targets[i]);
  }
  return kOk;
}

// ---------------------------------------------------------------------------
// Path fragment

Json path_verdict_json(const PathVerdict& v, const UndirectedGraph& target) {
  Json j{{"holds", v.holds},
         {"mode", to_string(v.kase)},
         {"bounds", "path"},
         {"shared", v.shared.empty() ? Json::array() : Json::array({to_string(v.shared)})}};
  if (v.blocking)
    j["blocking"] = {{"dPrime", target.name(static_cast<Element>(*v.blocking))},
                     {"formula", nullptr}};
  else
    j["blocking"] = nullptr;
  return j;
}

int check_path(const Settings& s, const FiniteStructure& A, const FiniteStructure& B,
               const std::array<std::string, 4>& args) {
  const auto G = UndirectedGraph::from_structure(A);
  const auto H = UndirectedGraph::from_structure(B);
  const Element a = G.vertex(args[0]), b = G.vertex(args[1]);
  const Element c = H.vertex(args[2]), d = H.vertex(args[3]);
  const PathContext ctx(G, H);
  const auto p = ctx.proportion(a, b, c, d);
  const std::array<const UndirectedGraph*, 4> targets{&H, &H, &G, &G};
  const std::array<std::string, 4> labels{
      "(" + A.name() + "," + B.name() + ") " + arrow_text(args[0], args[1], args[2], args[3], "--"),
      "(" + A.name() + "," + B.name() + ") " + arrow_text(args[1], args[0], args[3], args[2], "--"),
      "(" + B.name() + "," + A.name() + ") " + arrow_text(args[2], args[3], args[0], args[1], "--"),
      "(" + B.name() + "," + A.name() + ") " + arrow_text(args[3], args[2], args[1], args[0], "--")};
  std::size_t lead = 0;
  for (std::size_t i = 0; i < 4; ++i)
    if (!p.arrows[i].holds) {
      lead = i;
      break;
    }
  if (s.json) {
    Json j = path_verdict_json(p.arrows[lead], *targets[lead]);
    j["holds"] = p.holds;
    j["fragment"] = "path";
    j["trivial"] = to_string(ctx.trivial());
    j["two_arrow"] = p.two_arrow;
    Json arrows = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      Json aj = path_verdict_json(p.arrows[i], *targets[i]);
      aj["arrow"] = labels[i];
      arrows.push_back(aj);
    }
    j["arrows"] = arrows;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << args[0] << ':' << args[1] << "::" << args[2] << ':' << args[3] << ' '
              << (p.holds ? "holds" : "fails") << " (path fragment, trivial lengths "
              << to_string(ctx.trivial()) << ")\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& v = p.arrows[i];
      std::cout << "  " << labels[i] << ": " << (v.holds ? "holds" : "fails") << " ("
                << to_string(v.kase) << "), shared " << to_string(v.shared) << '\n';
      if (v.blocking)
        std::cout << "    blocked by " << targets[i]->name(static_cast<Element>(*v.blocking))
                  << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int justify(const Settings& s, const FiniteStructure& A, const std::string& an,
            const std::string& bn) {
  const FragmentSpec frag = fragment_of(s);
  if (frag.kind == FragmentSpec::Kind::Path)
    throw std::invalid_argument("justify lists formulas; use 'graph type' for path types");
  const Element a = A.element(an), b = A.element(bn);
  const auto idx = build_index(A, A, frag);
  std::vector<std::size_t> nontrivial, trivial;
  for (auto i : justification_type(idx, Side::A, a, b))
    (idx.trivial.test(i) ? trivial : nontrivial).push_back(i);

  auto ext_text = [&](std::size_t i) {
    std::string out;
    for (Element u = 0; u < A.size(); ++u)
      for (Element v = 0; v < A.size(); ++v)
        if (idx.ext_a[i].contains(u, v))
          out += (out.empty() ? "" : " ") + ("(" + A.element_name(u) + "," + A.element_name(v) + ")");
    return out;
  };
  if (s.json) {
    auto list = [&](const std::vector<std::size_t>& ids) {
      Json arr = Json::array();
      for (auto i : ids) arr.push_back({{"formula", to_string(idx.formulas[i])},
                                        {"extension", ext_text(i)}});
      return arr;
    };
    Json j{{"arrow", an + "->" + bn},
           {"bounds", bounds_json(frag.bounds)},
           {"fragment", to_string(frag.kind)},
           {"justifications", list(nontrivial)},
           {"trivial", list(trivial)}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "justifications of " << an << "->" << bn << " in " << A.name() << " at bounds "
              << to_string(frag.bounds) << ":\n";
    for (auto i : nontrivial)
      std::cout << "  " << to_string(idx.formulas[i]) << "    {" << ext_text(i) << "}\n";
    std::cout << "trivial:\n";
    for (auto i : trivial) std::cout << "  " << to_string(idx.formulas[i]) << '\n';
  }
  return kOk;
}

std::int64_t nat(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a natural number: '" + text + "'");
  }
  if (used != text.size() || v < 0) throw std::invalid_argument("not a natural number: '" + text + "'");
  return v;
}

int nat_s_check(const Settings& s, const std::array<std::string, 4>& args) {
  const std::int64_t a = nat(args[0]), b = nat(args[1]), c = nat(args[2]), d = nat(args[3]);
  const auto rep = e_proportion_report(a, b, c, d);
  const std::array<std::pair<std::int64_t, std::int64_t>, 4> sources{
      std::pair{a, b}, std::pair{b, a}, std::pair{c, d}, std::pair{d, c}};
  if (s.json) {
    Json arrows = Json::array();
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& v = rep.arrows[i];
      Json aj{{"holds", v.holds},
              {"shared", v.shared ? Json(e_family(*v.shared)) : Json(nullptr)},
              {"blocking", v.blocking ? Json(*v.blocking) : Json(nullptr)}};
      arrows.push_back(aj);
    }
    const auto desc = e_type(a, b);
    const auto [k, l] = e_witness_exponents(desc, 0);
    Json j{{"holds", rep.holds},
           {"fragment", "equational (N,S)"},
           {"family", e_family(desc)},
           {"witness", {{"k", k}, {"l", l}, {"m", 0}, {"formula", to_string(e_witness(desc, 0))}}},
           {"arrows", arrows}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << a << ':' << b << "::" << c << ':' << d << ' ' << (rep.holds ? "holds" : "fails")
              << " in (N,S), e-fragment\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& v = rep.arrows[i];
      const auto desc = e_type(sources[i].first, sources[i].second);
      std::cout << "  arrow " << i << ": " << (v.holds ? "holds" : "fails") << ", family "
                << e_family(desc);
      if (v.shared) {
        const auto [k, l] = e_witness_exponents(*v.shared, 0);
        std::cout << ", witness m=0: k=" << k << " l=" << l << "  " << to_string(e_witness(*v.shared, 0));
      }
      if (v.blocking) std::cout << ", blocked by d' = " << *v.blocking;
      std::cout << '\n';
    }
  }
  return kOk;
}

int ray_check(const Settings& s, const std::array<std::string, 4>& args) {
  const std::uint64_t a = nat(args[0]), b = nat(args[1]), c = nat(args[2]), d = nat(args[3]);
  const bool closed = gn_proportion(a, b, c, d);
  const auto engine = gn_proportion_engine(a, b, c, d);
  if (s.json) {
    Json arrows = Json::array();
    for (const auto& v : engine.arrows)
      arrows.push_back({{"holds", v.holds},
                        {"mode", to_string(v.kase)},
                        {"shared", to_string(v.shared)},
                        {"blocking", v.blocking ? Json(*v.blocking) : Json(nullptr)}});
    std::cout << Json{{"holds", engine.holds}, {"closed_form", closed}, {"arrows", arrows}}.dump(2)
              << '\n';
  } else {
    std::cout << a << ':' << b << "::" << c << ':' << d << ' ' << (engine.holds ? "holds" : "fails")
              << " in the ray graph (closed form |a-b| = |c-d|: " << (closed ? "holds" : "fails")
              << ")\n";
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& v = engine.arrows[i];
      std::cout << "  arrow " << i << ": " << (v.holds ? "holds" : "fails") << " ("
                << to_string(v.kase) << "), shared " << to_string(v.shared);
      if (v.blocking) std::cout << ", blocked by " << *v.blocking;
      std::cout << '\n';
    }
  }
  return kOk;
}

int ray_target(const Settings& s, const std::string& an, const std::string& bn,
               const FiniteStructure& hs, const std::string& cn, const std::string& dn) {
  const std::uint64_t a = nat(an), b = nat(bn);
  const auto H = UndirectedGraph::from_structure(hs);
  const Element c = H.vertex(cn), d = H.vertex(dn);
  const auto engine = gn_target_engine(a, b, H, c, d);
  const bool walk = gn_target_proportion(a, b, H, c, d);
  const bool shortest = gn_target_shortest_walk(a, b, H, c, d);
  if (s.json) {
    Json arrows = Json::array();
    for (const auto& v : engine.arrows)
      arrows.push_back({{"holds", v.holds},
                        {"mode", to_string(v.kase)},
                        {"shared", to_string(v.shared)},
                        {"blocking", v.blocking ? Json(*v.blocking) : Json(nullptr)}});
    std::cout << Json{{"holds", engine.holds},
                      {"walk_of_length_distance", walk},
                      {"shortest_walk_form", shortest},
                      {"arrows", arrows}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << a << ':' << b << "::" << cn << ':' << dn << ' ' << (engine.holds ? "holds" : "fails")
              << " for (ray, " << hs.name() << ")\n"
              << "  walk of length |a-b| from " << cn << " to " << dn << ": "
              << (walk ? "yes" : "no") << "\n  shortest walk of that parity has length |a-b|: "
              << (shortest ? "yes" : "no") << '\n';
  }
  return kOk;
}

int run_suite_cmd(const Settings& s, const std::string& name, bool list) {
  if (list) {
    for (const auto& n : harness::suite_names()) std::cout << n << '\n';
    return kOk;
  }
  harness::SuiteOptions opts;
  if (s.seed) opts.seed = *s.seed;
  if (s.trials) opts.trials = *s.trials;
  if (bounds_given(s)) opts.bounds = bounds_of(s);
  const auto r = harness::run_suite(name, opts);
  std::cout << (s.json ? harness::to_json(r) + "\n" : harness::to_text(r));
  return r.passed() ? kOk : kSuiteFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analogical proportions over finite structures and graphs"};
  app.require_subcommand(1);
  Settings s;
  app.add_option("--bounds-atoms", s.atoms, "maximum atoms per formula");
  app.add_option("--bounds-depth", s.depth, "maximum term depth");
  app.add_option("--bounds-quantifiers", s.quantifiers, "maximum quantifiers");
  app.add_option("--quantifier-kinds", s.kinds, "exists,forall | exists | forall | none");
  app.add_option("--allow-constants", s.constants, "use signature constants in atoms");
  app.add_option("--fragment", s.fragment, "cformula | equational | path")
      ->check(CLI::IsMember({"cformula", "equational", "path"}));
  app.add_flag("--json", s.json, "print JSON");
  app.add_option("--seed", s.seed, "suite seed");
  app.add_option("--trials", s.trials, "suite trials (0 keeps the suite default)");
  app.add_option("--config", s.config, "INI file: [bounds] max_atoms, ... and seed, fragment");

  std::string file, name_a, name_b, structure;
  std::array<std::string, 4> args;
  auto four = [&](CLI::App* cmd) {
    cmd->add_option("a", args[0])->required();
    cmd->add_option("b", args[1])->required();
    cmd->add_option("c", args[2])->required();
    cmd->add_option("d", args[3])->required();
  };

  auto* check = app.add_subcommand("check", "decide a:b::c:d");
  check->add_option("file", file, "structure file")->required();
  four(check);
  check->add_option("--source", name_a, "source structure (default: first)");
  check->add_option("--target", name_b, "target structure (default: second, else first)");

  auto* just = app.add_subcommand("justify", "list the justifications of a->b");
  just->add_option("file", file)->required();
  just->add_option("a", args[0])->required();
  just->add_option("b", args[1])->required();
  just->add_option("--structure", structure);

  std::string suite_name;
  bool list = false;
  auto* suite = app.add_subcommand("suite", "run a property suite");
  suite->add_option("name", suite_name);
  suite->add_flag("--list", list, "list suite names");

  auto* graph = app.add_subcommand("graph", "path fragment over graph files");
  graph->require_subcommand(1);
  auto* gcheck = graph->add_subcommand("check", "decide a:b::c:d with path justifications");
  gcheck->add_option("file", file)->required();
  four(gcheck);
  gcheck->add_option("--source", name_a);
  gcheck->add_option("--target", name_b);
  auto* gtype = graph->add_subcommand("type", "walk lengths between a and b");
  gtype->add_option("file", file)->required();
  gtype->add_option("a", args[0])->required();
  gtype->add_option("b", args[1])->required();
  gtype->add_option("--structure", structure);

  auto* nats = app.add_subcommand("nat-s", "(N,S) with equational justifications");
  nats->require_subcommand(1);
  auto* ncheck = nats->add_subcommand("check", "decide a:b::c:d in (N,S)");
  four(ncheck);

  auto* ray = app.add_subcommand("ray", "the ray graph on N");
  ray->require_subcommand(1);
  auto* rcheck = ray->add_subcommand("check", "decide a:b::c:d in the ray graph");
  four(rcheck);

  auto* rtarget = app.add_subcommand("ray-target", "decide (ray, H) a:b::c:d");
  rtarget->add_option("a", args[0])->required();
  rtarget->add_option("b", args[1])->required();
  rtarget->add_option("file", file)->required();
  rtarget->add_option("c", args[2])->required();
  rtarget->add_option("d", args[3])->required();
  rtarget->add_option("--structure", structure);

  // Global flags may follow the subcommand.
  for (auto* sub : {check, just, suite, graph, gcheck, gtype, nats, ncheck, ray, rcheck, rtarget})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_config(s);
    if (*check) {
      const auto all = load_structures(file);
      const auto& A = pick(all, name_a, 0);
      const auto& B = pick(all, name_b, name_a.empty() ? 1 : 0);
      if (fragment_of(s).kind == FragmentSpec::Kind::Path) return check_path(s, A, B, args);
      return check_formulas(s, A, B, args);
    }
    if (*just) return justify(s, pick(load_structures(file), structure, 0), args[0], args[1]);
    if (*suite) {
      if (!list && suite_name.empty()) throw std::invalid_argument("suite name required");
      return run_suite_cmd(s, suite_name, list);
    }
    if (*gcheck) {
      const auto all = load_structures(file);
      return check_path(s, pick(all, name_a, 0), pick(all, name_b, name_a.empty() ? 1 : 0), args);
    }
    if (*gtype) {
      const auto g = UndirectedGraph::from_structure(pick(load_structures(file), structure, 0));
      const auto w = walk_length_set(g, g.vertex(args[0]), g.vertex(args[1]));
      if (s.json)
        std::cout << Json{{"a", args[0]}, {"b", args[1]}, {"lengths", to_string(w)},
                          {"self_zero", w.self_zero},
                          {"min_even", w.min_even == kInfinity ? Json(nullptr) : Json(w.min_even)},
                          {"min_odd", w.min_odd == kInfinity ? Json(nullptr) : Json(w.min_odd)}}
                         .dump(2)
                  << '\n';
      else
        std::cout << args[0] << " -- " << args[1] << ": " << to_string(w) << '\n';
      return kOk;
    }
    if (*ncheck) return nat_s_check(s, args);
    if (*rcheck) return ray_check(s, args);
    if (*rtarget)
      return ray_target(s, args[0], args[1], pick(load_structures(file), structure, 0), args[2],
                        args[3]);
  } catch (const UnknownElementError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUnknownElement;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
