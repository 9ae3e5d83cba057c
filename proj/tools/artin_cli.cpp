#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "artin/catalog.hpp"
#include "artin/certificates.hpp"
#include "artin/coxeter.hpp"
#include "artin/errors.hpp"
#include "artin/garside.hpp"
#include "artin/homology.hpp"
#include "artin/words.hpp"

namespace {

using namespace artin;

constexpr int kExitAnswered = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;

/// Mathematical findings exit 1; everything else a caller can fix exits 2.
int exit_code_for(Errc code) {
  switch (code) {
    case Errc::no_realization:
    case Errc::no_compliant_labeling:
      return kExitRefuted;
    default:
      return kExitUsage;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_argument, "cannot open `" + path + "`");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

enum class Format { text, structured };

Format format_from_name(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "structured" || name == "json" || name == "json-like-structured")
    return Format::structured;
  fail(Errc::invalid_argument, "unknown format `" + name + "`");
}

struct Options {
  std::string type;
  std::string graph_file;
  std::string script_file;
  std::vector<std::string> exprs;     // --expr occurrences
  std::string format = "text";
  std::string profile = "quick";
  int max_power = 6;
  std::string n_range = "1..8";
  int max_word_len = 4;
  int genus = 3;
  std::string gens;
};

const std::vector<std::string> kCatalogNames = {"b", "w", "kappa", "delta"};

bool is_catalog_name(const std::string& name) {
  for (const auto& n : kCatalogNames)
    if (n == name) return true;
  return false;
}

/// Everything an expression query needs: the graph, the script bindings, and
/// (on the catalog's own graph) the catalog prelude as fallback.
struct QueryContext {
  CoxeterGraph graph;
  Environment script;
  std::optional<Environment> catalog;  // engaged only on the resolved E6 graph

  GeneratorWord expand_expr(const ExprPtr& expr) const {
    return expand(expr, script, Convention::conjugate_left,
                  catalog ? &*catalog : nullptr);
  }
};

bool same_graph(const CoxeterGraph& a, const CoxeterGraph& b) {
  return a.labels() == b.labels() && a.edges() == b.edges();
}

QueryContext make_query_context(const Options& opt,
                                const std::vector<ExprPtr>& exprs) {
  if (!opt.type.empty() && !opt.graph_file.empty())
    fail(Errc::invalid_argument, "give exactly one of --type and --graph");

  QueryContext ctx{CoxeterGraph{}, Environment{}, std::nullopt};
  if (!opt.script_file.empty()) ctx.script = load_script(read_file(opt.script_file));

  bool references_catalog = false;
  for (const auto& e : exprs)
    for (const auto& name : unresolved_names(e, ctx.script))
      if (is_catalog_name(name)) references_catalog = true;

  if (!opt.type.empty()) {
    ctx.graph = CoxeterGraph::builtin(opt.type);
  } else if (!opt.graph_file.empty()) {
    ctx.graph = CoxeterGraph::parse_text(read_file(opt.graph_file));
  } else if (references_catalog) {
    ctx.graph = resolved_labeling().graph;  // the computations live in A(E6)
  } else {
    fail(Errc::invalid_argument,
         "a graph selector is required: --type NAME or --graph FILE");
  }

  if (same_graph(ctx.graph, resolved_labeling().graph))
    ctx.catalog = catalog_environment();
  return ctx;
}

std::vector<ExprPtr> parse_exprs(const std::vector<std::string>& positional,
                                 const Options& opt, std::size_t arity,
                                 const char* usage) {
  std::vector<std::string> texts = positional;
  texts.insert(texts.end(), opt.exprs.begin(), opt.exprs.end());
  if (texts.size() != arity)
    fail(Errc::invalid_argument,
         std::string("expected ") + usage + ", got " + std::to_string(texts.size()) +
             " expression(s)");
  std::vector<ExprPtr> out;
  for (const auto& t : texts) out.push_back(parse_word(t));
  return out;
}

void print_structured(const nlohmann::ordered_json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// subcommand handlers

int cmd_nf(const Options& opt, const std::vector<std::string>& positional) {
  auto exprs = parse_exprs(positional, opt, 1, "one expression");
  QueryContext ctx = make_query_context(opt, exprs);
  ArtinGroup group(ctx.graph);
  std::string nf = group.to_text(group.normalize(ctx.expand_expr(exprs[0])));
  if (format_from_name(opt.format) == Format::text)
    std::cout << nf << "\n";
  else
    print_structured({{"normal_form", nf}});
  return kExitAnswered;
}

int cmd_eq(const Options& opt, const std::vector<std::string>& positional) {
  auto exprs = parse_exprs(positional, opt, 2, "two expressions");
  QueryContext ctx = make_query_context(opt, exprs);
  ArtinGroup group(ctx.graph);
  bool equal = group.equal(ctx.expand_expr(exprs[0]), ctx.expand_expr(exprs[1]));
  if (format_from_name(opt.format) == Format::text)
    std::cout << (equal ? "equal" : "different") << "\n";
  else
    print_structured({{"equal", equal}});
  return equal ? kExitAnswered : kExitRefuted;
}

int cmd_deg(const Options& opt, const std::vector<std::string>& positional) {
  auto exprs = parse_exprs(positional, opt, 1, "one expression");
  QueryContext ctx = make_query_context(opt, exprs);
  ArtinGroup group(ctx.graph);
  long long degree = group.degree(ctx.expand_expr(exprs[0]));
  if (format_from_name(opt.format) == Format::text)
    std::cout << degree << "\n";
  else
    print_structured({{"degree", degree}});
  return kExitAnswered;
}

int cmd_absorbs(const Options& opt, const std::vector<std::string>& positional) {
  auto exprs = parse_exprs(positional, opt, 2, "two expressions");
  QueryContext ctx = make_query_context(opt, exprs);
  ArtinGroup group(ctx.graph);
  bool absorbs = group.absorbs(ctx.expand_expr(exprs[0]), ctx.expand_expr(exprs[1]));
  if (format_from_name(opt.format) == Format::text)
    std::cout << (absorbs ? "yes" : "no") << "\n";
  else
    print_structured({{"absorbs", absorbs}});
  return absorbs ? kExitAnswered : kExitRefuted;
}

std::vector<int> parse_gens(const std::string& list) {
  std::vector<int> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::invalid_argument, "--gens expects comma-separated labels, got `" + item + "`");
    }
  }
  if (out.empty()) fail(Errc::invalid_argument, "--gens needs at least one label");
  return out;
}

int cmd_parabolic(const Options& opt, const std::vector<std::string>& positional) {
  auto exprs = parse_exprs(positional, opt, 1, "one expression");
  std::vector<int> gens = parse_gens(opt.gens);
  QueryContext ctx = make_query_context(opt, exprs);
  ArtinGroup group(ctx.graph);
  bool member = group.in_standard_parabolic(ctx.expand_expr(exprs[0]), gens);
  if (format_from_name(opt.format) == Format::text)
    std::cout << (member ? "yes" : "no") << "\n";
  else
    print_structured({{"member", member}, {"gens", gens}});
  return member ? kExitAnswered : kExitRefuted;
}

int cmd_roots(const Options& opt) {
  if (opt.type.empty() && opt.graph_file.empty())
    fail(Errc::invalid_argument,
         "a graph selector is required: --type NAME or --graph FILE");
  QueryContext ctx = make_query_context(opt, {});
  RootSystem roots(ctx.graph);
  const auto& all = roots.positive_roots();
  if (format_from_name(opt.format) == Format::text) {
    std::cout << "count: " << all.size() << "\n";
    for (const auto& root : all) {
      for (std::size_t i = 0; i < root.size(); ++i) std::cout << (i ? " " : "") << root[i];
      std::cout << "\n";
    }
  } else {
    nlohmann::ordered_json j;
    j["count"] = all.size();
    j["roots"] = all;
    print_structured(j);
  }
  return kExitAnswered;
}

int cmd_catalog(const Options& opt, const std::string& action) {
  if (action != "dump")
    fail(Errc::invalid_argument, "unknown catalog action `" + action + "` (try `dump`)");
  if (!opt.graph_file.empty())
    fail(Errc::invalid_argument, "the catalog is defined for --type E6 only");
  if (!opt.type.empty() && opt.type != "E6")
    fail(Errc::invalid_argument, "the catalog is defined for --type E6 only");
  LabelingResolution resolution = resolve_labeling();
  if (!resolution.resolved)
    fail(Errc::no_compliant_labeling,
         "no candidate labeling satisfies the defining identities\n" +
             resolution.matrix_text());
  Environment env = catalog_environment();
  if (format_from_name(opt.format) == Format::text) {
    std::cout << "labeling: " << resolution.resolved->name << "\n";
    std::cout << "edges:";
    for (const auto& [a, b] : resolution.resolved->graph.edges())
      std::cout << " " << a << "-" << b;
    std::cout << "\n";
    std::cout << "convention: " << convention_name(resolution.convention) << "\n";
    for (const auto& [name, expr] : env.bindings())
      std::cout << name << " = " << print_word(expr) << "\n";
  } else {
    nlohmann::ordered_json j;
    j["labeling"] = resolution.resolved->name;
    nlohmann::ordered_json edges = nlohmann::ordered_json::array();
    for (const auto& [a, b] : resolution.resolved->graph.edges()) edges.push_back({a, b});
    j["edges"] = edges;
    j["convention"] = convention_name(resolution.convention);
    nlohmann::ordered_json words;
    for (const auto& [name, expr] : env.bindings()) words[name] = print_word(expr);
    j["words"] = words;
    print_structured(j);
  }
  return kExitAnswered;
}

int cmd_rep(const Options& opt, const std::string& action) {
  if (action != "show")
    fail(Errc::invalid_argument, "unknown rep action `" + action + "` (try `show`)");
  if (!opt.type.empty() && !opt.graph_file.empty())
    fail(Errc::invalid_argument, "give exactly one of --type and --graph");
  CoxeterGraph graph;
  std::string graph_name;
  if (!opt.graph_file.empty()) {
    graph = CoxeterGraph::parse_text(read_file(opt.graph_file));
    graph_name = opt.graph_file;
  } else {
    graph_name = opt.type.empty() ? "E6" : opt.type;
    graph = CoxeterGraph::builtin(graph_name);
  }
  SymplecticSpace space(opt.genus);
  HomologyRep rep = find_curve_classes(space, graph);
  if (format_from_name(opt.format) == Format::text) {
    std::cout << "graph: " << graph_name << "\n";
    std::cout << "genus: " << opt.genus << "\n";
    for (int i = 0; i < graph.rank(); ++i) {
      std::cout << "class a" << graph.label_of(i) << ":";
      for (auto c : rep.classes[i].v) std::cout << " " << c;
      std::cout << "\n";
    }
    for (int i = 0; i < graph.rank(); ++i) {
      std::cout << "transvection a" << graph.label_of(i) << ":\n";
      std::cout << matrix_to_string(rep.twist[i]) << "\n";
    }
  } else {
    nlohmann::ordered_json j;
    j["graph"] = graph_name;
    j["genus"] = opt.genus;
    nlohmann::ordered_json classes;
    nlohmann::ordered_json twists;
    for (int i = 0; i < graph.rank(); ++i) {
      std::string key = "a" + std::to_string(graph.label_of(i));
      classes[key] = rep.classes[i].v;
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      for (int r = 0; r < rep.twist[i].n; ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < rep.twist[i].n; ++c)
          row.push_back(rep.twist[i].at(r, c).str());
        rows.push_back(row);
      }
      twists[key] = rows;
    }
    j["classes"] = classes;
    j["transvections"] = twists;
    print_structured(j);
  }
  return kExitAnswered;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      std::size_t used = 0;
      int single = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {single, single};
    }
    std::size_t used_a = 0, used_b = 0;
    std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    int low = std::stoi(a, &used_a);
    int high = std::stoi(b, &used_b);
    if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
    return {low, high};
  } catch (const std::exception&) {
    fail(Errc::invalid_argument, "--n-range expects A..B, got `" + text + "`");
  }
}

int cmd_verify(const Options& opt, const std::string& target) {
  if (!opt.graph_file.empty())
    fail(Errc::invalid_argument, "verification pipelines are defined for --type E6 only");
  if (!opt.type.empty() && opt.type != "E6")
    fail(Errc::invalid_argument, "verification pipelines are defined for --type E6 only");

  VerificationContext ctx = VerificationContext::create();
  std::vector<CertificateReport> reports;
  if (target == "wajnryb") {
    reports.push_back(verify_wajnryb(ctx));
  } else if (target == "normalizer") {
    reports.push_back(verify_normalizer(ctx));
  } else if (target == "torsion") {
    reports.push_back(verify_torsion(ctx, opt.max_power));
  } else if (target == "free") {
    auto [low, high] = parse_range(opt.n_range);
    reports.push_back(
        freeness_certificate(ctx, FreenessParams{low, high, opt.max_word_len}));
  } else if (target == "all") {
    reports = run_all(ctx, profile_from_name(opt.profile));
  } else {
    fail(Errc::invalid_argument,
         "unknown verify target `" + target +
             "` (try wajnryb, normalizer, torsion, free, all)");
  }

  if (format_from_name(opt.format) == Format::text)
    std::cout << reports_text(reports);
  else
    print_structured(reports_json(reports));
  return all_verified(reports) ? kExitAnswered : kExitRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Garside-theoretic engine for simply-laced spherical Artin groups"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--type", opt.type, "Built-in graph name (A1.., D4.., E6, E7, E8)");
  app.add_option("--graph", opt.graph_file, "Graph file: `vertices: n` then `i j` edge lines");
  app.add_option("--script", opt.script_file, "Word-language script with let-bindings");
  app.add_option("--expr", opt.exprs, "Expression argument (alternative to positional)");
  app.add_option("--format", opt.format, "Output format: text | json-like-structured");
  app.add_option("--profile", opt.profile, "Verification profile: quick | full");
  app.add_option("--max-power", opt.max_power, "Torsion check bound (verify torsion)");
  app.add_option("--n-range", opt.n_range, "Conjugator powers A..B (verify free)");
  app.add_option("--max-word-len", opt.max_word_len, "Word length bound (verify free)");

  std::vector<std::string> nf_args, eq_args, deg_args, absorbs_args, parabolic_args;
  std::string catalog_action, rep_action, verify_target;

  CLI::App* nf = app.add_subcommand("nf", "Left normal form of an expression");
  nf->add_option("expr", nf_args, "Expression");
  CLI::App* eq = app.add_subcommand("eq", "Decide equality of two expressions");
  eq->add_option("expr", eq_args, "Expressions");
  CLI::App* deg = app.add_subcommand("deg", "Degree (exponent sum) of an expression");
  deg->add_option("expr", deg_args, "Expression");
  CLI::App* absorbs = app.add_subcommand("absorbs", "Absorption test for two expressions");
  absorbs->add_option("expr", absorbs_args, "Expressions");
  CLI::App* parabolic =
      app.add_subcommand("parabolic", "Standard-parabolic membership test");
  parabolic->add_option("expr", parabolic_args, "Expression");
  parabolic->add_option("--gens", opt.gens, "Comma-separated generator labels")->required();
  app.add_subcommand("roots", "Positive roots of the graph's root system");
  CLI::App* catalog = app.add_subcommand("catalog", "Named-element catalog");
  catalog->add_option("action", catalog_action, "dump")->required();
  CLI::App* rep = app.add_subcommand("rep", "Homological representation");
  rep->add_option("action", rep_action, "show")->required();
  rep->add_option("--genus", opt.genus, "Surface genus (default 3)");
  CLI::App* verify = app.add_subcommand("verify", "Run a verification pipeline");
  verify->add_option("target", verify_target, "wajnryb | normalizer | torsion | free | all")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (nf->parsed()) return cmd_nf(opt, nf_args);
    if (eq->parsed()) return cmd_eq(opt, eq_args);
    if (deg->parsed()) return cmd_deg(opt, deg_args);
    if (absorbs->parsed()) return cmd_absorbs(opt, absorbs_args);
    if (parabolic->parsed()) return cmd_parabolic(opt, parabolic_args);
    if (app.get_subcommand("roots")->parsed()) return cmd_roots(opt);
    if (catalog->parsed()) return cmd_catalog(opt, catalog_action);
    if (rep->parsed()) return cmd_rep(opt, rep_action);
    if (verify->parsed()) return cmd_verify(opt, verify_target);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
