#include "momentrr/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <random>

#include "CLI11.hpp"

#include "momentrr/chern.hpp"
#include "momentrr/coxeter.hpp"
#include "momentrr/io.hpp"

namespace momentrr {

namespace {

using io::Json;

constexpr std::uint64_t kDefaultSeed = 20240611;

struct Result {
  Json json;
  int code = 0;
};

struct Options {
  std::string output;
  // bruhat
  std::string type;
  std::size_t rank = 0;
  std::vector<std::size_t> parabolic;
  std::string emit = "graph";
  std::size_t simple = 1;
  // inputs
  std::string kind;
  std::string input, graph, target, relation, morphism, monodromy, bundle, element;
  std::vector<std::string> elements;
  std::string q;
  // parameters
  std::string flavor;
  std::string convention = "exact";
  Coord degree = 0;
  bool unsafe = false;
  std::size_t random = 0;
  std::uint64_t seed = kDefaultSeed;
};

std::vector<std::size_t> zero_based(const std::vector<std::size_t> &one_based, std::size_t rank) {
  std::vector<std::size_t> out;
  for (std::size_t i : one_based) {
    if (i < 1 || i > rank)
      throw SchemaError("simple root index " + std::to_string(i) + " is outside 1.." +
                        std::to_string(rank));
    out.push_back(i - 1);
  }
  return out;
}

Result ok(Json j) { return {std::move(j), 0}; }

Result report_result(const ValidationReport &r) { return {io::to_json(r), r.ok() ? 0 : 1}; }

Result run_bruhat(const Options &o) {
  const RootSystem rs = build_root_system(CartanMatrix::of_type(o.type, o.rank));
  const Parabolic p(rs, zero_based(o.parabolic, o.rank));
  GraphPtr g = bruhat_graph(rs);
  if (o.emit == "graph") return ok(io::to_json(*g));
  if (o.emit == "parabolic") return ok(io::to_json(*parabolic_graph(rs, p)));
  if (o.emit == "relation") return ok(io::to_json(coset_relation(rs, *g, p), *g));
  if (o.emit == "monodromy") return ok(io::to_json(weyl_monodromy(rs, *g), *g));
  if (o.emit == "bundle") return ok(io::to_json(weyl_fibration(rs, p)));
  if (o.emit == "matching") {
    const auto i = zero_based({o.simple}, o.rank).front();
    return ok(io::to_json(right_multiplication(rs, *g, i), *g));
  }
  throw SchemaError("unknown --emit value '" + o.emit + "'");
}

// The graph an element lives on: --graph if given, else the total graph of
// --bundle.
GraphPtr element_graph(const Options &o) {
  if (!o.graph.empty()) return io::graph_from_json(io::read_file(o.graph));
  if (!o.bundle.empty()) return io::bundle_from_json(io::read_file(o.bundle)).total_ptr();
  throw SchemaError("an element needs --graph or --bundle");
}

Result run_validate(const Options &o) {
  const Json in = io::read_file(o.input);
  if (o.kind == "graph") return report_result(validate_graph(*io::graph_from_json(in)));
  if (o.kind == "bundle") {
    const FiberBundle b = io::bundle_from_json(in);
    ValidationReport r = validate_graph(b.total());
    r.merge(check_relation(b.relation(), b.total()));
    r.merge(check_fibration(b));
    r.merge(check_compatibility(b));
    r.merge(check_regularity(b));
    return report_result(r);
  }
  if (o.graph.empty()) throw SchemaError("--kind " + o.kind + " needs --graph");
  const GraphPtr g = io::graph_from_json(io::read_file(o.graph));
  if (o.kind == "relation") return report_result(check_relation(io::relation_from_json(in, *g), *g));
  if (o.kind == "monodromy")
    return report_result(check_monodromy(io::monodromy_from_json(in, *g), *g));
  if (o.kind == "matching")
    return report_result(check_matching(io::matching_from_json(in, *g), *g));
  if (o.kind == "morphism") {
    if (o.target.empty()) throw SchemaError("--kind morphism needs --target");
    const GraphPtr t = io::graph_from_json(io::read_file(o.target));
    return report_result(validate_morphism(io::morphism_from_json(in, *g, *t), *g, *t));
  }
  if (o.kind == "element") {
    const io::AnyElement e = io::element_from_json(in, g);
    if (e.flavor == "mult") return report_result(check_membership(e.mult));
    if (e.flavor == "add") return report_result(check_membership(e.add));
    return report_result(check_membership(e.trunc));
  }
  throw SchemaError("unknown --kind '" + o.kind + "'");
}

Result run_quotient(const Options &o) {
  const GraphPtr g = io::graph_from_json(io::read_file(o.graph));
  const EquivalenceRelation r = io::relation_from_json(io::read_file(o.relation), *g);
  const Quotient q = build_quotient(*g, r);
  return ok({{"graph", io::to_json(*q.graph)},
             {"projection", io::to_json(q.projection, *g, *q.graph)}});
}

Result run_pullback(const Options &o) {
  const GraphPtr g = io::graph_from_json(io::read_file(o.graph));
  const GraphPtr t = io::graph_from_json(io::read_file(o.target));
  const GraphMorphism f = io::morphism_from_json(io::read_file(o.morphism), *g, *t);
  const Monodromy xi = o.monodromy.empty()
                           ? Monodromy::trivial(*g)
                           : io::monodromy_from_json(io::read_file(o.monodromy), *g);
  const io::AnyElement z = io::element_from_json(io::read_file(o.element), t);
  if (z.flavor == "mult") return ok(io::to_json(twisted_pullback(z.mult, f, xi, g)));
  if (z.flavor == "add") return ok(io::to_json(twisted_pullback(z.add, f, xi, g)));
  return ok(io::to_json(twisted_pullback(z.trunc, f, xi, g)));
}

Result run_pushforward(const Options &o) {
  const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
  const io::AnyElement z = io::element_from_json(io::read_file(o.element), b.total_ptr());
  PushOptions opt;
  opt.unsafe = o.unsafe;
  const std::string flavor = o.flavor.empty() ? (z.flavor == "mult" ? "mult" : "add") : o.flavor;
  if (flavor == "mult") {
    if (z.flavor != "mult") throw SchemaError("--flavor mult needs a mult element");
    return ok(io::to_json(pushforward_mult(b, z.mult, opt)));
  }
  if (flavor != "add") throw SchemaError("unknown --flavor '" + flavor + "'");
  if (z.flavor == "add") return ok(io::to_json(pushforward_add(b, z.add, opt)));
  if (z.flavor == "trunc") return ok(io::to_json(pushforward_add(b, z.trunc, opt)));
  throw SchemaError("--flavor add needs an add or trunc element");
}

Result run_chern(const Options &o) {
  const MultElement z = io::mult_from_json(io::read_file(o.element), element_graph(o));
  return ok(io::to_json(chern_localized(z, o.degree)));
}

Result run_todd(const Options &o) {
  const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
  return ok(io::to_json(todd_genus(b, o.degree, parse_convention(o.convention))));
}

Result run_rr(const Options &o) {
  const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
  const MultElement z = io::mult_from_json(io::read_file(o.element), b.total_ptr());
  if (o.convention == "all") {
    Json all = Json::array();
    for (ToddConvention c : kAllConventions) all.push_back(io::to_json(rr_check(b, z, o.degree, c)));
    return ok(all);
  }
  return ok(io::to_json(rr_check(b, z, o.degree, parse_convention(o.convention))));
}

Result run_demazure(const Options &o) {
  const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
  const MultElement z = io::mult_from_json(io::read_file(o.element), b.total_ptr());
  PushOptions opt;
  opt.unsafe = o.unsafe;
  return ok(io::to_json(push_pull(b, z, opt)));
}

LaurentPolynomial random_laurent(std::mt19937_64 &rng, std::size_t rank) {
  std::uniform_int_distribution<Coord> exp(-2, 2), coeff(-3, 3);
  LaurentPolynomial p(rank);
  for (int t = 0; t < 2; ++t) {
    LatticeVector e(rank);
    for (std::size_t i = 0; i < rank; ++i) e[i] = exp(rng);
    Coord c = 0;
    while (c == 0) c = coeff(rng);
    p.add_term(e, c);
  }
  return p;
}

Result run_report(const Options &o) {
  const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
  std::vector<MultElement> elements;
  std::vector<std::string> names;
  for (const auto &path : o.elements) {
    elements.push_back(io::mult_from_json(io::read_file(path), b.total_ptr()));
    names.push_back(path);
  }
  std::mt19937_64 rng(o.seed);
  for (std::size_t n = 0; n < o.random; ++n) {
    MultElement z = characteristic_map(random_laurent(rng, b.total().rank()), b.xi(), b.total_ptr());
    if (n % 2 == 1)
      z *= characteristic_map(random_laurent(rng, b.total().rank()), b.xi(), b.total_ptr());
    elements.push_back(std::move(z));
    names.push_back("random:" + std::to_string(n));
  }
  const auto rows = rr_report(b, elements, o.degree);
  Json table = Json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    Json row{{"element", names[i]}};
    for (const auto &r : rows)
      if (r.element == i) row[convention_name(r.convention)] = r.agree_through_degree;
    table.push_back(row);
  }
  return ok({{"degree", o.degree}, {"seed", o.seed}, {"rows", table}});
}

Result run_charmap(const Options &o) {
  GraphPtr g;
  Monodromy xi;
  if (!o.bundle.empty()) {
    const FiberBundle b = io::bundle_from_json(io::read_file(o.bundle));
    g = b.total_ptr();
    xi = b.xi();
  } else {
    if (o.graph.empty()) throw SchemaError("charmap needs --bundle or --graph");
    g = io::graph_from_json(io::read_file(o.graph));
    xi = o.monodromy.empty() ? Monodromy::trivial(*g)
                             : io::monodromy_from_json(io::read_file(o.monodromy), *g);
  }
  Json q;
  try {
    q = Json::parse(o.q);
  } catch (const Json::exception &e) {
    throw SchemaError(std::string("--q is not valid JSON: ") + e.what());
  }
  return ok(io::to_json(characteristic_map(io::laurent_from_json(q, g->rank()), xi, g)));
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Moment graph push-forwards and Riemann-Roch verification", "momentrr"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::function<Result(const Options &)> action;
  app.add_option("-o,--output", o.output, "Write the JSON result to this file");

  auto add_input = [&](CLI::App *sub, const char *name, std::string &target, const char *help,
                       bool required) {
    auto *opt = sub->add_option(name, target, help)->check(CLI::ExistingFile);
    if (required) opt->required();
  };
  auto add_degree = [&](CLI::App *sub) {
    sub->add_option("-d,--degree", o.degree, "Truncation degree D")
        ->required()
        ->check(CLI::Range(0, 64));
  };
  auto add_convention = [&](CLI::App *sub, bool allow_all) {
    std::vector<std::string> choices{"exact", "paper_stated", "sign_flipped"};
    if (allow_all) choices.push_back("all");
    sub->add_option("-c,--convention", o.convention, "Todd convention")
        ->check(CLI::IsMember(choices, CLI::ignore_case));
  };

  auto *bruhat = app.add_subcommand("bruhat", "Emit Bruhat graphs, cosets and Weyl bundles");
  bruhat->add_option("-t,--type", o.type, "Cartan type: A, B, C, D or G")->required();
  bruhat->add_option("-r,--rank", o.rank, "Rank")->required();
  bruhat->add_option("-p,--parabolic", o.parabolic, "Simple roots in Theta (1-based)");
  bruhat->add_option("-e,--emit", o.emit, "What to emit")
      ->check(CLI::IsMember({"graph", "parabolic", "relation", "monodromy", "bundle", "matching"}));
  bruhat->add_option("-s,--simple", o.simple, "Simple reflection for --emit matching (1-based)");
  bruhat->callback([&] { action = run_bruhat; });

  auto *validate = app.add_subcommand("validate", "Check the axioms of a JSON object");
  validate->add_option("-k,--kind", o.kind, "Object kind")
      ->required()
      ->check(CLI::IsMember(
          {"graph", "relation", "morphism", "monodromy", "matching", "bundle", "element"}));
  add_input(validate, "-i,--input", o.input, "Object to validate", true);
  add_input(validate, "-g,--graph", o.graph, "Graph the object lives on", false);
  add_input(validate, "--target", o.target, "Target graph of a morphism", false);
  validate->callback([&] { action = run_validate; });

  auto *quotient = app.add_subcommand("quotient", "Quotient graph by a relation");
  add_input(quotient, "-g,--graph", o.graph, "Graph", true);
  add_input(quotient, "--relation", o.relation, "Equivalence relation", true);
  quotient->callback([&] { action = run_quotient; });

  auto *pullback = app.add_subcommand("pullback", "Twisted pull-back along a morphism");
  add_input(pullback, "-g,--graph", o.graph, "Source graph", true);
  add_input(pullback, "--target", o.target, "Target graph", true);
  add_input(pullback, "-m,--morphism", o.morphism, "Morphism source -> target", true);
  add_input(pullback, "--monodromy", o.monodromy, "Monodromy on the source (default trivial)",
            false);
  add_input(pullback, "-z,--element", o.element, "Element on the target", true);
  pullback->callback([&] { action = run_pullback; });

  auto *push = app.add_subcommand("pushforward", "Push-forward along a bundle");
  add_input(push, "-b,--bundle", o.bundle, "Fibre bundle", true);
  add_input(push, "-z,--element", o.element, "Element on the total graph", true);
  push->add_option("-f,--flavor", o.flavor, "mult or add")
      ->check(CLI::IsMember({"mult", "add"}));
  push->add_flag("--unsafe", o.unsafe, "Skip precondition checks");
  push->callback([&] { action = run_pushforward; });

  auto *chern = app.add_subcommand("chern", "Localized Chern character");
  add_input(chern, "-z,--element", o.element, "Multiplicative element", true);
  add_input(chern, "-g,--graph", o.graph, "Graph of the element", false);
  add_input(chern, "-b,--bundle", o.bundle, "Bundle whose total graph carries the element",
            false);
  add_degree(chern);
  chern->callback([&] { action = run_chern; });

  auto *todd = app.add_subcommand("todd", "Todd genus of a bundle");
  add_input(todd, "-b,--bundle", o.bundle, "Fibre bundle", true);
  add_degree(todd);
  add_convention(todd, false);
  todd->callback([&] { action = run_todd; });

  auto *rr = app.add_subcommand("rr", "Riemann-Roch check for one element");
  add_input(rr, "-b,--bundle", o.bundle, "Fibre bundle", true);
  add_input(rr, "-z,--element", o.element, "Multiplicative element", true);
  add_degree(rr);
  add_convention(rr, true);
  rr->callback([&] { action = run_rr; });

  auto *demazure = app.add_subcommand("demazure", "Push-pull operator of a bundle");
  add_input(demazure, "-b,--bundle", o.bundle, "Fibre bundle", true);
  add_input(demazure, "-z,--element", o.element, "Multiplicative element", true);
  demazure->add_flag("--unsafe", o.unsafe, "Skip precondition checks");
  demazure->callback([&] { action = run_demazure; });

  auto *report = app.add_subcommand("report", "Riemann-Roch agreement table");
  add_input(report, "-b,--bundle", o.bundle, "Fibre bundle", true);
  report->add_option("-z,--elements", o.elements, "Multiplicative elements")
      ->check(CLI::ExistingFile);
  report->add_option("-n,--random", o.random, "Number of random characteristic-map elements");
  report->add_option("--seed", o.seed, "Seed for --random");
  add_degree(report);
  report->callback([&] { action = run_report; });

  auto *charmap = app.add_subcommand("charmap", "Characteristic map of a Laurent polynomial");
  add_input(charmap, "-b,--bundle", o.bundle, "Bundle (graph and monodromy)", false);
  add_input(charmap, "-g,--graph", o.graph, "Graph", false);
  add_input(charmap, "--monodromy", o.monodromy, "Monodromy on --graph", false);
  charmap->add_option("-q,--q", o.q, "Laurent polynomial as JSON terms")->required();
  charmap->callback([&] { action = run_charmap; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  Result result;
  try {
    result = action(o);
  } catch (const ValidationError &e) {
    err << "validation error: " << e.what() << "\n";
    return 1;
  } catch (const MathError &e) {
    err << "mathematical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  const std::string text = result.json.dump(2) + "\n";
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write '" << o.output << "'\n";
      return 3;
    }
  }
  if (result.code == 1) err << "validation failed\n";
  return result.code;
}

} // namespace momentrr
