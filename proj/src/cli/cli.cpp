#include "knotinv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "knotinv/error.hpp"
#include "knotinv/hatops.hpp"
#include "knotinv/vassiliev.hpp"

namespace knotinv::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top_level(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      if (!part.empty()) parts.push_back(part);
      part.clear();
    } else {
      part += c;
    }
  }
  if (!part.empty()) parts.push_back(part);
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::InvalidArgument, "expected an integer for " + what + ", got '" + text + "'");
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  for (const auto& p : split(text, ',')) out.push_back(parse_int(p, what));
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "jones") return Family::Jones;
  if (name == "conway") return Family::Conway;
  if (name == "alexander") return Family::Alexander;
  if (name == "q") return Family::Q;
  throw Error(ErrorKind::InvalidArgument, "unknown polynomial family '" + name + "'");
}

std::vector<NamedKnot> knot_list(const std::string& text) {
  std::vector<NamedKnot> out;
  for (const auto& name : split(text, ',')) out.push_back(default_table().named(name));
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "empty knot list");
  return out;
}

std::string scalar_text(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

void render(const json& j, const std::string& prefix, std::ostream& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix + key;
    if (value.is_object()) {
      render(value, name + ".", out);
    } else if (value.is_array()) {
      bool flat = std::none_of(value.begin(), value.end(), [](const json& e) { return e.is_structured(); });
      if (flat) {
        out << name << ":";
        for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : " ") << scalar_text(value[i]);
        out << "\n";
      } else {
        for (std::size_t i = 0; i < value.size(); ++i) {
          const std::string item = name + "[" + std::to_string(i) + "]";
          if (value[i].is_object()) render(value[i], item + ".", out);
          else render(json{{"", value[i]}}, item, out);
        }
      }
    } else {
      out << name << ": " << scalar_text(value) << "\n";
    }
  }
}

struct Context {
  bool as_json = false;
  std::size_t max_crossings = SkeinOptions{}.max_crossings;
  double tol = kDefaultTolerance;
};

struct Args {
  std::string knot, which = "homfly", inv, base, pattern, point, orders, witnesses, bar, star, patterns, invs,
      knots, points, family, at = "1", g;
  int imax = 8, degree = 0, order = 0, count = 25;
  std::size_t budget = kDefaultGridBudget;
  std::uint64_t seed = 1;
};

json cmd_poly(const Args& a, SkeinEngine& engine) {
  const LinkDiagram k = default_table().resolve(a.knot);
  std::string text;
  if (a.which == "homfly") text = to_string(engine.homfly(k));
  else if (a.which == "kauffman") text = to_string(engine.kauffman(k));
  else if (a.which == "jones") text = to_string(jones(k, engine));
  else if (a.which == "conway") text = to_string(conway(k, engine));
  else if (a.which == "alexander") text = to_string(alexander(k, engine));
  else if (a.which == "q") text = to_string(qpoly(k, engine));
  else throw Error(ErrorKind::InvalidArgument, "unknown polynomial '" + a.which + "'");
  return {{"command", "poly"}, {"knot", a.knot}, {"which", a.which}, {"polynomial", text}};
}

json cmd_eval(const Args& a, SkeinEngine& engine) {
  auto v = parse_descriptor(a.inv);
  Scalar value = eval_invariant(v, default_table().resolve(a.knot), engine);
  return {{"command", "eval"}, {"invariant", to_string(v)}, {"knot", a.knot}, {"value", to_json(value)}};
}

json cmd_growth(const Args& a, const Context& ctx, SkeinEngine& engine) {
  auto v = parse_descriptor(a.inv);
  auto report = growth_sequence(v, default_table().named(a.base), default_table().named(a.pattern), a.imax, a.degree,
                                ctx.tol, engine);
  json j = to_json(report);
  j["command"] = "growth";
  return j;
}

json cmd_law(const Args& a, const Context& ctx, SkeinEngine& engine) {
  auto report = growth_law_check(parse_family(a.family), default_table().named(a.pattern), parse_scalar(a.at),
                                 a.order, a.imax, ctx.tol, engine);
  json j = to_json(report);
  j["command"] = "law";
  return j;
}

json cmd_criterion(const Args& a, const Context& ctx, SkeinEngine& engine) {
  std::optional<Scalar> b, y;
  for (const auto& part : split(a.point, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::SyntaxError, "point component '" + part + "' is not of the form name=EXPR");
    const std::string name = part.substr(0, eq);
    const Scalar value = parse_scalar(part.substr(eq + 1));
    if (name == "a") b = value;
    else if (name == "z") y = value;
    else throw Error(ErrorKind::SyntaxError, "unknown point coordinate '" + name + "'");
  }
  if (!b || !y) throw Error(ErrorKind::SyntaxError, "point needs both a=EXPR and z=EXPR");
  auto orders = parse_ints(a.orders, "--orders");
  if (orders.size() != 2) throw Error(ErrorKind::InvalidArgument, "--orders takes m,n");
  auto witnesses = a.witnesses.empty() ? default_witnesses() : knot_list(a.witnesses);
  json j = to_json(criterion_point(*b, *y, orders[0], orders[1], witnesses, ctx.tol, engine));
  j["command"] = "criterion";
  return j;
}

json cmd_taylor(const Args& a, const Context& ctx, SkeinEngine& engine) {
  std::vector<Scalar> g;
  for (const auto& part : split(a.g, ',')) g.push_back(parse_scalar(part));
  json j = to_json(taylor_criterion(g, parse_family(a.family), ctx.tol, engine));
  j["command"] = "taylor";
  return j;
}

json cmd_locus(const Args& a, SkeinEngine& engine) {
  json j = to_json(homfly_locus(default_table().named(a.knot), engine));
  j["command"] = "locus";
  return j;
}

json cmd_hat(const Args& a, SkeinEngine& engine) {
  auto v = parse_descriptor(a.inv);
  const auto k = default_table().named(a.knot);
  const int modes = !a.bar.empty() + !a.star.empty() + !a.patterns.empty();
  if (modes > 1) throw Error(ErrorKind::InvalidArgument, "choose one of --bar, --star, --patterns");
  HatResult r;
  if (!a.bar.empty()) r = bar_op(v, a.degree, default_table().named(a.bar), k, engine);
  else if (!a.star.empty()) r = star_op(v, a.degree, default_table().named(a.star), k, engine);
  else {
    std::vector<NamedKnot> patterns;
    if (!a.patterns.empty()) patterns = knot_list(a.patterns);
    r = hat_op(v, a.degree, k, patterns, a.budget, engine);
  }
  json j = to_json(r);
  j["command"] = "hat";
  return j;
}

json cmd_rank(const Args& a, SkeinEngine& engine) {
  std::vector<DescriptorPtr> invs;
  for (const auto& text : split_top_level(a.invs, ';')) invs.push_back(parse_descriptor(text));
  json j = to_json(rank_report(invs, knot_list(a.knots), engine));
  j["command"] = "rank";
  return j;
}

json cmd_singular(const Args& a, SkeinEngine& engine) {
  auto v = parse_descriptor(a.inv);
  auto points = parse_ints(a.points, "--points");
  SingularDiagram s(default_table().resolve(a.knot), std::set<int>(points.begin(), points.end()));
  Scalar value = eval_singular(v, s, engine);
  return {{"command", "singular"},
          {"invariant", to_string(v)},
          {"knot", a.knot},
          {"points", std::vector<int>(s.double_points().begin(), s.double_points().end())},
          {"value", to_json(value)}};
}

json cmd_bound(const Args& a, SkeinEngine& engine) {
  auto v = parse_descriptor(a.inv);
  auto samples = singular_samples(a.degree + 1, a.count, a.seed);
  json j = to_json(degree_bound_test(v, a.degree, samples, engine));
  j["command"] = "bound";
  j["invariant"] = to_string(v);
  return j;
}

void print_error(std::ostream& out, const std::string& kind, const std::string& message) {
  out << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
}

}  // namespace

std::string render_text(const json& payload) {
  const std::string command = payload.value("command", "");
  if (command == "poly") return payload.at("polynomial").get<std::string>() + "\n";
  if (command == "eval" || command == "singular") return payload.at("value").get<std::string>() + "\n";
  json body = payload;
  body.erase("command");
  std::ostringstream out;
  render(body, "", out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knot polynomial and finite-type invariant toolkit", "knotinv"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  Args a;
  app.add_flag("--json", ctx.as_json, "Emit JSON");
  app.add_option("--max-crossings", ctx.max_crossings, "Largest diagram block the skein recursion branches on");
  app.add_option("--tol", ctx.tol, "Tolerance for approximate scalars");

  auto* poly = app.add_subcommand("poly", "Knot polynomial");
  poly->add_option("--knot", a.knot)->required();
  poly->add_option("--which", a.which)->check(CLI::IsMember({"homfly", "kauffman", "jones", "conway", "alexander", "q"}));

  auto* eval = app.add_subcommand("eval", "Evaluate an invariant descriptor on a knot");
  eval->add_option("--inv", a.inv)->required();
  eval->add_option("--knot", a.knot)->required();

  auto* growth = app.add_subcommand("growth", "Values on K # L^i and their finite-difference degree");
  growth->add_option("--inv", a.inv)->required();
  growth->add_option("--base", a.base)->required();
  growth->add_option("--pattern", a.pattern)->required();
  growth->add_option("--imax", a.imax);
  growth->add_option("--degree", a.degree)->required();

  auto* law = app.add_subcommand("law", "Exponential growth law of a polynomial derivative on L^i");
  law->add_option("--family", a.family)->required();
  law->add_option("--pattern", a.pattern)->required();
  law->add_option("--at", a.at);
  law->add_option("--order", a.order);
  law->add_option("--imax", a.imax);

  auto* criterion = app.add_subcommand("criterion", "Finite-type test for HOMFLY derivatives at a point");
  criterion->add_option("--point", a.point)->required();
  criterion->add_option("--orders", a.orders)->required();
  criterion->add_option("--witnesses", a.witnesses);

  auto* taylor = app.add_subcommand("taylor", "Coefficients of a polynomial composed with a reparametrization");
  taylor->add_option("--family", a.family)->required();
  taylor->add_option("--g", a.g, "Taylor coefficients g(a), g'(a), g''(a)/2, ...")->required();

  auto* locus = app.add_subcommand("locus", "Roots where the HOMFLY criterion cannot fire");
  locus->add_option("--knot", a.knot)->required();

  auto* hat = app.add_subcommand("hat", "Interpolate an invariant over connected-sum grids");
  hat->add_option("--inv", a.inv)->required();
  hat->add_option("--degree", a.degree)->required();
  hat->add_option("--knot", a.knot)->required();
  hat->add_option("--bar", a.bar);
  hat->add_option("--star", a.star);
  hat->add_option("--patterns", a.patterns);
  hat->add_option("--budget", a.budget);

  auto* rank = app.add_subcommand("rank", "Rank of the evaluation matrix of invariants on knots");
  rank->add_option("--invs", a.invs)->required();
  rank->add_option("--knots", a.knots)->required();

  auto* singular = app.add_subcommand("singular", "Evaluate an invariant on a singular knot");
  singular->add_option("--inv", a.inv)->required();
  singular->add_option("--knot", a.knot)->required();
  singular->add_option("--points", a.points)->required();

  auto* bound = app.add_subcommand("bound", "Check vanishing on random singular knots");
  bound->add_option("--inv", a.inv)->required();
  bound->add_option("--degree", a.degree)->required();
  bound->add_option("--count", a.count);
  bound->add_option("--seed", a.seed);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(out, "Usage", e.what());
    return kExitUsage;
  }

  try {
    SkeinOptions options;
    options.max_crossings = ctx.max_crossings;
    SkeinEngine engine(options);
    json payload;
    if (*poly) payload = cmd_poly(a, engine);
    else if (*eval) payload = cmd_eval(a, engine);
    else if (*growth) payload = cmd_growth(a, ctx, engine);
    else if (*law) payload = cmd_law(a, ctx, engine);
    else if (*criterion) payload = cmd_criterion(a, ctx, engine);
    else if (*taylor) payload = cmd_taylor(a, ctx, engine);
    else if (*locus) payload = cmd_locus(a, engine);
    else if (*hat) payload = cmd_hat(a, engine);
    else if (*rank) payload = cmd_rank(a, engine);
    else if (*singular) payload = cmd_singular(a, engine);
    else payload = cmd_bound(a, engine);
    if (ctx.as_json) out << payload.dump() << "\n";
    else out << render_text(payload);
    return kExitOk;
  } catch (const Error& e) {
    print_error(out, std::string(to_string(e.kind())), e.what());
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    print_error(out, "Internal", e.what());
    return kExitDomain;
  }
}

}  // namespace knotinv::cli
