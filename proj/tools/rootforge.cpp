#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "rootforge/abstract_roots.hpp"
#include "rootforge/errors.hpp"
#include "rootforge/io.hpp"
#include "rootforge/orders.hpp"
#include "rootforge/real_roots.hpp"
#include "rootforge/twisting.hpp"

using namespace rootforge;
using io::json;

namespace {

enum Exit { kOk = 0, kPropertyFailure = 1, kInputError = 2, kCapError = 3 };

struct Options {
  std::string group, type, word, system, delta, spec, twist_set, dot, datum, out;
  std::size_t depth = 16;
  std::size_t max_len = 12;
  std::size_t window = 0;
  double tolerance = kTolerance;
  std::size_t cap = 0;
  std::string format = "json";
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw InputError("cannot write " + o.out);
  f << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw InputError("cannot write " + path);
  f << text;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (o.format == a) return;
  throw InputError("format " + o.format + " is not available for this command");
}

// The group comes from --group, --type, or a "group" member of the main input document.
CoxeterGroup load_group(const Options& o, const json* doc = nullptr) {
  if (!o.group.empty()) return CoxeterGroup(io::read_coxeter_matrix(io::read_file(o.group)));
  if (!o.type.empty()) return CoxeterGroup(CoxeterMatrix::of_type(o.type));
  if (doc && doc->is_object() && doc->contains("group")) return CoxeterGroup(io::read_coxeter_matrix(doc->at("group")));
  throw InputError("no group given (use --group, --type or a \"group\" member)");
}

json read_required(const std::string& path, const std::string& flag) {
  if (path.empty()) throw InputError(flag + " is required");
  return io::read_file(path);
}

WindowPtr make_window(const CoxeterGroup& g, const Options& o, const json& doc) {
  auto gp = std::make_shared<const CoxeterGroup>(g);
  if (g.is_finite()) return Window::full(gp);
  const std::size_t length = o.window ? o.window : io::read_window_length(doc, 8);
  return std::make_shared<const Window>(gp, length);
}

int group_validate(const Options& o) {
  const json doc = !o.group.empty() ? io::read_file(o.group) : json{{"type", o.type}};
  if (o.group.empty() && o.type.empty()) throw InputError("--group or --type is required");
  json report;
  try {
    CoxeterGroup g(io::read_coxeter_matrix(doc));
    json comps = json::array();
    for (const auto& c : irreducible_components(g.matrix())) {
      json names = json::array();
      for (int i : c) names.push_back(g.matrix().name(i));
      comps.push_back(names);
    }
    report = {{"valid", true}, {"rank", g.rank()}, {"finite", g.is_finite()}, {"components", comps},
              {"matrix", io::to_json(g.matrix())}};
  } catch (const InputError& e) {
    report = {{"valid", false}, {"failures", {e.what()}}};
  }
  emit(o, io::dump(report));
  return report["valid"].get<bool>() ? kOk : kPropertyFailure;
}

int group_enum(const Options& o) {
  require_format(o, {"json", "tsv"});
  const CoxeterGroup g = load_group(o);
  const auto elements = enumerate_elements(g, o.max_len);
  // Complete when nothing longer exists.
  const bool complete = enumerate_elements(g, o.max_len + 1).size() == elements.size();
  if (o.format == "tsv") {
    std::ostringstream out;
    out << "length\tword\n";
    for (const auto& e : elements) out << e.length() << '\t' << g.format(e) << '\n';
    emit(o, out.str());
    return kOk;
  }
  json list = json::array();
  for (const auto& e : elements) list.push_back({{"word", g.format(e)}, {"length", e.length()}});
  emit(o, io::dump({{"max_len", o.max_len}, {"count", elements.size()}, {"complete", complete}, {"elements", list}}));
  return kOk;
}

BasedRootDatum load_datum(const Options& o) {
  if (!o.datum.empty()) return io::read_datum(io::read_file(o.datum));
  return BasedRootDatum::standard(load_group(o).matrix());
}

int roots_gen(const Options& o) {
  require_format(o, {"json", "tsv"});
  const BasedRootDatum b = load_datum(o);
  const auto report = validate_datum(b, o.tolerance);
  if (!report.valid) throw InputError("invalid datum: " + report.failures.front());
  const RootSlice slice = generate_roots(b, o.depth, default_element_cap(), o.tolerance);
  emit(o, o.format == "tsv" ? io::to_tsv(slice) : io::dump(io::to_json(slice)));
  return kOk;
}

int cocycle_cmd(const Options& o) {
  const CoxeterGroup g = load_group(o);
  const Element w = g.parse(o.word);
  json n = json::array();
  for (const auto& t : cocycle(g, w)) n.push_back(g.format(t));
  emit(o, io::dump({{"word", g.format(w)}, {"length", w.length()}, {"N", n}, {"certainty", "EXACT"}}));
  return kOk;
}

QuasiPositiveSystem load_system(const Options& o, const CoxeterGroup& g, const json& doc) {
  const WindowPtr window = make_window(g, o, doc);
  const auto roots = io::read_roots(g, doc);
  return QuasiPositiveSystem::from_roots(window, RootSet(roots.begin(), roots.end()));
}

json root_list(const CoxeterGroup& g, const RootSet& roots) {
  return io::to_json(g, std::vector<AbstractRoot>(roots.begin(), roots.end()));
}

int qps_simple(const Options& o) {
  const json doc = read_required(o.system, "--system");
  const CoxeterGroup g = load_group(o, &doc);
  const auto p = load_system(o, g, doc);
  const auto simple = simple_roots_of(p);
  const auto gen = is_generative(p);
  Certainty c = simple.certainty == Certainty::Exact && gen.certainty == Certainty::Exact ? Certainty::Exact
                                                                                           : Certainty::WindowOnly;
  emit(o, io::dump({{"simple", root_list(g, simple.roots)}, {"generative", gen.generative}, {"certainty", to_string(c)}}));
  return kOk;
}

int qps_biclosed(const Options& o) {
  const json doc = read_required(o.system, "--system");
  const CoxeterGroup g = load_group(o, &doc);
  const auto p = load_system(o, g, doc);
  const bool biclosed = is_biclosed(p);
  emit(o, io::dump({{"biclosed", biclosed}, {"certainty", to_string(p.window().certainty())}}));
  return biclosed ? kOk : kPropertyFailure;
}

int qps_conjugator(const Options& o) {
  const json doc = read_required(o.system, "--system");
  const CoxeterGroup g = load_group(o, &doc);
  const auto p = load_system(o, g, doc);
  const std::string certainty = to_string(p.window().certainty());
  std::string reason;
  if (!is_biclosed(p)) {
    reason = "system is not biclosed";
  } else if (!is_generative(p).generative) {
    reason = "system is not generative";
  } else {
    try {
      const Conjugator c = find_conjugator(p);
      emit(o, io::dump({{"conjugate", true}, {"w", g.format(c.w)}, {"epsilon", c.epsilon}, {"certainty", certainty}}));
      return kOk;
    } catch (const InputError& e) {
      reason = e.what();
    }
  }
  emit(o, io::dump({{"conjugate", false}, {"reason", reason}, {"certainty", certainty}}));
  return kPropertyFailure;
}

int basis_check(const Options& o) {
  const json doc = read_required(o.delta, "--delta");
  const CoxeterGroup g = load_group(o, &doc);
  const WindowPtr window = make_window(g, o, doc);
  const auto delta = io::read_roots(g, doc);
  const BasisReport r = is_abstract_root_basis(window, delta);
  json report = {{"basis", r.basis}, {"reason", r.reason}, {"certainty", to_string(r.certainty)},
                 {"window", window->max_length()}};
  emit(o, io::dump(report));
  return r.basis ? kOk : kPropertyFailure;
}

int twist_cmd(const Options& o, const std::string& action) {
  const json doc = read_required(o.spec, "--spec");
  const CoxeterGroup g = load_group(o, &doc);
  const TwistSpec spec = io::read_twist_spec(g.matrix(), doc);
  const TwistReport v = validate_twist(g, spec);
  if (action == "validate" || !v.valid) {
    json report = {{"valid", v.valid}, {"failures", v.failures}};
    if (v.w_k) report["w_K"] = g.format(*v.w_k);
    emit(o, io::dump(report));
    return v.valid ? kOk : kPropertyFailure;
  }
  const TwistResult t = apply_twist(g, spec);
  if (action == "apply") {
    emit(o, io::dump(io::to_json(g, t)));
    return kOk;
  }
  const SignSolution s = twist_sign_solve(g, spec);
  json signs = json::array();
  for (std::size_t i = 0; s.feasible && i < s.signs.size(); ++i)
    signs.push_back({{"generator", t.names[i]}, {"sign", s.signs[i]}});
  json report = {{"feasible", s.feasible}, {"signs", signs}};
  if (!s.feasible) report["conflict"] = s.conflict;
  emit(o, io::dump(report));
  return s.feasible ? kOk : kPropertyFailure;
}

int order_cmd(const Options& o, bool bruhat) {
  require_format(o, {"json", "dot"});
  const CoxeterGroup g = load_group(o);
  const CoxeterCocycle p(g);
  OrderRelation rel;
  if (bruhat) {
    ReflectionSet A;
    if (!o.twist_set.empty()) A = io::read_twist_set(g, io::read_file(o.twist_set));
    rel = bruhat_order(p, p.mask_of(A));
  } else {
    rel = weak_order(p);
  }
  const std::string name = bruhat ? "bruhat" : "weak";
  if (!o.dot.empty()) write_file(o.dot, to_dot(p, rel, name));
  emit(o, o.format == "dot" ? to_dot(p, rel, name) : io::dump(io::to_json(p, rel)));
  return rel.partial_order ? kOk : kPropertyFailure;
}

int datum_lint(const Options& o) {
  const BasedRootDatum b = io::read_datum(read_required(o.datum, "--datum"));
  const ValidationReport v = validate_datum(b, o.tolerance);
  json report = {{"valid", v.valid}, {"failures", v.failures}};
  if (v.valid) {
    const DatumProperties props = datum_properties(b, o.tolerance);
    report["coxeter_matrix"] = io::to_json(coxeter_matrix_of(b, o.tolerance));
    report["reduced"] = props.reduced;
    report["symmetrizable"] = props.symmetrizable;
    if (props.rescaling) report["rescaling"] = *props.rescaling;
  }
  emit(o, io::dump(report));
  return v.valid ? kOk : kPropertyFailure;
}

void add_options(CLI::App* app, Options& o) {
  app->add_option("--group", o.group, "Coxeter matrix JSON file");
  app->add_option("--type", o.type, "builtin type such as A3, B~2 or I2(inf)");
  app->add_option("--word", o.word, "group element as a word");
  app->add_option("--system", o.system, "quasi-positive system JSON file");
  app->add_option("--delta", o.delta, "candidate root basis JSON file");
  app->add_option("--spec", o.spec, "twist spec JSON file");
  app->add_option("--twist-set", o.twist_set, "twist set A JSON file");
  app->add_option("--dot", o.dot, "also write the Hasse diagram as DOT to this path");
  app->add_option("--datum", o.datum, "NGCM or based root datum JSON file");
  app->add_option("--depth", o.depth, "root depth bound")->capture_default_str();
  app->add_option("--max-len", o.max_len, "element length bound")->capture_default_str();
  app->add_option("--window", o.window, "reflection window length for infinite groups (0: input or 8)");
  app->add_option("--tolerance", o.tolerance, "numerical tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app->add_option("--cap", o.cap, "element cap (default 200000 or ROOTFORGE_CAP_ELEMENTS)");
  app->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "tsv", "dot"}))->capture_default_str();
  app->add_option("--out", o.out, "output path (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rootforge: Coxeter groups, root systems and reflection orders"};
  app.require_subcommand(1);
  Options o;
  std::function<int()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::function<int()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_options(sub, o);
    sub->callback([&action, fn]() { action = fn; });
  };
  auto branch = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    return sub;
  };

  CLI::App* group = branch("group", "Coxeter matrices and elements");
  leaf(group, "validate", "check a Coxeter matrix", [&] { return group_validate(o); });
  leaf(group, "enum", "list elements up to --max-len", [&] { return group_enum(o); });
  CLI::App* roots = branch("roots", "real roots of a based root datum");
  leaf(roots, "gen", "generate roots up to --depth", [&] { return roots_gen(o); });
  leaf(&app, "cocycle", "reflection cocycle N(w) of --word", [&] { return cocycle_cmd(o); });
  CLI::App* qps = branch("qps", "quasi-positive systems");
  leaf(qps, "simple", "simple roots and generativity", [&] { return qps_simple(o); });
  leaf(qps, "biclosed", "biclosedness", [&] { return qps_biclosed(o); });
  leaf(qps, "conjugator", "w and epsilon with P = epsilon w(T+)", [&] { return qps_conjugator(o); });
  CLI::App* basis = branch("basis", "abstract root bases");
  leaf(basis, "check", "check --delta", [&] { return basis_check(o); });
  CLI::App* twist = branch("twist", "diagram twists");
  leaf(twist, "validate", "check --spec", [&] { return twist_cmd(o, "validate"); });
  leaf(twist, "apply", "twisted generators and matrix", [&] { return twist_cmd(o, "apply"); });
  leaf(twist, "signs", "sign pattern making the twisted generators simple", [&] { return twist_cmd(o, "signs"); });
  CLI::App* order = branch("order", "weak and twisted Bruhat orders");
  leaf(order, "weak", "weak order", [&] { return order_cmd(o, false); });
  leaf(order, "bruhat", "twisted Bruhat order for --twist-set", [&] { return order_cmd(o, true); });
  CLI::App* datum = branch("datum", "based root data");
  leaf(datum, "lint", "validate --datum", [&] { return datum_lint(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  if (o.cap > 0) setenv("ROOTFORGE_CAP_ELEMENTS", std::to_string(o.cap).c_str(), 1);
  try {
    return action();
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ResourceCapError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return kCapError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
}
