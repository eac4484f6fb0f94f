// sesq: command-line front end for the checkers and builders.
#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sesq/cartesian.hpp"
#include "sesq/constructions.hpp"
#include "sesq/error.hpp"
#include "sesq/naturality.hpp"
#include "sesq/naturalize.hpp"
#include "sesq/pseudocat.hpp"
#include "sesq/specio.hpp"

namespace {

using namespace sesq;
using json = nlohmann::json;

constexpr int kClean = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

struct Output {
  bool json_lines = false;
  std::size_t max_findings = 100;
  bool color = false;
  std::size_t emitted = 0;
  std::size_t suppressed = 0;

  std::string paint(const std::string& s, const char* code) const {
    return color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
  }

  void finding(const Finding& f) {
    if (emitted >= max_findings) {
      ++suppressed;
      return;
    }
    ++emitted;
    if (json_lines) {
      std::cout << json{{"kind", f.kind}, {"axiom", f.axiom}, {"witnesses", f.witnesses}, {"detail", f.detail}}.dump()
                << "\n";
      return;
    }
    std::cout << paint(f.kind, "31") << " " << f.axiom;
    if (!f.witnesses.empty()) {
      std::cout << " [";
      for (std::size_t i = 0; i < f.witnesses.size(); ++i) std::cout << (i ? ", " : "") << f.witnesses[i];
      std::cout << "]";
    }
    if (!f.detail.empty()) std::cout << ": " << f.detail;
    std::cout << "\n";
  }

  void report(const ValidationReport& r) {
    for (const auto& f : r) finding(f);
  }

  // Free-form result lines; in json-lines mode they become summary records.
  void summary(const std::string& text, json extra = json::object()) {
    if (json_lines) {
      extra["kind"] = "summary";
      extra["text"] = text;
      std::cout << extra.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
  }

  void finish() {
    if (suppressed > 0) summary(std::to_string(suppressed) + " further findings suppressed (--max-findings)",
                                {{"suppressed", suppressed}});
  }

  void diagnostic(const Diagnostic& d) {
    if (json_lines) {
      std::cout << json{{"kind", d.kind},
                        {"axiom", d.code},
                        {"witnesses", json::array()},
                        {"detail", d.message},
                        {"line", d.span.line},
                        {"column", d.span.column}}
                       .dump()
                << "\n";
    } else {
      std::cerr << to_string(d) << "\n";
    }
  }
};

Output out;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Build failures are violations; everything else in the input is a usage error.
int diagnostics_exit(const std::vector<Diagnostic>& diags) {
  bool build_only = true;
  for (const auto& d : diags) {
    out.diagnostic(d);
    if (d.kind != "BuildError") build_only = false;
    if (d.kind == "BuildError") out.finding(Finding{"error", d.code, {}, d.message});
  }
  return build_only ? kViolations : kUsage;
}

std::optional<LoadedSpec> load_file(const std::string& path, int& code) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "cannot read " << path << "\n";
    code = kUsage;
    return std::nullopt;
  }
  auto r = load_text(*text);
  if (!r.spec) {
    code = diagnostics_exit(r.diagnostics);
    return std::nullopt;
  }
  return std::move(r.spec);
}

const TwoCellStructure& need_structure(const LoadedSpec& s) {
  if (!s.structure) throw UsageError("the file defines no 2-cell structure");
  return *s.structure;
}

int exit_for(const ValidationReport& r) { return r.empty() ? kClean : kViolations; }

// ---------------------------------------------------------------- commands

int cmd_check(const LoadedSpec& s) {
  ValidationReport r;
  if (!s.category) throw UsageError("the file defines no category");
  if (s.category->is_table()) r.merge(validate_category(*s.category));
  if (s.structure && s.structure->enumerable() && s.structure->base().is_table()) {
    r.merge(validate_structure(*s.structure));
  } else if (s.structure && s.pseudocat) {
    // lazy structures: the builder validated its presentation, so only the
    // structural invariants of the pseudocategory data remain
    CoherenceOptions opts;
    opts.probes = s.probes;
    for (const auto& e : evaluate_coherence(*s.structure, *s.pseudocat, opts))
      if (!e.holds && e.name.rfind("structure:", 0) == 0) r.add(e.name, e.witnesses, e.detail);
  }
  out.report(r);
  out.summary(r.empty() ? "ok" : std::to_string(r.size()) + " findings", {{"findings", r.size()}});
  return exit_for(r);
}

int cmd_natural(const LoadedSpec& s, const std::string& cell) {
  const auto& h = need_structure(s);
  auto x = h.find_cell(cell);
  if (!x) throw UsageError("unknown cell '" + cell + "'");
  std::optional<CellId> witness;
  if (h.enumerable()) {
    witness = naturality_counterexample(h, *x);
  } else {
    if (s.probes.empty()) throw UsageError("structure is not enumerable and the file supplies no probes");
    for (auto z : s.probes)
      if (h.target(z) == h.source(*x) && !natural_wrt(h, *x, z)) {
        witness = z;
        break;
      }
  }
  if (!witness) {
    out.summary(cell + " is natural", {{"natural", true}});
    return kClean;
  }
  out.finding(Finding{"violation", "naturality", {cell, h.cell_name(*witness)},
                      "cod(x)z + x dom(z) differs from x cod(z) + dom(x)z"});
  out.summary(cell + " is not natural; counterexample " + h.cell_name(*witness), {{"natural", false}});
  return kViolations;
}

int cmd_two_category(const LoadedSpec& s) {
  const auto& h = need_structure(s);
  auto v = two_category_verdict(h, out.max_findings);
  for (auto [x, z] : v.failures)
    out.finding(Finding{"violation", "naturality", {h.cell_name(x), h.cell_name(z)}, {}});
  out.suppressed += v.failing_pairs - v.failures.size();
  out.summary(std::string(v.holds ? "2-category" : "not a 2-category"), {{"two_category", v.holds}});
  out.summary("failing pairs: " + std::to_string(v.failing_pairs), {{"failing_pairs", v.failing_pairs}});
  return v.holds ? kClean : kViolations;
}

int cmd_commutators(const LoadedSpec& s) {
  const auto& h = need_structure(s);
  if (!h.enumerable()) throw UsageError("commutators needs an enumerable structure");
  const auto objs = h.base().objects();
  std::size_t nonzero = 0;
  for (auto a : objs)
    for (auto b : objs)
      for (auto x : h.cells(a, b))
        for (auto o : objs)
          for (auto z : h.cells(o, a)) {
            auto c = commutator(h, x, z);
            if (c == h.zero(h.dom(c))) continue;
            ++nonzero;
            const std::string line = "[" + h.cell_name(x) + ", " + h.cell_name(z) + "] = " + h.cell_name(c);
            if (out.json_lines)
              out.summary(line, {{"x", h.cell_name(x)}, {"z", h.cell_name(z)}, {"commutator", h.cell_name(c)}});
            else
              std::cout << line << "\n";
          }
  out.summary("nonzero commutators: " + std::to_string(nonzero), {{"nonzero", nonzero}});
  return kClean;
}

int cmd_naturalize(const LoadedSpec& s, const std::string& target) {
  const auto& h = need_structure(s);
  auto n = naturalize(h);
  const auto text = serialize(*n.structure);
  if (target.empty() || target == "-") {
    std::cout << text;
    return kClean;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw UsageError("cannot write " + target);
  f << text;
  out.summary("cells: " + std::to_string(h.all_cells().size()) + " -> " + std::to_string(n.structure->cell_count()),
              {{"cells", n.structure->cell_count()}});
  return kClean;
}

int cmd_cartesian(const LoadedSpec& s) {
  auto r = is_cartesian(need_structure(s));
  out.report(r);
  out.summary(r.empty() ? "cartesian" : "not cartesian", {{"cartesian", r.empty()}});
  return exit_for(r);
}

int cmd_pseudocat(const LoadedSpec& s, const std::string& mode, const std::string& assoc) {
  const auto& h = need_structure(s);
  if (!s.pseudocat) throw UsageError("the file defines no pseudocategory data");
  CoherenceOptions opts;
  opts.mode = mode == "natural" ? CoherenceMode::natural : CoherenceMode::non_natural;
  opts.c4 = assoc == "right" ? Association::right : Association::left;
  opts.probes = s.probes;
  bool ok = true;
  for (const auto& e : evaluate_coherence(h, *s.pseudocat, opts)) {
    if (!e.holds) {
      ok = false;
      out.finding(Finding{"violation", e.name, e.witnesses, e.detail});
    } else if (!out.json_lines) {
      std::cout << out.paint("ok", "32") << " " << e.name << "\n";
    }
  }
  out.summary(ok ? "pseudocategory" : "not a pseudocategory", {{"pseudocategory", ok}});
  return ok ? kClean : kViolations;
}

// ---------------------------------------------------------------- build

struct BuildArgs {
  std::string kind;
  std::vector<std::string> names;
  std::string from, output, delta, h, lambda, rho, eta;
  bool expand = false;
};

int cmd_build(const BuildArgs& a) {
  SpecDocument doc;
  Presentations known;
  if (!a.from.empty()) {
    auto text = read_file(a.from);
    if (!text) throw UsageError("cannot read " + a.from);
    auto p = parse(*text);
    if (!p.document) return diagnostics_exit(p.diagnostics);
    auto l = load(*p.document);
    if (!l.spec) return diagnostics_exit(l.diagnostics);
    known = l.spec->presentations;
    for (const auto& b : p.document->blocks)
      if (b.kind != "category" && b.kind != "cells" && b.kind != "derive" && b.kind != "pseudocat")
        doc.blocks.push_back(b);
  }
  std::set<std::string> emitted;
  for (const auto& b : doc.blocks) emitted.insert(b.kind + " " + b.name);
  auto emit = [&](Block b) {
    if (emitted.insert(b.kind + " " + b.name).second) doc.blocks.push_back(std::move(b));
  };
  auto need_group = [&](const std::string& name) {
    if (known.groups.count(name)) return;
    auto g = FiniteGroup::named(name);
    if (!g) throw UsageError("unknown group '" + name + "'");
    known.groups.emplace(name, *g);
    emit(group_block(*g));
  };
  Block derive;
  derive.kind = "derive";
  if (a.kind == "conjugation") {
    derive.name = "conjugation";
    for (const auto& n : a.names) need_group(n);
  } else if (a.kind == "derivations") {
    derive.name = "derivations";
    for (const auto& n : a.names)
      if (!known.xmods.count(n)) throw UsageError("unknown xmod '" + n + "' (pass --from)");
  } else if (a.kind == "homotopies") {
    derive.name = "homotopies";
    for (const auto& n : a.names) {
      if (known.complexes.count(n)) continue;
      std::optional<ChainComplex> c;
      if (n == "F3") c = ChainComplex::f3();
      if (n == "C4") c = ChainComplex::z4();
      if (!c) throw UsageError("unknown complex '" + n + "'");
      for (const auto& g : c->groups) need_group(g.name);
      known.complexes.emplace(n, *c);
      emit(complex_block(*c));
    }
  } else if (a.kind == "internal") {
    derive.name = "internal";
    for (const auto& n : a.names) {
      if (known.intcats.count(n)) continue;
      std::optional<InternalCategory> c;
      if (n == "I2") c = InternalCategory::arrow_poset();
      else if (n.size() > 1 && n[0] == 'B')
        if (auto g = FiniteGroup::named(n.substr(1))) c = InternalCategory::from_group(*g);
      if (!c) throw UsageError("unknown internal category '" + n + "'");
      known.intcats.emplace(n, *c);
      emit(intcat_block(*c));
    }
  } else if (a.kind == "group-pseudocat") {
    derive.name = "group-pseudocat";
    if (a.names.size() != 1 || !known.xmods.count(a.names[0]))
      throw UsageError("group-pseudocat needs one xmod from --from");
    if (a.delta.empty()) throw UsageError("group-pseudocat needs --delta");
    derive.header.push_back("delta=" + a.delta);
  } else if (a.kind == "additive-pseudocat") {
    derive.name = "additive-pseudocat";
    if (a.names.size() != 2) throw UsageError("additive-pseudocat needs complexes A and B from --from");
    for (auto [k, v] : {std::pair{"map", &a.h}, {"lambda", &a.lambda}, {"rho", &a.rho}, {"eta", &a.eta}}) {
      if (v->empty()) throw UsageError(std::string("additive-pseudocat needs --") + k);
      derive.header.push_back(std::string(k) + "=" + *v);
    }
  } else {
    throw UsageError("unknown build kind '" + a.kind + "'");
  }
  derive.header.insert(derive.header.begin(), a.names.begin(), a.names.end());
  doc.blocks.push_back(derive);

  // Run the builder now so that build-time errors surface here.
  auto loaded = load(doc);
  if (!loaded.spec) return diagnostics_exit(loaded.diagnostics);
  std::string text;
  if (a.expand) {
    auto t = std::dynamic_pointer_cast<const TableStructure>(loaded.spec->structure);
    if (!t) throw UsageError("--expand needs a builder producing tables");
    text = serialize(*t);
  } else {
    text = serialize(doc);
  }
  if (a.output.empty() || a.output == "-") {
    std::cout << text;
  } else {
    std::ofstream f(a.output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + a.output);
    f << text;
  }
  return kClean;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite 2-cell structures, naturality and pseudocategory coherence"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
  app.add_option("--max-findings", out.max_findings, "cap on reported findings")->capture_default_str();

  std::string file, cell, target, mode = "natural", assoc = "left";
  auto with_file = [&](CLI::App* sub) {
    sub->add_option("file", file, ".sesq input")->required();
    sub->add_option("--format", format, "text or json-lines")->check(CLI::IsMember({"text", "json-lines"}));
    sub->add_option("--max-findings", out.max_findings, "cap on reported findings");
    return sub;
  };
  auto* check = with_file(app.add_subcommand("check", "validate the category and the 2-cell structure"));
  auto* natural = with_file(app.add_subcommand("natural", "naturality of one cell"));
  natural->add_option("--cell", cell, "cell name")->required();
  auto* two = with_file(app.add_subcommand("two-category", "is every cell natural"));
  auto* comm = with_file(app.add_subcommand("commutators", "nonzero commutators"));
  auto* nat = with_file(app.add_subcommand("naturalize", "write the naturalization"));
  nat->add_option("-o,--output", target, "output file (default stdout)");
  auto* cart = with_file(app.add_subcommand("cartesian", "cartesianness report"));
  auto* pseudo = with_file(app.add_subcommand("pseudocat", "pseudocategory coherence"));
  pseudo->add_option("--mode", mode)->check(CLI::IsMember({"natural", "non-natural"}))->capture_default_str();
  pseudo->add_option("--assoc", assoc, "shape of quadruples")->check(CLI::IsMember({"left", "right"}))->capture_default_str();

  BuildArgs b;
  auto* build = app.add_subcommand("build", "emit a .sesq file for a construction");
  build->add_option("kind", b.kind, "conjugation|derivations|homotopies|internal|group-pseudocat|additive-pseudocat")
      ->required();
  build->add_option("names", b.names, "presentation names");
  build->add_option("--from", b.from, ".sesq file with presentations");
  build->add_option("-o,--output", b.output, "output file (default stdout)");
  build->add_option("--delta", b.delta);
  build->add_option("--map", b.h, "chain map h: A -> B");
  build->add_option("--lambda", b.lambda);
  build->add_option("--rho", b.rho);
  build->add_option("--eta", b.eta);
  build->add_flag("--expand", b.expand, "emit tables instead of a derive directive");
  build->add_option("--format", format)->check(CLI::IsMember({"text", "json-lines"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  out.json_lines = format == "json-lines";
  const char* color = std::getenv("SESQ_COLOR");
  out.color = !out.json_lines && !(color && std::string(color) == "never") && isatty(STDOUT_FILENO);

  int code = kClean;
  try {
    if (build->parsed()) {
      code = cmd_build(b);
    } else {
      auto spec = load_file(file, code);
      if (!spec) return code;
      if (check->parsed()) code = cmd_check(*spec);
      else if (natural->parsed()) code = cmd_natural(*spec, cell);
      else if (two->parsed()) code = cmd_two_category(*spec);
      else if (comm->parsed()) code = cmd_commutators(*spec);
      else if (nat->parsed()) code = cmd_naturalize(*spec, target);
      else if (cart->parsed()) code = cmd_cartesian(*spec);
      else if (pseudo->parsed()) code = cmd_pseudocat(*spec, mode, assoc);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    out.finding(Finding{"error", std::string(to_string(e.code())), {}, e.what()});
    code = e.code() == Errc::unsupported_backend ? kUsage : kViolations;
  }
  out.finish();
  return code;
}
