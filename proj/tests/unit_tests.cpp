#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sesq/cartesian.hpp"
#include "sesq/constructions.hpp"
#include "sesq/error.hpp"
#include "sesq/naturality.hpp"
#include "sesq/naturalize.hpp"
#include "sesq/pseudocat.hpp"
#include "sesq/specio.hpp"

using namespace sesq;

namespace {

std::string corpus(const std::string& name) { return std::string(SESQ_CORPUS_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int status;
  std::string out;
};

Run sesq_cli(const std::string& args) {
  const std::string cmd = std::string(SESQ_BIN) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int raw = pclose(p);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST_CASE("groups have the expected orders and abelianizations") {
  CHECK(FiniteGroup::symmetric3().size() == 6);
  CHECK(FiniteGroup::dihedral4().size() == 8);
  CHECK(FiniteGroup::quaternion8().size() == 8);
  CHECK(oracle::noncommuting_pairs(FiniteGroup::symmetric3()) == 18);
  CHECK(oracle::noncommuting_pairs(FiniteGroup::klein4()) == 0);
  CHECK(oracle::abelianization_order(FiniteGroup::quaternion8()) == 4);
}

TEST_CASE("lattice fixture is a category with pullbacks") {
  const auto cat = fixtures::lattice_times_bz2();
  CHECK(cat.object_count() == 4);
  CHECK(cat.morphism_count() == 18);
  CHECK(validate_category(cat).empty());
  CHECK(oracle::category_failure(cat.tables()).empty());
  const auto sq = find_pullback(cat, *cat.find_morphism("a1_1"), *cat.find_morphism("b1_0"));
  CHECK(cat.object_name(sq.apex) == "0");
}

TEST_CASE("validate_category reports a broken identity") {
  auto t = fixtures::lattice_times_bz2().tables();
  const int id0 = t.identities[0];
  const int other = id0 + 1;  // 00_1
  t.set_composite(id0, other, id0);
  const auto cat = FiniteCategory::from_tables(t);
  CHECK_FALSE(validate_category(cat).empty());
  CHECK_FALSE(oracle::category_failure(t).empty());
}

TEST_CASE("discrete and codiscrete cell counts") {
  const auto cat = fixtures::lattice_times_bz2();
  const auto d = discrete(cat);
  const auto c = codiscrete(cat);
  CHECK(d->cell_count() == cat.morphism_count());
  std::size_t pairs = 0;
  for (auto a : cat.objects())
    for (auto b : cat.objects()) pairs += cat.hom(a, b).size() * cat.hom(a, b).size();
  CHECK(c->cell_count() == pairs);
  CHECK(is_two_category(*d));
  CHECK(is_two_category(*c));
}

TEST_CASE("F1 is a valid structure and a 2-category") {
  const auto f1 = fixtures::f1();
  CHECK(validate_structure(*f1.structure).empty());
  CHECK(is_two_category(*f1.structure));
}

TEST_CASE("F2 naturality and commutators") {
  const auto f2 = fixtures::f2();
  const auto& h = *f2.structure;
  const auto s12 = *h.find_cell("[s12|e]");
  const auto e = *h.find_cell("[e|e]");
  CHECK(is_natural(h, e));
  CHECK_FALSE(is_natural(h, s12));
  CHECK(naturality_counterexample(h, s12).has_value());
  CHECK(commutator(h, s12, s12) == h.zero(h.dom(s12)));
  CHECK(commutator(h, s12, *h.find_cell("[r|e]")) != h.zero(h.dom(s12)));
}

TEST_CASE("naturalize S3 yields the sign quotient") {
  const auto n = naturalize(*fixtures::f2().structure);
  CHECK(n.structure->cell_count() == 2);
  CHECK(validate_structure(*n.structure).empty());
  CHECK(is_two_category(*n.structure));
}

TEST_CASE("group pseudocategory rejects a non-central delta") {
  const auto s3 = FiniteGroup::symmetric3();
  CrossedModule x{"XS", s3, FiniteGroup::cyclic(1), std::vector<int>(6, 0), {0, 1, 2, 3, 4, 5}};
  try {
    build_group_pseudocategory(x, *s3.find("s12"));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::delta_not_central);
  }
  // delta is checked first; with a central delta the Peiffer failure surfaces
  try {
    build_group_pseudocategory(x, 0);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == Errc::invalid_presentation);
  }
}

TEST_CASE("additive pseudocategory with zero unitors is strict") {
  const auto f3 = ChainComplex::f3();
  ChainMapData h{{std::vector<int>(f3.groups[0].size(), 0), std::vector<int>(f3.groups[1].size(), 0),
                  std::vector<int>(f3.groups[2].size(), 0)}};
  HomotopyData z{std::vector<int>(f3.groups[1].size(), 0), std::vector<int>(f3.groups[0].size(), 0)};
  const auto p = build_additive_pseudocategory(f3, f3, h, z, z, z);
  for (auto mode : {CoherenceMode::natural, CoherenceMode::non_natural})
    for (const auto& e : evaluate_coherence(*p.structure, p.data, {mode})) CHECK_MESSAGE(e.holds, e.name);
}

TEST_CASE("commutator closed form on F3 agrees with oracle arithmetic") {
  const auto f3 = ChainComplex::f3();
  oracle::Complex c{{f3.groups[0].size(), f3.groups[1].size(), f3.groups[2].size()}, f3.d2, f3.d1};
  const oracle::Homotopy zero{std::vector<int>(c.n[1], 0), std::vector<int>(c.n[0], 0)};
  const auto r = oracle::commutator_closed_form(c, c, c, zero, zero);
  for (int v : r.t2) CHECK(v == 0);
  for (int v : r.t1) CHECK(v == 0);
}

// ---------------------------------------------------------------- DSL

TEST_CASE("parse an empty category block") {
  const auto p = parse("category { }\n");
  REQUIRE(p.document);
  CHECK(p.document->blocks.size() == 1);
  CHECK(p.diagnostics.empty());
}

TEST_CASE("F1 parses into two blocks and round-trips") {
  const auto text = slurp(corpus("F1.sesq"));
  const auto p = parse(text);
  REQUIRE(p.document);
  CHECK(p.document->blocks.size() == 2);
  CHECK(serialize(*p.document) == text);
  const auto l = load(*p.document);
  REQUIRE(l.spec);
  CHECK(l.spec->structure->all_cells().size() == 2);
}

TEST_CASE("parse errors carry positions") {
  const auto p = parse("category {\n  object o\n  morphism f : o -> \n}\n");
  CHECK_FALSE(p.document);
  REQUIRE_FALSE(p.diagnostics.empty());
  CHECK(p.diagnostics[0].kind == "ParseError");
  CHECK(p.diagnostics[0].span.line == 3);
}

TEST_CASE("a typing clash in plus is a resolve error") {
  const std::string text =
      "category {\n  object o\n  morphism 1 : o -> o\n  morphism f : o -> o\n  id o = 1\n"
      "  compose 1 . 1 = 1\n  compose 1 . f = f\n  compose f . 1 = f\n  compose f . f = f\n}\n"
      "cells {\n  cell x : 1 => f\n  cell y : 1 => 1\n  zero 1 = y\n  zero f = x\n  plus x + x = x\n}\n";
  const auto l = load_text(text);
  CHECK_FALSE(l.spec);
  bool resolve = false;
  for (const auto& d : l.diagnostics) resolve |= d.kind == "ResolveError";
  CHECK(resolve);
}

TEST_CASE("derive discrete over the F1 base mirrors the morphisms") {
  const std::string text =
      "category {\n  object o\n  morphism 1 : o -> o\n  id o = 1\n  compose 1 . 1 = 1\n}\n\nderive discrete\n";
  const auto l = load_text(text);
  REQUIRE(l.spec);
  CHECK(l.spec->structure->all_cells().size() == 1);
  CHECK(l.spec->structure->find_cell("[1]").has_value());
}

TEST_CASE("serialized tables of a built structure reload to the same structure") {
  const auto f2 = fixtures::f2();
  const auto text = serialize(*f2.structure);
  const auto l = load_text(text);
  REQUIRE(l.spec);
  CHECK(l.spec->structure->all_cells().size() == 6);
  CHECK(serialize(*parse(text).document) == text);
}

TEST_CASE("every corpus file loads and validates") {
  for (const auto& e : std::filesystem::directory_iterator(SESQ_CORPUS_DIR)) {
    if (e.path().extension() != ".sesq") continue;
    const auto l = load_text(slurp(e.path().string()));
    if (e.path().filename() == "s3_delta.sesq") {
      CHECK_FALSE(l.spec);
      continue;
    }
    REQUIRE_MESSAGE(l.spec, e.path().filename().string());
  }
}

// ---------------------------------------------------------------- CLI

TEST_CASE("cli: check exits 0 on valid input") {
  const auto r = sesq_cli("check " + corpus("F1.sesq"));
  CHECK(r.status == 0);
}

TEST_CASE("cli: two-category on F2 prints the brute-force count") {
  const auto r = sesq_cli("two-category " + corpus("F2.sesq"));
  CHECK(r.status == 1);
  const auto want = "failing pairs: " + std::to_string(oracle::noncommuting_pairs(FiniteGroup::symmetric3()));
  CHECK(r.out.find(want) != std::string::npos);
}

TEST_CASE("cli: pseudocat verdicts and exit codes") {
  CHECK(sesq_cli("pseudocat " + corpus("grp_z3.sesq") + " --mode non-natural").status == 0);
  CHECK(sesq_cli("pseudocat " + corpus("grp_z3.sesq") + " --mode natural").status == 0);
  const auto bad = sesq_cli("pseudocat " + corpus("s3_delta.sesq"));
  CHECK(bad.status == 1);
  CHECK(bad.out.find("DeltaNotCentral") != std::string::npos);
  CHECK(sesq_cli("check /nonexistent/file.sesq").status == 2);
  CHECK(sesq_cli("frobnicate").status == 2);
}

TEST_CASE("cli: json-lines output is deterministic") {
  const auto a = sesq_cli("two-category " + corpus("F2.sesq") + " --format json-lines");
  const auto b = sesq_cli("two-category " + corpus("F2.sesq") + " --format json-lines");
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"kind\":\"summary\"") != std::string::npos);
}

TEST_CASE("cli: naturalize F2 writes two cells") {
  const auto r = sesq_cli("naturalize " + corpus("F2.sesq"));
  REQUIRE(r.status == 0);
  std::size_t cells = 0, pos = 0;
  while ((pos = r.out.find("\n  cell ", pos)) != std::string::npos) ++cells, ++pos;
  CHECK(cells == 2);
}

TEST_CASE("cli: build emits loadable text") {
  const auto r = sesq_cli("build conjugation S3");
  REQUIRE(r.status == 0);
  const auto l = load_text(r.out);
  REQUIRE(l.spec);
  CHECK(validate_structure(*l.spec->structure).empty());
}
