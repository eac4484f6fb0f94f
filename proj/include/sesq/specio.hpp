#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sesq/algebra.hpp"
#include "sesq/cellstruct.hpp"
#include "sesq/pseudocat.hpp"

namespace sesq {

struct Span {
  int line = 0;    // 1-based
  int column = 0;  // 1-based, in bytes
  int length = 0;
};

struct Diagnostic {
  std::string kind;  // ParseError, ResolveError or BuildError
  std::string code;  // error class for BuildError, otherwise equal to kind
  Span span;
  std::string message;
};

std::string to_string(const Diagnostic& d);

struct Decl {
  std::string keyword;
  std::vector<std::string> args;
  std::vector<Span> arg_spans;
  Span span;
};

// A top-level item. `derive` lines are blocks without a body: name holds the
// builder and header its arguments.
struct Block {
  std::string kind;
  std::string name;
  std::vector<std::string> header;  // chainmap/homotopy: source, target
  Span span;
  std::vector<Decl> decls;
};

struct SpecDocument {
  std::vector<Block> blocks;
};

struct ParseResult {
  std::optional<SpecDocument> document;
  std::vector<Diagnostic> diagnostics;
};

ParseResult parse(std::string_view text);

// Canonical text: fixed block order, declarations grouped by kind and ordered
// by the ids they mention, one per line, LF endings.
std::string serialize(const SpecDocument& doc);
SpecDocument to_document(const TableStructure& h);
std::string serialize(const TableStructure& h);

// ---------------------------------------------------------------- loading

struct NamedChainMap {
  std::string source, target;
  ChainMapData data;
};

struct NamedHomotopy {
  std::string source, target;
  HomotopyData data;
};

struct Presentations {
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, FiniteMonoid> monoids;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, ChainComplex> complexes;
  std::map<std::string, InternalCategory> intcats;
  std::map<std::string, NamedChainMap> chainmaps;
  std::map<std::string, NamedHomotopy> homotopies;
};

struct LoadedSpec {
  Presentations presentations;
  std::optional<FiniteCategory> category;
  std::shared_ptr<const TwoCellStructure> structure;
  std::optional<PseudocategoryData> pseudocat;
  std::vector<CellId> probes;  // for lazy structures
  std::string builder;         // derive directive used, empty for explicit tables
};

struct LoadResult {
  std::optional<LoadedSpec> spec;
  std::vector<Diagnostic> diagnostics;
};

// Resolves names and runs the derive directive. Builder failures come back as
// BuildError diagnostics carrying the error class.
LoadResult load(const SpecDocument& doc);
LoadResult load_text(std::string_view text);

// Presentation blocks for built-in fixtures.
Block group_block(const FiniteGroup& g);
Block monoid_block(const FiniteMonoid& m);
Block xmod_block(const CrossedModule& x);
Block complex_block(const ChainComplex& c);
Block intcat_block(const InternalCategory& c);

}  // namespace sesq
