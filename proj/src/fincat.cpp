#include "sesq/fincat.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "sesq/error.hpp"

namespace sesq {

void CategoryTables::reset_composition() {
  composition.assign(morphisms.size() * morphisms.size(), -1);
}

// ---------------------------------------------------------------- Carrier

Carrier::Carrier(std::vector<int> sort_sizes) : sizes_(std::move(sort_sizes)), labels_(sizes_.size()) {}

void Carrier::add_operation(Operation op) { ops_.push_back(std::move(op)); }

const Operation* Carrier::find_operation(std::string_view name) const {
  for (const auto& op : ops_)
    if (op.name == name) return &op;
  return nullptr;
}

const Operation& Carrier::operation(std::string_view name) const {
  if (const auto* op = find_operation(name)) return *op;
  throw Error(Errc::invalid_presentation, "carrier has no operation '" + std::string(name) + "'");
}

int Carrier::apply(std::string_view name, std::initializer_list<int> args) const {
  return operation(name).eval(std::span<const int>(args.begin(), args.size()));
}

void Carrier::set_labels(int sort, std::vector<std::string> labels) { labels_.at(sort) = std::move(labels); }

std::string Carrier::label(int sort, int element) const {
  const auto& l = labels_.at(sort);
  if (element >= 0 && element < static_cast<int>(l.size())) return l[element];
  if (fibered_) {
    auto [a, b] = coords(sort, element);
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return std::to_string(element);
}

std::pair<int, int> Carrier::coords(int sort, int element) const {
  if (!fibered_) throw Error(Errc::unsupported_backend, "carrier is not a fibered product");
  return fibered_->coords.at(sort).at(element);
}

int Carrier::element(int sort, int left, int right) const {
  if (!fibered_ || left < 0 || right < 0) return -1;
  const auto& idx = fibered_->index.at(sort);
  auto it = idx.find((static_cast<std::int64_t>(left) << 32) | static_cast<std::uint32_t>(right));
  return it == idx.end() ? -1 : it->second;
}

// ---------------------------------------------------------------- state

namespace detail {

struct ExtMorphism {
  ObjectId source, target;
  Graph graph;
  std::string name;
};

struct CategoryState {
  FiniteCategory::Backend backend = FiniteCategory::Backend::table;

  // shared
  std::unordered_map<std::string, int> object_index;

  // table backend
  CategoryTables tables;
  std::unordered_map<std::string, int> morphism_index;
  std::vector<std::vector<MorphismId>> homs;  // [a * n + b]

  // extensional backend
  mutable std::shared_mutex mu;
  std::deque<std::string> object_names;
  std::deque<std::shared_ptr<const Carrier>> carriers;
  std::deque<ExtMorphism> ext;
  std::unordered_map<std::size_t, std::vector<int>> by_hash;
  std::vector<int> identity_cache;
  std::map<std::pair<int, int>, PullbackSquare> pullbacks;
};

}  // namespace detail

namespace {

std::size_t hash_graph(ObjectId s, ObjectId t, const Graph& g) {
  std::size_t h = std::hash<int>{}(s.value) * 1000003u ^ std::hash<int>{}(t.value);
  for (const auto& part : g) {
    h = h * 31 + part.size();
    for (int v : part) h = h * 1000003u + static_cast<std::size_t>(v + 1);
  }
  return h;
}

const std::vector<MorphismId> kEmptyHom;

}  // namespace

FiniteCategory::FiniteCategory() : state_(std::make_shared<detail::CategoryState>()) {}
FiniteCategory::FiniteCategory(std::shared_ptr<detail::CategoryState> s) : state_(std::move(s)) {}

FiniteCategory FiniteCategory::from_tables(CategoryTables tables) {
  auto s = std::make_shared<detail::CategoryState>();
  s->backend = Backend::table;
  const auto n_obj = tables.objects.size();
  const auto n_mor = tables.morphisms.size();
  tables.identities.resize(n_obj, -1);
  if (tables.composition.size() != n_mor * n_mor) tables.reset_composition();
  for (std::size_t i = 0; i < n_obj; ++i) s->object_index.emplace(tables.objects[i], static_cast<int>(i));
  s->homs.assign(n_obj * n_obj, {});
  for (std::size_t i = 0; i < n_mor; ++i) {
    const auto& m = tables.morphisms[i];
    s->morphism_index.emplace(m.name, static_cast<int>(i));
    if (m.source >= 0 && m.target >= 0 && m.source < static_cast<int>(n_obj) && m.target < static_cast<int>(n_obj))
      s->homs[m.source * n_obj + m.target].push_back(MorphismId(static_cast<int>(i)));
  }
  s->tables = std::move(tables);
  return FiniteCategory(std::move(s));
}

FiniteCategory FiniteCategory::extensional() {
  auto s = std::make_shared<detail::CategoryState>();
  s->backend = Backend::extensional;
  return FiniteCategory(std::move(s));
}

FiniteCategory::Backend FiniteCategory::backend() const { return state().backend; }

const CategoryTables& FiniteCategory::tables() const {
  if (!is_table()) throw Error(Errc::unsupported_backend, "tables() needs the table backend");
  return state().tables;
}

std::size_t FiniteCategory::object_count() const {
  if (is_table()) return state().tables.objects.size();
  std::shared_lock lock(state().mu);
  return state().object_names.size();
}

std::vector<ObjectId> FiniteCategory::objects() const {
  std::vector<ObjectId> out;
  for (std::size_t i = 0, n = object_count(); i < n; ++i) out.emplace_back(static_cast<int>(i));
  return out;
}

std::string FiniteCategory::object_name(ObjectId a) const {
  if (is_table()) return state().tables.objects.at(a.value);
  std::shared_lock lock(state().mu);
  return state().object_names.at(a.value);
}

std::optional<ObjectId> FiniteCategory::find_object(std::string_view name) const {
  std::shared_lock lock(state().mu);
  auto it = state().object_index.find(std::string(name));
  if (it == state().object_index.end()) return std::nullopt;
  return ObjectId(it->second);
}

std::size_t FiniteCategory::morphism_count() const {
  if (is_table()) return state().tables.morphisms.size();
  std::shared_lock lock(state().mu);
  return state().ext.size();
}

std::vector<MorphismId> FiniteCategory::morphisms() const {
  std::vector<MorphismId> out;
  for (std::size_t i = 0, n = morphism_count(); i < n; ++i) out.emplace_back(static_cast<int>(i));
  return out;
}

const std::vector<MorphismId>& FiniteCategory::hom(ObjectId a, ObjectId b) const {
  if (!is_table()) throw Error(Errc::unsupported_backend, "hom-sets are not enumerated on the extensional backend");
  const auto n = state().tables.objects.size();
  if (!a.valid() || !b.valid() || a.value >= static_cast<int>(n) || b.value >= static_cast<int>(n))
    return kEmptyHom;
  return state().homs[a.value * n + b.value];
}

ObjectId FiniteCategory::source(MorphismId f) const {
  if (is_table()) return ObjectId(state().tables.morphisms.at(f.value).source);
  std::shared_lock lock(state().mu);
  return state().ext.at(f.value).source;
}

ObjectId FiniteCategory::target(MorphismId f) const {
  if (is_table()) return ObjectId(state().tables.morphisms.at(f.value).target);
  std::shared_lock lock(state().mu);
  return state().ext.at(f.value).target;
}

std::string FiniteCategory::morphism_name(MorphismId f) const {
  if (is_table()) return state().tables.morphisms.at(f.value).name;
  std::shared_lock lock(state().mu);
  return state().ext.at(f.value).name;
}

std::optional<MorphismId> FiniteCategory::find_morphism(std::string_view name) const {
  if (is_table()) {
    auto it = state().morphism_index.find(std::string(name));
    if (it == state().morphism_index.end()) return std::nullopt;
    return MorphismId(it->second);
  }
  std::shared_lock lock(state().mu);
  for (std::size_t i = 0; i < state().ext.size(); ++i)
    if (state().ext[i].name == name) return MorphismId(static_cast<int>(i));
  return std::nullopt;
}

MorphismId FiniteCategory::identity(ObjectId a) const {
  if (is_table()) {
    const auto& ids = state().tables.identities;
    if (!a.valid() || a.value >= static_cast<int>(ids.size())) throw Error(Errc::unknown_object, "no such object");
    if (ids[a.value] < 0) throw Error(Errc::missing_entry, "no identity declared for " + object_name(a));
    return MorphismId(ids[a.value]);
  }
  {
    std::shared_lock lock(state().mu);
    if (a.value < static_cast<int>(state().identity_cache.size()) && state().identity_cache[a.value] >= 0)
      return MorphismId(state().identity_cache[a.value]);
  }
  const auto& c = carrier(a);
  Graph g(c.sort_count());
  for (int s = 0; s < c.sort_count(); ++s) {
    g[s].resize(c.size(s));
    for (int i = 0; i < c.size(s); ++i) g[s][i] = i;
  }
  auto id = intern(a, a, std::move(g), "id_" + object_name(a));
  std::unique_lock lock(state().mu);
  if (state().identity_cache.size() <= static_cast<std::size_t>(a.value))
    state().identity_cache.resize(a.value + 1, -1);
  state().identity_cache[a.value] = id.value;
  return id;
}

MorphismId FiniteCategory::compose(MorphismId g, MorphismId f) const {
  if (target(f) != source(g))
    throw Error(Errc::not_composable, morphism_name(g) + " . " + morphism_name(f) + ": target/source mismatch");
  if (is_table()) {
    int h = state().tables.composite(g.value, f.value);
    if (h < 0) throw Error(Errc::missing_entry, "no composite " + morphism_name(g) + " . " + morphism_name(f));
    return MorphismId(h);
  }
  const Graph& gg = graph(g);
  const Graph& fg = graph(f);
  Graph out(fg.size());
  for (std::size_t s = 0; s < fg.size(); ++s) {
    out[s].resize(fg[s].size());
    for (std::size_t i = 0; i < fg[s].size(); ++i) {
      int v = fg[s][i];
      out[s][i] = v < 0 ? -1 : gg[s][v];
    }
  }
  return intern(source(f), target(g), std::move(out));
}

MorphismId FiniteCategory::compose(std::initializer_list<MorphismId> chain) const {
  if (chain.size() == 0) throw Error(Errc::not_composable, "empty chain");
  auto it = std::rbegin(chain);
  MorphismId acc = *it++;
  for (; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

ObjectId FiniteCategory::add_object(std::string name, std::shared_ptr<const Carrier> c) {
  if (is_table()) throw Error(Errc::unsupported_backend, "add_object needs the extensional backend");
  std::unique_lock lock(state().mu);
  auto& s = state();
  if (s.object_index.count(name)) throw Error(Errc::invalid_presentation, "duplicate object " + name);
  ObjectId id(static_cast<int>(s.object_names.size()));
  s.object_index.emplace(name, id.value);
  s.object_names.push_back(std::move(name));
  s.carriers.push_back(std::move(c));
  return id;
}

const Carrier& FiniteCategory::carrier(ObjectId a) const { return *carrier_ptr(a); }

std::shared_ptr<const Carrier> FiniteCategory::carrier_ptr(ObjectId a) const {
  if (is_table()) throw Error(Errc::unsupported_backend, "table objects have no carrier");
  std::shared_lock lock(state().mu);
  if (!a.valid() || a.value >= static_cast<int>(state().carriers.size()))
    throw Error(Errc::unknown_object, "object id " + std::to_string(a.value));
  return state().carriers[a.value];
}

MorphismId FiniteCategory::intern(ObjectId src, ObjectId tgt, Graph g, std::string name) const {
  if (is_table()) throw Error(Errc::unsupported_backend, "intern needs the extensional backend");
  auto& s = state();
  const auto h = hash_graph(src, tgt, g);
  {
    std::shared_lock lock(s.mu);
    if (auto it = s.by_hash.find(h); it != s.by_hash.end())
      for (int id : it->second) {
        const auto& m = s.ext[id];
        if (m.source == src && m.target == tgt && m.graph == g) return MorphismId(id);
      }
  }
  std::unique_lock lock(s.mu);
  auto& bucket = s.by_hash[h];
  for (int id : bucket) {
    const auto& m = s.ext[id];
    if (m.source == src && m.target == tgt && m.graph == g) return MorphismId(id);
  }
  int id = static_cast<int>(s.ext.size());
  if (name.empty()) name = "map_" + std::to_string(id);
  s.ext.push_back(detail::ExtMorphism{src, tgt, std::move(g), std::move(name)});
  bucket.push_back(id);
  return MorphismId(id);
}

const Graph& FiniteCategory::graph(MorphismId f) const {
  if (is_table()) throw Error(Errc::unsupported_backend, "table morphisms have no graph");
  std::shared_lock lock(state().mu);
  return state().ext.at(f.value).graph;
}

int FiniteCategory::apply(MorphismId f, int sort, int element) const {
  if (element < 0) return -1;
  return graph(f).at(sort).at(element);
}

// ---------------------------------------------------------------- validation

namespace {

void validate_table(const FiniteCategory& cat, ValidationReport& report) {
  const auto& t = cat.tables();
  const int n_obj = static_cast<int>(t.objects.size());
  const int n = static_cast<int>(t.morphisms.size());
  auto name = [&](int f) { return t.morphisms[f].name; };
  std::vector<bool> typed(n, true);
  for (int f = 0; f < n; ++f) {
    const auto& m = t.morphisms[f];
    if (m.source < 0 || m.source >= n_obj || m.target < 0 || m.target >= n_obj) {
      report.add("morphism-typing", {m.name}, "source or target is not an object");
      typed[f] = false;
    }
  }
  for (int a = 0; a < n_obj; ++a) {
    int i = t.identities[a];
    if (i < 0 || i >= n) {
      report.add("identity-declared", {t.objects[a]}, "object has no identity");
    } else if (t.morphisms[i].source != a || t.morphisms[i].target != a) {
      report.add("identity-typing", {t.objects[a], name(i)}, "identity is not an endomorphism of its object");
    }
  }
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!typed[g] || !typed[f]) continue;
      const bool composable = t.morphisms[f].target == t.morphisms[g].source;
      const int h = t.composite(g, f);
      if (!composable) {
        if (h >= 0) report.add("composition-typing", {name(g), name(f)}, "entry for a non-composable pair");
        continue;
      }
      if (h < 0 || h >= n) {
        report.add("composition-total", {name(g), name(f)}, "missing composite");
      } else if (t.morphisms[h].source != t.morphisms[f].source || t.morphisms[h].target != t.morphisms[g].target) {
        report.add("composition-typing", {name(g), name(f), name(h)}, "composite has the wrong type");
      }
    }
  auto comp = [&](int g, int f) -> int {
    if (g < 0 || f < 0 || !typed[g] || !typed[f]) return -1;
    if (t.morphisms[f].target != t.morphisms[g].source) return -1;
    int h = t.composite(g, f);
    return h >= 0 && h < n ? h : -1;
  };
  for (int f = 0; f < n; ++f) {
    if (!typed[f]) continue;
    const int ida = t.identities[t.morphisms[f].source];
    const int idb = t.identities[t.morphisms[f].target];
    if (idb >= 0 && idb < n) {
      int h = comp(idb, f);
      if (h >= 0 && h != f) report.add("left-identity", {name(idb), name(f)}, "id . f != f");
    }
    if (ida >= 0 && ida < n) {
      int h = comp(f, ida);
      if (h >= 0 && h != f) report.add("right-identity", {name(f), name(ida)}, "f . id != f");
    }
  }
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      int hg = comp(h, g);
      if (hg < 0) continue;
      for (int f = 0; f < n; ++f) {
        int gf = comp(g, f);
        if (gf < 0) continue;
        int lhs = comp(hg, f), rhs = comp(h, gf);
        if (lhs >= 0 && rhs >= 0 && lhs != rhs)
          report.add("associativity", {name(h), name(g), name(f)}, "(h.g).f != h.(g.f)");
      }
    }
}

void validate_extensional(const FiniteCategory& cat, ValidationReport& report) {
  const auto ms = cat.morphisms();
  for (auto f : ms) {
    const auto& src = cat.carrier(cat.source(f));
    const auto& tgt = cat.carrier(cat.target(f));
    const auto& g = cat.graph(f);
    bool ok = static_cast<int>(g.size()) == src.sort_count() && src.sort_count() == tgt.sort_count();
    for (int s = 0; ok && s < src.sort_count(); ++s) {
      ok = static_cast<int>(g[s].size()) == src.size(s);
      for (int v : g[s]) ok = ok && v >= 0 && v < tgt.size(s);
    }
    if (!ok) report.add("morphism-typing", {cat.morphism_name(f)}, "graph is not a total function between carriers");
  }
  if (!report.empty()) return;
  for (auto f : ms) {
    if (cat.compose(cat.identity(cat.target(f)), f) != f)
      report.add("left-identity", {cat.morphism_name(f)}, "id . f != f");
    if (cat.compose(f, cat.identity(cat.source(f))) != f)
      report.add("right-identity", {cat.morphism_name(f)}, "f . id != f");
  }
  // Sampled associativity: a fixed stride through the interned morphisms.
  const std::size_t n = ms.size();
  const std::size_t stride = std::max<std::size_t>(1, n / 24);
  for (std::size_t i = 0; i < n; i += stride)
    for (std::size_t j = 0; j < n; j += stride)
      for (std::size_t k = 0; k < n; k += stride) {
        auto h = ms[i], g = ms[j], f = ms[k];
        if (cat.target(f) != cat.source(g) || cat.target(g) != cat.source(h)) continue;
        if (cat.compose(cat.compose(h, g), f) != cat.compose(h, cat.compose(g, f)))
          report.add("associativity", {cat.morphism_name(h), cat.morphism_name(g), cat.morphism_name(f)},
                     "(h.g).f != h.(g.f)");
      }
}

}  // namespace

ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport report;
  if (cat.is_table())
    validate_table(cat, report);
  else
    validate_extensional(cat, report);
  return report;
}

// ---------------------------------------------------------------- pullbacks

bool is_pullback(const FiniteCategory& cat, const PullbackSquare& sq) {
  if (!cat.is_table()) throw Error(Errc::unsupported_backend, "universal property is only checked on tables");
  const auto A = cat.source(sq.f), B = cat.source(sq.g);
  if (cat.compose(sq.f, sq.p1) != cat.compose(sq.g, sq.p2)) return false;
  for (auto D : cat.objects()) {
    const auto& into_p = cat.hom(D, sq.apex);
    std::vector<std::pair<int, int>> images;
    for (auto u : into_p) images.emplace_back(cat.compose(sq.p1, u).value, cat.compose(sq.p2, u).value);
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
    std::size_t cones = 0;
    for (auto x : cat.hom(D, A))
      for (auto y : cat.hom(D, B))
        if (cat.compose(sq.f, x) == cat.compose(sq.g, y)) ++cones;
    if (cones != images.size()) return false;
  }
  return true;
}

namespace {

PullbackSquare fibered_product(const FiniteCategory& cat, MorphismId f, MorphismId g) {
  const ObjectId A = cat.source(f), B = cat.source(g);
  auto left = cat.carrier_ptr(A);
  auto right = cat.carrier_ptr(B);
  if (left->sort_count() != right->sort_count())
    throw Error(Errc::no_pullback, "carriers have different sort counts");
  const int sorts = left->sort_count();
  Carrier::Fibered fib{A, B, {}, {}};
  fib.coords.resize(sorts);
  fib.index.resize(sorts);
  std::vector<int> sizes(sorts);
  const Graph& fg = cat.graph(f);
  const Graph& gg = cat.graph(g);
  for (int s = 0; s < sorts; ++s) {
    for (int a = 0; a < left->size(s); ++a)
      for (int b = 0; b < right->size(s); ++b)
        if (fg[s][a] == gg[s][b]) {
          fib.index[s].emplace((static_cast<std::int64_t>(a) << 32) | static_cast<std::uint32_t>(b),
                               static_cast<int>(fib.coords[s].size()));
          fib.coords[s].emplace_back(a, b);
        }
    sizes[s] = static_cast<int>(fib.coords[s].size());
  }
  auto apex = std::make_shared<Carrier>(sizes);
  apex->set_fibered(fib);
  // Operations shared by both factors act componentwise.
  for (const auto& op : left->operations()) {
    const auto* rop = right->find_operation(op.name);
    if (!rop || rop->arg_sorts != op.arg_sorts || rop->result_sort != op.result_sort) continue;
    const Carrier* self = apex.get();
    Operation lifted{op.name, op.arg_sorts, op.result_sort,
                     [self, lop = op.eval, rfn = rop->eval, args_sorts = op.arg_sorts, res = op.result_sort](
                         std::span<const int> args) -> int {
                       std::vector<int> ls(args.size()), rs(args.size());
                       for (std::size_t i = 0; i < args.size(); ++i) {
                         if (args[i] < 0) return -1;
                         auto [l, r] = self->coords(args_sorts[i], args[i]);
                         ls[i] = l;
                         rs[i] = r;
                       }
                       return self->element(res, lop(ls), rfn(rs));
                     }};
    apex->add_operation(std::move(lifted));
  }
  std::string name = "pb[" + cat.morphism_name(f) + "|" + cat.morphism_name(g) + "]";
  // distinct morphisms may share a display name
  for (int k = 2; cat.find_object(name); ++k)
    name = "pb[" + cat.morphism_name(f) + "|" + cat.morphism_name(g) + "]#" + std::to_string(k);
  auto mutable_cat = cat;  // handle copy shares state
  ObjectId P = mutable_cat.add_object(name, apex);
  Graph p1(sorts), p2(sorts);
  for (int s = 0; s < sorts; ++s)
    for (auto [a, b] : fib.coords[s]) {
      p1[s].push_back(a);
      p2[s].push_back(b);
    }
  auto pm1 = cat.intern(P, A, std::move(p1), "p1_" + name);
  auto pm2 = cat.intern(P, B, std::move(p2), "p2_" + name);
  return PullbackSquare{P, pm1, pm2, f, g};
}

}  // namespace

PullbackSquare find_pullback(const FiniteCategory& cat, MorphismId f, MorphismId g) {
  if (cat.target(f) != cat.target(g))
    throw Error(Errc::not_composable, "cospan legs have different targets");
  if (!cat.is_table()) {
    auto& s = cat.state();
    {
      std::shared_lock lock(s.mu);
      if (auto it = s.pullbacks.find({f.value, g.value}); it != s.pullbacks.end()) return it->second;
    }
    auto sq = fibered_product(cat, f, g);
    std::unique_lock lock(s.mu);
    auto [it, inserted] = s.pullbacks.emplace(std::make_pair(f.value, g.value), sq);
    return it->second;
  }
  const auto A = cat.source(f), B = cat.source(g);
  for (auto P : cat.objects())
    for (auto p1 : cat.hom(P, A))
      for (auto p2 : cat.hom(P, B)) {
        PullbackSquare sq{P, p1, p2, f, g};
        if (cat.compose(f, p1) == cat.compose(g, p2) && is_pullback(cat, sq)) return sq;
      }
  throw Error(Errc::no_pullback,
              "no pullback of " + cat.morphism_name(f) + " and " + cat.morphism_name(g));
}

MorphismId induced_into_pullback(const FiniteCategory& cat, const PullbackSquare& sq, MorphismId x,
                                 MorphismId y) {
  if (cat.source(x) != cat.source(y) || cat.target(x) != cat.source(sq.f) || cat.target(y) != cat.source(sq.g) ||
      cat.compose(sq.f, x) != cat.compose(sq.g, y))
    throw Error(Errc::cone_mismatch, cat.morphism_name(x) + ", " + cat.morphism_name(y) + " is not a cone");
  const ObjectId D = cat.source(x);
  if (cat.is_table()) {
    for (auto u : cat.hom(D, sq.apex))
      if (cat.compose(sq.p1, u) == x && cat.compose(sq.p2, u) == y) return u;
    throw Error(Errc::no_pullback, "square has no mediator for the cone");
  }
  const auto& apex = cat.carrier(sq.apex);
  const Graph& xg = cat.graph(x);
  const Graph& yg = cat.graph(y);
  Graph u(xg.size());
  for (std::size_t s = 0; s < xg.size(); ++s) {
    u[s].resize(xg[s].size());
    for (std::size_t i = 0; i < xg[s].size(); ++i) {
      int e = apex.element(static_cast<int>(s), xg[s][i], yg[s][i]);
      if (e < 0) throw Error(Errc::cone_mismatch, "cone leaves the fibered product");
      u[s][i] = e;
    }
  }
  return cat.intern(D, sq.apex, std::move(u));
}

}  // namespace sesq
