// Copyright 2026 The pbij Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pbij/block_family.hpp"
#include "pbij/closure.hpp"
#include "pbij/constrained.hpp"
#include "pbij/error.hpp"
#include "pbij/family_io.hpp"
#include "pbij/random.hpp"
#include "pbij/sampling.hpp"
#include "pbij/topology.hpp"
#include "pbij/windowed.hpp"

namespace pbij::cli {

const char* to_string(Status status) {
  switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: return "not-applicable";
    case Status::NotChecked: return "not-checked";
  }
  return "?";
}

void Report::verdict(std::string name, bool pass, std::string detail) {
  verdict(std::move(name), pass ? Status::Pass : Status::Fail, std::move(detail));
}

void Report::verdict(std::string name, Status status, std::string detail) {
  verdicts_.push_back({std::move(name), status, std::move(detail)});
}

bool Report::failed() const {
  return std::any_of(verdicts_.begin(), verdicts_.end(), [](const Verdict& v) { return v.status == Status::Fail; });
}

Json Report::body() const {
  Json j;
  j["schema"] = 1;
  j["command"] = command_;
  j["inputs"] = inputs;
  j["seed"] = seed ? Json(*seed) : Json(nullptr);
  Json vs = Json::array();
  for (const auto& v : verdicts_) vs.push_back({{"name", v.name}, {"status", to_string(v.status)}, {"detail", v.detail}});
  j["verdicts"] = vs;
  j["witnesses"] = witnesses;
  return j;
}

Json Report::document(const Json& metadata) const {
  Json j = body();
  j["metadata"] = metadata;
  return j;
}

namespace {

constexpr std::size_t kMaxWindow = 256;
constexpr std::size_t kListedDiff = 20;

struct Loaded {
  FamilySpec spec;
  Json echo;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.family_path.empty()) throw UsageError("--family is required");
  Loaded l{load_family(cfg.family_path), Json::object()};
  l.echo["path"] = cfg.family_path;
  l.echo["name"] = l.spec.name;
  l.echo["two_adic"] = l.spec.two_adic;
  Json blocks = Json::array();
  for (const auto& b : l.spec.blocks) blocks.push_back(b.to_string());
  l.echo["blocks"] = blocks;
  return l;
}

std::size_t require_window(const RunConfig& cfg) {
  if (!cfg.window) throw UsageError("--window is required");
  if (*cfg.window == 0 || *cfg.window > kMaxWindow) {
    throw UsageError("--window must lie in [1, " + std::to_string(kMaxWindow) + "]");
  }
  return *cfg.window;
}

std::uint64_t require_seed(const RunConfig& cfg) {
  if (!cfg.seed) throw UsageError("--seed is required for randomized commands");
  return *cfg.seed;
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

void write_csv(const std::string& path, const std::vector<std::vector<std::string>>& cells) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  const std::size_t n = cells.size();
  for (std::size_t j = 0; j < n; ++j) out << ",B" << j;
  out << "\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << 'B' << i;
    for (const auto& c : cells[i]) out << ',' << c;
    out << "\n";
  }
}

std::vector<std::vector<std::string>> cells_of(const Matrix& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    out.emplace_back();
    for (auto v : row) out.back().push_back(std::to_string(v));
  }
  return out;
}

Json strings(const std::vector<PartialBijection>& v, std::size_t limit) {
  Json a = Json::array();
  for (std::size_t k = 0; k < v.size() && k < limit; ++k) a.push_back(v[k].to_string());
  return a;
}

CollectionModel parse_collection(const std::string& text) {
  auto arg = [&](const std::string& prefix) { return text.substr(prefix.size()); };
  if (text.rfind("at-most:", 0) == 0) {
    try {
      return CollectionModel::at_most(std::stoul(arg("at-most:")));
    } catch (const std::logic_error&) {
      throw UsageError("bad collection bound in '" + text + "'");
    }
  }
  if (text == "schreier") return CollectionModel::schreier();
  if (text == "initial-segments") return CollectionModel::initial_segments();
  if (text == "all") return CollectionModel::all();
  if (text.rfind("ideal:", 0) == 0) return CollectionModel::ideal_members(IdealModel::parse(arg("ideal:")));
  if (text.rfind("co-ideal:", 0) == 0) return CollectionModel::co_ideal(IdealModel::parse(arg("co-ideal:")));
  throw UsageError("unknown collection '" + text +
                   "' (at-most:N, schreier, initial-segments, ideal:I, co-ideal:I, all)");
}

Json certificate_json(const IsolationResult& r) {
  Json j;
  j["element"] = r.element.to_string();
  j["verdict"] = to_string(r.verdict);
  j["certified"] = r.certified();
  j["reason"] = r.reason;
  if (r.open) j["open"] = r.open->to_string();
  Json steps = Json::array();
  for (const auto& s : r.proof) steps.push_back({{"claim", s.claim}, {"holds", s.holds}});
  j["proof"] = steps;
  if (r.sequence) j["sequence"] = r.sequence->to_string();
  if (r.convergence) {
    j["convergence"] = {{"converges", r.convergence->converges}, {"detail", r.convergence->detail}};
  }
  return j;
}

}  // namespace

Report family_check(const RunConfig& cfg) {
  Report r("family check");
  auto l = load(cfg);
  r.inputs["family"] = l.echo;
  const auto& blocks = l.spec.blocks;
  const std::size_t n = blocks.size();
  Json matrix = Json::array();
  std::vector<std::vector<std::string>> cells(n);
  std::optional<std::pair<std::size_t, std::size_t>> infinite;
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      auto c = i == j ? blocks[i].size() : finite_intersection_size(blocks[i], blocks[j]);
      if (c.is_finite()) {
        row.push_back(c.value());
      } else {
        row.push_back("infinite");
        if (i != j && !infinite) infinite = std::pair{i, j};
      }
      cells[i].push_back(c.to_string());
    }
    matrix.push_back(row);
  }
  r.witnesses["intersection_matrix"] = matrix;
  if (!cfg.csv_path.empty()) write_csv(cfg.csv_path, cells);
  if (infinite) {
    r.verdict("almost_disjoint", false,
              "B" + std::to_string(infinite->first) + " and B" + std::to_string(infinite->second) +
                  " meet in an infinite set");
    return r;
  }
  r.verdict("almost_disjoint", true, "every pairwise intersection is finite");
  const auto family = build_family(l.spec);
  const auto uniform = family.uniform_n();
  r.witnesses["uniform_n"] = uniform ? Json(*uniform) : Json(nullptr);
  r.witnesses["max_intersection"] = family.max_intersection();
  if (l.spec.declared_uniform_n) {
    r.verdict("declared_uniform_n", uniform == l.spec.declared_uniform_n,
              "declared " + std::to_string(*l.spec.declared_uniform_n) + ", detected " +
                  (uniform ? std::to_string(*uniform) : std::string("none")));
  }
  return r;
}

Report closure_run(const RunConfig& cfg) {
  Report r("closure run");
  auto l = load(cfg);
  const std::size_t w = require_window(cfg);
  r.inputs["family"] = l.echo;
  r.inputs["window"] = w;
  r.inputs["max_elements"] = cfg.max_elements;
  r.inputs["allow_small_window"] = cfg.allow_small_window;
  const auto family = build_family(l.spec);
  bool headroom = true;
  std::string headroom_detail;
  try {
    require_headroom(family, w);
  } catch (const HeadroomViolation& e) {
    if (!cfg.allow_small_window) throw;
    headroom = false;
    headroom_detail = e.what();
  }
  const auto gens = block_group_generators(family, w);
  const auto result = close(gens, cfg.max_elements);
  r.witnesses["generators"] = gens.size();
  r.witnesses["closure_size"] = result.elements.size();
  r.witnesses["complete"] = result.complete;
  r.witnesses["frontier_sizes"] = result.frontier_sizes;
  if (!result.complete) {
    r.verdict("closure_equals_structure", Status::NotChecked,
              "element budget of " + std::to_string(cfg.max_elements) + " exhausted");
    return r;
  }
  if (!headroom) {
    r.verdict("closure_equals_structure", Status::NotApplicable, headroom_detail);
    return r;
  }
  const auto diff = compare_with_structural(result, family, w);
  r.witnesses["structural_size"] = diff.structural_size;
  r.witnesses["closure_only"] = strings(diff.closure_only, kListedDiff);
  r.witnesses["structural_only"] = strings(diff.structural_only, kListedDiff);
  r.verdict("closure_equals_structure", diff.empty(),
            std::to_string(diff.closure_only.size()) + " closure-only, " + std::to_string(diff.structural_only.size()) +
                " structure-only elements");
  return r;
}

Report chains(const RunConfig& cfg) {
  Report r("chains");
  auto l = load(cfg);
  r.inputs["family"] = l.echo;
  const auto family = build_family(l.spec);
  const auto p = p_matrix(family);
  r.witnesses["weights"] = matrix_json(family.weights());
  r.witnesses["p_matrix"] = matrix_json(p);
  if (!cfg.csv_path.empty()) write_csv(cfg.csv_path, cells_of(p));
  if (family.size() <= kMaxPathBlocks) {
    const auto q = p_matrix_by_paths(family.weights());
    r.verdict("p_matrix_dual_oracle", p == q, p == q ? "dynamic programme agrees with path enumeration"
                                                     : "dynamic programme disagrees with path enumeration");
  } else {
    r.verdict("p_matrix_dual_oracle", Status::NotChecked, "too many blocks for path enumeration");
  }
  Json list = Json::array();
  bool ok = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (p[i][j] == 0) continue;
      auto c = m_chain(family, i, j, p[i][j]);
      const bool valid = c && is_valid_chain(*c, family.weights());
      ok = ok && valid;
      list.push_back({{"i", i}, {"j", j}, {"m", p[i][j]}, {"chain", c ? c->to_string() : std::string()}, {"valid", valid}});
    }
  }
  r.witnesses["chains"] = list;
  r.verdict("chain_certificates", ok, "every positive entry has a valid P-chain");
  return r;
}

Report factorize(const RunConfig& cfg) {
  Report r("factorize");
  auto l = load(cfg);
  if (cfg.elements.size() != 1) throw UsageError("factorize takes exactly one --element");
  r.inputs["family"] = l.echo;
  r.inputs["element"] = cfg.elements.front();
  const auto family = build_family(l.spec);
  const auto f = SymElement::parse(cfg.elements.front(), family.blocks());
  const auto membership = StratifiedSemigroup::generated(family).membership(f);
  r.witnesses["element"] = f.to_string();
  r.witnesses["stratum"] = membership.stratum.to_string();
  const auto fz = pbij::factorize(f, family);
  Json factors = Json::array();
  bool roles = true;
  for (const auto& x : fz.factors) {
    const auto& block = family.block(x.block);
    const bool ok = x.derived() ? x.element == SymElement::identity(block)
                                : x.element.domain() == block && x.element.image() == block;
    roles = roles && ok;
    factors.push_back({{"element", x.element.to_string()},
                       {"role", x.derived() ? "block-identity" : "block-permutation"},
                       {"block", x.block}});
  }
  const auto back = recompose(fz);
  r.witnesses["factors"] = factors;
  r.witnesses["walk"] = fz.walk;
  r.witnesses["recomposed"] = back.to_string();
  r.verdict("recomposes", back == f, "product of " + std::to_string(fz.factors.size()) + " factors");
  r.verdict("factor_roles", roles, "each factor permutes its block or is its identity");
  return r;
}

Report stratify(const RunConfig& cfg) {
  Report r("stratify");
  auto l = load(cfg);
  const std::size_t w = require_window(cfg);
  r.inputs["family"] = l.echo;
  r.inputs["window"] = w;
  r.inputs["n"] = cfg.n ? Json(*cfg.n) : Json(nullptr);
  const auto family = build_family(l.spec);
  const auto s = cfg.n ? StratifiedSemigroup::displayed(family, *cfg.n) : StratifiedSemigroup::generated(family);
  const WindowedStructure ws(s, w);
  if (ws.estimated_size() > static_cast<double>(cfg.max_elements)) {
    throw UnsupportedConfiguration("windowed structure exceeds " + std::to_string(cfg.max_elements) + " elements");
  }
  const auto elements = ws.enumerate();
  Json counts = Json::object();
  for (const auto& [label, count] : stratum_counts(elements, ws.blocks())) counts[label] = count;
  r.witnesses["bounds"] = matrix_json(s.bounds());
  r.witnesses["contains_empty"] = s.contains_empty();
  r.witnesses["total"] = elements.size();
  r.witnesses["strata"] = counts;
  return r;
}

Report verify_prop22(const RunConfig& cfg) {
  Report r("verify prop22");
  auto l = load(cfg);
  const std::size_t w = require_window(cfg);
  if (!cfg.n) throw UsageError("--n is required");
  r.inputs["family"] = l.echo;
  r.inputs["n"] = *cfg.n;
  r.inputs["window"] = w;
  const auto family = build_family(l.spec);
  const auto v = check_prop22(family, *cfg.n, w, cfg.max_elements);
  const bool predicted = family.max_intersection() <= *cfg.n;
  r.witnesses["closed"] = v.closed;
  r.witnesses["max_intersection"] = family.max_intersection();
  if (v.violation) {
    const auto& x = *v.violation;
    const std::size_t size = x.composite_window.size();
    r.witnesses["violation"] = {{"i", x.i},
                                {"j", x.j},
                                {"f", x.f.to_string()},
                                {"g", x.g.to_string()},
                                {"composite", x.composite.to_string()},
                                {"composite_window", x.composite_window.to_string()},
                                {"stratum", x.stratum.to_string()},
                                {"dom_size", size}};
    const bool shape = size == family.weight(x.i, x.j) && size > *cfg.n;
    r.verdict("prop22", !predicted && shape,
              "f o g has |dom| = " + std::to_string(size) + " = |B" + std::to_string(x.i) + " n B" + std::to_string(x.j) +
                  "| > " + std::to_string(*cfg.n));
  } else {
    r.witnesses["certificate"] = {{"elements", v.elements}, {"generators", v.generators}, {"products", v.products}};
    r.verdict("prop22", predicted && v.closed,
              "windowed union of " + std::to_string(v.elements) + " elements closed under composition and inverse");
  }
  return r;
}

Report verify_nonpp(const RunConfig& cfg) {
  Report r("verify nonpp");
  const std::uint64_t seed = require_seed(cfg);
  const std::size_t trials = cfg.trials.value_or(50);
  const auto ideal = IdealModel::parse(cfg.ideal);
  const auto a = SetDescriptor::parse(cfg.a_set);
  r.seed = seed;
  r.inputs["ideal"] = ideal.to_string();
  r.inputs["a"] = a.to_string();
  r.inputs["trials"] = trials;
  Json list = Json::array();
  std::size_t certified = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(Rng::derive(seed, t));
    const auto v = random_basic_open(rng);
    const auto w = nonpp_witness(v, ideal, a);
    certified += w.certified() ? 1 : 0;
    list.push_back({{"open", v.to_string()},
                    {"f", w.f.to_string()},
                    {"j", w.j.to_string()},
                    {"dom_complement", w.dom_complement.to_string()},
                    {"im_complement", w.im_complement.to_string()},
                    {"clauses",
                     {{"f_in_open", w.in_open},
                      {"dom_complement_in_j", w.dom_complement_in_j},
                      {"dom_complement_outside_i", w.dom_complement_outside_i},
                      {"im_complement_in_j", w.im_complement_in_j},
                      {"im_complement_outside_i", w.im_complement_outside_i},
                      {"dom_identity", w.dom_identity},
                      {"im_identity", w.im_identity}}}});
  }
  r.witnesses["trials"] = list;
  r.verdict("nonpp_witness", certified == trials,
            std::to_string(certified) + "/" + std::to_string(trials) + " witnesses certified");
  return r;
}

Report verify_pettis_witness(const RunConfig& cfg) {
  Report r("verify pettis-witness");
  const std::uint64_t seed = require_seed(cfg);
  const std::size_t trials = cfg.trials.value_or(100);
  if (!cfg.family_path.empty()) {
    auto l = load(cfg);
    r.inputs["family"] = l.echo;
    if (!l.spec.two_adic) {
      throw UnsupportedFamily("pettis-witness needs the infinite two-adic family; a finite one-point family "
                              "makes 1_{0} isolated");
    }
  }
  r.seed = seed;
  r.inputs["trials"] = trials;
  const auto rep = pettis_witness_unpunto(trials, seed);
  r.witnesses["a"] = rep.a.to_string();
  r.witnesses["a_inverse_a"] = rep.product.to_string();
  Json list = Json::array();
  std::size_t ok = 0;
  for (const auto& t : rep.trials) {
    ok += t.ok ? 1 : 0;
    list.push_back({{"open", t.open.to_string()},
                    {"witness", t.witness.to_string()},
                    {"block", t.block},
                    {"trace", t.trace},
                    {"ok", t.ok}});
  }
  r.witnesses["trials"] = list;
  r.verdict("a_inverse_a_is_u0", rep.product_is_u0, "A^-1 A = {" + rep.product.to_string() + "}");
  r.verdict("open_neighbourhoods_not_singletons", ok == rep.trials.size(),
            std::to_string(ok) + "/" + std::to_string(rep.trials.size()) + " opens hold another member");
  return r;
}

namespace {

SequenceSchema::Kind parse_schema(const std::string& s) {
  for (auto k : {SequenceSchema::Kind::BlockIdentities, SequenceSchema::Kind::SingletonIdentities,
                 SequenceSchema::Kind::GrowingExtensions, SequenceSchema::Kind::GroupNeighbors}) {
    if (s == to_string(k)) return k;
  }
  throw UsageError("unknown schema '" + s +
                   "' (block-identities, singleton-identities, growing-extensions, group-neighbors)");
}

Json convergence_json(const SequenceSchema& seq, const SymElement& limit, const ConvergenceResult& c) {
  Json j;
  j["schema"] = seq.to_string();
  j["limit"] = limit.to_string();
  j["converges"] = c.converges;
  j["detail"] = c.detail;
  Json certs = Json::array();
  for (const auto& p : c.certificates) certs.push_back({p.x, p.clause, p.n0});
  j["certificates"] = certs;
  if (c.counterexample) {
    j["counterexample"] = {{"x", c.counterexample->x},
                           {"clause", c.counterexample->clause == 1 ? "i" : "ii"},
                           {"reason", c.counterexample->reason}};
  }
  return j;
}

}  // namespace

Report verify_convergence(const RunConfig& cfg) {
  Report r("verify convergence");
  if (cfg.schema.empty()) throw UsageError("--schema is required");
  const auto kind = parse_schema(cfg.schema);
  r.inputs["schema"] = cfg.schema;
  r.inputs["horizon"] = cfg.horizon;
  r.inputs["expect"] = cfg.expect_converge ? "converge" : "diverge";

  std::vector<std::pair<SequenceSchema, SymElement>> runs;
  if (kind == SequenceSchema::Kind::GrowingExtensions && cfg.base.empty()) {
    const std::uint64_t seed = require_seed(cfg);
    const std::size_t count = cfg.trials.value_or(20);
    r.seed = seed;
    r.inputs["random_bases"] = count;
    Rng rng(seed);
    while (runs.size() < count) {
      auto base = random_sym_element(rng, 20);
      try {
        auto seq = SequenceSchema::growing_extensions(base, SetDescriptor::naturals(), SetDescriptor::naturals());
        runs.emplace_back(std::move(seq), base);
      } catch (const ContractViolation&) {
      }
    }
  } else {
    SymElement base;
    if (!cfg.base.empty()) base = SymElement::parse(cfg.base);
    SequenceSchema seq;
    switch (kind) {
      case SequenceSchema::Kind::BlockIdentities: seq = SequenceSchema::block_identities(); break;
      case SequenceSchema::Kind::SingletonIdentities: seq = SequenceSchema::singleton_identities(); break;
      case SequenceSchema::Kind::GrowingExtensions:
        seq = SequenceSchema::growing_extensions(base, SetDescriptor::parse(cfg.dom_pool),
                                                 SetDescriptor::parse(cfg.im_pool));
        break;
      case SequenceSchema::Kind::GroupNeighbors:
        if (cfg.base.empty()) throw UsageError("group-neighbors needs --base");
        seq = SequenceSchema::group_neighbors(base, base.domain());
        break;
    }
    if (cfg.limit.empty() && cfg.base.empty()) throw UsageError("--limit is required");
    const auto limit = cfg.limit.empty() ? base : SymElement::parse(cfg.limit);
    r.inputs["limit"] = limit.to_string();
    if (!cfg.base.empty()) r.inputs["base"] = base.to_string();
    runs.emplace_back(std::move(seq), limit);
  }

  Json list = Json::array();
  std::size_t matched = 0;
  for (const auto& [seq, limit] : runs) {
    const auto c = check_convergence(seq, limit, cfg.horizon);
    matched += c.converges == cfg.expect_converge ? 1 : 0;
    list.push_back(convergence_json(seq, limit, c));
  }
  r.witnesses["runs"] = list;
  r.verdict("convergence", matched == runs.size(),
            std::to_string(matched) + "/" + std::to_string(runs.size()) + " runs " +
                (cfg.expect_converge ? "converge" : "diverge") + " as expected");
  return r;
}

Report verify_sc_laws(const RunConfig& cfg) {
  Report r("verify sc-laws");
  if (cfg.collection.empty()) throw UsageError("--collection is required");
  const std::uint64_t seed = require_seed(cfg);
  const auto c = parse_collection(cfg.collection);
  SCLawOptions opt;
  opt.window = cfg.window.value_or(5);
  if (opt.window == 0 || opt.window > 6) throw UsageError("--window for sc-laws must lie in [1, 6]");
  opt.opens = cfg.trials.value_or(100);
  opt.seed = seed;
  r.seed = seed;
  r.inputs["collection"] = c.to_string();
  r.inputs["window"] = opt.window;
  r.inputs["opens"] = opt.opens;
  r.inputs["flags"] = {{"hereditary", c.hereditary()},
                       {"upward_closed", c.upward_closed()},
                       {"contains_all_finite", c.contains_all_finite()}};
  Json laws = Json::object();
  for (const auto& v : check_SC_laws(c, opt)) {
    Status s = Status::NotChecked;
    switch (v.status) {
      case LawVerdict::Status::Pass: s = Status::Pass; break;
      case LawVerdict::Status::Fail: s = Status::Fail; break;
      case LawVerdict::Status::NotApplicable: s = Status::NotApplicable; break;
      case LawVerdict::Status::NotChecked: s = Status::NotChecked; break;
    }
    laws[v.law] = {{"detail", v.detail}, {"witness", v.witness}};
    r.verdict("law_" + v.law, s, v.detail);
  }
  r.witnesses["laws"] = laws;
  return r;
}

Report verify_isolated(const RunConfig& cfg) {
  Report r("verify isolated");
  auto l = load(cfg);
  if (cfg.elements.empty()) throw UsageError("at least one --element is required");
  r.inputs["family"] = l.echo;
  std::optional<ProbeSemigroup> s;
  std::vector<SetDescriptor> blocks = l.spec.blocks;
  if (l.spec.two_adic) {
    s = ProbeSemigroup::unpunto();
  } else {
    const auto family = build_family(l.spec);
    s = ProbeSemigroup::pettis(family, cfg.n.value_or(family.max_intersection()));
  }
  r.inputs["semigroup"] = s->to_string();
  r.inputs["elements"] = cfg.elements;
  r.inputs["windows"] = cfg.windows;

  std::vector<SymElement> points;
  Json list = Json::array();
  for (const auto& text : cfg.elements) {
    const auto f = SymElement::parse(text, blocks);
    points.push_back(f);
    const auto c = isolated_certificate(f, *s);
    Json j = certificate_json(c);
    r.verdict("certified " + f.to_string(), c.certified(), to_string(c.verdict));
    if (c.verdict == IsolationResult::Verdict::Isolated) {
      std::vector<std::size_t> windows = cfg.windows;
      if (windows.empty()) {
        Point top = 12;
        for (Point x : c.open->points()) top = std::max(top, x + 1);
        windows = {top, top + 8, top + 16};
      }
      Json searches = Json::array();
      bool all = true;
      for (auto w : windows) {
        const auto search = verify_singleton(*c.open, f, *s, w);
        all = all && search.singleton;
        Json members = Json::array();
        for (const auto& m : search.members) members.push_back(m.to_string());
        searches.push_back({{"window", w}, {"singleton", search.singleton}, {"members", members}});
      }
      j["windowed_search"] = searches;
      r.verdict("windowed singleton " + f.to_string(), all, "V meets the windowed structure only in f");
    }
    list.push_back(j);
  }
  r.witnesses["certificates"] = list;

  if (cfg.inverse_check) {
    const auto rep = isolated_inverse_check(points, *s);
    Json entries = Json::array();
    for (const auto& e : rep.entries) {
      Json j{{"x", e.x.to_string()}, {"product", e.product.to_string()}, {"skipped", e.skipped}, {"ok", e.ok}};
      if (!e.skipped) j["product_certificate"] = certificate_json(e.product_result);
      entries.push_back(j);
    }
    r.witnesses["inverse_check"] = entries;
    if (s->kind() == ProbeSemigroup::Kind::Pettis) {
      r.verdict("inverse_products_isolated", rep.ok(), "x^-1 x is isolated for every isolated x");
    } else {
      const bool found = std::any_of(rep.entries.begin(), rep.entries.end(), [](const InverseCheckEntry& e) {
        return !e.skipped && !e.ok && e.product_result.verdict == IsolationResult::Verdict::NotIsolated &&
               e.product_result.certified();
      });
      r.verdict("pettis_obstruction_found", found, "an isolated x with x^-1 x certified non-isolated");
    }
  }
  return r;
}

}  // namespace pbij::cli
