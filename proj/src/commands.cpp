#include "dgmzv/commands.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dgmzv/double_shuffle.hpp"
#include "dgmzv/odd_mzv.hpp"
#include "dgmzv/period_poly.hpp"

namespace dgmzv {

namespace {

// safety bounds; beyond these a single cell runs for minutes
constexpr std::size_t dims_max_weight = 22, dims_max_depth = 5;
constexpr std::size_t odd_max_weight = 30, odd_max_depth = 6;
constexpr std::size_t t1_max_weight = 40;
constexpr unsigned period_max_weight = 60, exceptional_max_weight = 30;

std::string str(std::size_t x) { return std::to_string(x); }

// exponent vectors and compositions alike
template <class V>
std::string join(const V& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out;
}

Composition parse_composition(const std::string& s) {
  Composition out;
  std::istringstream is(s);
  std::string part;
  while (std::getline(is, part, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (used != part.size() || v < 1) throw UsageError("");
      out.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw UsageError("malformed composition: " + s);
    }
  }
  if (out.empty()) throw UsageError("empty composition");
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

void check_bounds(const RunConfig& cfg, std::size_t w, std::size_t d) {
  require(cfg.max_weight <= w, "--max-weight must be <= " + str(w) + " for " + cfg.command);
  require(cfg.max_depth <= d, "--max-depth must be <= " + str(d) + " for " + cfg.command);
}

unsigned even_weight(const RunConfig& cfg, unsigned lo, unsigned hi) {
  require(cfg.weight.has_value(), cfg.command + " needs --weight");
  const unsigned w = *cfg.weight;
  require(w % 2 == 0 && w >= lo && w <= hi,
          "--weight must be even and in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return w;
}

const char* generator_name(GeneratorChoice g) { return g == GeneratorChoice::paper ? "paper" : "canonical"; }

std::string status(bool ok) { return ok ? "ok" : "MISMATCH"; }

void add_poly_rows(Table& t, const std::vector<std::string>& prefix, const Poly& p) {
  for (const auto& [e, c] : p.terms()) {
    auto row = prefix;
    row.push_back(join(e));
    row.push_back(to_string(c));
    t.add_row(std::move(row));
  }
}

}  // namespace

void RunConfig::validate() const {
  require(format == "tsv" || format == "json", "--format must be tsv or json");
  require(jobs >= 1 && jobs <= 256, "--jobs must be in [1, 256]");
  require(max_weight >= 1, "--max-weight must be positive");
  require(max_depth >= 1, "--max-depth must be positive");
  require(target == "ls" || target == "odd" || target == "full-t1", "--target must be ls, odd or full-t1");
}

DimTable dimension_table(std::size_t max_weight, std::size_t max_depth, unsigned jobs) {
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t N = 1; N <= max_weight; ++N)
    for (std::size_t r = 1; r <= std::min(N, max_depth); ++r) cells.emplace_back(N, r);
  const auto dims = parallel_map<std::size_t>(cells.size(), jobs, [&](std::size_t i) {
    return solve(cells[i].first, cells[i].second).dimension();
  });
  DimTable out;
  for (std::size_t i = 0; i < cells.size(); ++i) out[cells[i]] = dims[i];
  return out;
}

DepthPoly named_element(const std::string& name) {
  auto number = [&]() -> unsigned {
    require(name.size() >= 2 && std::all_of(name.begin() + 1, name.end(), ::isdigit) && name.size() < 6,
            "malformed element name: " + name);
    return static_cast<unsigned>(std::stoul(name.substr(1)));
  };
  if (!name.empty() && name[0] == 'x') {
    const unsigned k = number();
    require(k >= 2 && k % 2 == 0, "generator x<k> needs even k >= 2: " + name);
    return DepthPoly::generator(k / 2);
  }
  if (!name.empty() && name[0] == 'e') {
    const unsigned w = number();
    require(w >= 12 && w % 2 == 0 && w <= exceptional_max_weight, "exceptional e<w> needs even 12 <= w <= 30");
    const auto sources = exceptional_sources(w, GeneratorChoice::paper);
    require(!sources.empty(), "no exceptional element in weight " + std::to_string(w) + " (dim S = 0)");
    return build_exceptional(sources.front().second, sources.front().first).reduced;
  }
  throw UsageError("unknown element name: " + name + " (expected x<k> or e<w>)");
}

CommandOutcome cmd_dims(const RunConfig& cfg) {
  check_bounds(cfg, dims_max_weight, dims_max_depth);
  CommandOutcome out;
  out.table.command = "dims";
  out.table.params = {{"max_weight", str(cfg.max_weight)}, {"max_depth", str(cfg.max_depth)}};
  out.table.columns = {"N", "r", "dim"};
  for (const auto& [key, dim] : dimension_table(cfg.max_weight, cfg.max_depth, cfg.jobs))
    out.table.add_row({str(key.first), str(key.second), str(dim)});
  return out;
}

CommandOutcome cmd_exceptional(const RunConfig& cfg) {
  const unsigned w = even_weight(cfg, 12, exceptional_max_weight);
  CommandOutcome out;
  out.table.command = "exceptional";
  out.table.params = {{"weight", std::to_string(w)}, {"generator", generator_name(cfg.generator)}};
  out.table.columns = {"element", "exponent", "coefficient"};
  const auto sources = exceptional_sources(w, cfg.generator);
  out.table.params.emplace_back("dim_S", str(sources.size()));
  if (sources.empty()) {
    out.exit_code = exit_domain;
    out.message = "dim S = 0 in weight " + std::to_string(w) + ": no exceptional element";
    return out;
  }
  std::vector<ExceptionalElement> elements;
  for (const auto& [name, f] : sources) elements.push_back(build_exceptional(f, name));
  for (const auto& e : elements) {
    out.table.params.emplace_back("source:" + e.source_name, to_pretty(e.source.P));
    out.table.params.emplace_back("terms:" + e.source_name, str(e.reduced.body().terms().size()));
    add_poly_rows(out.table, {e.source_name}, e.reduced.body());
  }
  return out;
}

CommandOutcome cmd_bk_check(const RunConfig& cfg) {
  CommandOutcome out;
  out.table.command = "bk-check";
  out.table.params = {{"target", cfg.target}, {"max_weight", str(cfg.max_weight)}};
  bool all_ok = true;
  if (cfg.target == "ls") {
    check_bounds(cfg, dims_max_weight, dims_max_depth);
    out.table.params.emplace_back("max_depth", str(cfg.max_depth));
    out.table.columns = {"weight", "depth", "lie_dim", "computed", "predicted", "status"};
    const auto dims = dimension_table(cfg.max_weight, cfg.max_depth, cfg.jobs);
    const auto enveloping = pbw(dims, cfg.max_weight, cfg.max_depth);
    const auto predicted = bk_series(BKKind::ls, cfg.max_weight, cfg.max_depth);
    for (const auto& [key, dim] : dims) {
      const auto [N, d] = key;
      const bool ok = enveloping.at(N, d) == predicted.at(N, d);
      all_ok = all_ok && ok;
      out.table.add_row({str(N), str(d), str(dim), enveloping.at(N, d).get_str(), predicted.at(N, d).get_str(),
                         status(ok)});
    }
  } else if (cfg.target == "odd") {
    check_bounds(cfg, odd_max_weight, odd_max_depth);
    out.table.params.emplace_back("max_depth", str(cfg.max_depth));
    out.table.columns = {"weight", "depth", "rank", "predicted", "status"};
    std::vector<std::pair<std::size_t, std::size_t>> cells;  // (weight, depth)
    for (std::size_t w = 1; w <= cfg.max_weight; ++w)
      for (std::size_t d = 1; d <= std::min(w, cfg.max_depth); ++d)
        if ((w - d) % 2 == 0) cells.emplace_back(w, d);
    const auto ranks = parallel_map<std::size_t>(cells.size(), cfg.jobs, [&](std::size_t i) -> std::size_t {
      const auto [w, d] = cells[i];
      const std::size_t N = (w - d) / 2;
      return N >= d ? odd_rank(N, d) : 0;
    });
    const auto predicted = bk_series(BKKind::odd, cfg.max_weight, cfg.max_depth);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto [w, d] = cells[i];
      const bool ok = predicted.at(w, d) == ranks[i];
      all_ok = all_ok && ok;
      out.table.add_row({str(w), str(d), str(ranks[i]), predicted.at(w, d).get_str(), status(ok)});
    }
  } else {
    require(cfg.max_weight <= t1_max_weight, "--max-weight must be <= 40 for full-t1");
    out.table.columns = {"weight", "computed", "predicted", "status"};
    const auto at1 = bk_series(BKKind::full, cfg.max_weight, cfg.max_weight).at_t_equals_one();
    const auto expected = hilbert_t1(cfg.max_weight);
    for (std::size_t w = 0; w <= cfg.max_weight; ++w) {
      const bool ok = at1[w] == expected[w];
      all_ok = all_ok && ok;
      out.table.add_row({str(w), at1[w].get_str(), expected[w].get_str(), status(ok)});
    }
  }
  out.table.params.emplace_back("result", all_ok ? "pass" : "fail");
  if (!all_ok) {
    out.exit_code = exit_domain;
    out.message = "bk-check: computed and predicted values differ (see MISMATCH rows)";
  }
  return out;
}

CommandOutcome cmd_bracket(const RunConfig& cfg) {
  require(!cfg.left.empty() && !cfg.right.empty(), "bracket needs --left and --right");
  const DepthPoly f = named_element(cfg.left), g = named_element(cfg.right);
  const DepthPoly b = bracket(f, g);
  CommandOutcome out;
  out.table.command = "bracket";
  out.table.params = {{"left", cfg.left},
                      {"right", cfg.right},
                      {"weight", str(b.weight())},
                      {"depth", str(b.depth())},
                      {"terms", str(b.body().terms().size())},
                      {"double_shuffle", membership_test(b) ? "pass" : "fail"}};
  out.table.columns = {"exponent", "coefficient"};
  add_poly_rows(out.table, {}, b.body());
  return out;
}

CommandOutcome cmd_express(const RunConfig& cfg) {
  const unsigned N = cfg.weight.value_or(12), r = cfg.depth.value_or(4);
  require(r >= 1 && r <= dims_max_depth && N >= r && N <= dims_max_weight, "express: need 1 <= depth <= 5, depth <= weight <= 22");
  Composition ref;
  if (!cfg.ref.empty()) {
    ref = parse_composition(cfg.ref);
  } else if (r == 4 && N >= 7) {
    ref = {1, 1, N - 4, 2};
  }
  if (!ref.empty())
    require(ref.size() == r && std::accumulate(ref.begin(), ref.end(), 0u) == N,
            "--ref must have " + std::to_string(r) + " parts summing to " + std::to_string(N));
  const SolutionSpace space = solve(N, r);
  CommandOutcome out;
  out.table.command = "express";
  out.table.params = {{"weight", std::to_string(N)}, {"depth", std::to_string(r)}, {"dim", str(space.dimension())}};
  out.table.columns = {"composition", "basis", "coefficient"};
  if (space.dimension() == 0) {
    out.exit_code = exit_domain;
    out.message = "dim D = 0 in weight " + std::to_string(N) + ", depth " + std::to_string(r);
    return out;
  }
  Rational scale = 1;
  if (space.dimension() == 1 && !ref.empty()) {
    const Rational at_ref = express_in_basis(ref, space).front();
    if (sgn(at_ref) != 0) {
      scale = 1 / at_ref;
      out.table.params.emplace_back("normalized_at", join(ref));
    }
  }
  for (const auto& n : compositions(N, r)) {
    const RVector v = express_in_basis(n, space);
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sgn(v[j]) != 0) out.table.add_row({join(n), str(j), to_string(v[j] * scale)});
  }
  return out;
}

CommandOutcome cmd_period(const RunConfig& cfg) {
  CommandOutcome out;
  out.table.command = "period";
  if (!cfg.weight) {
    require(cfg.max_weight <= period_max_weight, "--max-weight must be <= 60 for period");
    const auto S = eos(cfg.max_weight, 0).S;
    out.table.params = {{"max_weight", str(cfg.max_weight)}};
    out.table.columns = {"weight", "dim_W", "dim_S", "predicted_S", "status"};
    bool all_ok = true;
    for (unsigned w = 4; w <= cfg.max_weight; w += 2) {
      const std::size_t dw = basis_W(w).size(), ds = basis_S(w).size();
      const bool ok = S.at(w, 0) == ds && dw == ds + 1;
      all_ok = all_ok && ok;
      out.table.add_row({std::to_string(w), str(dw), str(ds), S.at(w, 0).get_str(), status(ok)});
    }
    if (!all_ok) {
      out.exit_code = exit_domain;
      out.message = "period: dimension mismatch";
    }
    return out;
  }
  const unsigned w = even_weight(cfg, 4, period_max_weight);
  const auto sources = exceptional_sources(w, GeneratorChoice::canonical);
  out.table.params = {{"weight", std::to_string(w)}, {"dim_W", str(basis_W(w).size())}, {"dim_S", str(sources.size())}};
  out.table.columns = {"element", "part", "exponent", "coefficient"};
  if (sources.empty()) {
    out.exit_code = exit_domain;
    out.message = "dim S = 0 in weight " + std::to_string(w);
    return out;
  }
  for (const auto& [name, f] : sources) {
    add_poly_rows(out.table, {name, "P"}, f.P);
    add_poly_rows(out.table, {name, "f0"}, f.f0);
    add_poly_rows(out.table, {name, "f1"}, f.f1);
  }
  return out;
}

CommandOutcome cmd_span(const RunConfig& cfg) {
  check_bounds(cfg, dims_max_weight, dims_max_depth);
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t N = 1; N <= cfg.max_weight; ++N)
    for (std::size_t r = 1; r <= std::min(N, cfg.max_depth); ++r) cells.emplace_back(N, r);
  const auto dims = parallel_map<std::pair<std::size_t, std::size_t>>(cells.size(), cfg.jobs, [&](std::size_t i) {
    const auto [N, r] = cells[i];
    return std::pair{iterated_bracket_span(N, r).dimension(), solve(N, r).dimension()};
  });
  CommandOutcome out;
  out.table.command = "span";
  out.table.params = {{"max_weight", str(cfg.max_weight)}, {"max_depth", str(cfg.max_depth)}};
  out.table.columns = {"N", "r", "span", "dim", "excess"};
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto [span, dim] = dims[i];
    if (span > dim) throw std::logic_error("span: brackets of generators left the solution space");
    out.table.add_row({str(cells[i].first), str(cells[i].second), str(span), str(dim), str(dim - span)});
  }
  return out;
}

CommandOutcome run_command(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.command == "dims") return cmd_dims(cfg);
  if (cfg.command == "exceptional") return cmd_exceptional(cfg);
  if (cfg.command == "bk-check") return cmd_bk_check(cfg);
  if (cfg.command == "bracket") return cmd_bracket(cfg);
  if (cfg.command == "express") return cmd_express(cfg);
  if (cfg.command == "period") return cmd_period(cfg);
  if (cfg.command == "span") return cmd_span(cfg);
  throw UsageError("unknown command: " + cfg.command);
}

}  // namespace dgmzv
