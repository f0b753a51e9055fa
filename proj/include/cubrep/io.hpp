#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "cubrep/crossing.hpp"
#include "cubrep/cube_builder.hpp"
#include "cubrep/errors.hpp"
#include "cubrep/graph.hpp"
#include "cubrep/numeric.hpp"
#include "cubrep/random_lab.hpp"
#include "cubrep/rng.hpp"

namespace cubrep::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Text helpers

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + path + "'");
  out << text;
}

namespace detail {

inline std::vector<std::string> tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream ss{std::string(line)};
  for (std::string t; ss >> t;) out.push_back(std::move(t));
  return out;
}

// Positive decimal integer, no sign, no junk.
inline std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
    throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return std::stoull(tok);
}

inline std::string strip_comment(const std::string& line, char mark) {
  const auto pos = line.find(mark);
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Graph files. Vertex ids on disk are 1-based.

enum class GraphFormat { automatic, edge_list, dimacs };

struct ParsedGraph {
  Graph graph;
  std::vector<std::string> warnings;
};

// Edge list: '#' comments, an optional first line holding only the vertex
// count, then "u v" per line. Without the count, n is the largest id.
// DIMACS: "c" comments, "p edge n m", "e u v".
inline ParsedGraph parse_graph_text(const std::string& text, GraphFormat format = GraphFormat::automatic) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in(text);
    std::size_t no = 0;
    for (std::string line; std::getline(in, line);) {
      ++no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.emplace_back(no, std::move(line));
    }
  }
  if (format == GraphFormat::automatic) {
    format = GraphFormat::edge_list;
    for (const auto& [no, line] : lines) {
      const auto t = detail::tokens(line);
      if (!t.empty() && t[0] == "p") {
        format = GraphFormat::dimacs;
        break;
      }
    }
  }

  ParsedGraph out;
  std::optional<std::uint64_t> n;
  std::vector<std::pair<std::size_t, std::pair<std::uint64_t, std::uint64_t>>> raw;
  std::optional<std::uint64_t> declared_m;
  bool seen_edge = false;

  for (const auto& [no, line] : lines) {
    if (format == GraphFormat::dimacs) {
      const auto t = detail::tokens(line);
      if (t.empty() || t[0] == "c") continue;
      if (t[0] == "p") {
        if (n) throw ParseError(no, "second problem line");
        if (t.size() != 4 || (t[1] != "edge" && t[1] != "col"))
          throw ParseError(no, "problem line must read 'p edge <n> <m>'");
        n = detail::parse_uint(t[2], no, "vertex count");
        declared_m = detail::parse_uint(t[3], no, "edge count");
      } else if (t[0] == "e") {
        if (!n) throw ParseError(no, "edge before problem line");
        if (t.size() != 3) throw ParseError(no, "edge line must read 'e <u> <v>'");
        raw.push_back({no, {detail::parse_uint(t[1], no, "vertex id"), detail::parse_uint(t[2], no, "vertex id")}});
      } else {
        throw ParseError(no, "unknown line type '" + t[0] + "'");
      }
    } else {
      const auto t = detail::tokens(detail::strip_comment(line, '#'));
      if (t.empty()) continue;
      if (t.size() == 1 && !seen_edge && !n) {
        n = detail::parse_uint(t[0], no, "vertex count");
        continue;
      }
      if (t.size() != 2) throw ParseError(no, "expected 'u v'");
      seen_edge = true;
      raw.push_back({no, {detail::parse_uint(t[0], no, "vertex id"), detail::parse_uint(t[1], no, "vertex id")}});
    }
  }
  if (format == GraphFormat::dimacs && !n) throw ParseError(lines.size(), "missing problem line");
  if (!n) {
    std::uint64_t mx = 0;
    for (const auto& r : raw) mx = std::max({mx, r.second.first, r.second.second});
    n = mx;
  }
  if (*n > (std::uint64_t{1} << 31)) throw ParseError(1, "vertex count too large");

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (const auto& [no, uv] : raw) {
    const auto [u, v] = uv;
    if (u < 1 || u > *n || v < 1 || v > *n)
      throw ParseError(no, "vertex id out of range 1.." + std::to_string(*n));
    if (u == v) throw ParseError(no, "self-loop on vertex " + std::to_string(u));
    const Edge e{static_cast<Vertex>(std::min(u, v) - 1), static_cast<Vertex>(std::max(u, v) - 1)};
    if (!seen.insert(e).second) {
      out.warnings.push_back("line " + std::to_string(no) + ": duplicate edge " + std::to_string(u) + " " +
                             std::to_string(v) + " ignored");
      continue;
    }
    edges.push_back(e);
  }
  if (declared_m && *declared_m != raw.size())
    out.warnings.push_back("problem line declares " + std::to_string(*declared_m) + " edges, file has " +
                           std::to_string(raw.size()));
  out.graph = Graph(*n, edges);
  return out;
}

inline ParsedGraph parse_graph(const std::string& path, GraphFormat format = GraphFormat::automatic) {
  return parse_graph_text(read_file(path), format);
}

inline std::string emit_graph(const Graph& g, GraphFormat format = GraphFormat::edge_list) {
  std::ostringstream out;
  if (format == GraphFormat::dimacs) {
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  } else {
    out << g.vertex_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Crossing lists: "u1 v1 u2 v2" per line, 1-based, '#' comments.

inline CrossingData parse_crossings_text(const std::string& text, std::size_t n) {
  CrossingData cd;
  std::istringstream in(text);
  std::size_t no = 0;
  for (std::string line; std::getline(in, line);) {
    ++no;
    const auto t = detail::tokens(detail::strip_comment(line, '#'));
    if (t.empty()) continue;
    if (t.size() != 4) throw ParseError(no, "expected 'u1 v1 u2 v2'");
    Vertex id[4];
    for (int i = 0; i < 4; ++i) {
      const auto x = detail::parse_uint(t[i], no, "vertex id");
      if (x < 1 || x > n) throw ParseError(no, "vertex id out of range 1.." + std::to_string(n));
      id[i] = static_cast<Vertex>(x - 1);
    }
    cd.crossings.push_back({{std::min(id[0], id[1]), std::max(id[0], id[1])},
                            {std::min(id[2], id[3]), std::max(id[2], id[3])}});
  }
  return cd;
}

inline std::string emit_crossings(const CrossingData& cd) {
  std::ostringstream out;
  for (const auto& [a, b] : cd.crossings)
    out << a.first + 1 << ' ' << a.second + 1 << ' ' << b.first + 1 << ' ' << b.second + 1 << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON helpers

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min<std::size_t>(e.byte, text.size()); ++i) line += text[i] == '\n';
    throw ParseError(line, "malformed JSON");
  }
}

namespace detail {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(0, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ParseError(0, std::string("field '") + key + "' has the wrong type");
  }
}

inline std::string hex64(std::uint64_t v) {
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << v;
  return s.str();
}

inline std::uint64_t unhex64(const std::string& s) {
  if (s.size() != 16 || s.find_first_not_of("0123456789abcdef") != std::string::npos)
    throw ParseError(0, "source_graph_hash must be 16 lowercase hex digits");
  return std::stoull(s, nullptr, 16);
}

}  // namespace detail

// Exact rationals as decimal strings so arbitrary sizes survive.
inline Json rational_json(const Rational& r) {
  return Json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

// Accepts an integer, "a/b", or {"num", "den"} with integer or string parts.
inline Rational parse_rational(const Json& j) {
  auto big = [](const Json& x) -> BigInt {
    if (x.is_number_integer()) return x.is_number_unsigned() ? BigInt(x.get<std::uint64_t>()) : BigInt(x.get<std::int64_t>());
    if (x.is_string()) {
      const auto s = x.get<std::string>();
      const bool neg = !s.empty() && s[0] == '-';
      const auto digits = s.substr(neg ? 1 : 0);
      if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError(0, "bad integer '" + s + "'");
      return BigInt(s);
    }
    throw ParseError(0, "expected an integer");
  };
  if (j.is_object()) {
    const BigInt den = big(detail::get<Json>(j, "den"));
    if (den == 0) throw ParseError(0, "zero denominator");
    return Rational(big(detail::get<Json>(j, "num")), den);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(big(Json(s)));
    const BigInt den = big(Json(s.substr(slash + 1)));
    if (den == 0) throw ParseError(0, "zero denominator");
    return Rational(big(Json(s.substr(0, slash))), den);
  }
  return Rational(big(j));
}

inline Json enclosure_json(const Enclosure& e) {
  return Json{{"exact", e.exact()}, {"lower", rational_json(e.lo)}, {"upper", rational_json(e.hi)}};
}

// ---------------------------------------------------------------------------
// Representations

inline BuildMode parse_mode(const std::string& s) {
  if (s == "det") return BuildMode::deterministic;
  if (s == "rand") return BuildMode::randomized;
  if (s == "decomposition") return BuildMode::decomposition;
  throw ParseError(0, "unknown mode '" + s + "'");
}

// The common length shared by every dimension, if any.
inline std::optional<std::int64_t> shared_length(const CubeRepresentation& rep) {
  if (rep.dims.empty() || !rep.dims.front().common_length) return std::nullopt;
  for (const auto& d : rep.dims)
    if (d.common_length != rep.dims.front().common_length) return std::nullopt;
  return rep.dims.front().common_length;
}

// Normalized endpoints are l/L with L the dimension's common length (left
// unreduced so the denominator reads as L); box dimensions use L = 1.
inline Json emit_representation_json(const CubeRepresentation& rep, bool normalize = false) {
  Json j;
  j["version"] = kFormatVersion;
  j["n"] = rep.vertex_count();
  j["k"] = rep.meta.k;
  j["mode"] = to_string(rep.meta.mode);
  j["seed"] = rep.meta.seed;
  j["rng"] = kRngName;
  j["stages"] = rep.meta.stages;
  j["palette_size"] = rep.meta.palette_size;
  j["attempts"] = rep.meta.attempts;
  j["universal_added"] = rep.meta.universal_added;
  j["pruned"] = rep.meta.pruned;
  j["source_graph_hash"] = detail::hex64(rep.source_graph_hash);
  const auto shared = shared_length(rep);
  j["common_length"] = shared ? Json(*shared) : Json(nullptr);
  j["normalized"] = normalize;
  Json dims = Json::array();
  for (const auto& d : rep.dims) {
    Json dj;
    dj["color_stage"] = Json{{"stage", d.label.stage}, {"color", d.label.color}};
    dj["common_length"] = d.common_length ? Json(*d.common_length) : Json(nullptr);
    Json iv = Json::array();
    const std::int64_t den = d.common_length.value_or(1);
    for (const auto& f : d.intervals) {
      if (normalize)
        iv.push_back(Json::array({Json{{"num", f.l}, {"den", den}}, Json{{"num", f.r}, {"den", den}}}));
      else
        iv.push_back(Json::array({f.l, f.r}));
    }
    dj["intervals"] = std::move(iv);
    dims.push_back(std::move(dj));
  }
  j["dims"] = std::move(dims);
  j["verified"] = true;
  j["dimension_bound"] = Json{{"formula_value", rep.meta.dimension_bound}, {"achieved", rep.dimension()}};
  return j;
}

inline std::string emit_representation(const CubeRepresentation& rep, bool normalize = false) {
  return dump(emit_representation_json(rep, normalize));
}

inline CubeRepresentation parse_representation_json(const Json& j) {
  if (!j.is_object()) throw ParseError(0, "representation must be a JSON object");
  if (detail::get<int>(j, "version") != kFormatVersion) throw ParseError(0, "unsupported version");
  CubeRepresentation rep;
  rep.meta.n = detail::get<std::size_t>(j, "n");
  rep.meta.k = detail::get<std::size_t>(j, "k");
  rep.meta.mode = parse_mode(detail::get<std::string>(j, "mode"));
  rep.meta.seed = detail::get<std::uint64_t>(j, "seed");
  rep.meta.stages = detail::get<std::size_t>(j, "stages");
  rep.meta.palette_size = detail::get<std::size_t>(j, "palette_size");
  rep.meta.attempts = detail::get<std::size_t>(j, "attempts");
  rep.meta.universal_added = detail::get<std::size_t>(j, "universal_added");
  rep.meta.pruned = detail::get<bool>(j, "pruned");
  rep.source_graph_hash = detail::unhex64(detail::get<std::string>(j, "source_graph_hash"));
  rep.meta.dimension_bound = detail::get<std::uint64_t>(detail::get<Json>(j, "dimension_bound"), "formula_value");
  const bool normalized = detail::get<bool>(j, "normalized");
  const auto dims = detail::get<Json>(j, "dims");
  if (!dims.is_array()) throw ParseError(0, "'dims' must be an array");
  for (std::size_t d = 0; d < dims.size(); ++d) {
    const Json& dj = dims[d];
    IntervalRep dim;
    const auto cs = detail::get<Json>(dj, "color_stage");
    dim.label.stage = detail::get<std::size_t>(cs, "stage");
    dim.label.color = detail::get<std::size_t>(cs, "color");
    const auto cl = detail::get<Json>(dj, "common_length");
    if (!cl.is_null()) dim.common_length = detail::get<std::int64_t>(dj, "common_length");
    const auto iv = detail::get<Json>(dj, "intervals");
    if (!iv.is_array() || iv.size() != rep.meta.n)
      throw ParseError(0, "dimension " + std::to_string(d) + " must list " + std::to_string(rep.meta.n) + " intervals");
    const std::int64_t scale = dim.common_length.value_or(1);
    auto endpoint = [&](const Json& e) -> std::int64_t {
      if (!normalized) {
        if (!e.is_number_integer()) throw ParseError(0, "interval endpoints must be integers");
        return e.get<std::int64_t>();
      }
      const Rational r = parse_rational(e);
      const Rational scaled = r * Rational(scale);
      if (boost::multiprecision::denominator(scaled) != 1)
        throw ParseError(0, "normalized endpoint is not a multiple of 1/common_length");
      return static_cast<std::int64_t>(boost::multiprecision::numerator(scaled));
    };
    for (const auto& f : iv) {
      if (!f.is_array() || f.size() != 2) throw ParseError(0, "interval must be a pair");
      dim.intervals.push_back({endpoint(f[0]), endpoint(f[1])});
      if (dim.intervals.back().l > dim.intervals.back().r) throw ParseError(0, "interval with l > r");
    }
    rep.dims.push_back(std::move(dim));
  }
  return rep;
}

inline CubeRepresentation parse_representation(const std::string& text) {
  return parse_representation_json(parse_json(text));
}

// ---------------------------------------------------------------------------
// Bounds, bound trace, crossing pipeline

inline Json bound_report_json(const BoundReport& r) {
  Json j;
  j["version"] = kFormatVersion;
  j["n"] = r.n;
  j["m"] = r.m;
  j["t"] = r.t;
  Json b = Json::array();
  for (const auto& x : r.bounds) {
    Json e;
    e["name"] = x.name;
    e["formula"] = x.formula;
    e["applicable"] = x.applicable;
    e["value"] = enclosure_json(x.value);
    b.push_back(std::move(e));
  }
  j["bounds"] = std::move(b);
  return j;
}

inline Json bound_trace_json(const BoundTrace& tr) {
  Json j;
  j["t"] = tr.t;
  j["h_vertices"] = tr.h_vertices;
  j["h_edges"] = tr.h_edges;
  j["peel_degrees"] = tr.peel_degrees;
  j["total_bound"] = enclosure_json(tr.total_bound);
  if (tr.t == 0) {
    j["status"] = "planar";
    return j;
  }
  j["log_ceiling"] = tr.log_ceiling;
  j["threshold"] = enclosure_json(tr.threshold);
  j["stable_part_bound"] = enclosure_json(tr.stable_part_bound);
  j["tail_vertex_bound"] = enclosure_json(tr.tail_vertex_bound);
  j["tail_box_bound"] = enclosure_json(tr.tail_box_bound);
  if (!tr.split) {
    j["status"] = "split not reached";
    return j;
  }
  j["status"] = "split";
  j["split"] = *tr.split;
  j["tail_vertices"] = tr.tail_vertices;
  j["tail_edges"] = tr.tail_edges;
  j["tail_average_degree"] = rational_json(tr.tail_average_degree);
  j["tail_within_bound"] = tr.tail_within_bound;
  return j;
}

// Wraps pipeline dimensions as a decomposition-mode representation.
inline CubeRepresentation decomposition_representation(const Graph& g, const CrossingPipelineResult& res) {
  CubeRepresentation rep;
  rep.dims = res.dims;
  rep.source_graph_hash = graph_digest(g);
  rep.meta.n = g.vertex_count();
  rep.meta.k = degeneracy_order(g).k;
  rep.meta.mode = BuildMode::decomposition;
  rep.meta.dimension_bound = 2 * res.stable_dims.size() + res.universal_dims.size();
  return rep;
}

inline Json crossing_pipeline_json(const Graph& g, const CrossingPipelineResult& res, bool normalize = false) {
  Json j;
  j["version"] = kFormatVersion;
  Json part_b = Json::array();
  for (Vertex v : res.partition.part_b) part_b.push_back(v + 1);
  j["part_b"] = std::move(part_b);
  j["stable_dims"] = res.stable_dims.size();
  j["clique_dims"] = res.clique_dims.size();
  j["universal_dims"] = res.universal_dims.size();
  j["warnings"] = res.warnings;
  j["representation"] = emit_representation_json(decomposition_representation(g, res), normalize);
  j["bound_trace"] = bound_trace_json(res.trace);
  return j;
}

// ---------------------------------------------------------------------------
// Experiments

// {"experiment": "degeneracy" | "cubicity",
//  "model": {"kind": "gnp", "n": .., "p": r} | {"kind": "gnp", "n": .., "c": r}
//         | {"kind": "gnm", "n": .., "m": ..},
//  "trials": .., "master_seed": .., "checks": [..], "threads": ..}
inline ExperimentSpec parse_experiment_spec_json(const Json& j) {
  if (!j.is_object()) throw ParseError(0, "experiment spec must be a JSON object");
  ExperimentSpec s;
  const auto kind = detail::get<std::string>(j, "experiment");
  if (kind == "degeneracy")
    s.kind = ExperimentKind::degeneracy;
  else if (kind == "cubicity")
    s.kind = ExperimentKind::cubicity;
  else
    throw ParseError(0, "unknown experiment '" + kind + "'");
  const auto model = detail::get<Json>(j, "model");
  const auto mk = detail::get<std::string>(model, "kind");
  s.n = detail::get<std::size_t>(model, "n");
  if (mk == "gnp") {
    s.model = ModelKind::gnp;
    const bool has_p = model.contains("p"), has_c = model.contains("c");
    if (has_p == has_c) throw ParseError(0, "gnp model takes exactly one of 'p' and 'c'");
    if (has_p) {
      s.p = parse_rational(model.at("p"));
    } else {
      if (s.n < 2) throw ParseError(0, "'c' needs n >= 2");
      s.p = parse_rational(model.at("c")) / Rational(s.n - 1);
    }
  } else if (mk == "gnm") {
    s.model = ModelKind::gnm;
    s.m = detail::get<std::uint64_t>(model, "m");
  } else {
    throw ParseError(0, "unknown model '" + mk + "'");
  }
  s.trials = detail::get<std::size_t>(j, "trials");
  s.master_seed = detail::get<std::uint64_t>(j, "master_seed");
  if (j.contains("checks")) s.checks = detail::get<std::vector<std::string>>(j, "checks");
  if (j.contains("threads")) s.threads = detail::get<unsigned>(j, "threads");
  return s;
}

inline ExperimentSpec parse_experiment_spec(const std::string& text) {
  return parse_experiment_spec_json(parse_json(text));
}

// Thread count is left out: it never changes the result.
inline Json experiment_spec_json(const ExperimentSpec& s) {
  Json model;
  model["kind"] = to_string(s.model);
  model["n"] = s.n;
  if (s.model == ModelKind::gnp) {
    model["p"] = rational_json(s.p);
  } else {
    model["m"] = s.m;
  }
  return Json{{"experiment", to_string(s.kind)}, {"model", model}, {"trials", s.trials},
              {"master_seed", s.master_seed}, {"checks", s.effective_checks()}};
}

inline Json experiment_result_json(const ExperimentResult& r) {
  Json j;
  j["version"] = kFormatVersion;
  j["rng"] = kRngName;
  j["spec"] = experiment_spec_json(r.spec);
  j["average_degree"] = rational_json(r.spec.average_degree());
  Json trials = Json::array();
  for (const auto& t : r.trials) {
    Json tj;
    tj["index"] = t.index;
    tj["seed"] = t.seed;
    tj["edges"] = t.edges;
    tj["k"] = t.k;
    if (t.dims) tj["dims"] = *t.dims;
    if (t.verified) tj["verified"] = *t.verified;
    if (t.attempts) tj["attempts"] = *t.attempts;
    Json checks = Json::object();
    for (const auto& c : t.checks) checks[c.name] = c.passed;
    tj["checks"] = std::move(checks);
    trials.push_back(std::move(tj));
  }
  j["trials"] = std::move(trials);
  Json summary = Json::array();
  for (const auto& c : r.summary)
    summary.push_back(Json{{"check", c.name},
                           {"threshold", c.threshold},
                           {"passed", c.passed},
                           {"total", c.total},
                           {"fraction", rational_json(c.fraction())}});
  j["summary"] = std::move(summary);
  return j;
}

}  // namespace cubrep::io
