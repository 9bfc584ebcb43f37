#include "fgsm/instance_io.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_set>

namespace fgsm {

namespace {

// One whitespace-tokenized line; returns false once the line is spent.
struct LineReader {
  std::istringstream in;
  int line_no;

  LineReader(std::string_view line, int no)
      : in(std::string(line)), line_no(no) {}

  int read_int(const char* what) {
    long long x = 0;
    if (!(in >> x))
      throw ParseError(line_no, std::string("expected ") + what);
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
      throw ParseError(line_no, std::string(what) + " out of range");
    return static_cast<int>(x);
  }

  void expect_end() {
    std::string extra;
    if (in >> extra)
      throw ParseError(line_no, "unexpected trailing token '" + extra + "'");
  }
};

void apply_overrides(std::vector<int>& caps,
                     const std::vector<std::pair<int, int>>& overrides,
                     const char* side) {
  for (const auto& [vertex, cap] : overrides) {
    if (vertex < 0 || vertex >= static_cast<int>(caps.size()))
      throw InvalidVertex(std::string(side) + " capacity override out of range");
    caps[vertex] = cap;
  }
}

}  // namespace

std::string InstanceFile::serialize() const {
  std::string out = "p fgsm " + std::to_string(nu) + " " + std::to_string(nv) +
                    " " + std::to_string(edges.size()) + "\n";
  auto fo = f_overrides;
  std::sort(fo.begin(), fo.end());
  for (const auto& [u, cap] : fo)
    out += "f " + std::to_string(u + 1) + " " + std::to_string(cap) + "\n";
  auto go = g_overrides;
  std::sort(go.begin(), go.end());
  for (const auto& [v, cap] : go)
    out += "g " + std::to_string(v + 1) + " " + std::to_string(cap) + "\n";
  for (const Edge& e : edges)
    out += "e " + std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

std::pair<BipartiteGraph, Capacities> InstanceFile::instantiate() const {
  Capacities caps{std::vector<int>(nu, 1), std::vector<int>(nv, 1)};
  apply_overrides(caps.f, f_overrides, "f");
  apply_overrides(caps.g, g_overrides, "g");
  return {BipartiteGraph(nu, nv, edges), std::move(caps)};
}

InstanceFile parse_instance(std::string_view text) {
  InstanceFile inst;
  bool have_header = false;
  int declared_m = 0;
  std::vector<char> f_seen, g_seen;
  std::unordered_set<long long> edge_seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    LineReader reader(line, line_no);
    std::string tag;
    if (!(reader.in >> tag)) continue;  // blank line
    if (tag == "c") continue;

    if (tag == "p") {
      if (have_header) throw ParseError(line_no, "second 'p' line");
      std::string format;
      if (!(reader.in >> format) || format != "fgsm")
        throw ParseError(line_no, "expected 'p fgsm <nu> <nv> <m>'");
      inst.nu = reader.read_int("U vertex count");
      inst.nv = reader.read_int("V vertex count");
      declared_m = reader.read_int("edge count");
      reader.expect_end();
      if (inst.nu < 0 || inst.nv < 0 || declared_m < 0)
        throw ParseError(line_no, "negative counts in header");
      f_seen.assign(inst.nu, 0);
      g_seen.assign(inst.nv, 0);
      have_header = true;
      continue;
    }
    if (!have_header)
      throw ParseError(line_no, "'" + tag + "' line before the 'p' header");

    if (tag == "f" || tag == "g") {
      const bool on_u = tag == "f";
      const int vertex = reader.read_int("vertex index");
      const int cap = reader.read_int("capacity");
      reader.expect_end();
      const int bound = on_u ? inst.nu : inst.nv;
      if (vertex < 1 || vertex > bound)
        throw InvalidVertex("line " + std::to_string(line_no) + ": " + tag +
                            " vertex " + std::to_string(vertex) +
                            " out of range");
      if (cap < 0) throw ParseError(line_no, "negative capacity");
      auto& seen = on_u ? f_seen : g_seen;
      if (seen[vertex - 1])
        throw ParseError(line_no, "duplicate " + tag + " line for vertex " +
                                      std::to_string(vertex));
      seen[vertex - 1] = 1;
      auto& overrides = on_u ? inst.f_overrides : inst.g_overrides;
      overrides.emplace_back(vertex - 1, cap);
      continue;
    }

    if (tag == "e") {
      const int u = reader.read_int("U endpoint");
      const int v = reader.read_int("V endpoint");
      reader.expect_end();
      if (u < 1 || u > inst.nu)
        throw InvalidVertex("line " + std::to_string(line_no) +
                            ": U endpoint " + std::to_string(u) +
                            " out of range");
      if (v < 1 || v > inst.nv)
        throw InvalidVertex("line " + std::to_string(line_no) +
                            ": V endpoint " + std::to_string(v) +
                            " out of range");
      if (static_cast<int>(inst.edges.size()) == declared_m)
        throw ParseError(line_no, "more edges than the header declares");
      const long long key = static_cast<long long>(u - 1) * inst.nv + (v - 1);
      if (!edge_seen.insert(key).second)
        throw DuplicateEdge("line " + std::to_string(line_no) +
                            ": duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
      inst.edges.push_back({u - 1, v - 1});
      continue;
    }

    throw ParseError(line_no, "unknown line type '" + tag + "'");
  }

  if (!have_header) throw ParseError(line_no + 1, "missing 'p fgsm' header");
  if (static_cast<int>(inst.edges.size()) != declared_m)
    throw ParseError(line_no,
                     "header declares " + std::to_string(declared_m) +
                         " edges but " + std::to_string(inst.edges.size()) +
                         " were given");
  return inst;
}

InstanceFile generate(int nu, int nv, int m, int fmax, int gmax,
                      std::uint64_t seed) {
  if (nu < 0 || nv < 0 || m < 0) throw Error("generate: negative argument");
  if (fmax < 1 || gmax < 1) throw Error("generate: capacity bounds must be >= 1");
  if (static_cast<long long>(m) > static_cast<long long>(nu) * nv)
    throw Error("generate: more edges requested than the grid holds");

  SplitMix64 rng(seed);
  InstanceFile inst;
  inst.nu = nu;
  inst.nv = nv;
  for (int u = 0; u < nu; ++u) {
    const int cap = rng.next_in(fmax);
    if (cap != 1) inst.f_overrides.emplace_back(u, cap);
  }
  for (int v = 0; v < nv; ++v) {
    const int cap = rng.next_in(gmax);
    if (cap != 1) inst.g_overrides.emplace_back(v, cap);
  }

  std::unordered_set<long long> used;
  used.reserve(static_cast<std::size_t>(m) * 2);
  while (static_cast<int>(inst.edges.size()) < m) {
    const int u = static_cast<int>(rng.next() % static_cast<std::uint64_t>(nu));
    const int v = static_cast<int>(rng.next() % static_cast<std::uint64_t>(nv));
    if (used.insert(static_cast<long long>(u) * nv + v).second)
      inst.edges.push_back({u, v});
  }
  return inst;
}

std::string emit_solution(const BipartiteGraph& graph, const SemiMatching& m,
                          const SolveStats& stats) {
  std::string out = "s size " + std::to_string(m.size()) + "\n";
  for (int e = 0; e < graph.edge_count(); ++e) {
    if (!m.contains(e)) continue;
    const Edge& ed = graph.edge(e);
    out += "m " + std::to_string(ed.u + 1) + " " + std::to_string(ed.v + 1) +
           "\n";
  }
  out += "i phases " + std::to_string(stats.phase_count()) + "\n";
  out += "i pathlens ";
  for (std::size_t i = 0; i < stats.phases.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(stats.phases[i].path_length);
  }
  out += "\n";
  return out;
}

Solution parse_solution(std::string_view text) {
  Solution sol;
  bool have_size = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                      : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;

    LineReader reader(line, line_no);
    std::string tag;
    if (!(reader.in >> tag)) continue;
    if (tag == "c" || tag == "i") continue;

    if (tag == "s") {
      std::string word;
      if (!(reader.in >> word) || word != "size")
        throw ParseError(line_no, "expected 's size <k>'");
      if (have_size) throw ParseError(line_no, "second 's size' line");
      sol.size = reader.read_int("matching size");
      reader.expect_end();
      if (sol.size < 0) throw ParseError(line_no, "negative matching size");
      have_size = true;
      continue;
    }
    if (tag == "m") {
      const int u = reader.read_int("U endpoint");
      const int v = reader.read_int("V endpoint");
      reader.expect_end();
      if (u < 1 || v < 1)
        throw ParseError(line_no, "solution endpoints are 1-based");
      sol.matched.push_back({u - 1, v - 1});
      continue;
    }
    throw ParseError(line_no, "unknown line type '" + tag + "'");
  }
  if (!have_size) throw ParseError(line_no + 1, "missing 's size' line");
  return sol;
}

}  // namespace fgsm
