#include "phasecomp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "phasecomp/errors.hpp"

namespace phasecomp::io {

namespace {

[[noreturn]] void bad(const std::string& msg) {
  throw InvalidArgument("malformed JSON input: " + msg);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

int read_size(const Json& j) {
  const Json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0) {
    bad("\"n\" must be a nonnegative integer");
  }
  return n.get<int>();
}

int read_index(const Json& v, int n) {
  if (!v.is_number_integer()) bad("indices must be integers");
  const long long i = v.get<long long>();
  if (i < 1 || i > n) {
    bad("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  return static_cast<int>(i - 1);
}

double read_real(const Json& v) {
  if (!v.is_number()) bad("matrix values must be numbers");
  return v.get<double>();
}

std::vector<Edge> read_edges(const Json& j, int n) {
  const Json& e = field(j, "edges");
  if (!e.is_array()) bad("\"edges\" must be an array");
  std::vector<Edge> out;
  for (const Json& p : e) {
    if (!p.is_array() || p.size() != 2) bad("each edge must be [i, j]");
    out.emplace_back(read_index(p[0], n), read_index(p[1], n));
  }
  return out;
}

// Reads [[i, j, re, im], ...] into a dense matrix. Returns the set of
// positions seen so callers can check coverage.
ComplexMatrix read_entries(const Json& arr, int n, std::vector<char>& seen) {
  if (!arr.is_array()) bad("entry list must be an array");
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  seen.assign(static_cast<std::size_t>(n) * n, 0);
  for (const Json& e : arr) {
    if (!e.is_array() || e.size() != 4) bad("each entry must be [i, j, re, im]");
    const int i = read_index(e[0], n);
    const int k = read_index(e[1], n);
    char& s = seen[static_cast<std::size_t>(i) * n + k];
    if (s) {
      bad("duplicate entry (" + std::to_string(i + 1) + "," +
          std::to_string(k + 1) + ")");
    }
    s = 1;
    m(i, k) = Complex(read_real(e[2]), read_real(e[3]));
  }
  return m;
}

Json entries_of(const ComplexMatrix& m, auto&& keep) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (!keep(static_cast<int>(i), static_cast<int>(k))) continue;
      arr.push_back(Json::array({i + 1, k + 1, m(i, k).real(), m(i, k).imag()}));
    }
  }
  return arr;
}

template <class Pattern, class Spec>
void require_coverage(const Pattern& g, const std::vector<char>& seen,
                      Spec&& specified) {
  const int n = g.size();
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const bool s = seen[static_cast<std::size_t>(i) * n + k] != 0;
      if (s && !specified(i, k)) {
        bad("value given at unspecified position (" + std::to_string(i + 1) +
            "," + std::to_string(k + 1) + ")");
      }
      if (!s && specified(i, k)) {
        bad("missing value at specified position (" + std::to_string(i + 1) +
            "," + std::to_string(k + 1) + ")");
      }
    }
  }
}

Json clique_to_json(const Clique& k) {
  Json arr = Json::array();
  for (int v : k) arr.push_back(v + 1);
  return arr;
}

Clique clique_from_json(const Json& j, int n) {
  if (!j.is_array()) bad("clique must be an array");
  Clique k;
  for (const Json& v : j) k.push_back(read_index(v, n));
  return k;
}

}  // namespace

bool is_directed(const Json& j) {
  auto it = j.find("directed");
  return it != j.end() && it->is_boolean() && it->get<bool>();
}

PatternGraph pattern_from_json(const Json& j) {
  if (is_directed(j)) bad("expected an undirected pattern");
  const int n = read_size(j);
  const std::vector<Edge> e = read_edges(j, n);
  return PatternGraph(n, e);
}

DirectedPatternGraph directed_pattern_from_json(const Json& j) {
  const int n = read_size(j);
  const std::vector<Edge> e = read_edges(j, n);
  return DirectedPatternGraph(n, e);
}

Json to_json(const PatternGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u + 1, v + 1}));
  Json j;
  j["n"] = g.size();
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const DirectedPatternGraph& g) {
  Json arcs = Json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back(Json::array({u + 1, v + 1}));
  Json j;
  j["n"] = g.size();
  j["directed"] = true;
  j["edges"] = std::move(arcs);
  return j;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const int n = read_size(j);
  std::vector<char> seen;
  return read_entries(field(j, "entries"), n, seen);
}

Json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  Json j;
  j["n"] = m.rows();
  j["entries"] = entries_of(m, [&](int i, int k) {
    return m(i, k) != Complex(0.0, 0.0);
  });
  return j;
}

PartialMatrix partial_from_json(const Json& j) {
  PatternGraph g = pattern_from_json(j);
  std::vector<char> seen;
  const ComplexMatrix v = read_entries(field(j, "values"), g.size(), seen);
  require_coverage(g, seen, [&](int a, int b) { return g.has_edge(a, b); });
  return PartialMatrix(std::move(g), v);
}

DirectedPartialMatrix directed_partial_from_json(const Json& j) {
  DirectedPatternGraph g = directed_pattern_from_json(j);
  std::vector<char> seen;
  const ComplexMatrix v = read_entries(field(j, "values"), g.size(), seen);
  require_coverage(g, seen, [&](int a, int b) { return g.has_arc(a, b); });
  return DirectedPartialMatrix(std::move(g), v);
}

Json to_json(const PartialMatrix& pm) {
  Json j = to_json(pm.pattern());
  j["values"] = entries_of(pm.values(), [&](int a, int b) {
    return pm.specified(a, b);
  });
  return j;
}

MatrixInput matrix_input_from_json(const Json& j) {
  if (j.is_object() && j.contains("values")) return partial_from_json(j);
  return matrix_from_json(j);
}

Json to_json(const CliqueDecomposition& d) {
  Json out;
  Json summands = Json::array();
  for (const CliqueSummand& s : d.summands) {
    Json e;
    e["clique"] = clique_to_json(s.clique);
    e["matrix"] = entries_of(s.matrix, [&](int a, int b) {
      return s.matrix(a, b) != Complex(0.0, 0.0);
    });
    summands.push_back(std::move(e));
  }
  out["summands"] = std::move(summands);
  if (d.rank_one) {
    Json terms = Json::array();
    for (const RankOneEntry& r : *d.rank_one) {
      Json t = Json::array();
      for (Eigen::Index i = 0; i < r.t.size(); ++i) {
        t.push_back(Json::array({r.t(i).real(), r.t(i).imag()}));
      }
      Json e;
      e["clique"] = clique_to_json(r.clique);
      e["phi"] = r.phi;
      e["t"] = std::move(t);
      terms.push_back(std::move(e));
    }
    out["rank_one"] = std::move(terms);
  }
  return out;
}

CliqueDecomposition decomposition_from_json(const Json& j, int n) {
  CliqueDecomposition d;
  const Json& summands = field(j, "summands");
  if (!summands.is_array()) bad("\"summands\" must be an array");
  for (const Json& s : summands) {
    std::vector<char> seen;
    d.summands.push_back({clique_from_json(field(s, "clique"), n),
                          read_entries(field(s, "matrix"), n, seen)});
  }
  if (j.contains("rank_one")) {
    d.rank_one.emplace();
    for (const Json& r : j["rank_one"]) {
      RankOneEntry e;
      e.clique = clique_from_json(field(r, "clique"), n);
      e.phi = read_real(field(r, "phi"));
      const Json& t = field(r, "t");
      if (!t.is_array() || t.size() != e.clique.size()) {
        bad("rank-one vector length must match its clique");
      }
      e.t.resize(static_cast<Eigen::Index>(t.size()));
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (!t[i].is_array() || t[i].size() != 2) bad("expected [re, im]");
        e.t(static_cast<Eigen::Index>(i)) =
            Complex(read_real(t[i][0]), read_real(t[i][1]));
      }
      d.rank_one->push_back(std::move(e));
    }
  }
  return d;
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InvalidArgument(path.string() + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": JSON parse error");
  }
}

void save_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace phasecomp::io
