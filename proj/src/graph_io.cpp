#include "mdl/graph_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "mdl/errors.hpp"
#include "mdl/log.hpp"
#include "mdl/rational.hpp"

namespace mdl {

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("MDL_LOG");
    if (!env) return 0;
    std::string s(env);
    if (s == "0" || s == "off" || s.empty()) return 0;
    if (s == "1" || s == "info") return 1;
    if (s == "2" || s == "debug") return 2;
    return 1;
  }();
  return level;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  for (char c : text)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' ||
          c == '.' || c == '-' || c == '+'))
      throw ParseError("bad rational literal: " + text);

  // Base is pinned to 10: gmp's base-0 constructors would read a leading
  // zero as octal.
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      Rat q(text, 10);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + text);
    }
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac = text.size() - dot - 1;
    if (digits.empty() || frac == 0)
      throw ParseError("bad decimal literal: " + text);
    try {
      Rat num{mpz_class(digits, 10)};
      mpz_class den = 1;
      for (size_t i = 0; i < frac; ++i) den *= 10;
      Rat q = num / Rat(den);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad decimal literal: " + text);
    }
  }
  try {
    return Rat(mpz_class(text, 10));
  } catch (const std::invalid_argument&) {
    throw ParseError("bad integer literal: " + text);
  }
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag[0] == '#') continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError("duplicate p line at line " +
                                   std::to_string(lineno));
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw ParseError("bad p line at line " + std::to_string(lineno));
      edges.reserve(m);
    } else if (tag == "e") {
      if (n < 0) throw ParseError("e line before p line at line " +
                                  std::to_string(lineno));
      long u, v;
      if (!(ls >> u >> v))
        throw ParseError("bad e line at line " + std::to_string(lineno));
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError("unknown record '" + tag + "' at line " +
                       std::to_string(lineno));
    }
  }
  if (n < 0) throw ParseError("missing p line");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                     ", found " + std::to_string(edges.size()));
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return read_graph_text(in);
}

void write_graph_text(const Graph& g, std::ostream& out) {
  out << "p " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

void write_graph_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  write_graph_text(g, out);
  if (!out) throw ParseError("write failed: " + path);
}

}  // namespace mdl
