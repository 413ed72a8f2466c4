#include "prodstab/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "prodstab/errors.hpp"

namespace prodstab {

namespace {

bool read_int(std::istream& in, long long& out) { return bool(in >> out); }

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  long long n, m;
  if (!read_int(in, n) || !read_int(in, m))
    throw GraphFormatError("edge list: malformed header, expected \"n m\"");
  if (n < 0 || m < 0) throw GraphFormatError("edge list: negative header value");
  Graph g(int(n));
  for (long long e = 0; e < m; ++e) {
    long long u, v;
    if (!read_int(in, u) || !read_int(in, v))
      throw GraphFormatError("edge list: truncated, expected " +
                             std::to_string(m) + " edges");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw GraphFormatError("edge list: vertex index out of range in edge " +
                             std::to_string(u) + " " + std::to_string(v));
    g.add_edge(int(u), int(v));
  }
  long long extra;
  if (read_int(in, extra)) throw GraphFormatError("edge list: trailing data");
  return g;
}

std::string emit_edge_list(const Graph& g) {
  auto es = g.edges();
  std::ostringstream out;
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph6(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
  if (s.empty()) throw GraphFormatError("graph6: empty input");
  for (char c : s)
    if (c < 63 || c > 126)
      throw GraphFormatError("graph6: byte out of printable range");
  if (s[0] == 126)
    throw GraphFormatError("graph6: orders above 62 not supported");
  int n = s[0] - 63;
  std::size_t need = (std::size_t(n) * (n - 1) / 2 + 5) / 6;
  if (s.size() != 1 + need)
    throw GraphFormatError("graph6: wrong length for order " +
                           std::to_string(n));
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = s[1 + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  // padding bits must be zero
  for (; bit < need * 6; ++bit) {
    int byte = s[1 + bit / 6] - 63;
    if ((byte >> (5 - bit % 6)) & 1)
      throw GraphFormatError("graph6: nonzero padding");
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  if (g.has_any_loop())
    throw GraphFormatError("graph6: format cannot represent loops");
  int n = g.order();
  if (n > 62) throw GraphFormatError("graph6: orders above 62 not supported");
  std::string s(1, char(n + 63));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        s.push_back(char(acc + 63));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) s.push_back(char((acc << (6 - nbits)) + 63));
  return s;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  long long a, b;
  if (in >> a >> b) return parse_edge_list(text);
  return parse_graph6(text);
}

}  // namespace prodstab
