#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "nbspec/error.hpp"
#include "nbspec/graph.hpp"

namespace nbspec {

void write_edge_list(std::ostream& out, const Graph& graph, const EdgeListHeader& header) {
  const auto old_precision = out.precision(17);
  out << graph.vertex_count() << ' ' << graph.edge_count() << ' ' << header.seed << ' '
      << header.p << ' ' << header.q << '\n';
  for (const auto& [i, j] : graph.edges()) out << i << ' ' << j << '\n';
  for (int l : graph.labels()) out << (l == 0 ? '0' : '1');
  out << '\n';
  out.precision(old_precision);
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") != std::string::npos) return true;
  }
  return false;
}

}  // namespace

EdgeListFile read_edge_list(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw Error(Errc::bad_input, "empty edge-list input");

  EdgeListHeader header;
  {
    std::istringstream hs(line);
    long long n = -1;
    long long m = -1;
    if (!(hs >> n >> m >> header.seed >> header.p >> header.q)) {
      throw Error(Errc::bad_input, "header must read `n m seed p q`");
    }
    if (n < 0 || m < 0 || n > (1LL << 30)) throw Error(Errc::bad_input, "header counts out of range");
    header.n = static_cast<int>(n);
    header.m = static_cast<std::size_t>(m);
  }

  std::vector<Edge> edges;
  edges.reserve(header.m);
  for (std::size_t k = 0; k < header.m; ++k) {
    if (!next_content_line(in, line)) {
      throw Error(Errc::bad_input, "expected " + std::to_string(header.m) + " edges, found " +
                                       std::to_string(k));
    }
    std::istringstream es(line);
    int i = -1;
    int j = -1;
    std::string trailing;
    if (!(es >> i >> j) || (es >> trailing)) {
      throw Error(Errc::bad_input, "malformed edge line: " + line);
    }
    edges.emplace_back(i, j);
  }

  std::vector<int> labels;
  if (next_content_line(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t");
    const std::string body = line.substr(first, last - first + 1);
    if (body.size() != static_cast<std::size_t>(header.n)) {
      throw Error(Errc::bad_input, "label line length differs from n");
    }
    labels.reserve(body.size());
    for (char c : body) {
      if (c != '0' && c != '1') throw Error(Errc::bad_input, "label characters must be 0 or 1");
      labels.push_back(c - '0');
    }
    if (next_content_line(in, line)) throw Error(Errc::bad_input, "trailing content after labels");
  }

  return {header, Graph(header.n, std::move(edges), std::move(labels))};
}

}  // namespace nbspec
