#include "spanlab/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <set>

namespace spanlab {
namespace {

constexpr char kGraph6Header[] = ">>graph6<<";
constexpr int kBias = 63;

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = sizeof(kGraph6Header) - 1;
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;
  std::string_view body = text.substr(pos, end - pos);

  auto byte_at = [&](std::size_t i) -> std::uint64_t {
    if (i >= body.size()) throw ParseError("graph6 string ends early", 1, pos + i);
    if (!is_graph6_char(body[i])) {
      throw ParseError(std::string("invalid graph6 character '") + body[i] + "'", 1, pos + i);
    }
    return static_cast<std::uint64_t>(body[i] - kBias);
  };

  std::uint64_t n = 0;
  std::size_t i = 0;
  if (byte_at(0) < 63) {
    n = byte_at(0);
    i = 1;
  } else if (byte_at(1) < 63) {
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | byte_at(k);
    i = 4;
  } else {
    for (std::size_t k = 2; k <= 7; ++k) n = (n << 6) | byte_at(k);
    i = 8;
  }
  if (n > 100000) throw ParseError("graph6 vertex count too large", 1, pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t need = (bits + 5) / 6;
  if (body.size() - i != need) {
    throw ParseError("graph6 body has " + std::to_string(body.size() - i) + " bytes, expected " +
                         std::to_string(need),
                     1, pos + std::min<std::size_t>(body.size(), i + need));
  }

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex v = 1; v < static_cast<Vertex>(n); ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      std::uint64_t byte = byte_at(i + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) edges.emplace_back(u, v);
    }
  }
  for (; k < need * 6; ++k) {
    if ((byte_at(i + k / 6) >> (5 - k % 6)) & 1U) {
      throw ParseError("nonzero graph6 padding bits", 1, pos + i + k / 6);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edgelist(std::string_view text) {
  std::vector<Edge> edges;
  int max_index = -1;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    std::string_view line = text.substr(start, stop - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    int values[2];
    int count = 0;
    std::size_t p = 0;
    while (true) {
      while (p < line.size() && is_space(line[p])) ++p;
      if (p == line.size()) break;
      if (count == 2) throw ParseError("more than two vertices on an edge line", line_no, p);
      int value = 0;
      auto [ptr, ec] = std::from_chars(line.data() + p, line.data() + line.size(), value);
      std::size_t consumed = static_cast<std::size_t>(ptr - (line.data() + p));
      if (ec != std::errc{} || consumed == 0 || value < 0 ||
          (p + consumed < line.size() && !is_space(line[p + consumed]))) {
        throw ParseError("expected a non-negative vertex index", line_no, p);
      }
      values[count++] = value;
      p += consumed;
    }
    if (count == 1) throw ParseError("edge line needs two vertex indices", line_no, p);
    if (count == 2) {
      if (values[0] == values[1]) {
        throw GraphError("line " + std::to_string(line_no) + ": loop at vertex " +
                         std::to_string(values[0]));
      }
      edges.emplace_back(values[0], values[1]);
      max_index = std::max({max_index, values[0], values[1]});
    }
    if (stop == text.size()) break;
    start = stop + 1;
  }
  return Graph(max_index + 1, edges);
}

}  // namespace

std::optional<GraphFormat> parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edgelist" || name == "edges") return GraphFormat::edgelist;
  return std::nullopt;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edgelist(text);
}

GraphFormat detect_format(std::string_view text) {
  std::size_t p = 0;
  while (p < text.size() && is_space(text[p])) ++p;
  std::string_view rest = text.substr(p);
  if (rest.starts_with(kGraph6Header)) return GraphFormat::graph6;
  std::size_t stop = rest.find('\n');
  std::string_view line = rest.substr(0, stop);
  while (!line.empty() && is_space(line.back())) line.remove_suffix(1);
  if (!line.empty() && std::all_of(line.begin(), line.end(), is_graph6_char)) {
    return GraphFormat::graph6;
  }
  return GraphFormat::edgelist;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    for (Vertex u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::string to_edgelist(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  }
  return out;
}

}  // namespace spanlab
