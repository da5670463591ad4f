#include "equator/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "equator/error.hpp"

namespace equator {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

int parse_int(std::string_view tok, int line_no) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected a non-negative integer, got '" +
                                      std::string(tok) + "'");
  return value;
}

// Yields (line number, content) for non-empty, non-comment lines.
std::vector<std::pair<int, std::string_view>> data_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line.front() != '#') out.emplace_back(line_no, line);
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << content;
}

}  // namespace

std::string to_edge_list(const Graph& g, const std::vector<std::string>& header_comments) {
  std::ostringstream out;
  for (const auto& c : header_comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_edge_list(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "line 1: missing \"n m\" header");
  auto head = tokens(lines[0].second);
  if (head.size() != 2)
    throw Error(Errc::ParseError, "line " + std::to_string(lines[0].first) + ": expected \"n m\"");
  int n = parse_int(head[0], lines[0].first);
  int m = parse_int(head[1], lines[0].first);
  if (static_cast<int>(lines.size()) - 1 != m)
    throw Error(Errc::ParseError, "line " + std::to_string(lines.back().first) + ": header announces " +
                                      std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto [line_no, line] = lines[i];
    auto t = tokens(line);
    if (t.size() != 2) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected \"u v\"");
    int u = parse_int(t[0], line_no);
    int v = parse_int(t[1], line_no);
    if (u >= n || v >= n)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": vertex out of range");
    if (u == v) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(u, v);
  }
  return build_graph(edges, n);
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
  int acc = 0, bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  for (char c : text)
    if (c < 63 || c > 126) throw Error(Errc::ParseError, "line 1: invalid graph6 character");
  if (text.empty()) throw Error(Errc::ParseError, "line 1: empty graph6 string");
  std::size_t pos = 0;
  long long n = 0;
  auto take = [&](int count) {
    if (pos + count > text.size()) throw Error(Errc::ParseError, "line 1: truncated graph6 size field");
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (text[pos++] - 63);
    return v;
  };
  if (text[0] != 126) {
    n = take(1);
  } else if (text.size() > 1 && text[1] != 126) {
    ++pos;
    n = take(3);
  } else {
    pos += 2;
    n = take(6);
  }
  const long long pairs = n * (n - 1) / 2;
  const long long needed = (pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != needed)
    throw Error(Errc::ParseError, "line 1: graph6 body has wrong length");
  std::vector<Edge> edges;
  long long bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(edges, static_cast<int>(n));
}

Graph parse_graph_text(std::string_view text) {
  auto lines = data_lines(text);
  if (lines.empty()) throw Error(Errc::ParseError, "line 1: empty input");
  if (tokens(lines[0].second).size() == 1) {
    if (lines.size() != 1) throw Error(Errc::ParseError, "line " + std::to_string(lines[1].first) +
                                                             ": graph6 input holds one graph per file");
    return parse_graph6(lines[0].second);
  }
  return parse_edge_list(text);
}

Graph load_graph(const std::filesystem::path& path) { return parse_graph_text(read_file(path)); }

void save_edge_list(const std::filesystem::path& path, const Graph& g,
                    const std::vector<std::string>& header_comments) {
  write_file(path, to_edge_list(g, header_comments));
}

void save_graph6(const std::filesystem::path& path, const Graph& g) { write_file(path, to_graph6(g) + "\n"); }

}  // namespace equator
