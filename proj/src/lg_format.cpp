#include "graphlie/lg_format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "graphlie/errors.hpp"

namespace graphlie {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    std::size_t end = pos;
    while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
    if (end > pos) out.emplace_back(s.substr(pos, end - pos));
    pos = end;
  }
  return out;
}

bool starts_with_keyword(std::string_view line, std::string_view keyword, std::string_view& rest) {
  if (line.substr(0, keyword.size()) != keyword) return false;
  rest = line.substr(keyword.size());
  return true;
}

// "TAIL -> HEAD : LABEL" with arbitrary whitespace around the tokens.
NamedEdge parse_edge(std::string_view body, std::size_t line) {
  const auto arrow = body.find("->");
  const auto colon = body.find(':', arrow == std::string_view::npos ? 0 : arrow);
  if (arrow == std::string_view::npos || colon == std::string_view::npos)
    throw ParseError(line, "expected 'edge TAIL -> HEAD : LABEL'");
  const auto tail = trim(body.substr(0, arrow));
  const auto head = trim(body.substr(arrow + 2, colon - arrow - 2));
  const auto label = trim(body.substr(colon + 1));
  for (auto token : {tail, head, label})
    if (!is_identifier(token))
      throw ParseError(line, "invalid name '" + std::string(token) + "' (expected [A-Za-z0-9_]+)");
  return {std::string(tail), std::string(head), std::string(label)};
}

}  // namespace

LabeledDigraph parse_lg(std::string_view text) {
  std::vector<std::string> vertices;
  std::set<std::string, std::less<>> vertex_set;
  std::vector<std::string> declared_labels;
  std::set<std::string, std::less<>> declared_set;
  std::vector<NamedEdge> edges;
  std::set<std::pair<std::string, std::string>> pairs;
  std::set<std::string, std::less<>> used_labels;
  std::vector<std::string> labels_by_use;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view rest;
    if (starts_with_keyword(line, "vertices:", rest)) {
      if (!edges.empty()) throw ParseError(line_no, "vertices must be declared before edges");
      for (auto& name : split_names(rest)) {
        if (!is_identifier(name)) throw ParseError(line_no, "invalid vertex name '" + name + "'");
        if (!vertex_set.insert(name).second) throw ParseError(line_no, "duplicate vertex '" + name + "'");
        vertices.push_back(std::move(name));
      }
    } else if (starts_with_keyword(line, "labels:", rest)) {
      if (!edges.empty()) throw ParseError(line_no, "labels must be declared before edges");
      for (auto& name : split_names(rest)) {
        if (!is_identifier(name)) throw ParseError(line_no, "invalid label name '" + name + "'");
        if (vertex_set.count(name)) throw ParseError(line_no, "label '" + name + "' clashes with a vertex name");
        if (!declared_set.insert(name).second) throw ParseError(line_no, "duplicate label '" + name + "'");
        declared_labels.push_back(std::move(name));
      }
    } else if (starts_with_keyword(line, "edge", rest) && (rest.empty() || rest[0] == ' ' || rest[0] == '\t')) {
      NamedEdge e = parse_edge(rest, line_no);
      if (!vertex_set.count(e.tail)) throw ParseError(line_no, "undeclared vertex '" + e.tail + "'");
      if (!vertex_set.count(e.head)) throw ParseError(line_no, "undeclared vertex '" + e.head + "'");
      if (vertex_set.count(e.label)) throw ParseError(line_no, "label '" + e.label + "' clashes with a vertex name");
      if (e.tail == e.head) throw ParseError(line_no, "loop edge at '" + e.tail + "'");
      if (pairs.count({e.tail, e.head})) throw ParseError(line_no, "duplicate edge " + e.tail + " -> " + e.head);
      if (pairs.count({e.head, e.tail}))
        throw ParseError(line_no, "multi-edge between '" + e.tail + "' and '" + e.head + "'");
      if (!declared_set.empty() && !declared_set.count(e.label))
        throw ParseError(line_no, "label '" + e.label + "' missing from the labels declaration");
      pairs.insert({e.tail, e.head});
      if (used_labels.insert(e.label).second) labels_by_use.push_back(e.label);
      edges.push_back(std::move(e));
    } else {
      throw ParseError(line_no, "unrecognized statement '" + std::string(line) + "'");
    }
  }

  for (const auto& l : declared_labels)
    if (!used_labels.count(l)) throw ParseError(0, "declared label '" + l + "' is not carried by any edge");

  try {
    return LabeledDigraph(std::move(vertices), declared_labels.empty() ? labels_by_use : declared_labels, edges);
  } catch (const GraphError& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_lg(const LabeledDigraph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& v : g.vertices()) out << ' ' << v;
  out << '\n';
  if (!g.labels_in_first_use_order()) {
    out << "labels:";
    for (const auto& l : g.labels()) out << ' ' << l;
    out << '\n';
  }
  for (const auto& e : g.named_edges()) out << "edge " << e.tail << " -> " << e.head << " : " << e.label << '\n';
  return out.str();
}

LabeledDigraph read_lg_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, path + ": cannot open file");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_lg(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError::in_file(path, e);
  }
}

}  // namespace graphlie
