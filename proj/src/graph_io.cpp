// Copyright 2026 The sandhi-align Authors
//
// Licensed under the Apache License, Version 2.0.
// See http://www.apache.org/licenses/LICENSE-2.0 for license information.
// SPDX-License-Identifier: Apache-2.0

// GraphML and analyses.jsonl encodings of candidate segments.

#include <charconv>
#include <istream>
#include <map>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <json.hpp>

#include "sandhi/errors.hpp"
#include "sandhi/seg_graph.hpp"
#include "text_util.hpp"

namespace sandhi {

namespace {

namespace pt = boost::property_tree;
using nlohmann::json;

// Attribute keys in declaration order. `synthetic` is ours; the rest follow
// the segmenter's node schema.
struct KeySpec {
  const char* name;
  const char* type;
  bool required;
};

constexpr KeySpec kNodeKeys[] = {
    {"color_class", "string", true}, {"position", "int", true},      {"chunk_no", "int", true},
    {"word", "string", true},        {"lemma", "string", true},      {"sense", "string", true},
    {"cng", "int", true},            {"pre_verb", "string", false},  {"morph", "string", true},
    {"length_word", "int", true},    {"der_pre_verb", "string", false}, {"der_lemma", "string", false},
    {"der_sense", "string", false},  {"der_morph", "string", false}, {"der_cng", "int", false},
    {"char_pos", "string", true},    {"synthetic", "string", false},
};

std::string join_ints(const std::set<int>& values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::string join_tags(const std::set<MorphTag>& tags) {
  std::string out;
  for (const auto& t : tags) {
    if (!out.empty()) out += '|';
    out += t.str();
  }
  return out;
}

long long parse_int(std::string_view text, const std::string& what) {
  const auto trimmed = detail::trim(text);
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(trimmed.data(), trimmed.data() + trimmed.size(), value);
  if (trimmed.empty() || ec != std::errc{} || ptr != trimmed.data() + trimmed.size()) {
    throw MalformedDocument("bad integer '" + std::string(text) + "' for " + what);
  }
  return value;
}

std::set<int> parse_ints(std::string_view text, const std::string& what) {
  std::set<int> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& part : detail::split(text, ',')) out.insert(static_cast<int>(parse_int(part, what)));
  return out;
}

std::set<MorphTag> parse_tags(std::string_view text) {
  std::set<MorphTag> out;
  if (detail::trim(text).empty()) return out;
  for (const auto& part : detail::split(text, '|')) {
    if (!detail::trim(part).empty()) out.emplace(part);
  }
  return out;
}

PhonemeString parse_phonemes(const std::string& text, const std::string& what) {
  try {
    return parse_iast(text);
  } catch (const UnknownSymbol& e) {
    throw MalformedDocument(what + ": " + e.what());
  }
}

void add_data(pt::ptree& node, const char* key, const std::string& value) {
  auto& data = node.add("data", value);
  data.put("<xmlattr>.key", key);
}

}  // namespace

std::string write_graphml(const SegGraph& graph, std::string_view graph_id) {
  pt::ptree root;
  auto& graphml = root.add_child("graphml", pt::ptree{});
  graphml.put("<xmlattr>.xmlns", "http://graphml.graphdrawing.org/xmlns");
  for (const auto& key : kNodeKeys) {
    auto& k = graphml.add_child("key", pt::ptree{});
    k.put("<xmlattr>.id", key.name);
    k.put("<xmlattr>.for", "node");
    k.put("<xmlattr>.attr.name", key.name);
    k.put("<xmlattr>.attr.type", key.type);
  }
  auto& g = graphml.add_child("graph", pt::ptree{});
  g.put("<xmlattr>.id", std::string(graph_id));
  g.put("<xmlattr>.edgedefault", "undirected");

  for (const auto& n : graph.nodes()) {
    auto& node = g.add_child("node", pt::ptree{});
    node.put("<xmlattr>.id", std::to_string(n.id));
    add_data(node, "color_class", n.color_class);
    add_data(node, "position", std::to_string(n.position));
    add_data(node, "chunk_no", std::to_string(n.chunk_no));
    add_data(node, "word", render_iast(n.word));
    add_data(node, "lemma", render_iast(n.lemma));
    add_data(node, "sense", join_ints(n.sense));
    add_data(node, "cng", std::to_string(n.cng.value));
    if (n.pre_verb) add_data(node, "pre_verb", render_iast(*n.pre_verb));
    add_data(node, "morph", join_tags(n.morph));
    add_data(node, "length_word", std::to_string(n.length_word));
    if (n.der_pre_verb) add_data(node, "der_pre_verb", render_iast(*n.der_pre_verb));
    if (n.der_lemma) add_data(node, "der_lemma", render_iast(*n.der_lemma));
    if (!n.der_sense.empty()) add_data(node, "der_sense", join_ints(n.der_sense));
    if (!n.der_morph.empty()) add_data(node, "der_morph", join_tags(n.der_morph));
    if (n.der_cng) add_data(node, "der_cng", std::to_string(n.der_cng->value));
    add_data(node, "char_pos", std::to_string(n.char_pos.start) + "," + std::to_string(n.char_pos.end));
    add_data(node, "synthetic", std::string(to_string(n.synthetic)));
  }
  for (const auto& e : graph.edges()) {
    auto& edge = g.add_child("edge", pt::ptree{});
    edge.put("<xmlattr>.source", std::to_string(e.a));
    edge.put("<xmlattr>.target", std::to_string(e.b));
    edge.put("<xmlattr>.label", std::to_string(static_cast<int>(e.label)));
  }

  std::ostringstream out;
  pt::write_xml(out, root, pt::xml_writer_make_settings<std::string>(' ', 2));
  return out.str();
}

SegGraph read_graphml(std::string_view document) {
  pt::ptree root;
  try {
    std::istringstream in{std::string(document)};
    pt::read_xml(in, root, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw MalformedDocument(e.what());
  }
  const auto graphml = root.get_child_optional("graphml");
  if (!graphml) throw MalformedDocument("no <graphml> root element");
  const auto graph = graphml->get_child_optional("graph");
  if (!graph) throw MalformedDocument("no <graph> element");

  std::vector<CandidateSegment> segments;
  struct DocEdge {
    NodeId a;
    NodeId b;
    int label;
  };
  std::vector<DocEdge> doc_edges;

  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      const auto id_text = child.get_optional<std::string>("<xmlattr>.id");
      if (!id_text) throw MissingAttribute("id");
      std::map<std::string, std::string> data;
      for (const auto& [dtag, d] : child) {
        if (dtag != "data") continue;
        const auto key = d.get_optional<std::string>("<xmlattr>.key");
        if (!key) throw MalformedDocument("<data> without key");
        data[*key] = d.get_value<std::string>();
      }
      for (const auto& spec : kNodeKeys) {
        if (spec.required && !data.contains(spec.name)) throw MissingAttribute(spec.name);
      }
      auto opt = [&](const char* key) -> const std::string* {
        const auto it = data.find(key);
        return it == data.end() ? nullptr : &it->second;
      };

      CandidateSegment s;
      s.id = parse_int(*id_text, "node id");
      s.color_class = data["color_class"];
      s.position = static_cast<int>(parse_int(data["position"], "position"));
      s.chunk_no = static_cast<int>(parse_int(data["chunk_no"], "chunk_no"));
      s.word = parse_phonemes(data["word"], "word");
      s.lemma = parse_phonemes(data["lemma"], "lemma");
      s.sense = parse_ints(data["sense"], "sense");
      s.cng = CngCode{static_cast<int>(parse_int(data["cng"], "cng"))};
      if (const auto* v = opt("pre_verb")) s.pre_verb = parse_phonemes(*v, "pre_verb");
      s.morph = parse_tags(data["morph"]);
      s.length_word = static_cast<int>(parse_int(data["length_word"], "length_word"));
      if (const auto* v = opt("der_pre_verb")) s.der_pre_verb = parse_phonemes(*v, "der_pre_verb");
      if (const auto* v = opt("der_lemma")) s.der_lemma = parse_phonemes(*v, "der_lemma");
      if (const auto* v = opt("der_sense")) s.der_sense = parse_ints(*v, "der_sense");
      if (const auto* v = opt("der_morph")) s.der_morph = parse_tags(*v);
      if (const auto* v = opt("der_cng")) s.der_cng = CngCode{static_cast<int>(parse_int(*v, "der_cng"))};
      const auto span = detail::split(data["char_pos"], ',');
      if (span.size() != 2) throw MalformedDocument("char_pos must be 'start,end'");
      const auto start = parse_int(span[0], "char_pos");
      const auto end = parse_int(span[1], "char_pos");
      if (start < 0 || end < 0) throw MalformedDocument("negative char_pos");
      s.char_pos = {static_cast<std::size_t>(start), static_cast<std::size_t>(end)};
      if (const auto* v = opt("synthetic")) {
        const auto p = provenance_from_string(*v);
        if (!p) throw MalformedDocument("unknown synthetic provenance '" + *v + "'");
        s.synthetic = *p;
      }
      segments.push_back(std::move(s));
    } else if (tag == "edge") {
      const auto source = child.get_optional<std::string>("<xmlattr>.source");
      const auto target = child.get_optional<std::string>("<xmlattr>.target");
      const auto label = child.get_optional<std::string>("<xmlattr>.label");
      if (!source) throw MissingAttribute("source");
      if (!target) throw MissingAttribute("target");
      if (!label) throw MissingAttribute("label");
      doc_edges.push_back({parse_int(*source, "edge source"), parse_int(*target, "edge target"),
                           static_cast<int>(parse_int(*label, "edge label"))});
    }
  }

  SegGraph g;
  try {
    g = build_graph(std::move(segments));
  } catch (const SpanOutOfRange& e) {
    throw MalformedDocument(e.what());
  }
  // Edge labels are derived from spans; a document that disagrees is corrupt.
  for (const auto& e : doc_edges) {
    if (e.label != 1 && e.label != 2) throw MalformedDocument("edge label must be 1 or 2");
    const auto derived = g.label(e.a, e.b);
    if (!derived) throw MalformedDocument("edge references unknown node");
    if (static_cast<int>(*derived) != e.label) {
      throw MalformedDocument("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                              " label disagrees with node spans");
    }
  }
  return g;
}

namespace {

const json* field(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

PhonemeString json_phonemes(const json& v, const std::string& what, SentenceId id) {
  if (!v.is_string()) throw MalformedRecord(what + " must be a string", id);
  try {
    return parse_iast(v.get<std::string>());
  } catch (const UnknownSymbol& e) {
    throw MalformedRecord(what + ": " + e.what(), id);
  }
}

std::set<int> json_ints(const json& v, const std::string& what, SentenceId id) {
  if (!v.is_array()) throw MalformedRecord(what + " must be a list of integers", id);
  std::set<int> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw MalformedRecord(what + " must be a list of integers", id);
    out.insert(x.get<int>());
  }
  return out;
}

std::set<MorphTag> json_tags(const json& v, const std::string& what, SentenceId id) {
  if (!v.is_array()) throw MalformedRecord(what + " must be a list of tags", id);
  std::set<MorphTag> out;
  for (const auto& x : v) {
    if (!x.is_string() || detail::trim(x.get_ref<const std::string&>()).empty()) {
      throw MalformedRecord(what + " entries must be non-empty strings", id);
    }
    out.emplace(x.get<std::string>());
  }
  return out;
}

int json_int(const json& v, const std::string& what, SentenceId id) {
  if (!v.is_number_integer()) throw MalformedRecord(what + " must be an integer", id);
  return v.get<int>();
}

CandidateSegment segment_from_json(const json& obj, SentenceId id) {
  if (!obj.is_object()) throw MalformedRecord("segment must be an object", id);
  auto need = [&](const char* key) -> const json& {
    const json* v = field(obj, key);
    if (!v) throw MalformedRecord(std::string("segment missing '") + key + "'", id);
    return *v;
  };
  CandidateSegment s;
  const json& node_id = need("id");
  if (!node_id.is_number_integer()) throw MalformedRecord("segment id must be an integer", id);
  s.id = node_id.get<NodeId>();
  const auto where = "segment " + std::to_string(s.id) + " ";
  const json& color = need("color_class");
  if (!color.is_string()) throw MalformedRecord(where + "color_class must be a string", id);
  s.color_class = color.get<std::string>();
  s.position = json_int(need("position"), where + "position", id);
  s.chunk_no = json_int(need("chunk_no"), where + "chunk_no", id);
  s.word = json_phonemes(need("word"), where + "word", id);
  s.lemma = json_phonemes(need("lemma"), where + "lemma", id);
  s.sense = json_ints(need("sense"), where + "sense", id);
  s.cng = CngCode{json_int(need("cng"), where + "cng", id)};
  if (const auto* v = field(obj, "pre_verb")) s.pre_verb = json_phonemes(*v, where + "pre_verb", id);
  s.morph = json_tags(need("morph"), where + "morph", id);
  if (const auto* v = field(obj, "der_pre_verb")) s.der_pre_verb = json_phonemes(*v, where + "der_pre_verb", id);
  if (const auto* v = field(obj, "der_lemma")) s.der_lemma = json_phonemes(*v, where + "der_lemma", id);
  if (const auto* v = field(obj, "der_sense")) s.der_sense = json_ints(*v, where + "der_sense", id);
  if (const auto* v = field(obj, "der_morph")) s.der_morph = json_tags(*v, where + "der_morph", id);
  if (const auto* v = field(obj, "der_cng")) s.der_cng = CngCode{json_int(*v, where + "der_cng", id)};

  const json& span = need("char_pos");
  if (!span.is_array() || span.size() != 2 || !span[0].is_number_unsigned() || !span[1].is_number_unsigned()) {
    throw MalformedRecord(where + "char_pos must be [start, end]", id);
  }
  s.char_pos = {span[0].get<std::size_t>(), span[1].get<std::size_t>()};

  s = with_length(std::move(s));
  if (const auto* v = field(obj, "length_word")) {
    if (json_int(*v, where + "length_word", id) != s.length_word) {
      throw MalformedRecord(where + "length_word disagrees with word", id);
    }
  }
  if (const auto* v = field(obj, "synthetic")) {
    const auto p = v->is_string() ? provenance_from_string(v->get<std::string>()) : std::nullopt;
    if (!p) throw MalformedRecord(where + "unknown synthetic provenance", id);
    s.synthetic = *p;
  }
  return s;
}

}  // namespace

SentenceAnalyses parse_analyses_record(std::string_view line) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw MalformedRecord(std::string("invalid JSON: ") + e.what());
  }
  if (!obj.is_object()) throw MalformedRecord("analyses record is not an object");
  const json* id = field(obj, "sent_id");
  if (!id || !id->is_number_integer()) throw MalformedRecord("missing integer sent_id");
  SentenceAnalyses out;
  out.sent_id = id->get<SentenceId>();
  const json* segments = field(obj, "segments");
  if (!segments || !segments->is_array()) throw MalformedRecord("segments must be a list", out.sent_id);
  for (const auto& s : *segments) out.segments.push_back(segment_from_json(s, out.sent_id));
  return out;
}

std::vector<SentenceAnalyses> read_analyses(std::istream& in, const std::string& source) {
  std::vector<SentenceAnalyses> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(parse_analyses_record(line));
    } catch (const MalformedRecord& e) {
      throw MalformedRecord(source + ":" + std::to_string(line_no) + ": " + e.reason(), e.sent_id());
    }
  }
  return out;
}

}  // namespace sandhi
