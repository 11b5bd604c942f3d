// Copyright 2026 The coselect Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "app/graph_io.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>
#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <list>
#include <sstream>
#include <stdexcept>

#include "app/format.hpp"

namespace coselect::app {
namespace {

std::string_view type_name(AttrType t) {
  switch (t) {
    case AttrType::Int: return "long";
    case AttrType::Double: return "double";
    case AttrType::String: return "string";
  }
  return "string";
}

AttrType parse_type(const std::string& name) {
  if (name == "int" || name == "long") return AttrType::Int;
  if (name == "double" || name == "float") return AttrType::Double;
  return AttrType::String;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

GraphDocument make_document(const CoSelectionGraph& network, const NodeAnnotations& annotations) {
  GraphDocument doc;
  const auto& g = network.graph;
  for (const auto& [item, attrs] : network.node_attributes) {
    for (const auto& [name, value] : attrs) doc.node_keys.emplace(name, AttrType::Double);
  }
  for (const auto& [item, ann] : annotations) {
    for (const auto& [name, value] : ann) doc.node_keys.emplace(name, AttrType::Int);
  }
  doc.edge_keys.emplace("lift", AttrType::Double);

  for (const auto& label : g.labels()) {
    GraphDocument::Node node{label, {}};
    if (auto it = network.node_attributes.find(label); it != network.node_attributes.end()) {
      for (const auto& [name, value] : it->second) node.attributes[name] = format_double(value);
    }
    if (auto it = annotations.find(label); it != annotations.end()) {
      for (const auto& [name, value] : it->second) node.attributes[name] = std::to_string(value);
    }
    doc.nodes.push_back(std::move(node));
  }
  for (const auto& e : g.edges()) {
    GraphDocument::Link link{g.label(e.u), g.label(e.v), {}};
    if (auto it = network.edge_lift.find(e); it != network.edge_lift.end()) {
      link.attributes["lift"] = format_double(it->second);
    }
    doc.edges.push_back(std::move(link));
  }
  return doc;
}

std::string to_graphml(const GraphDocument& doc) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
  std::map<std::string, std::string> node_key_id, edge_key_id;
  std::size_t k = 0;
  for (const auto& [name, type] : doc.node_keys) {
    const auto id = "d" + std::to_string(k++);
    node_key_id[name] = id;
    out << "  <key id=\"" << id << "\" for=\"node\" attr.name=\"" << xml_escape(name)
        << "\" attr.type=\"" << type_name(type) << "\"/>\n";
  }
  for (const auto& [name, type] : doc.edge_keys) {
    const auto id = "d" + std::to_string(k++);
    edge_key_id[name] = id;
    out << "  <key id=\"" << id << "\" for=\"edge\" attr.name=\"" << xml_escape(name)
        << "\" attr.type=\"" << type_name(type) << "\"/>\n";
  }
  out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
  for (const auto& node : doc.nodes) {
    out << "    <node id=\"" << xml_escape(node.id) << "\"";
    if (node.attributes.empty()) {
      out << "/>\n";
      continue;
    }
    out << ">\n";
    for (const auto& [name, value] : node.attributes) {
      out << "      <data key=\"" << node_key_id.at(name) << "\">" << xml_escape(value)
          << "</data>\n";
    }
    out << "    </node>\n";
  }
  for (const auto& e : doc.edges) {
    out << "    <edge source=\"" << xml_escape(e.source) << "\" target=\"" << xml_escape(e.target)
        << "\"";
    if (e.attributes.empty()) {
      out << "/>\n";
      continue;
    }
    out << ">\n";
    for (const auto& [name, value] : e.attributes) {
      out << "      <data key=\"" << edge_key_id.at(name) << "\">" << xml_escape(value)
          << "</data>\n";
    }
    out << "    </edge>\n";
  }
  out << "  </graph>\n</graphml>\n";
  return out.str();
}

std::string to_dot(const GraphDocument& doc) {
  std::ostringstream out;
  out << "graph coselect {\n";
  auto attrs = [&](const std::map<std::string, std::string>& a) {
    if (a.empty()) return;
    out << " [";
    bool first = true;
    for (const auto& [name, value] : a) {
      out << (first ? "" : ", ") << name << '=' << dot_quote(value);
      first = false;
    }
    out << ']';
  };
  for (const auto& node : doc.nodes) {
    out << "  " << dot_quote(node.id);
    attrs(node.attributes);
    out << ";\n";
  }
  for (const auto& e : doc.edges) {
    out << "  " << dot_quote(e.source) << " -- " << dot_quote(e.target);
    attrs(e.attributes);
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

GraphDocument read_graphml(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_xml(in, tree, pt::xml_parser::trim_whitespace);
  } catch (const pt::xml_parser_error& e) {
    throw std::runtime_error(std::string("malformed GraphML: ") + e.what());
  }
  const auto root = tree.get_child_optional("graphml");
  if (!root) throw std::runtime_error("malformed GraphML: no <graphml> root");

  GraphDocument doc;
  struct Key {
    std::string name;
    bool for_node = true;
  };
  std::map<std::string, Key> keys;
  for (const auto& [tag, child] : *root) {
    if (tag != "key") continue;
    const auto id = child.get<std::string>("<xmlattr>.id");
    // "attr.name" contains the default path separator, so address it with '/'.
    const auto name = child.get<std::string>(pt::path("<xmlattr>/attr.name", '/'), id);
    const auto domain = child.get<std::string>("<xmlattr>.for", "node");
    const auto type = parse_type(child.get<std::string>(pt::path("<xmlattr>/attr.type", '/'), "string"));
    keys[id] = {name, domain != "edge"};
    (domain == "edge" ? doc.edge_keys : doc.node_keys)[name] = type;
  }
  const auto graph = root->get_child_optional("graph");
  if (!graph) throw std::runtime_error("malformed GraphML: no <graph> element");

  auto read_data = [&](const pt::ptree& element) {
    std::map<std::string, std::string> attrs;
    for (const auto& [tag, data] : element) {
      if (tag != "data") continue;
      const auto key = data.get<std::string>("<xmlattr>.key");
      auto it = keys.find(key);
      attrs[it == keys.end() ? key : it->second.name] = data.get_value<std::string>();
    }
    return attrs;
  };
  for (const auto& [tag, child] : *graph) {
    if (tag == "node") {
      doc.nodes.push_back({child.get<std::string>("<xmlattr>.id"), read_data(child)});
    } else if (tag == "edge") {
      doc.edges.push_back({child.get<std::string>("<xmlattr>.source"),
                           child.get<std::string>("<xmlattr>.target"), read_data(child)});
    }
  }
  return doc;
}

GraphDocument read_dot(std::string_view text) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = BoostGraph::vertex_descriptor;
  using BoostEdge = BoostGraph::edge_descriptor;
  using VertexMap = std::map<Vertex, std::string>;
  using EdgeMap = std::map<BoostEdge, std::string>;

  BoostGraph g;
  VertexMap ids;
  // Attribute maps are created on first use; std::list keeps their addresses stable.
  std::list<std::pair<std::string, VertexMap>> vertex_attrs;
  std::list<std::pair<std::string, EdgeMap>> edge_attrs;
  boost::dynamic_properties dp(
      [&](const std::string& name, const boost::any& key,
          const boost::any&) -> boost::shared_ptr<boost::dynamic_property_map> {
        if (key.type() == typeid(Vertex)) {
          auto& map = vertex_attrs.emplace_back(name, VertexMap{}).second;
          return boost::make_shared<boost::detail::dynamic_property_map_adaptor<
              boost::associative_property_map<VertexMap>>>(boost::make_assoc_property_map(map));
        }
        if (key.type() == typeid(BoostEdge)) {
          auto& map = edge_attrs.emplace_back(name, EdgeMap{}).second;
          return boost::make_shared<boost::detail::dynamic_property_map_adaptor<
              boost::associative_property_map<EdgeMap>>>(boost::make_assoc_property_map(map));
        }
        return {};  // graph-level attributes are dropped
      });
  dp.property("node_id", boost::make_assoc_property_map(ids));
  try {
    if (!boost::read_graphviz(std::string(text), g, dp, "node_id")) {
      throw std::runtime_error("malformed DOT: unreadable graph");
    }
  } catch (const boost::graph_exception& e) {
    throw std::runtime_error(std::string("malformed DOT: ") + e.what());
  }

  GraphDocument doc;
  for (Vertex v : boost::make_iterator_range(boost::vertices(g))) {
    GraphDocument::Node node{ids.at(v), {}};
    for (const auto& [name, map] : vertex_attrs) {
      if (auto it = map.find(v); it != map.end()) node.attributes[name] = it->second;
    }
    doc.nodes.push_back(std::move(node));
  }
  for (BoostEdge e : boost::make_iterator_range(boost::edges(g))) {
    GraphDocument::Link link{ids.at(boost::source(e, g)), ids.at(boost::target(e, g)), {}};
    for (const auto& [name, map] : edge_attrs) {
      if (auto it = map.find(e); it != map.end()) link.attributes[name] = it->second;
    }
    doc.edges.push_back(std::move(link));
  }
  return doc;
}

}  // namespace coselect::app
