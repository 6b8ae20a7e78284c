// SPDX-License-Identifier: Apache-2.0
#pragma once

// File formats: signature JSON, edge-list relations, and condition reports.

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "simpord/checkers.hpp"
#include "simpord/error.hpp"
#include "simpord/term.hpp"

namespace simpord {

/// {"symbols":[{"name":"f_0","arity":1},...]}; array order fixes symbol indices.
inline Signature signature_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("symbols") || !doc["symbols"].is_array())
    throw Error(ErrorKind::ParseError, "signature document needs a \"symbols\" array");
  std::vector<std::pair<std::string, std::size_t>> symbols;
  for (const auto& s : doc["symbols"]) {
    if (!s.is_object() || !s.contains("name") || !s["name"].is_string() || !s.contains("arity") ||
        !s["arity"].is_number_unsigned())
      throw Error(ErrorKind::ParseError, "each symbol needs a string \"name\" and a non-negative integer \"arity\"");
    symbols.emplace_back(s["name"].get<std::string>(), s["arity"].get<std::size_t>());
  }
  return make_signature(symbols);
}

inline nlohmann::json signature_to_json(const Signature& sig) {
  nlohmann::json symbols = nlohmann::json::array();
  for (const auto& f : sig.symbols()) symbols.push_back({{"name", f.name}, {"arity", f.arity}});
  return {{"symbols", symbols}};
}

inline Signature load_signature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open signature file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "signature file '" + path + "': " + e.what());
  }
  return signature_from_json(doc);
}

/// A finite relation read from text: each non-blank line is `pred node`, or
/// a single identifier declaring an isolated node. '#' starts a comment.
struct EdgeList {
  std::vector<std::string> nodes;  // first-appearance order
  std::vector<std::pair<std::string, std::string>> edges;

  void declare(const std::string& n) {
    for (const auto& m : nodes)
      if (m == n) return;
    nodes.push_back(n);
  }
};

inline EdgeList parse_edge_list(std::istream& in) {
  EdgeList out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() > 2)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": expected `pred node`");
    for (const auto& tok : tokens)
      if (!is_identifier(tok))
        throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": '" + tok + "' is not an identifier");
    out.declare(tokens[0]);
    if (tokens.size() == 2) {
      out.declare(tokens[1]);
      out.edges.emplace_back(tokens[0], tokens[1]);
    }
  }
  return out;
}

inline EdgeList load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open edge file '" + path + "'");
  return parse_edge_list(in);
}

/// {condition, status, witness?, pairs_checked, universe_size, seed?, ...}
inline nlohmann::json report_to_json(const ConditionReport& r) {
  nlohmann::json j = {
      {"condition", r.condition},         {"status", to_string(r.status)},
      {"pairs_checked", r.pairs_checked}, {"universe_size", r.universe_size},
      {"budget_used", r.budget_used},     {"note", r.note},
  };
  if (r.status == ConditionStatus::Fail) {
    nlohmann::json w = nlohmann::json::array();
    for (const auto& t : r.witness) w.push_back(format_term(t));
    j["witness"] = w;
    j["witness_kind"] = to_string(r.witness_kind);
  }
  if (r.seed) j["seed"] = *r.seed;
  if (r.condition == 3) {
    j["unknown_budget"] = r.unknown_budget;
    j["unknown_escape"] = r.unknown_escape;
  }
  return j;
}

inline const char* condition_name(int condition) {
  switch (condition) {
    case 0: return "proper order";
    case 1: return "subterm";
    case 2: return "decomposition";
    case 3: return "lifting";
    default: return "?";
  }
}

/// One verdict line, then indented witness and statistics lines.
inline std::string report_to_text(const ConditionReport& r) {
  std::ostringstream out;
  std::string status = to_string(r.status);
  for (auto& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  out << "condition " << r.condition << " (" << condition_name(r.condition) << "): " << status << "\n";
  if (r.status == ConditionStatus::Fail) {
    out << "  witness (" << to_string(r.witness_kind) << "):";
    for (const auto& t : r.witness) out << ' ' << format_term(t);
    out << "\n";
  }
  out << "  " << r.note << "\n";
  out << "  pairs_checked=" << r.pairs_checked << " universe_size=" << r.universe_size
      << " budget_used=" << r.budget_used;
  if (r.seed) out << " seed=" << *r.seed;
  out << "\n";
  return out.str();
}

}  // namespace simpord
