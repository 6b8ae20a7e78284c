// SPDX-License-Identifier: Apache-2.0
#pragma once

// Command-line front end. Exit codes: 0 pass, 1 fail with witness,
// 2 usage or parse error, 3 inconclusive.

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "simpord/io.hpp"
#include "simpord/simpord.hpp"

namespace simpord::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_inconclusive = 3;

inline constexpr std::size_t default_budget = 100000;
inline constexpr std::size_t default_max_size = 5;

struct CliConfig {
  std::string order = "theta";
  std::optional<std::size_t> k;
  std::string sig_path;
  std::string prec;
  std::string conditions = "1,2,3";
  std::size_t max_size = default_max_size;
  std::size_t budget = default_budget;
  std::string format = "text";
  std::uint64_t seed = default_seed;
  std::string extra_edges_path;
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

// An order on terms with the argument orders its decomposition uses.
struct OrderSetup {
  Signature signature;
  OrderOracle<Term> order;
  ArgOrders arg_orders;
  std::optional<EmbeddingContext> ctx;
};

inline OrderSetup make_order(const CliConfig& cfg) {
  if (cfg.order == "theta") {
    if (!cfg.sig_path.empty() || !cfg.prec.empty())
      throw CLI::ValidationError("--order theta uses F_k; --sig and --prec do not apply");
    if (!cfg.k) throw CLI::ValidationError("--order theta requires --k");
    auto ctx = build_context(*cfg.k);
    auto order = theta_order(ctx);
    ArgOrders args;
    for (const auto& f : ctx.signature.symbols())
      if (f.arity > 0) args.emplace(f.name, arg_order(ctx, order, f.name));
    return {ctx.signature, order, args, ctx};
  }
  if (cfg.order == "lpo") {
    if (cfg.sig_path.empty() || cfg.prec.empty()) throw CLI::ValidationError("--order lpo requires --sig and --prec");
    Signature sig = load_signature(cfg.sig_path);
    Precedence prec(sig, split_list(cfg.prec));
    auto order = lpo_order(prec);
    ArgOrders args;
    for (const auto& f : sig.symbols())
      if (f.arity > 0) args.emplace(f.name, lex_extension(order));
    return {sig, order, args, std::nullopt};
  }
  throw CLI::ValidationError("--order must be theta or lpo");
}

// {"edges":[["f(b...)","f(a...)"],...]}: adds b <_f a to the argument order of f.
inline void add_extra_edges(OrderSetup& setup, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(ErrorKind::ParseError, path + ": expected an \"edges\" array");
  std::map<std::string, std::vector<std::pair<TermTuple, TermTuple>>> extra;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw Error(ErrorKind::ParseError, path + ": each edge is a pair of term strings");
    Term lo = parse_term(e[0].get<std::string>(), setup.signature);
    Term hi = parse_term(e[1].get<std::string>(), setup.signature);
    if (!(lo.head() == hi.head()) || lo.arity() == 0)
      throw Error(ErrorKind::ParseError, path + ": edge terms need the same non-constant head");
    extra[lo.head().name].emplace_back(lo.args(), hi.args());
  }
  for (auto& [name, pairs] : extra) {
    auto& oracle = setup.arg_orders.at(name);
    auto base = oracle.lt;
    oracle.lt = [base, pairs](const TermTuple& a, const TermTuple& b) {
      for (const auto& [lo, hi] : pairs)
        if (lo == a && hi == b) return true;
      return base(a, b);
    };
  }
}

inline std::size_t budget_default() {
  if (const char* env = std::getenv("SIMPORD_BUDGET")) {
    try {
      std::size_t used = 0;
      const std::string s(env);
      const unsigned long long v = std::stoull(s, &used);
      if (used == s.size()) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    throw CLI::ValidationError("SIMPORD_BUDGET must be a non-negative integer");
  }
  return default_budget;
}

inline const char* verdict(const OrderOracle<Term>& order, const Term& s, const Term& t) {
  if (order.less(s, t)) return "LESS";
  if (order.less(t, s)) return "GREATER";
  if (order.eq(s, t)) return "EQUAL";
  return "INCOMPARABLE";
}

}  // namespace detail

/// Runs one invocation. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"simpord: ordinal notations, simplification orders and their well-foundedness conditions"};
  app.require_subcommand(1);
  CliConfig cfg;
  bool budget_given = false;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_order = [&](CLI::App* sub) {
    sub->add_option("--order", cfg.order, "theta (F_k) or lpo")->check(CLI::IsMember({"theta", "lpo"}));
    sub->add_option("--k", cfg.k, "Largest f-index for --order theta (arity of f_i is i+1)");
    sub->add_option("--sig", cfg.sig_path, "Signature JSON file (lpo)");
    sub->add_option("--prec", cfg.prec, "Precedence, lowest symbol first, comma separated (lpo)");
  };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option_function<std::size_t>(
        "--budget",
        [&](const std::size_t& b) {
          cfg.budget = b;
          budget_given = true;
        },
        "Node/triple budget (default 100000, or SIMPORD_BUDGET)");
  };

  // ord cmp
  auto* ord = app.add_subcommand("ord", "Ordinal notations");
  ord->require_subcommand(1);
  auto* ord_cmp = ord->add_subcommand("cmp", "Compare two notations");
  std::string a_text, b_text;
  ord_cmp->add_option("a", a_text)->required();
  ord_cmp->add_option("b", b_text)->required();
  add_format(ord_cmp);

  // term cmp
  auto* term = app.add_subcommand("term", "Terms");
  term->require_subcommand(1);
  auto* term_cmp = term->add_subcommand("cmp", "Compare two terms under an order");
  std::string s_text, t_text;
  add_order(term_cmp);
  term_cmp->add_option("s", s_text)->required();
  term_cmp->add_option("t", t_text)->required();
  add_format(term_cmp);

  // check
  auto* check = app.add_subcommand("check", "Check the conditions on a bounded universe");
  add_order(check);
  check->add_option("--conditions", cfg.conditions, "Subset of 0,1,2,3 (0 = irreflexive and transitive)");
  check->add_option("--max-size", cfg.max_size, "Largest term size (nodes) in the universe");
  check->add_option("--seed", cfg.seed, "Seed for sampled transitivity triples");
  check->add_option("--extra-arg-edges", cfg.extra_edges_path,
                    "JSON {\"edges\":[[\"f(b)\",\"f(a)\"],...]} adding b <_f a to argument orders");
  add_budget(check);
  add_format(check);

  // embed
  auto* embed = app.add_subcommand("embed", "Print the ordinal denoted by a term over F_k");
  std::size_t k_embed = 0;
  embed->add_option("--k", k_embed)->required();
  embed->add_option("term", t_text)->required();
  add_format(embed);

  // termof
  auto* termof = app.add_subcommand("termof", "Term over F_k whose denotation is a^+");
  std::size_t k_termof = 0;
  termof->add_option("--k", k_termof)->required();
  termof->add_option("ordinal", a_text)->required();
  add_format(termof);

  // wfp
  auto* wfp = app.add_subcommand("wfp", "Well-founded part of a finite relation (lines of `pred node`)");
  std::string edge_path, node_list;
  wfp->add_option("file", edge_path)->required();
  wfp->add_option("--nodes", node_list, "Extra nodes, comma separated");
  add_budget(wfp);
  add_format(wfp);

  // enum
  auto* en = app.add_subcommand("enum", "Enumerate terms or notations");
  en->require_subcommand(1);
  auto* en_terms = en->add_subcommand("terms", "Terms by size");
  en_terms->add_option("--k", cfg.k, "Use F_k");
  en_terms->add_option("--sig", cfg.sig_path, "Signature JSON file");
  en_terms->add_option("--max-size", cfg.max_size);
  add_format(en_terms);
  auto* en_ords = en->add_subcommand("ords", "Canonical notations by node count");
  std::size_t max_nodes = 3, max_len = 2;
  en_ords->add_option("--max-nodes", max_nodes);
  en_ords->add_option("--max-len", max_len, "Longest theta-vector");
  add_format(en_ords);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  const bool json = cfg.format == "json";
  try {
    if (!budget_given) cfg.budget = detail::budget_default();

    if (*ord_cmp) {
      const Ordinal a = parse_ordinal(a_text);
      const Ordinal b = parse_ordinal(b_text);
      const char* v = to_string(compare(a, b));
      if (json)
        out << nlohmann::json{{"verdict", v}, {"a", format_ordinal(a)}, {"b", format_ordinal(b)}}.dump() << "\n";
      else
        out << v << "\n";
      return exit_pass;
    }

    if (*term_cmp) {
      auto setup = detail::make_order(cfg);
      const Term s = parse_term(s_text, setup.signature);
      const Term t = parse_term(t_text, setup.signature);
      const char* v = detail::verdict(setup.order, s, t);
      nlohmann::json doc{{"verdict", v}};
      if (!json) out << v << "\n";
      if (setup.ctx) {
        const std::string os = format_ordinal(denote(*setup.ctx, s));
        const std::string ot = format_ordinal(denote(*setup.ctx, t));
        if (json) {
          doc["denotations"] = {{"s", os}, {"t", ot}};
        } else {
          out << "o(s) = " << os << "\n";
          out << "o(t) = " << ot << "\n";
        }
      }
      if (json) out << doc.dump() << "\n";
      return exit_pass;
    }

    if (*check) {
      auto setup = detail::make_order(cfg);
      if (!cfg.extra_edges_path.empty()) detail::add_extra_edges(setup, cfg.extra_edges_path);
      std::vector<int> wanted;
      for (const auto& c : detail::split_list(cfg.conditions)) {
        if (c.size() != 1 || c[0] < '0' || c[0] > '3')
          throw CLI::ValidationError("--conditions takes a subset of 0,1,2,3");
        wanted.push_back(c[0] - '0');
      }
      if (wanted.empty()) throw CLI::ValidationError("--conditions is empty");
      if (!setup.signature.has_constant()) err << "warning: NoConstant: the signature has no constant; universe is empty\n";
      const auto universe = enumerate_terms(setup.signature, cfg.max_size);

      std::vector<ConditionReport> reports;
      for (int c : wanted) {
        switch (c) {
          case 0: reports.push_back(check_order_properties(setup.order, universe, cfg.budget, cfg.seed)); break;
          case 1: reports.push_back(check_subterm_condition(setup.order, universe)); break;
          case 2: reports.push_back(check_decomposition_condition(setup.order, setup.arg_orders, universe)); break;
          default:
            reports.push_back(check_lifting_condition(setup.order, setup.arg_orders, universe, cfg.budget));
            break;
        }
      }
      int code = exit_pass;
      for (const auto& r : reports) {
        if (r.status == ConditionStatus::Fail) code = exit_fail;
        else if (r.status == ConditionStatus::Inconclusive && code == exit_pass) code = exit_inconclusive;
      }
      if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(report_to_json(r));
        out << arr.dump(2) << "\n";
      } else {
        for (const auto& r : reports) out << report_to_text(r);
      }
      return code;
    }

    if (*embed) {
      const auto ctx = build_context(k_embed);
      const Term t = parse_term(t_text, ctx.signature);
      const std::string o = format_ordinal(denote(ctx, t));
      if (json)
        out << nlohmann::json{{"term", format_term(t)}, {"ordinal", o}}.dump() << "\n";
      else
        out << o << "\n";
      return exit_pass;
    }

    if (*termof) {
      const auto ctx = build_context(k_termof);
      const Ordinal a = parse_ordinal(a_text);
      const Term t = term_of(ctx, a);
      const Ordinal o = denote(ctx, t);
      const Ordinal plus = plus_map(a);
      const bool ok = o == plus;
      if (json) {
        out << nlohmann::json{{"term", format_term(t)},
                              {"denotation", format_ordinal(o)},
                              {"plus", format_ordinal(plus)},
                              {"check", ok}}
                   .dump()
            << "\n";
      } else {
        out << format_term(t) << "\n";
        out << "check: o(" << format_term(t) << ") = " << format_ordinal(o) << (ok ? " = " : " != ") << "plus("
            << format_ordinal(a) << ") " << (ok ? "OK" : "MISMATCH") << "\n";
      }
      return ok ? exit_pass : exit_fail;
    }

    if (*wfp) {
      EdgeList rel = load_edge_list(edge_path);
      for (const auto& n : detail::split_list(node_list)) {
        if (!is_identifier(n)) throw Error(ErrorKind::ParseError, "'" + n + "' is not an identifier");
        rel.declare(n);
      }
      std::map<std::string, std::vector<std::string>> below;
      for (const auto& [p, n] : rel.edges) below[n].push_back(p);
      std::function<std::vector<std::string>(const std::string&)> preds = [&](const std::string& n) {
        auto it = below.find(n);
        return it == below.end() ? std::vector<std::string>{} : it->second;
      };
      auto result = wfp_compute<std::string>(preds, rel.nodes, cfg.budget);

      auto cycle_text = [](const std::vector<std::string>& cycle) {
        std::string s;
        for (const auto& c : cycle) s += c + " <- ";
        return s + (cycle.empty() ? std::string() : cycle.front());
      };
      nlohmann::json arr = nlohmann::json::array();
      for (std::size_t i = 0; i < result.nodes().size(); ++i) {
        const auto& n = result.nodes()[i];
        const auto& s = result.statuses()[i];
        nlohmann::json j{{"node", n}, {"status", to_string(s.kind)}};
        std::string line = n + ": " + to_string(s.kind);
        if (s.kind == Accessibility::Accessible) {
          j["rank"] = s.rank;
          line += " rank " + std::to_string(s.rank);
        } else if (s.kind == Accessibility::NonAccessible) {
          j["cycle"] = s.cycle;
          if (s.via) {
            j["via"] = *s.via;
            line += " via " + *s.via;
          }
          line += " (cycle " + cycle_text(s.cycle) + ")";
        } else {
          j["reason"] = to_string(s.reason);
          line += std::string(" (") + to_string(s.reason) + ")";
        }
        arr.push_back(j);
        if (!json) out << line << "\n";
      }
      if (json) out << arr.dump(2) << "\n";
      if (result.count(Accessibility::NonAccessible) > 0) return exit_fail;
      if (result.count(Accessibility::Unknown) > 0) return exit_inconclusive;
      return exit_pass;
    }

    if (*en_terms) {
      Signature sig;
      if (!cfg.sig_path.empty() && cfg.k) throw CLI::ValidationError("give either --k or --sig");
      if (!cfg.sig_path.empty())
        sig = load_signature(cfg.sig_path);
      else if (cfg.k)
        sig = build_context(*cfg.k).signature;
      else
        throw CLI::ValidationError("enum terms requires --k or --sig");
      if (!sig.has_constant()) err << "warning: NoConstant: the signature has no constant; nothing to enumerate\n";
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : enumerate_terms(sig, cfg.max_size)) {
        if (json) arr.push_back(format_term(t));
        else out << format_term(t) << "\n";
      }
      if (json) out << arr.dump() << "\n";
      return exit_pass;
    }

    if (*en_ords) {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& o : enumerate_notations(max_nodes, max_len)) {
        if (json) arr.push_back(format_ordinal(o));
        else out << format_ordinal(o) << "\n";
      }
      if (json) out << arr.dump() << "\n";
      return exit_pass;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace simpord::cli
