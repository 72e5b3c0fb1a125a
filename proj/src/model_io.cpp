#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dclpc/errors.hpp"
#include "dclpc/model_json.hpp"
#include "dclpc/syntax.hpp"

namespace dclpc {

namespace {

struct Word {
  std::string text;
  int column;
};

// Splits on blanks and commas, keeping 1-based columns.
std::vector<Word> split_words(std::string_view s, int first_column) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t' || s[i] == ',' || s[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',' && s[j] != '\r') ++j;
    out.push_back({std::string(s.substr(i, j - i)), first_column + static_cast<int>(i)});
    i = j;
  }
  return out;
}

struct Located {
  std::string name;
  int line;
  int column;
};

}  // namespace

std::vector<std::string> parse_identifier_list(std::string_view text) {
  std::vector<std::string> out;
  for (auto& w : split_words(text, 1)) {
    if (!is_identifier(w.text)) throw ParseError("malformed identifier '" + w.text + "'", 1, w.column);
    out.push_back(std::move(w.text));
  }
  return out;
}

DirectModel parse_model(std::string_view text) {
  std::optional<std::vector<Located>> agents;
  std::optional<std::vector<Located>> vars;
  std::vector<Located> true_vars;
  bool saw_true = false;
  // agent -> owned variables, with the position of the `owns` line.
  std::map<std::string, std::pair<std::vector<Located>, Located>> owns;
  int last_line = 1;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    last_line = line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string_view::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("expected 'key: values'", line_no, static_cast<int>(start) + 1);
    }
    auto head = split_words(line.substr(0, colon), 1);
    auto values = split_words(line.substr(colon + 1), static_cast<int>(colon) + 2);
    std::vector<Located> names;
    for (auto& w : values) {
      if (!is_identifier(w.text)) throw ParseError("malformed identifier '" + w.text + "'", line_no, w.column);
      names.push_back({w.text, line_no, w.column});
    }
    const int key_col = head.empty() ? static_cast<int>(start) + 1 : head[0].column;
    const std::string key = head.empty() ? "" : head[0].text;

    if (key == "agents" && head.size() == 1) {
      if (agents) throw ParseError("duplicate 'agents' line", line_no, key_col);
      if (names.empty()) throw ParseError("agent list is empty", line_no, key_col);
      agents = std::move(names);
    } else if (key == "vars" && head.size() == 1) {
      if (vars) throw ParseError("duplicate 'vars' line", line_no, key_col);
      if (names.empty()) throw ParseError("variable list is empty", line_no, key_col);
      vars = std::move(names);
    } else if (key == "true" && head.size() == 1) {
      if (saw_true) throw ParseError("duplicate 'true' line", line_no, key_col);
      saw_true = true;
      true_vars = std::move(names);
    } else if (key == "owns" && head.size() == 2) {
      const std::string& agent = head[1].text;
      if (!is_identifier(agent)) throw ParseError("malformed agent name '" + agent + "'", line_no, head[1].column);
      if (owns.count(agent)) throw ParseError("duplicate 'owns' line for agent '" + agent + "'", line_no, key_col);
      owns.emplace(agent, std::make_pair(std::move(names), Located{agent, line_no, head[1].column}));
    } else {
      throw ParseError("unknown key '" + std::string(line.substr(start, colon - start)) + "'", line_no, key_col);
    }
  }

  if (!agents) throw ParseError("missing 'agents' line", last_line, 1);
  if (!vars) throw ParseError("missing 'vars' line", last_line, 1);

  std::set<std::string> agent_set;
  for (const auto& a : *agents) {
    if (!agent_set.insert(a.name).second) throw ParseError("agent '" + a.name + "' listed twice", a.line, a.column);
  }
  std::set<std::string> var_set;
  for (const auto& v : *vars) {
    if (!var_set.insert(v.name).second) throw ParseError("variable '" + v.name + "' listed twice", v.line, v.column);
  }

  std::map<PropId, AgentId> owner;
  for (const auto& [agent, entry] : owns) {
    const auto& [owned, where] = entry;
    if (!agent_set.count(agent)) throw ParseError("'owns' names unknown agent '" + agent + "'", where.line, where.column);
    for (const auto& v : owned) {
      if (!var_set.count(v.name)) throw ParseError("unknown variable '" + v.name + "'", v.line, v.column);
      auto [it, inserted] = owner.emplace(v.name, agent);
      if (!inserted) {
        throw ParseError("variable '" + v.name + "' owned by both '" + it->second + "' and '" + agent + "'", v.line,
                         v.column);
      }
    }
  }
  for (const auto& v : *vars) {
    if (!owner.count(v.name)) throw ParseError("variable '" + v.name + "' has no owner", v.line, v.column);
  }

  std::vector<PropId> true_names;
  std::set<std::string> seen_true;
  for (const auto& t : true_vars) {
    if (!var_set.count(t.name)) throw ParseError("unknown variable '" + t.name + "' in 'true'", t.line, t.column);
    if (seen_true.insert(t.name).second) true_names.push_back(t.name);
  }

  std::vector<AgentId> agent_names(agent_set.begin(), agent_set.end());
  std::vector<PropId> var_names(var_set.begin(), var_set.end());
  return DirectModel::from_names(Signature(std::move(agent_names), std::move(var_names)), owner, true_names);
}

std::string render_model(const DirectModel& m) {
  const Signature& sig = m.signature();
  std::string out = "agents:";
  for (const auto& a : sig.agents()) out += " " + a;
  out += "\nvars:";
  for (const auto& v : sig.vars()) out += " " + v;
  out += "\n";
  for (const auto& a : sig.agents()) {
    out += "owns " + a + ":";
    for (const auto& v : m.owned_by(a)) out += " " + v;
    out += "\n";
  }
  out += "true:";
  for (std::size_t v = 0; v < sig.var_count(); ++v) {
    if (m.valuation().test(v)) out += " " + sig.var(v);
  }
  out += "\n";
  return out;
}

nlohmann::json model_to_json(const DirectModel& m) {
  const Signature& sig = m.signature();
  nlohmann::json j;
  j["agents"] = std::vector<std::string>(sig.agents().begin(), sig.agents().end());
  j["vars"] = std::vector<std::string>(sig.vars().begin(), sig.vars().end());
  nlohmann::json owns = nlohmann::json::object();
  for (const auto& a : sig.agents()) owns[a] = m.owned_by(a);
  j["owns"] = owns;
  std::vector<std::string> truths;
  for (std::size_t v = 0; v < sig.var_count(); ++v) {
    if (m.valuation().test(v)) truths.push_back(sig.var(v));
  }
  j["true"] = truths;
  return j;
}

DirectModel model_from_json(const nlohmann::json& j) {
  try {
    Signature sig(j.at("agents").get<std::vector<std::string>>(), j.at("vars").get<std::vector<std::string>>());
    std::map<PropId, AgentId> owner;
    for (const auto& [agent, owned] : j.at("owns").items()) {
      sig.agent_index(agent);
      for (const auto& v : owned.get<std::vector<std::string>>()) {
        if (!owner.emplace(v, agent).second) throw std::invalid_argument("variable '" + v + "' owned twice");
      }
    }
    return DirectModel::from_names(sig, owner, j.at("true").get<std::vector<std::string>>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed model record: ") + e.what());
  } catch (const SignatureError& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace dclpc
