#include "hlk/models.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlk {

const Letter& letter_at(const LassoTrace& t, std::size_t i) { return t.at(i); }

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

bool lasso_equal(const LassoTrace& a, const LassoTrace& b) {
  // Exact for lassos: compare up to max prefix + lcm of loop lengths.
  std::size_t pre = std::max(a.prefix.size(), b.prefix.size());
  std::size_t period =
      static_cast<std::size_t>(lcm_u64(a.loop.size(), b.loop.size()));
  for (std::size_t i = 0; i < pre + period; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

namespace {
Letter tag_union(const Letter& a, const std::string& tagA, const Letter& b,
                 const std::string& tagB) {
  Letter out;
  for (const auto& x : a) out.insert(x + "@" + tagA);
  for (const auto& x : b) out.insert(x + "@" + tagB);
  return out;
}
}  // namespace

LassoTrace zip(const LassoTrace& a, const LassoTrace& b,
               const std::string& tagA, const std::string& tagB) {
  LassoTrace out;
  std::size_t pre = std::max(a.prefix.size(), b.prefix.size());
  std::size_t period =
      static_cast<std::size_t>(lcm_u64(a.loop.size(), b.loop.size()));
  for (std::size_t i = 0; i < pre; ++i)
    out.prefix.push_back(tag_union(a.at(i), tagA, b.at(i), tagB));
  for (std::size_t i = pre; i < pre + period; ++i)
    out.loop.push_back(tag_union(a.at(i), tagA, b.at(i), tagB));
  return out;
}

bool TraceSet::insert(LassoTrace t) {
  for (const auto& u : traces)
    if (lasso_equal(u, t)) return false;
  traces.push_back(std::move(t));
  return true;
}

LassoTrace zip_set(const TraceSet& T, const std::vector<std::size_t>& order) {
  if (order.empty()) throw std::invalid_argument("zip_set: empty order");
  std::size_t pre = 0;
  std::uint64_t period = 1;
  for (std::size_t idx : order) {
    pre = std::max(pre, T.traces[idx].prefix.size());
    period = lcm_u64(period, T.traces[idx].loop.size());
  }
  LassoTrace out;
  auto letter = [&](std::size_t i) {
    Letter l;
    for (std::size_t k = 0; k < order.size(); ++k)
      for (const auto& x : T.traces[order[k]].at(i))
        l.insert(x + "@" + std::to_string(k));
    return l;
  };
  for (std::size_t i = 0; i < pre; ++i) out.prefix.push_back(letter(i));
  for (std::size_t i = pre; i < pre + period; ++i)
    out.loop.push_back(letter(i));
  return out;
}

int KripkeTree::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].id == id) return static_cast<int>(i);
  return -1;
}

std::optional<std::string> KripkeTree::validate() const {
  if (nodes.empty()) return "no nodes";
  if (root < 0 || root >= static_cast<int>(nodes.size())) return "bad root";
  for (const auto& n : nodes) {
    if (n.succs.empty()) return "node " + n.id + " has no successor";
    for (int s : n.succs)
      if (s < 0 || s >= static_cast<int>(nodes.size()))
        return "node " + n.id + " has a dangling edge";
  }
  return std::nullopt;
}

bool lasso_path_equal(const LassoPath& a, const LassoPath& b) {
  std::size_t pre = std::max(a.stem.size(), b.stem.size());
  std::size_t period =
      static_cast<std::size_t>(lcm_u64(a.cycle.size(), b.cycle.size()));
  for (std::size_t i = 0; i < pre + period; ++i)
    if (a.at(i) != b.at(i)) return false;
  return true;
}

std::vector<LassoPath> enumerate_lasso_paths(const KripkeTree& K, int from,
                                             std::size_t maxLen) {
  std::vector<LassoPath> out;
  if (maxLen == 0) return out;
  std::vector<int> walk{from};
  auto has_edge = [&](int a, int b) {
    const auto& s = K.nodes[a].succs;
    return std::find(s.begin(), s.end(), b) != s.end();
  };
  auto emit = [&](const std::vector<int>& w) {
    // Split w into stem + cycle at every position with a closing edge.
    for (std::size_t j = 0; j + 1 <= w.size(); ++j) {
      if (!has_edge(w.back(), w[j])) continue;
      LassoPath p;
      p.stem.assign(w.begin(), w.begin() + j);
      p.cycle.assign(w.begin() + j, w.end());
      bool dup = false;
      for (const auto& q : out)
        if (lasso_path_equal(p, q)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(std::move(p));
    }
  };
  std::function<void(std::vector<int>&)> dfs = [&](std::vector<int>& w) {
    emit(w);
    if (w.size() >= maxLen) return;
    for (int s : K.nodes[w.back()].succs) {
      w.push_back(s);
      dfs(w);
      w.pop_back();
    }
  };
  dfs(walk);
  return out;
}

LassoTrace path_trace(const KripkeTree& K, const LassoPath& p) {
  LassoTrace t;
  for (int n : p.stem) t.prefix.push_back(K.nodes[n].label);
  for (int n : p.cycle) t.loop.push_back(K.nodes[n].label);
  return t;
}

// --- text formats ----------------------------------------------------

std::string format_letter(const Letter& l) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : l) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  return out + "}";
}

Letter parse_letter(const std::string& text) {
  std::string s = text;
  // trim
  auto trim = [](std::string& x) {
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.front())))
      x.erase(x.begin());
    while (!x.empty() && std::isspace(static_cast<unsigned char>(x.back())))
      x.pop_back();
  };
  trim(s);
  if (s.size() < 2 || s.front() != '{' || s.back() != '}')
    throw std::runtime_error("bad letter: " + text);
  s = s.substr(1, s.size() - 2);
  Letter l;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    trim(item);
    if (!item.empty()) l.insert(item);
  }
  return l;
}

namespace {
std::vector<Letter> parse_letter_list(const std::string& text) {
  std::vector<Letter> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_letter(cur));
      cur.clear();
      continue;
    }
    cur += c;
  }
  if (cur.find('{') != std::string::npos) out.push_back(parse_letter(cur));
  return out;
}
}  // namespace

std::string format_trace_set(const TraceSet& T) {
  std::ostringstream os;
  os << "aps:";
  for (const auto& a : T.aps) os << ' ' << a;
  os << '\n';
  for (const auto& t : T.traces) {
    for (std::size_t i = 0; i < t.prefix.size(); ++i)
      os << (i ? "," : "") << format_letter(t.prefix[i]);
    os << " | ";
    for (std::size_t i = 0; i < t.loop.size(); ++i)
      os << (i ? "," : "") << format_letter(t.loop[i]);
    os << '\n';
  }
  return os.str();
}

TraceSet parse_trace_set(const std::string& text) {
  TraceSet T;
  std::istringstream is(text);
  std::string line;
  bool sawAps = false;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!sawAps) {
      auto colon = line.find(':');
      if (colon == std::string::npos || line.substr(0, colon) != "aps")
        throw std::runtime_error("trace set must start with 'aps:' header");
      std::stringstream ss(line.substr(colon + 1));
      std::string ap;
      while (ss >> ap) T.aps.push_back(ap);
      sawAps = true;
      continue;
    }
    auto bar = line.find('|');
    if (bar == std::string::npos)
      throw std::runtime_error("trace line needs 'prefix | loop': " + line);
    LassoTrace t;
    t.prefix = parse_letter_list(line.substr(0, bar));
    t.loop = parse_letter_list(line.substr(bar + 1));
    if (t.loop.empty())
      throw std::runtime_error("trace loop must be nonempty: " + line);
    T.insert(std::move(t));
  }
  if (!sawAps) throw std::runtime_error("empty trace-set file");
  return T;
}

std::string format_kripke(const KripkeTree& K) {
  std::ostringstream os;
  for (const auto& n : K.nodes)
    os << "node " << n.id << ' ' << format_letter(n.label) << '\n';
  for (const auto& n : K.nodes)
    for (int s : n.succs) os << "edge " << n.id << ' ' << K.nodes[s].id << '\n';
  os << "root " << K.nodes[K.root].id << '\n';
  return os.str();
}

KripkeTree parse_kripke(const std::string& text) {
  KripkeTree K;
  std::istringstream is(text);
  std::string line;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string rootId;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "node") {
      std::string id, rest;
      ls >> id;
      std::getline(ls, rest);
      KripkeTree::Node n;
      n.id = id;
      n.label = parse_letter(rest);
      K.nodes.push_back(std::move(n));
    } else if (kw == "edge") {
      std::string a, b;
      ls >> a >> b;
      edges.emplace_back(a, b);
    } else if (kw == "root") {
      ls >> rootId;
    } else {
      throw std::runtime_error("bad kripke line: " + line);
    }
  }
  for (const auto& [a, b] : edges) {
    int ia = K.index_of(a), ib = K.index_of(b);
    if (ia < 0 || ib < 0) throw std::runtime_error("edge on unknown node");
    K.nodes[ia].succs.push_back(ib);
  }
  if (!rootId.empty()) {
    int r = K.index_of(rootId);
    if (r < 0) throw std::runtime_error("unknown root " + rootId);
    K.root = r;
  }
  if (auto err = K.validate()) throw std::runtime_error(*err);
  return K;
}

}  // namespace hlk
