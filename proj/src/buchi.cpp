#include "hlk/buchi.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace hlk {

namespace {
constexpr int kMaxProps = 16;
}

Constraint::Constraint(int nprops, bool all) : nprops_(nprops) {
  if (nprops < 0 || nprops > kMaxProps)
    throw std::invalid_argument("constraint vocabulary too large");
  std::size_t nbits = std::size_t{1} << nprops;
  bits_.assign((nbits + 63) / 64, all ? ~std::uint64_t{0} : 0);
  if (all && nbits < 64) bits_[0] = (std::uint64_t{1} << nbits) - 1;
}

Constraint Constraint::cube(int nprops, const std::vector<int>& pos,
                            const std::vector<int>& neg) {
  Constraint c(nprops, false);
  std::uint32_t nbits = std::uint32_t{1} << nprops;
  for (std::uint32_t m = 0; m < nbits; ++m) {
    bool ok = true;
    for (int p : pos)
      if (!(m >> p & 1)) { ok = false; break; }
    if (ok)
      for (int p : neg)
        if (m >> p & 1) { ok = false; break; }
    if (ok) c.set(m, true);
  }
  return c;
}

Constraint Constraint::of_minterm(int nprops, std::uint32_t m) {
  Constraint c(nprops, false);
  c.set(m, true);
  return c;
}

std::uint64_t Constraint::minterm_count() const {
  std::uint64_t n = 0;
  for (auto w : bits_) n += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return n;
}

bool Constraint::sat() const {
  for (auto w : bits_)
    if (w) return true;
  return false;
}

bool Constraint::is_all() const {
  return minterm_count() == (std::uint64_t{1} << nprops_);
}

bool Constraint::test(std::uint32_t m) const {
  return bits_[m / 64] >> (m % 64) & 1;
}

void Constraint::set(std::uint32_t m, bool v) {
  if (v)
    bits_[m / 64] |= std::uint64_t{1} << (m % 64);
  else
    bits_[m / 64] &= ~(std::uint64_t{1} << (m % 64));
}

Constraint Constraint::operator&(const Constraint& o) const {
  Constraint c(nprops_, false);
  for (std::size_t i = 0; i < words(); ++i) c.bits_[i] = bits_[i] & o.bits_[i];
  return c;
}

Constraint Constraint::operator|(const Constraint& o) const {
  Constraint c(nprops_, false);
  for (std::size_t i = 0; i < words(); ++i) c.bits_[i] = bits_[i] | o.bits_[i];
  return c;
}

Constraint Constraint::operator~() const {
  Constraint c = Constraint::all(nprops_);
  for (std::size_t i = 0; i < words(); ++i) c.bits_[i] &= ~bits_[i];
  return c;
}

bool Constraint::operator==(const Constraint& o) const {
  return nprops_ == o.nprops_ && bits_ == o.bits_;
}

Constraint Constraint::project_out(int k) const {
  Constraint c(nprops_ - 1, false);
  std::uint32_t nbits = std::uint32_t{1} << (nprops_ - 1);
  std::uint32_t low = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t m = 0; m < nbits; ++m) {
    std::uint32_t m0 = ((m & ~low) << 1) | (m & low);
    std::uint32_t m1 = m0 | (std::uint32_t{1} << k);
    if (test(m0) || test(m1)) c.set(m, true);
  }
  return c;
}

Constraint Constraint::lift(const std::vector<int>& map, int newN) const {
  Constraint c(newN, false);
  std::uint32_t nbits = std::uint32_t{1} << newN;
  for (std::uint32_t m = 0; m < nbits; ++m) {
    std::uint32_t old = 0;
    for (int i = 0; i < nprops_; ++i)
      if (m >> map[i] & 1) old |= std::uint32_t{1} << i;
    if (test(old)) c.set(m, true);
  }
  return c;
}

std::optional<std::uint32_t> Constraint::some_minterm() const {
  for (std::size_t w = 0; w < words(); ++w)
    if (bits_[w])
      return static_cast<std::uint32_t>(w * 64 + __builtin_ctzll(bits_[w]));
  return std::nullopt;
}

int Buchi::add_state(bool acc) {
  edges.emplace_back();
  accepting.push_back(acc);
  return states() - 1;
}

void Buchi::add_edge(int src, Constraint c, int dst) {
  if (!c.sat()) return;
  for (auto& e : edges[src])
    if (e.dst == dst) {
      e.guard = e.guard | c;
      return;
    }
  edges[src].push_back(Edge{std::move(c), dst});
}

int Buchi::prop_index(const std::string& name) const {
  for (std::size_t i = 0; i < vocab.size(); ++i)
    if (vocab[i] == name) return static_cast<int>(i);
  return -1;
}

std::vector<int> Buchi::step(int q, std::uint32_t m) const {
  std::vector<int> out;
  for (const auto& e : edges[q])
    if (e.guard.test(m)) out.push_back(e.dst);
  return out;
}

bool Buchi::has_edge(int q, std::uint32_t m, int q2) const {
  for (const auto& e : edges[q])
    if (e.dst == q2 && e.guard.test(m)) return true;
  return false;
}

Buchi universal_automaton(std::vector<std::string> vocab) {
  Buchi a;
  a.vocab = std::move(vocab);
  a.add_state(true);
  a.add_edge(0, Constraint::all(static_cast<int>(a.vocab.size())), 0);
  return a;
}

Buchi empty_automaton(std::vector<std::string> vocab) {
  Buchi a;
  a.vocab = std::move(vocab);
  a.add_state(false);
  return a;
}

Buchi pad_vocab(const Buchi& a, const std::vector<std::string>& newVocab) {
  if (a.vocab == newVocab) return a;
  std::vector<int> map;
  for (const auto& p : a.vocab) {
    auto it = std::find(newVocab.begin(), newVocab.end(), p);
    if (it == newVocab.end())
      throw std::invalid_argument("pad_vocab: vocabulary not a superset");
    map.push_back(static_cast<int>(it - newVocab.begin()));
  }
  Buchi b;
  b.vocab = newVocab;
  b.init = a.init;
  b.accepting = a.accepting;
  b.edges.resize(a.edges.size());
  int n = static_cast<int>(newVocab.size());
  for (int s = 0; s < a.states(); ++s)
    for (const auto& e : a.edges[s])
      b.edges[s].push_back(Buchi::Edge{e.guard.lift(map, n), e.dst});
  return b;
}

void align_vocab(Buchi& a, Buchi& b) {
  std::vector<std::string> u = a.vocab;
  for (const auto& p : b.vocab)
    if (std::find(u.begin(), u.end(), p) == u.end()) u.push_back(p);
  a = pad_vocab(a, u);
  b = pad_vocab(b, u);
}

Buchi degeneralize(const GenBuchi& g) {
  int k = static_cast<int>(g.acceptSets.size());
  Buchi out;
  out.vocab = g.vocab;
  if (k == 0) {
    out.edges.resize(g.edges.size());
    out.accepting.assign(g.edges.size(), true);
    out.init = g.init;
    for (std::size_t s = 0; s < g.edges.size(); ++s)
      for (const auto& e : g.edges[s]) out.add_edge(static_cast<int>(s), e.guard, e.dst);
    return out;
  }
  // State (s, c): counter c waits for acceptance set c.
  std::map<std::pair<int, int>, int> idx;
  std::deque<std::pair<int, int>> work;
  auto get = [&](int s, int c) {
    auto key = std::make_pair(s, c);
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    int id = out.add_state(c == k - 1 && g.acceptSets[k - 1][s]);
    idx[key] = id;
    work.push_back(key);
    return id;
  };
  out.init = get(g.init, 0);
  while (!work.empty()) {
    auto [s, c] = work.front();
    work.pop_front();
    int src = idx[{s, c}];
    int c2 = g.acceptSets[c][s] ? (c + 1) % k : c;
    for (const auto& e : g.edges[s]) out.add_edge(src, e.guard, get(e.dst, c2));
  }
  return out;
}

Buchi intersect(const Buchi& a0, const Buchi& b0) {
  Buchi a = a0, b = b0;
  align_vocab(a, b);
  GenBuchi g;
  g.vocab = a.vocab;
  std::map<std::pair<int, int>, int> idx;
  std::deque<std::pair<int, int>> work;
  std::vector<bool> accA, accB;
  auto get = [&](int s, int t) {
    auto key = std::make_pair(s, t);
    auto it = idx.find(key);
    if (it != idx.end()) return it->second;
    int id = static_cast<int>(g.edges.size());
    g.edges.emplace_back();
    accA.push_back(a.accepting[s]);
    accB.push_back(b.accepting[t]);
    idx[key] = id;
    work.push_back(key);
    return id;
  };
  g.init = get(a.init, b.init);
  while (!work.empty()) {
    auto [s, t] = work.front();
    work.pop_front();
    int src = idx[{s, t}];
    for (const auto& ea : a.edges[s])
      for (const auto& eb : b.edges[t]) {
        Constraint c = ea.guard & eb.guard;
        if (!c.sat()) continue;
        int dst = get(ea.dst, eb.dst);
        g.edges[src].push_back(Buchi::Edge{std::move(c), dst});
      }
  }
  g.acceptSets.push_back(accA);
  g.acceptSets.push_back(accB);
  return trim(degeneralize(g));
}

Buchi union_(const Buchi& a0, const Buchi& b0) {
  Buchi a = a0, b = b0;
  align_vocab(a, b);
  Buchi out;
  out.vocab = a.vocab;
  int freshInit = out.add_state(false);
  out.init = freshInit;
  int offA = out.states();
  for (int s = 0; s < a.states(); ++s) out.add_state(a.accepting[s]);
  int offB = out.states();
  for (int s = 0; s < b.states(); ++s) out.add_state(b.accepting[s]);
  for (int s = 0; s < a.states(); ++s)
    for (const auto& e : a.edges[s])
      out.add_edge(offA + s, e.guard, offA + e.dst);
  for (int s = 0; s < b.states(); ++s)
    for (const auto& e : b.edges[s])
      out.add_edge(offB + s, e.guard, offB + e.dst);
  for (const auto& e : a.edges[a.init])
    out.add_edge(freshInit, e.guard, offA + e.dst);
  for (const auto& e : b.edges[b.init])
    out.add_edge(freshInit, e.guard, offB + e.dst);
  return trim(out);
}

Buchi project(const Buchi& a, const std::string& q) {
  int k = a.prop_index(q);
  if (k < 0) throw std::invalid_argument("project: " + q + " not in vocabulary");
  Buchi out;
  out.vocab = a.vocab;
  out.vocab.erase(out.vocab.begin() + k);
  out.init = a.init;
  out.accepting = a.accepting;
  out.edges.resize(a.edges.size());
  for (int s = 0; s < a.states(); ++s)
    for (const auto& e : a.edges[s])
      out.edges[s].push_back(Buchi::Edge{e.guard.project_out(k), e.dst});
  return out;
}

int default_state_cap() {
  if (const char* env = std::getenv("HLK_STATE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 6;
}

namespace {

// Forward-bisimulation quotient; preserves the language exactly.
Buchi quotient_bisim(const Buchi& a) {
  int n = a.states();
  if (n <= 1) return a;
  std::vector<int> block(n);
  for (int s = 0; s < n; ++s) block[s] = a.accepting[s] ? 1 : 0;
  int nblocks = 2;
  for (;;) {
    std::map<std::string, int> sigToBlock;
    std::vector<int> next(n);
    for (int s = 0; s < n; ++s) {
      std::map<int, Constraint> agg;
      for (const auto& e : a.edges[s]) {
        auto [it, fresh] = agg.try_emplace(block[e.dst], e.guard);
        if (!fresh) it->second = it->second | e.guard;
      }
      std::ostringstream sig;
      sig << block[s] << '#';
      for (const auto& [b, c] : agg) {
        sig << b << ':';
        for (auto w : c.raw()) sig << std::hex << w << ',';
        sig << ';';
      }
      auto [it, fresh] =
          sigToBlock.try_emplace(sig.str(), static_cast<int>(sigToBlock.size()));
      (void)fresh;
      next[s] = it->second;
    }
    int newCount = static_cast<int>(sigToBlock.size());
    bool stable = newCount == nblocks;
    block = std::move(next);
    nblocks = newCount;
    if (stable) break;
  }
  if (nblocks == n) return a;
  Buchi out;
  out.vocab = a.vocab;
  std::vector<int> rep(nblocks, -1);
  for (int s = 0; s < n; ++s)
    if (rep[block[s]] < 0) rep[block[s]] = s;
  std::vector<int> stateOf(nblocks);
  for (int b = 0; b < nblocks; ++b)
    stateOf[b] = out.add_state(a.accepting[rep[b]]);
  out.init = stateOf[block[a.init]];
  for (int b = 0; b < nblocks; ++b)
    for (const auto& e : a.edges[rep[b]])
      out.add_edge(stateOf[b], e.guard, stateOf[block[e.dst]]);
  return out;
}

// If the initial state is not on a cycle and another state has the same
// outgoing edges, start there instead (the language is unchanged).
Buchi merge_init(const Buchi& a) {
  bool initHasIncoming = false;
  for (int s = 0; s < a.states(); ++s)
    for (const auto& e : a.edges[s])
      if (e.dst == a.init) initHasIncoming = true;
  if (initHasIncoming || a.states() <= 1) return a;
  auto edgeKey = [&](int s) {
    std::map<int, Constraint> agg;
    for (const auto& e : a.edges[s]) {
      auto [it, fresh] = agg.try_emplace(e.dst, e.guard);
      if (!fresh) it->second = it->second | e.guard;
    }
    std::ostringstream os;
    for (const auto& [d, c] : agg) {
      os << d << ':';
      for (auto w : c.raw()) os << std::hex << w << ',';
      os << ';';
    }
    return os.str();
  };
  std::string initKey = edgeKey(a.init);
  for (int s = 0; s < a.states(); ++s) {
    if (s == a.init || edgeKey(s) != initKey) continue;
    Buchi out;
    out.vocab = a.vocab;
    std::vector<int> remap(a.states(), -1);
    for (int t = 0; t < a.states(); ++t)
      if (t != a.init) remap[t] = out.add_state(a.accepting[t]);
    out.init = remap[s];
    for (int t = 0; t < a.states(); ++t) {
      if (t == a.init) continue;
      for (const auto& e : a.edges[t])
        out.add_edge(remap[t], e.guard, remap[e.dst]);
    }
    return out;
  }
  return a;
}

Buchi trim_prune(const Buchi& a);

}  // namespace

Buchi trim(const Buchi& a) {
  return merge_init(quotient_bisim(trim_prune(a)));
}

namespace {

Buchi trim_prune(const Buchi& a) {
  int n = a.states();
  // forward reachability
  std::vector<bool> reach(n, false);
  std::deque<int> work{a.init};
  reach[a.init] = true;
  while (!work.empty()) {
    int s = work.front();
    work.pop_front();
    for (const auto& e : a.edges[s])
      if (!reach[e.dst]) {
        reach[e.dst] = true;
        work.push_back(e.dst);
      }
  }
  // states that can reach an accepting cycle: iterate backwards from
  // accepting states that lie on a cycle.
  std::vector<std::vector<int>> preds(n);
  for (int s = 0; s < n; ++s)
    for (const auto& e : a.edges[s]) preds[e.dst].push_back(s);
  auto on_cycle = [&](int s) {
    // BFS from successors of s back to s.
    std::vector<bool> seen(n, false);
    std::deque<int> w;
    for (const auto& e : a.edges[s])
      if (!seen[e.dst]) {
        seen[e.dst] = true;
        w.push_back(e.dst);
      }
    while (!w.empty()) {
      int t = w.front();
      w.pop_front();
      if (t == s) return true;
      for (const auto& e : a.edges[t])
        if (!seen[e.dst]) {
          seen[e.dst] = true;
          w.push_back(e.dst);
        }
    }
    return false;
  };
  std::vector<bool> good(n, false);
  std::deque<int> gw;
  for (int s = 0; s < n; ++s)
    if (reach[s] && a.accepting[s] && on_cycle(s)) {
      good[s] = true;
      gw.push_back(s);
    }
  while (!gw.empty()) {
    int s = gw.front();
    gw.pop_front();
    for (int p : preds[s])
      if (!good[p]) {
        good[p] = true;
        gw.push_back(p);
      }
  }
  std::vector<int> remap(n, -1);
  Buchi out;
  out.vocab = a.vocab;
  for (int s = 0; s < n; ++s)
    if (reach[s] && good[s]) remap[s] = out.add_state(a.accepting[s]);
  if (remap[a.init] < 0) {
    // empty language; keep a single rejecting init
    Buchi e = empty_automaton(a.vocab);
    return e;
  }
  out.init = remap[a.init];
  for (int s = 0; s < n; ++s) {
    if (remap[s] < 0) continue;
    for (const auto& e : a.edges[s])
      if (remap[e.dst] >= 0) out.add_edge(remap[s], e.guard, remap[e.dst]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------
// Rank-based complementation (Kupferman-Vardi level rankings).

namespace {

struct RankState {
  std::vector<int> rank;  // per original state; -1 = absent
  std::vector<bool> owe;  // O set
  bool operator<(const RankState& o) const {
    if (rank != o.rank) return rank < o.rank;
    return owe < o.owe;
  }
};

}  // namespace

Buchi complement(const Buchi& a0, int stateCap, int resultCap) {
  if (stateCap <= 0) stateCap = default_state_cap();
  Buchi a = trim(a0);
  if (a.states() > stateCap)
    throw CapExceeded("complement: input has " + std::to_string(a.states()) +
                      " states, cap is " + std::to_string(stateCap));
  int n = a.states();
  int maxRank = 2 * n;
  int nbitsProps = static_cast<int>(a.vocab.size());
  std::uint32_t letters = std::uint32_t{1} << nbitsProps;

  Buchi out;
  out.vocab = a.vocab;
  std::map<RankState, int> idx;
  std::deque<RankState> work;
  auto get = [&](const RankState& rs) {
    auto it = idx.find(rs);
    if (it != idx.end()) return it->second;
    bool acc = true;
    for (bool b : rs.owe)
      if (b) { acc = false; break; }
    int id = out.add_state(acc);
    if (out.states() > resultCap)
      throw CapExceeded("complement: result exceeds state cap");
    idx[rs] = id;
    work.push_back(rs);
    return id;
  };

  RankState init;
  init.rank.assign(n, -1);
  init.owe.assign(n, false);
  init.rank[a.init] = maxRank;
  if (a.accepting[a.init] && maxRank % 2 == 1) init.rank[a.init] = maxRank - 1;
  out.init = get(init);

  while (!work.empty()) {
    RankState rs = work.front();
    work.pop_front();
    int src = idx.at(rs);
    bool oweEmpty = true;
    for (bool b : rs.owe)
      if (b) { oweEmpty = false; break; }

    for (std::uint32_t m = 0; m < letters; ++m) {
      // successor obligation: max allowed rank per successor state
      std::vector<int> rmax(n, -2);  // -2 = not a successor
      bool liveSucc = false;
      for (int q = 0; q < n; ++q) {
        if (rs.rank[q] < 0) continue;
        for (int q2 : a.step(q, m)) {
          if (rmax[q2] == -2)
            rmax[q2] = rs.rank[q];
          else
            rmax[q2] = std::min(rmax[q2], rs.rank[q]);
          liveSucc = true;
        }
      }
      (void)liveSucc;
      // enumerate rank choices per successor
      std::vector<int> succs;
      for (int q = 0; q < n; ++q)
        if (rmax[q] >= 0) succs.push_back(q);
      // A run of the complement may also "drop" states only via rank
      // structure; domain is exactly the successor set.
      std::vector<int> choice(succs.size(), 0);
      bool any = true;
      if (!succs.empty()) {
        // initialize choices to 0 (or 0/1 adjusted for F-states)
        for (std::size_t i = 0; i < succs.size(); ++i) choice[i] = 0;
      }
      while (any) {
        // build candidate ranking; F-states need even ranks
        bool valid = true;
        RankState nxt;
        nxt.rank.assign(n, -1);
        nxt.owe.assign(n, false);
        for (std::size_t i = 0; i < succs.size(); ++i) {
          int q = succs[i];
          int r = choice[i];
          if (a.accepting[q] && r % 2 == 1) valid = false;
          nxt.rank[q] = r;
        }
        if (valid) {
          // owe update
          if (oweEmpty) {
            for (int q = 0; q < n; ++q)
              if (nxt.rank[q] >= 0 && nxt.rank[q] % 2 == 0) nxt.owe[q] = true;
          } else {
            for (int q = 0; q < n; ++q) {
              if (!rs.owe[q] || rs.rank[q] < 0) continue;
              for (int q2 : a.step(q, m))
                if (nxt.rank[q2] >= 0 && nxt.rank[q2] % 2 == 0)
                  nxt.owe[q2] = true;
            }
          }
          out.add_edge(src, Constraint::of_minterm(nbitsProps, m), get(nxt));
        }
        // next choice vector
        any = false;
        for (std::size_t i = 0; i < succs.size(); ++i) {
          if (choice[i] < rmax[succs[i]]) {
            ++choice[i];
            for (std::size_t j = 0; j < i; ++j) choice[j] = 0;
            any = true;
            break;
          }
        }
        if (succs.empty()) break;
      }
      if (succs.empty()) {
        // all runs die: the complement accepts everything from here on
        RankState dead;
        dead.rank.assign(n, -1);
        dead.owe.assign(n, false);
        out.add_edge(src, Constraint::of_minterm(nbitsProps, m), get(dead));
      }
    }
  }
  return trim(out);
}

std::optional<LassoWitness> is_empty(const Buchi& a) {
  Buchi t = trim(a);
  // After trimming, nonempty iff the initial state survives with the
  // ability to reach an accepting cycle; reconstruct a concrete lasso.
  if (t.states() == 1 && t.edges[0].empty()) return std::nullopt;

  auto bfs_path = [&](int from, int to,
                      bool nonTrivial) -> std::optional<std::vector<int>> {
    // returns state sequence from->...->to (in states); nonTrivial forces
    // at least one step.
    std::map<int, int> parent;
    std::deque<int> work;
    if (!nonTrivial && from == to) return std::vector<int>{from};
    for (const auto& e : t.edges[from])
      if (!parent.count(e.dst)) {
        parent[e.dst] = from;
        work.push_back(e.dst);
      }
    auto reconstruct = [&](int goal) {
      std::vector<int> path{goal};
      int cur = goal;
      do {
        cur = parent.at(cur);
        path.push_back(cur);
      } while (cur != from);
      std::reverse(path.begin(), path.end());
      return path;
    };
    if (parent.count(to) && to == from) return reconstruct(to);
    while (!work.empty()) {
      int s = work.front();
      work.pop_front();
      if (s == to) return reconstruct(to);
      for (const auto& e : t.edges[s])
        if (!parent.count(e.dst)) {
          parent[e.dst] = s;
          work.push_back(e.dst);
        }
    }
    return std::nullopt;
  };

  // An accepting state that lies on a cycle; trim keeps only states that
  // reach an accepting cycle, so one exists whenever the language does.
  int target = -1;
  std::optional<std::vector<int>> cyclePath;
  for (int s = 0; s < t.states(); ++s) {
    if (!t.accepting[s]) continue;
    cyclePath = bfs_path(s, s, true);
    if (cyclePath) { target = s; break; }
  }
  if (target < 0) return std::nullopt;
  auto stemPath = bfs_path(t.init, target, false);
  if (!stemPath) return std::nullopt;

  auto pick_letter = [&](int s, int s2) -> Letter {
    for (const auto& e : t.edges[s]) {
      if (e.dst != s2) continue;
      auto m = e.guard.some_minterm();
      if (!m) continue;
      Letter l;
      for (std::size_t i = 0; i < t.vocab.size(); ++i)
        if (*m >> i & 1) l.insert(t.vocab[i]);
      return l;
    }
    throw std::logic_error("witness reconstruction lost an edge");
  };

  LassoWitness w;
  for (std::size_t i = 0; i + 1 < stemPath->size(); ++i) {
    w.stemRun.push_back((*stemPath)[i]);
    w.stem.push_back(pick_letter((*stemPath)[i], (*stemPath)[i + 1]));
  }
  for (std::size_t i = 0; i + 1 < cyclePath->size(); ++i) {
    w.cycleRun.push_back((*cyclePath)[i]);
    w.cycle.push_back(pick_letter((*cyclePath)[i], (*cyclePath)[i + 1]));
  }
  return w;
}

std::uint32_t letter_minterm(const Buchi& a, const Letter& l) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < a.vocab.size(); ++i)
    if (l.count(a.vocab[i])) m |= std::uint32_t{1} << i;
  return m;
}

bool check_witness(const Buchi& a, const LassoWitness& w) {
  if (w.cycleRun.empty()) return false;
  int cur = a.init;
  if (!w.stemRun.empty() && w.stemRun.front() != a.init) return false;
  for (std::size_t i = 0; i < w.stem.size(); ++i) {
    if (w.stemRun[i] != cur) return false;
    int nxt = i + 1 < w.stemRun.size() ? w.stemRun[i + 1] : w.cycleRun.front();
    if (!a.has_edge(cur, letter_minterm(a, w.stem[i]), nxt)) return false;
    cur = nxt;
  }
  if (cur != w.cycleRun.front()) return false;
  bool acc = false;
  for (std::size_t i = 0; i < w.cycle.size(); ++i) {
    if (w.cycleRun[i] != cur) return false;
    if (a.accepting[cur]) acc = true;
    int nxt = i + 1 < w.cycleRun.size() ? w.cycleRun[i + 1] : w.cycleRun.front();
    if (!a.has_edge(cur, letter_minterm(a, w.cycle[i]), nxt)) return false;
    cur = nxt;
  }
  return acc;
}

LassoTrace witness_trace(const LassoWitness& w) {
  LassoTrace t;
  t.prefix = w.stem;
  t.loop = w.cycle;
  if (t.loop.empty()) t.loop.push_back({});
  return t;
}

bool membership(const LassoTrace& w, const Buchi& a) {
  // intersect with the single-word automaton of w and test emptiness.
  Buchi word;
  word.vocab = a.vocab;
  int n = static_cast<int>(w.prefix.size() + w.loop.size());
  for (int i = 0; i < n; ++i) word.add_state(true);
  int nprops = static_cast<int>(a.vocab.size());
  for (int i = 0; i < n; ++i) {
    std::uint32_t m = 0;
    const Letter& l = w.at(i);
    for (int p = 0; p < nprops; ++p)
      if (l.count(a.vocab[p])) m |= std::uint32_t{1} << p;
    int dst = i + 1 < n ? i + 1 : static_cast<int>(w.prefix.size());
    word.add_edge(i, Constraint::of_minterm(nprops, m), dst);
  }
  word.init = 0;
  return is_empty(intersect(word, a)).has_value();
}

std::string format_constraint(const Constraint& c,
                              const std::vector<std::string>& vocab) {
  if (!c.sat()) return "false";
  if (c.is_all()) return "true";
  // try a single cube: props that are constant across all minterms
  std::uint32_t letters = std::uint32_t{1} << vocab.size();
  std::vector<int> fixed(vocab.size(), -2);  // -2 unknown, -1 varies
  std::vector<std::uint32_t> ms;
  for (std::uint32_t m = 0; m < letters; ++m)
    if (c.test(m)) ms.push_back(m);
  for (std::size_t p = 0; p < vocab.size(); ++p) {
    int v = ms[0] >> p & 1;
    bool varies = false;
    for (auto m : ms)
      if (static_cast<int>(m >> p & 1) != v) { varies = true; break; }
    fixed[p] = varies ? -1 : v;
  }
  std::uint64_t cubeCount = 1;
  for (auto f : fixed)
    if (f == -1) cubeCount *= 2;
  std::ostringstream os;
  if (cubeCount == ms.size()) {
    bool first = true;
    for (std::size_t p = 0; p < vocab.size(); ++p) {
      if (fixed[p] < 0) continue;
      if (!first) os << " & ";
      if (fixed[p] == 0) os << '!';
      os << vocab[p];
      first = false;
    }
    if (first) os << "true";
    return os.str();
  }
  // fall back to a minterm disjunction
  bool firstM = true;
  for (auto m : ms) {
    if (!firstM) os << " | ";
    os << '(';
    for (std::size_t p = 0; p < vocab.size(); ++p) {
      if (p) os << " & ";
      if (!(m >> p & 1)) os << '!';
      os << vocab[p];
    }
    os << ')';
    firstM = false;
  }
  return os.str();
}

std::string dump(const Buchi& a) {
  std::ostringstream os;
  os << "vocab:";
  for (const auto& p : a.vocab) os << ' ' << p;
  os << '\n';
  os << "init: " << a.init << '\n';
  os << "accepting:";
  for (int s = 0; s < a.states(); ++s)
    if (a.accepting[s]) os << ' ' << s;
  os << '\n';
  for (int s = 0; s < a.states(); ++s)
    for (const auto& e : a.edges[s])
      os << s << " --[" << format_constraint(e.guard, a.vocab) << "]--> "
         << e.dst << '\n';
  return os.str();
}

}  // namespace hlk
