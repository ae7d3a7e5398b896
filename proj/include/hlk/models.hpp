#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hlk {

using Letter = std::set<std::string>;  // subset of AP

// Ultimately periodic trace u . v^omega; the finite stand-in for omega-words.
struct LassoTrace {
  std::vector<Letter> prefix;
  std::vector<Letter> loop;  // nonempty

  const Letter& at(std::size_t i) const {
    if (i < prefix.size()) return prefix[i];
    return loop[(i - prefix.size()) % loop.size()];
  }
  std::size_t size() const { return prefix.size() + loop.size(); }
};

const Letter& letter_at(const LassoTrace& t, std::size_t i);

bool lasso_equal(const LassoTrace& a, const LassoTrace& b);

LassoTrace zip(const LassoTrace& a, const LassoTrace& b,
               const std::string& tagA = "0", const std::string& tagB = "1");

// Finite set of lasso traces over a shared AP; member equality is decided
// semantically (letter-for-letter), so no two members denote the same word.
struct TraceSet {
  std::vector<std::string> aps;
  std::vector<LassoTrace> traces;

  // Inserts unless an equal trace is already present; returns true if added.
  bool insert(LassoTrace t);
};

// n-ary zip: letter i of the result is the union of the member traces'
// letters at i, tagged a@0, a@1, ... in `order` order.
LassoTrace zip_set(const TraceSet& T, const std::vector<std::size_t>& order);

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

// Finite graph presentation of an infinite AP-labeled tree: the tree is
// the unrolling from root. Every node has at least one successor.
struct KripkeTree {
  struct Node {
    std::string id;
    Letter label;
    std::vector<int> succs;
  };
  std::vector<Node> nodes;
  int root = 0;

  int index_of(const std::string& id) const;
  std::optional<std::string> validate() const;
};

// A lasso-shaped infinite walk in a KripkeTree: stem then repeated cycle.
struct LassoPath {
  std::vector<int> stem;
  std::vector<int> cycle;  // nonempty

  int at(std::size_t i) const {
    if (i < stem.size()) return stem[static_cast<std::size_t>(i)];
    return cycle[(i - stem.size()) % cycle.size()];
  }
  std::size_t size() const { return stem.size() + cycle.size(); }
};

bool lasso_path_equal(const LassoPath& a, const LassoPath& b);

// All walks u.v^omega from `from` with |u|+|v| <= maxLen, deduplicated as
// infinite node sequences.
std::vector<LassoPath> enumerate_lasso_paths(const KripkeTree& K, int from,
                                             std::size_t maxLen);

// Trace of labels along a lasso path.
LassoTrace path_trace(const KripkeTree& K, const LassoPath& p);

// --- text formats ---------------------------------------------------

// Trace-set file: header "aps: a b c"; one line per trace
// "{a},{} | {a,b}" (prefix letters | loop letters).
std::string format_trace_set(const TraceSet& T);
TraceSet parse_trace_set(const std::string& text);

// Kripke file: "node <id> {labels}", "edge <id> <id>", "root <id>".
std::string format_kripke(const KripkeTree& K);
KripkeTree parse_kripke(const std::string& text);

std::string format_letter(const Letter& l);
Letter parse_letter(const std::string& text);

}  // namespace hlk
