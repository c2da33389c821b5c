#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace balg {

/// A labelled record attached to a verdict: a counterexample, or evidence
/// such as an onto-preimage or an atom bijection. Values are already
/// serialized in the expression grammar.
struct Witness {
  std::string label;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Verdict {
  bool pass = true;
  std::size_t checks = 0;
  std::vector<Witness> witnesses;

  void fail(Witness w) {
    pass = false;
    witnesses.push_back(std::move(w));
  }
  void note(Witness w) { witnesses.push_back(std::move(w)); }
  /// Folds another verdict in: pass is the conjunction, witnesses append.
  void merge(Verdict other) {
    pass = pass && other.pass;
    checks += other.checks;
    for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
  }
};

}  // namespace balg
