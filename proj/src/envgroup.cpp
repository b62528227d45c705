#include <algorithm>

#include "quandlekit/envgroup.hpp"

namespace quandlekit {

Presentation presentation_of(Quandle const& q) {
  Presentation p;
  p.ngens = q.order();
  int const n = static_cast<int>(q.order());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        p.relators.push_back({{i, true}, {j, false}, {i, false}, {q.op(j, i), true}});
      }
    }
  }
  return p;
}

IntMatrix relation_matrix(Presentation const& p) {
  p.validate();
  IntMatrix m(p.relators.size(), std::vector<std::int64_t>(p.ngens, 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    for (auto const& l : p.relators[r]) {
      auto& cell = m[r][static_cast<std::size_t>(l.gen)];
      cell = checked_add(cell, l.inverse ? -1 : 1);
    }
  }
  return m;
}

Abelianization abelianization(Presentation const& p) {
  auto snf = smith_normal_form(relation_matrix(p), p.relators.size(), p.ngens);
  Abelianization a;
  a.free_rank = snf.free_rank;
  for (auto d : snf.invariant_factors) {
    if (d > 1) {
      a.torsion.push_back(d);
    }
  }
  return a;
}

std::vector<Word> commutator_generators(Quandle const& q) {
  std::vector<Word> words;
  int const n = static_cast<int>(q.order());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Word w{{q.op(j, i), true}, {j, false}};
      if (std::find(words.begin(), words.end(), w) == words.end()) {
        words.push_back(std::move(w));
      }
    }
  }
  return words;
}

}  // namespace quandlekit
