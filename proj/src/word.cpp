#include <stdexcept>

#include "quandlekit/envgroup.hpp"

namespace quandlekit {

Word free_reduce(Word const& w) {
  Word out;
  for (auto const& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().inverse != l.inverse) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse(Word const& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) {
    l.inverse = !l.inverse;
  }
  return out;
}

Word word_from_signed(std::vector<int> const& letters) {
  Word w;
  for (int s : letters) {
    if (s == 0) {
      throw ParseError("signed generator index 0 is not allowed");
    }
    w.push_back({s > 0 ? s - 1 : -s - 1, s < 0});
  }
  return w;
}

std::vector<int> signed_from_word(Word const& w) {
  std::vector<int> out;
  for (auto const& l : w) {
    out.push_back(l.inverse ? -(l.gen + 1) : l.gen + 1);
  }
  return out;
}

std::string to_string(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string s;
  for (auto const& l : w) {
    if (!s.empty()) s += ' ';
    s += "a" + std::to_string(l.gen) + (l.inverse ? "^-1" : "");
  }
  return s;
}

void Presentation::validate() const {
  for (auto const& r : relators) {
    for (auto const& l : r) {
      if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= ngens) {
        throw std::out_of_range("relator letter names generator "
                                + std::to_string(l.gen) + " of "
                                + std::to_string(ngens));
      }
    }
  }
}

Presentation braid_square_presentation() {
  Letter const x0{0, false}, x1{1, false}, X0{0, true}, X1{1, true};
  return Presentation{2, {{x1, x0, x1, X0, X1, X0}, {x0, x0, X1, X1}}};
}

}  // namespace quandlekit
