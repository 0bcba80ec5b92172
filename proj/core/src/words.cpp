#include "cmred/words.hpp"

#include <algorithm>

namespace cmred {

std::size_t least_rotation_index(std::string_view s) {
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  std::string t;
  t.reserve(2 * n);
  t.append(s);
  t.append(s);
  // Booth's failure-function formulation.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const char sj = t[j];
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != t[k + static_cast<std::size_t>(i) + 1]) {
      if (sj < t[k + static_cast<std::size_t>(i) + 1])
        k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != t[k + static_cast<std::size_t>(i) + 1]) {  // here i == -1
      if (sj < t[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

CircularWord CircularWord::from_letters(std::string_view raw) {
  if (raw.empty()) throw invalid_input("circular word must be nonempty");
  for (char c : raw)
    if (c != 'F' && c != 'V')
      throw invalid_input(std::string("circular word contains a symbol outside "
                                      "{F, V}: '") + c + "'");
  const std::size_t k = least_rotation_index(raw);
  std::string canonical;
  canonical.reserve(raw.size());
  canonical.append(raw.substr(k));
  canonical.append(raw.substr(0, k));
  return CircularWord(std::move(canonical), canonical_tag{});
}

CircularWord CircularWord::parse(std::string_view text) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    return from_letters(text.substr(1, text.size() - 2));
  return from_letters(text);
}

CircularWord CircularWord::dual() const {
  std::string swapped = canonical_;
  for (char& c : swapped) c = (c == 'F') ? 'V' : 'F';
  return from_letters(swapped);
}

std::pair<std::size_t, std::size_t> CircularWord::primitive_period() const {
  const std::size_t n = canonical_.size();
  for (std::size_t period = 1; period < n; ++period) {
    if (n % period != 0) continue;
    bool ok = true;
    for (std::size_t i = period; i < n && ok; ++i)
      ok = canonical_[i] == canonical_[i - period];
    if (ok) return {period, n / period};
  }
  return {n, 1};
}

CircularWord CircularWord::primitive_root() const {
  // A power of a non-least rotation would contradict canonicity, so the
  // prefix of length primitive_period() is itself canonical.
  return CircularWord(canonical_.substr(0, primitive_period().first),
                      canonical_tag{});
}

std::size_t CircularWord::fv_transitions() const {
  const std::size_t n = canonical_.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (canonical_[i] == 'F' && canonical_[(i + 1) % n] == 'V') ++count;
  return count;
}

std::vector<CircularWord> aperiodic_classes(std::size_t n) {
  if (n == 0) throw invalid_input("word length must be positive");
  std::vector<CircularWord> out;
  // Duval: enumerate Lyndon words of length <= n in lex order, keep length n.
  std::string w = "F";
  while (true) {
    if (w.size() == n)
      out.push_back(CircularWord(w, CircularWord::canonical_tag{}));
    std::string t = w;
    while (t.size() < n) t.push_back(t[t.size() - w.size()]);
    while (!t.empty() && t.back() == 'V') t.pop_back();
    if (t.empty()) break;
    t.back() = 'V';
    w = std::move(t);
  }
  return out;
}

void WordMultiset::add(const CircularWord& w, std::size_t multiplicity) {
  if (multiplicity == 0) return;
  entries_[w] += multiplicity;
}

std::size_t WordMultiset::total_length() const {
  std::size_t total = 0;
  for (const auto& [w, mult] : entries_) total += w.length() * mult;
  return total;
}

std::size_t WordMultiset::word_count() const {
  std::size_t total = 0;
  for (const auto& [w, mult] : entries_) total += mult;
  return total;
}

std::size_t WordMultiset::multiplicity_of(const CircularWord& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? 0 : it->second;
}

bool WordMultiset::is_self_dual() const {
  for (const auto& [w, mult] : entries_)
    if (multiplicity_of(w.dual()) != mult) return false;
  return true;
}

bool WordMultiset::all_aperiodic() const {
  for (const auto& [w, mult] : entries_)
    if (!w.is_aperiodic()) return false;
  return true;
}

WordMultiset WordMultiset::factored() const {
  WordMultiset out;
  for (const auto& [w, mult] : entries_)
    out.add(w.primitive_root(), mult * w.primitive_period().second);
  return out;
}

std::vector<std::string> WordMultiset::expanded_texts() const {
  std::vector<std::string> out;
  for (const auto& [w, mult] : entries_)
    for (std::size_t i = 0; i < mult; ++i) out.push_back(w.bracketed());
  return out;
}

std::string WordMultiset::canonical_text() const {
  std::string out;
  bool first = true;
  for (const std::string& text : expanded_texts()) {
    if (!first) out.push_back(',');
    out += text;
    first = false;
  }
  return out;
}

SchemeInvariants invariants(const WordMultiset& factored) {
  SchemeInvariants inv;
  for (const auto& [w, mult] : factored.entries()) {
    if (!w.is_aperiodic())
      throw invalid_input("invariants require indecomposable classes; factor " +
                          w.bracketed() + " first");
    inv.a_number += mult * w.fv_transitions();
    if (w.text() == "F") inv.p_rank = mult;
  }
  return inv;
}

std::size_t QuasiPolarizedPiece::half_order() const {
  return is_self_dual_word() ? words[0].length() / 2 : words[0].length();
}

std::size_t QuasiPolarizedPiece::a_number() const {
  std::size_t total = 0;
  for (const CircularWord& w : words) total += w.fv_transitions();
  return total;
}

std::string QuasiPolarizedPiece::text() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += words[i].bracketed();
  }
  return out;
}

std::vector<QuasiPolarizedPiece> quasi_polarized_pieces(
    const WordMultiset& factored) {
  for (const auto& [w, mult] : factored.entries())
    if (!w.is_aperiodic())
      throw invalid_input("quasi-polarized pairing requires indecomposable "
                          "classes; factor " + w.bracketed() + " first");

  std::vector<QuasiPolarizedPiece> pieces;
  for (const auto& [w, mult] : factored.entries()) {
    const CircularWord dual = w.dual();
    if (dual == w) {
      for (std::size_t i = 0; i < mult; ++i)
        pieces.push_back(QuasiPolarizedPiece{{w}});
    } else if (w < dual) {
      if (factored.multiplicity_of(dual) != mult)
        throw invalid_input("multiset is not self-dual: unmatched class " +
                            w.bracketed());
      for (std::size_t i = 0; i < mult; ++i)
        pieces.push_back(QuasiPolarizedPiece{{w, dual}});
    } else if (factored.multiplicity_of(dual) != mult) {
      throw invalid_input("multiset is not self-dual: unmatched class " +
                          w.bracketed());
    }
  }
  return pieces;
}

}  // namespace cmred
