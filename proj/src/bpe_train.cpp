// Copyright 2026 The MorphAlign Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// BPE training with incrementally maintained pair statistics. Only the
// words containing the merged pair are revisited after each merge.

#include <cstdint>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "morphalign/errors.hpp"
#include "morphalign/tokenizer.hpp"
#include "morphalign/utf8.hpp"

namespace morphalign::tok {
namespace {

struct WordType {
  std::vector<int> symbols;
  std::int64_t freq = 0;
};

std::uint64_t pair_key(int left, int right) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(left)) << 32) |
         static_cast<std::uint32_t>(right);
}

class PairTable {
 public:
  explicit PairTable(const std::vector<std::string>& symbols) : symbols_(symbols) {}

  struct Entry {
    std::int64_t count;
    int left;
    int right;
  };

  void add(int left, int right, std::int64_t delta, int word) {
    const std::uint64_t key = pair_key(left, right);
    std::int64_t& count = counts_[key];
    if (count > 0) queue_.erase(Entry{count, left, right});
    count += delta;
    if (count > 0) queue_.insert(Entry{count, left, right});
    if (delta > 0) occurrences_[key].insert(word);
  }

  /// Highest-ranked pair accepted by `usable`, if any.
  template <typename Pred>
  std::optional<Entry> best(Pred&& usable) const {
    for (const Entry& e : queue_) {
      if (usable(e)) return e;
    }
    return std::nullopt;
  }

  std::vector<int> words_with(int left, int right) const {
    const auto it = occurrences_.find(pair_key(left, right));
    if (it == occurrences_.end()) return {};
    return {it->second.begin(), it->second.end()};
  }

 private:
  struct Order {
    const std::vector<std::string>* symbols;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.count != b.count) return a.count > b.count;
      // Symbol strings are unique per id, so this is a total order.
      const auto& s = *symbols;
      if (a.left != b.left) return s[a.left] < s[b.left];
      return s[a.right] < s[b.right];
    }
  };

  const std::vector<std::string>& symbols_;
  std::unordered_map<std::uint64_t, std::int64_t> counts_;
  std::unordered_map<std::uint64_t, std::set<int>> occurrences_;
  std::set<Entry, Order> queue_{Order{&symbols_}};
};

void for_each_pair(const WordType& w, auto&& fn) {
  for (std::size_t i = 0; i + 1 < w.symbols.size(); ++i) fn(w.symbols[i], w.symbols[i + 1]);
}

}  // namespace

TokenizerModel train_bpe(std::span<const std::string> corpus, int vocab_size_target,
                         std::string marker, std::vector<std::string> specials) {
  if (corpus.empty()) throw InputError("train_bpe: empty corpus");

  std::map<std::string, std::int64_t> word_counts;
  for (const std::string& line : corpus) {
    for (auto& w : utf8::split_whitespace(line)) ++word_counts[std::move(w)];
  }
  if (word_counts.empty()) throw InputError("train_bpe: corpus contains no words");

  std::set<std::string> alphabet;
  for (const auto& [word, _] : word_counts) {
    for (auto& ch : utf8::split_chars(word)) {
      alphabet.insert(marker + ch);
      alphabet.insert(std::move(ch));
    }
  }
  const std::unordered_set<std::string> special_set(specials.begin(), specials.end());
  for (const auto& a : alphabet) {
    if (special_set.contains(a)) {
      throw ConfigError("train_bpe: alphabet symbol '" + a + "' collides with a special");
    }
  }
  const auto n_initial = static_cast<int>(alphabet.size() + specials.size());
  if (vocab_size_target < n_initial) {
    throw ConfigError("train_bpe: vocab_size_target " + std::to_string(vocab_size_target) +
                      " is below alphabet + specials = " + std::to_string(n_initial));
  }

  std::vector<std::string> symbols(alphabet.begin(), alphabet.end());
  std::unordered_map<std::string, int> symbol_ids;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    symbol_ids.emplace(symbols[i], static_cast<int>(i));
  }

  std::vector<WordType> words;
  words.reserve(word_counts.size());
  for (const auto& [word, freq] : word_counts) {
    WordType w;
    w.freq = freq;
    auto chars = utf8::split_chars(word);
    chars.front() = marker + chars.front();
    for (const auto& ch : chars) w.symbols.push_back(symbol_ids.at(ch));
    words.push_back(std::move(w));
  }

  PairTable pairs(symbols);
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    for_each_pair(words[wi], [&](int l, int r) {
      pairs.add(l, r, words[wi].freq, static_cast<int>(wi));
    });
  }

  std::vector<TokenizerModel::Merge> merges;
  auto vocab_size = [&] { return static_cast<int>(symbols.size() + specials.size()); };
  while (vocab_size() < vocab_size_target) {
    const auto best = pairs.best([&](const PairTable::Entry& e) {
      const std::string product = symbols[e.left] + symbols[e.right];
      return !symbol_ids.contains(product) && !special_set.contains(product);
    });
    if (!best) break;
    const int left = best->left;
    const int right = best->right;
    const int merged = static_cast<int>(symbols.size());
    symbols.push_back(symbols[left] + symbols[right]);
    symbol_ids.emplace(symbols.back(), merged);
    merges.emplace_back(symbols[left], symbols[right]);

    for (const int wi : pairs.words_with(left, right)) {
      WordType& w = words[wi];
      for_each_pair(w, [&](int l, int r) { pairs.add(l, r, -w.freq, wi); });
      std::vector<int> next;
      next.reserve(w.symbols.size());
      for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i + 1 < w.symbols.size() && w.symbols[i] == left && w.symbols[i + 1] == right) {
          next.push_back(merged);
          ++i;
        } else {
          next.push_back(w.symbols[i]);
        }
      }
      w.symbols = std::move(next);
      for_each_pair(w, [&](int l, int r) { pairs.add(l, r, w.freq, wi); });
    }
  }

  return TokenizerModel::bpe(std::move(symbols), std::move(merges), std::move(marker),
                             std::move(specials), vocab_size_target);
}

}  // namespace morphalign::tok
