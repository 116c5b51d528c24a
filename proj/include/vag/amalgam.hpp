#ifndef VAG_AMALGAM_HPP_
#define VAG_AMALGAM_HPP_

// Word problem in G = G_1 *_H G_2 from factor oracles. A word is a list of
// blocks, each tagged with the factor it lives in. Blocks are merged when
// adjacent tags agree; when every block lies outside H the element is
// nontrivial; otherwise the leftmost H-block is rewritten into the opposite
// factor, which shortens the block list.

#include <cassert>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vag/errors.hpp"

namespace vag {

  template <typename Letter>
  struct GroupOracle {
    using Word = std::vector<Letter>;
    // true iff the word represents the identity
    std::function<bool(Word const&)> wp;
    // Some(word over the H-generators) iff the word represents an element of H
    std::function<std::optional<Word>(Word const&)> member_strong;
  };

  template <typename Letter>
  struct AmalgamSpec {
    using Word = std::vector<Letter>;
    GroupOracle<Letter> factor_1;
    GroupOracle<Letter> factor_2;
    // H-words into factor words
    std::function<Word(Word const&)> h_embed_1;
    std::function<Word(Word const&)> h_embed_2;
  };

  template <typename Letter>
  struct Block {
    int                 factor;  // 1 or 2
    std::vector<Letter> word;
  };

  // One line per recursive step when a sink is given.
  using AmalgamTrace = std::function<void(std::string const&)>;

  template <typename Letter>
  bool amalgam_wp(std::vector<Block<Letter>> blocks,
                  AmalgamSpec<Letter> const& spec,
                  AmalgamTrace const&        trace = {}) {
    using Word = std::vector<Letter>;
    for (auto const& b : blocks) {
      if (b.factor != 1 && b.factor != 2) {
        throw ParseError("amalgam block tagged with factor " + std::to_string(b.factor));
      }
    }
    auto oracle = [&](int f) -> GroupOracle<Letter> const& {
      return f == 1 ? spec.factor_1 : spec.factor_2;
    };
    auto normalize = [](std::vector<Block<Letter>>& bs) {
      std::vector<Block<Letter>> out;
      for (auto& b : bs) {
        if (b.word.empty()) {
          continue;
        }
        if (!out.empty() && out.back().factor == b.factor) {
          out.back().word.insert(out.back().word.end(), b.word.begin(), b.word.end());
        } else {
          out.push_back(std::move(b));
        }
      }
      bs = std::move(out);
    };

    normalize(blocks);
    for (;;) {
      std::size_t const n = blocks.size();
      if (n == 0) {
        if (trace) trace("n=0: trivial");
        return true;
      }
      if (n == 1) {
        bool const t = oracle(blocks[0].factor).wp(blocks[0].word);
        if (trace) trace("n=1: factor " + std::to_string(blocks[0].factor) + (t ? " trivial" : " nontrivial"));
        return t;
      }
      std::optional<std::size_t> hit;
      Word                       in_h;
      for (std::size_t i = 0; i < n && !hit; ++i) {
        if (auto mu = oracle(blocks[i].factor).member_strong(blocks[i].word)) {
          hit  = i;
          in_h = std::move(*mu);
        }
      }
      if (!hit) {
        if (trace) trace("n=" + std::to_string(n) + ": alternating, no block in H: nontrivial");
        return false;
      }
      Block<Letter>& b     = blocks[*hit];
      int const      other = b.factor == 1 ? 2 : 1;
      b.word               = other == 1 ? spec.h_embed_1(in_h) : spec.h_embed_2(in_h);
      b.factor             = other;
      if (trace) trace("n=" + std::to_string(n) + ": block " + std::to_string(*hit) + " lies in H, moved to factor " + std::to_string(other));
      normalize(blocks);
      // a block with a neighbour always merges, so n drops
      assert(blocks.size() < n);
      if (blocks.size() >= n) {
        throw std::logic_error("amalgam_wp: block count did not decrease");
      }
    }
  }

}  // namespace vag

#endif  // VAG_AMALGAM_HPP_
