#pragma once

#include <cstdint>
#include <vector>

#include "oracle_games/types.hpp"

namespace fixtures {

using oracle_games::BimatrixGame;
using oracle_games::MixedStrategy;
using oracle_games::PayoffPair;

// 2x2 zero-sum game with base equilibrium ((2/3,1/3),(2/3,1/3)).
inline BimatrixGame example1() {
  return BimatrixGame::from_rows({{{1, -1}, {0, 0}},  //
                                  {{0, 0}, {2, -2}}});
}

// 3x3 diagonal zero-sum game, base equilibrium (4/7,2/7,1/7) for both.
inline BimatrixGame example2() {
  return BimatrixGame::from_rows({{{1, -1}, {0, 0}, {0, 0}},
                                  {{0, 0}, {2, -2}, {0, 0}},
                                  {{0, 0}, {0, 0}, {4, -4}}});
}

// 2x3 game where B's third strategy opts out; more information can hurt A.
inline BimatrixGame optout() {
  return BimatrixGame::from_rows({{{4, -1}, {0, 2}, {0, 0}},  //
                                  {{0, 2}, {4, -1}, {0, 0}}});
}

// 4x4 block-diagonal game with three mixed base equilibria.
inline BimatrixGame blocks4() {
  return BimatrixGame::from_rows(
      {{{1, -1}, {0, 0}, {-10, -10}, {-10, -10}},
       {{0, 0}, {2, -2}, {-10, -10}, {-10, -10}},
       {{-10, -10}, {-10, -10}, {2, -2}, {0, 0}},
       {{-10, -10}, {-10, -10}, {0, 0}, {3, -3}}});
}

// Zero-sum matching pennies: no nodes, V = 1 everywhere.
inline BimatrixGame pennies() {
  return BimatrixGame::from_rows({{{1, -1}, {-1, 1}},  //
                                  {{-1, 1}, {1, -1}}});
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double payoff() { return -5.0 + 10.0 * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

inline BimatrixGame random_game(Rng& rng, std::size_t rows, std::size_t cols,
                                bool zero_sum) {
  std::vector<PayoffPair> cells(rows * cols);
  for (auto& c : cells) {
    c.a = rng.payoff();
    c.b = zero_sum ? -c.a : rng.payoff();
  }
  return BimatrixGame(rows, cols, std::move(cells));
}

inline MixedStrategy random_strategy(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  double total = 0.0;
  for (double& v : p) total += (v = rng.uniform() + 1e-3);
  for (double& v : p) v /= total;
  return MixedStrategy(p);
}

}  // namespace fixtures
