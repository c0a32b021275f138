// Copyright 2026 The TFT Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tft/butterfly.hpp"

#include <gtest/gtest.h>

#include <random>

#include "tft/transform.hpp"

namespace tft {
namespace {

TEST(ButterflyTest, ForwardExamples) {
  const PrimeField f(13);
  OpCounter ctr;
  Buffer buf = {f.element(1), f.element(0)};
  butterfly_forward(f, buf, 0, 1, f.element(7), ctr);
  EXPECT_EQ(buf, (Buffer{f.element(1), f.element(1)}));

  buf = {f.element(2), f.element(3)};
  butterfly_forward(f, buf, 0, 1, f.element(5), ctr);
  EXPECT_EQ(buf, (Buffer{f.element(4), f.element(0)}));

  buf = {f.element(6), f.element(9)};
  butterfly_forward(f, buf, 0, 1, f.one(), ctr);
  EXPECT_EQ(buf, (Buffer{f.element(15), f.element(-3)}));

  EXPECT_EQ(ctr.additions, 6u);
  EXPECT_EQ(ctr.multiplications, 3u);
}

TEST(ButterflyTest, SpecializedSolves) {
  const PrimeField f(13);
  OpCounter ctr;
  const FieldElement a = f.element(4), b = f.element(11);
  const ButterflyPair up = push_up_pair(f, f.add(a, b), f.sub(a, b), f.one(), ctr);
  EXPECT_EQ(up.left, a);
  EXPECT_EQ(up.right, b);

  EXPECT_EQ(push_down_left(f, f.element(2), f.element(3), f.element(5), ctr), f.element(4));
  EXPECT_EQ(push_down_right(f, f.element(2), f.element(3), f.element(5), ctr), f.element(0));

  const ButterflyPair mixed = solve_from_left_output(f, f.element(4), f.element(3), f.element(5), ctr);
  EXPECT_EQ(mixed.left, f.element(2));
  EXPECT_EQ(mixed.right, f.element(0));

  const ButterflyPair sym =
      solve_from_right_output(f, f.element(0), f.element(2), f.inv(f.element(5)), ctr);
  EXPECT_EQ(sym.left, f.element(4));
  EXPECT_EQ(sym.right, f.element(3));
}

TEST(ButterflyTest, AnyTwoSlotsDetermineTheRest) {
  const PrimeField f;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
  std::uniform_int_distribution<std::uint64_t> nonzero(1, f.modulus() - 1);
  const Slot slots[] = {Slot::kInputLeft, Slot::kInputRight, Slot::kOutputLeft,
                        Slot::kOutputRight};
  for (int trial = 0; trial < 200; ++trial) {
    const FieldElement u(dist(rng)), v(dist(rng)), w(nonzero(rng));
    OpCounter ctr;
    const ButterflyPair out = butterfly(f, u, v, w, ctr);
    const ButterflyState truth{u, v, out.left, out.right};
    auto value_of = [&](Slot s) {
      switch (s) {
        case Slot::kInputLeft: return truth.input_left;
        case Slot::kInputRight: return truth.input_right;
        case Slot::kOutputLeft: return truth.output_left;
        case Slot::kOutputRight: return truth.output_right;
      }
      return FieldElement();
    };
    for (const Slot a : slots) {
      for (const Slot b : slots) {
        if (a == b) continue;
        const ButterflyState got =
            butterfly_solve(f, a, value_of(a), b, value_of(b), w, f.inv(w), ctr);
        EXPECT_EQ(got.input_left, truth.input_left);
        EXPECT_EQ(got.input_right, truth.input_right);
        EXPECT_EQ(got.output_left, truth.output_left);
        EXPECT_EQ(got.output_right, truth.output_right);
      }
    }
  }
}

TEST(ButterflyTest, SolveRejectsRepeatedSlot) {
  const PrimeField f(13);
  OpCounter ctr;
  EXPECT_THROW(butterfly_solve(f, Slot::kOutputLeft, f.one(), Slot::kOutputLeft, f.one(),
                               f.one(), f.one(), ctr),
               ContractError);
}

}  // namespace
}  // namespace tft
