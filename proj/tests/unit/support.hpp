#pragma once

#include <gtest/gtest.h>

#include "jamgame/model.hpp"

namespace jamgame::testing {

// pt = noise = j_max = 1, nt = 2, base-2 logs.
inline GameConfig ref(double j_ave = 0.0,
                      ConstraintMode mode = ConstraintMode::kAtMost) {
  return GameConfig::make(1.0, 1.0, 1.0, j_ave, 2, mode);
}

// Values computed to 30 digits with mpmath, independently of this library.
inline constexpr double kR0 = 0.5;
inline constexpr double kR1 = 0.368482797083103083208290242770733;
inline constexpr double kR2 = 0.292481250360578090726869471973895;
inline constexpr double kJth = 0.310646422524222196598043255664;
inline constexpr double kJthUpper = 0.311278124459132863909695792039;
inline constexpr double kZ1 = 0.309383018654400861974738182913;
inline constexpr double kJAve0 = 0.131517202916896916791709757229;
inline constexpr double kIntegral = 2.71243470539875574048228578502;
inline constexpr double kJthLim = 0.206663705843545645285083435384;
inline constexpr double kJthLimUb = 0.207518749639421909273130528026;

}  // namespace jamgame::testing

#define EXPECT_JAMGAME_ERROR(stmt, expected)                            \
  do {                                                                  \
    try {                                                               \
      stmt;                                                             \
      ADD_FAILURE() << "expected " << ::jamgame::error_code_name(expected); \
    } catch (const ::jamgame::Error& e) {                               \
      EXPECT_EQ(e.code(), expected) << e.what();                        \
    }                                                                   \
  } while (0)
