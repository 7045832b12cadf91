#pragma once
#include <vector>

#include "doctest.h"
#include "kummergap/error.hpp"
#include "oracle.hpp"

#define CHECK_CODE(expr, expected)                         \
  do {                                                     \
    bool thrown_ = false;                                  \
    try {                                                  \
      (void)(expr);                                        \
    } catch (const kummergap::Error& e_) {                 \
      thrown_ = true;                                      \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());   \
    }                                                      \
    CHECK_MESSAGE(thrown_, "expected an error: " #expr);   \
  } while (false)

inline std::vector<long long> ll_vec(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

template <class Gaps>
std::vector<long long> ll_vec(const Gaps& gaps) {
  return {gaps.values().begin(), gaps.values().end()};
}
