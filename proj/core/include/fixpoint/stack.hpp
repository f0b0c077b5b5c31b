#pragma once

#include <cstddef>
#include <functional>

namespace fixpoint {

/// Runs `fn` on a thread with a large stack and returns its exit code.
/// Syntax trees for fixed points reach depths in the hundreds of thousands
/// (dyadic numerals of very large codes), and most tree walks are recursive.
int run_with_large_stack(const std::function<int()>& fn, std::size_t bytes = std::size_t{1} << 30);

}  // namespace fixpoint
