#pragma once

#include <mutex>

namespace nlwlab::detail {

// FFTW planning is not thread-safe; plan creation and destruction go through
// this lock, execution on private buffers does not.
std::mutex& fftw_planner_mutex();

}  // namespace nlwlab::detail
