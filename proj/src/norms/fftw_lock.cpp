#include "fftw_lock.hpp"

namespace nlwlab::detail {

std::mutex& fftw_planner_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace nlwlab::detail
